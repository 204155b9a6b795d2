#include "catch_amalgamated.hpp"

#include "qtilt/linalg.hpp"

using namespace qtilt;

TEST_CASE("rref and rank of a small rational matrix")
{
    Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix(0, 4)) == 0);
}

TEST_CASE("nullspace columns are killed and independent")
{
    Matrix m{{1, 2, 3, 4}, {0, 1, 1, 1}};
    Matrix ns = nullspace(m);
    CHECK(ns.cols() == 2);
    CHECK((m * ns).is_zero());
    CHECK(rank(ns) == 2);
    Matrix ln = left_nullspace(Matrix{{1, 1}, {2, 2}, {0, 1}});
    CHECK(ln.rows() == 1);
    CHECK((ln * Matrix{{1, 1}, {2, 2}, {0, 1}}).is_zero());
}

TEST_CASE("solve, inverse and one-sided inverses")
{
    Matrix a{{2, 1}, {1, 1}};
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));

    Matrix b{{1}, {3}};
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}));

    Matrix k{{1, 0}, {2, 1}, {5, 7}};
    CHECK(left_inverse(k) * k == Matrix::identity(2));
    Matrix q = k.transpose();
    CHECK(q * right_inverse(q) == Matrix::identity(2));
}

TEST_CASE("empty shapes behave")
{
    Matrix z(3, 0);
    CHECK(nullspace(Matrix(0, 3)).cols() == 3);
    CHECK(left_inverse(z).rows() == 0);
    CHECK(Matrix::hstack(z, Matrix{{1}, {2}, {3}}).cols() == 1);
    CHECK(Matrix::vstack(Matrix(0, 2), Matrix{{1, 2}}).rows() == 1);
    CHECK(in_column_space(z, {0, 0, 0}));
    CHECK_FALSE(in_column_space(z, {0, 1, 0}));
}

TEST_CASE("rational parsing round-trips")
{
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("complement columns extend a span greedily")
{
    Matrix base{{1}, {0}, {0}};
    Matrix extra{{1, 0, 0}, {0, 0, 1}, {0, 0, 1}};
    CHECK(complement_columns(base, extra) == std::vector<std::size_t>{2});
}
