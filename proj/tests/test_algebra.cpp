#include "catch_amalgamated.hpp"

#include "qtilt/algebra.hpp"

using namespace qtilt;

namespace {

// brute-force count of paths of length < r in 1 -> 2 -> ... -> n
std::size_t truncated_path_count(int n, int r)
{
    std::size_t c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (r == 0 || j - i < r)
                ++c;
    return c;
}

void check_associative(const Algebra& a)
{
    const int nv = static_cast<int>(a.num_vertices());
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            for (int k = 0; k < nv; ++k)
                for (int l = 0; l < nv; ++l) {
                    const auto bx = a.basis(i, j).size(), by = a.basis(j, k).size(), bz = a.basis(k, l).size();
                    for (std::size_t x = 0; x < bx; ++x)
                        for (std::size_t y = 0; y < by; ++y)
                            for (std::size_t z = 0; z < bz; ++z) {
                                std::vector<Rational> ex(bx), ey(by), ez(bz);
                                ex[x] = ey[y] = ez[z] = 1;
                                auto left = a.multiply(i, k, l, a.multiply(i, j, k, ex, ey), ez);
                                auto right = a.multiply(i, j, l, ex, a.multiply(j, k, l, ey, ez));
                                REQUIRE(left == right);
                            }
                }
}

} // namespace

TEST_CASE("linear A_n with a radical bound")
{
    auto a = build_linear_an(7, 3);
    CHECK(a->num_vertices() == 7);
    CHECK(a->num_arrows() == 6);
    CHECK(a->relations().size() == 4);
    CHECK(a->dimension() == 18);
    CHECK(a->dimension() == truncated_path_count(7, 3));
    check_associative(*a);

    auto one = build_linear_an(1);
    CHECK(one->dimension() == 1);
    CHECK(one->num_arrows() == 0);

    auto a3 = build_linear_an(3);
    CHECK(a3->dimension() == 6);
    for (int n = 1; n <= 6; ++n)
        for (int r : {0, 2, 3})
            CHECK(build_linear_an(n, r)->dimension() == truncated_path_count(n, r));

    CHECK_THROWS(build_linear_an(0));
    CHECK_THROWS(build_linear_an(3, 1));
}

TEST_CASE("quotients by idempotents")
{
    auto a = build_linear_an(7, 3);
    auto q = quotient_by_idempotent(a, {5, 6});
    CHECK(q.quotient->num_vertices() == 5);
    CHECK(q.quotient->dimension() == 12);
    CHECK(isomorphic_presentations(*q.quotient, *build_linear_an(5, 3)));

    CHECK(quotient_by_idempotent(a, {}).quotient->dimension() == a->dimension());
    CHECK(quotient_by_idempotent(a, {0, 1, 2, 3, 4, 5, 6}).quotient->dimension() == 0);

    // killing S then T equals killing their union
    auto s = quotient_by_idempotent(a, {1});
    auto st = quotient_by_idempotent(s.quotient, {s.parent_to_quotient[4]});
    auto u = quotient_by_idempotent(a, {1, 4});
    CHECK(isomorphic_presentations(*st.quotient, *u.quotient));
    CHECK(st.quotient->dimension() == u.quotient->dimension());
}

TEST_CASE("opposite algebra")
{
    auto a = build_linear_an(3);
    auto op = a->opposite();
    CHECK(op->arrow(0).src == 1);
    CHECK(op->arrow(0).tgt == 0);
    CHECK(op->dimension() == a->dimension());
    CHECK(op->opposite() == a);

    auto b = build_linear_an(6, 2);
    CHECK(b->opposite()->dimension() == b->dimension());
    auto one = build_linear_an(1);
    CHECK(isomorphic_presentations(*one->opposite(), *one));
}

TEST_CASE("relations are validated")
{
    std::vector<Arrow> arrows{{"x", 0, 1}, {"y", 1, 0}};
    CHECK_THROWS(Algebra::create({1, 2}, arrows, {}));
    std::vector<Arrow> ok{{"x", 0, 1}, {"y", 1, 2}};
    CHECK_THROWS(Algebra::create({1, 2, 3}, ok, {{0, 2, {{Rational(1), {0}}}}}));
    CHECK_THROWS(Algebra::create({1, 2, 3}, ok, {{0, 1, {{Rational(1), {0, 1}}}}}));
    auto a = Algebra::create({1, 2, 3}, ok, {{0, 2, {{Rational(1), {0, 1}}}}});
    CHECK(a->dimension() == 5);
    CHECK(a->relations_length_two());
}
