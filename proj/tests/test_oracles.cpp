#include "catch_amalgamated.hpp"

#include "dense_oracle.hpp"

using namespace qtilt;
using namespace oracle;

TEST_CASE("the dense oracle on hand-sized cases")
{
    auto a = build_linear_an(3);
    auto p1 = projective_module(a, 0), s1 = simple_module(a, 0), s2 = simple_module(a, 1), s3 = simple_module(a, 2);
    CHECK(oracle_hom(p1, p1) == 1);
    CHECK(oracle_hom(s1, p1) == 0);
    CHECK(oracle_hom(p1, s1) == 1);
    CHECK(oracle_ext1(s1, s2) == 1); // 0 -> S2 -> "12" -> S1 -> 0
    CHECK(oracle_ext1(s2, s1) == 0);
    CHECK(oracle_ext1(s1, s3) == 0);
    CHECK(oracle_ext1(p1, s2) == 0);
    // over A3/rad2 the relation forbids the length-two extension
    auto b = build_linear_an(3, 2);
    CHECK(oracle_ext1(simple_module(b, 0), simple_module(b, 1)) == 1);
    CHECK(oracle_ext1(simple_module(b, 0), simple_module(b, 2)) == 0);
    CHECK(oracle_top(projective_module(b, 0)) == std::vector<int>{1, 0, 0});
    CHECK(oracle_top(regular_module(b)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("Hom, Ext and kernels agree with the dense oracle")
{
    auto s = engine_sweep();
    INFO((s.failures.empty() ? std::string() : s.failures.front()));
    CHECK(s.failures.empty());
    CHECK(s.pairs > 1000);
    CHECK(s.ext_checks > 1000);
    CHECK(s.kernels > 300);
}

TEST_CASE("Krull-Schmidt on seeded random direct sums")
{
    auto s = krull_schmidt_sweep(100);
    INFO((s.failures.empty() ? std::string() : s.failures.front()));
    CHECK(s.trials == 100);
    CHECK(s.failures.empty());
}
