#include "catch_amalgamated.hpp"

#include "qtilt/homology.hpp"

using namespace qtilt;

namespace {

std::vector<Module> indecomposables_of(const AlgebraPtr& a)
{
    return indecomposables_by_orbits(a, 1000);
}

} // namespace

TEST_CASE("projective resolutions")
{
    auto eg2 = build_linear_an(7, 3);
    auto r = minimal_projective_resolution(simple_module(eg2, 0), 10);
    REQUIRE(r.complete);
    CHECK(r.length() == 4);
    CHECK(r.terms == std::vector<std::vector<int>>{{0}, {1}, {3}, {4}, {6}});
    for (int k = 0; k < r.length(); ++k)
        CHECK(r.differential(k).is_valid());
    CHECK(compose(r.augmentation_map(), r.differential(0)).is_zero());
    for (int k = 0; k + 1 < r.length(); ++k)
        CHECK(compose(r.differential(k), r.differential(k + 1)).is_zero());
    CHECK(syzygy(1, simple_module(eg2, 0)).dims == std::vector<int>{0, 1, 1, 0, 0, 0, 0});
    CHECK(projective_dimension(simple_module(eg2, 0), 3) == -1);
    CHECK(global_dimension(eg2) == 4);
    CHECK(global_dimension(build_linear_an(5)) == 1);
    CHECK(global_dimension(build_linear_an(3, 2)) == 2);
    CHECK(projective_dimension(zero_module(eg2), 2) == 0);
}

TEST_CASE("ext on linear A_3")
{
    auto a = build_linear_an(3);
    auto s = [&](int v) { return simple_module(a, v); };
    CHECK(ext_dim(1, s(0), s(1)) == 1);
    CHECK(ext_dim(1, s(1), s(0)) == 0);
    CHECK(ext_dim(1, s(0), s(2)) == 0);
    CHECK(ext_dim(0, s(0), s(0)) == 1);
    CHECK(ext_dim(2, s(0), s(2)) == 0);
    auto e = ext(1, s(0), s(1));
    REQUIRE(e.cocycles.size() == 1);
    CHECK(e.cocycles[0].size() == 1);
}

TEST_CASE("ext through injectives agrees")
{
    for (auto a : {build_linear_an(7, 3), build_linear_an(4, 2), build_linear_an(4)}) {
        auto ind = indecomposables_of(a);
        for (int i = 0; i <= 3; ++i)
            for (const auto& n : ind)
                for (const auto& m : ind)
                    CHECK(ext_dim(i, n, m) == ext_dim_via_injectives(i, n, m));
    }
}

TEST_CASE("auslander-reiten translate on linear A_3")
{
    auto a = build_linear_an(3);
    CHECK(tau(simple_module(a, 1)).dims == std::vector<int>{0, 0, 1});
    CHECK(tau(simple_module(a, 0)).dims == std::vector<int>{0, 1, 0});
    CHECK(tau(injective_module(a, 1)).dims == std::vector<int>{0, 1, 1});
    CHECK(tau(projective_module(a, 0)).is_zero());
    CHECK(tau_inverse(injective_module(a, 0)).is_zero());
    CHECK(tau_inverse(simple_module(a, 2)).dims == std::vector<int>{0, 1, 0});
    CHECK(tau(simple_module(a, 1)).alg == a);
    CHECK(indecomposables_of(a).size() == 6);
    CHECK(indecomposables_of(build_linear_an(7, 3)).size() == 18);
}

TEST_CASE("ext-tau duality in the hereditary case")
{
    auto a = build_linear_an(4);
    auto ind = indecomposables_of(a);
    CHECK(ind.size() == 10);
    for (const auto& m : ind)
        for (const auto& n : ind)
            CHECK(hom_tau_ext_check(1, m, n));
    CHECK_THROWS(hom_tau_ext_check(1, simple_module(build_linear_an(3, 2), 0), simple_module(build_linear_an(3, 2), 2)));
}

TEST_CASE("dominant dimension")
{
    auto dd = dominant_dimension(build_linear_an(3, 2), 6);
    CHECK(dd.exact);
    CHECK(dd.value == 2);
    CHECK(dominant_dimension(build_linear_an(4), 6).value == 1);
    CHECK(is_projective(injective_module(build_linear_an(3, 2), 1)));
    CHECK(is_injective(projective_module(build_linear_an(3, 2), 0)));
    CHECK_FALSE(is_injective(simple_module(build_linear_an(3, 2), 2)));
}
