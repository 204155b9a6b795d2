#include "catch_amalgamated.hpp"

#include "qtilt/module.hpp"

using namespace qtilt;

TEST_CASE("standard modules over linear A_3")
{
    auto a = build_linear_an(3);
    CHECK(projective_module(a, 0).dims == std::vector<int>{1, 1, 1});
    CHECK(projective_module(a, 2).dims == std::vector<int>{0, 0, 1});
    CHECK(injective_module(a, 2).dims == std::vector<int>{1, 1, 1});
    CHECK(injective_module(a, 0).dims == std::vector<int>{1, 0, 0});
    CHECK(injective_module(a, 0).alg == a);
    for (int v = 0; v < 3; ++v) {
        projective_module(a, v).validate();
        injective_module(a, v).validate();
        CHECK(is_indecomposable(projective_module(a, v)));
    }
    auto eg2 = build_linear_an(7, 3);
    CHECK(injective_module(eg2, 0).dims == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
    CHECK(isomorphic(injective_module(eg2, 0), simple_module(eg2, 0)));
    auto one = build_linear_an(1);
    CHECK(isomorphic(projective_module(one, 0), injective_module(one, 0)));
    CHECK(isomorphic(simple_module(one, 0), injective_module(one, 0)));
}

TEST_CASE("hom spaces")
{
    auto eg2 = build_linear_an(7, 3);
    CHECK(hom_dim(simple_module(eg2, 0), simple_module(eg2, 0)) == 1);
    CHECK(hom_dim(projective_module(eg2, 0), simple_module(eg2, 0)) == 1);
    CHECK(hom_dim(simple_module(eg2, 0), projective_module(eg2, 0)) == 0);
    auto a = build_linear_an(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto basis = hom_basis(projective_module(a, i), projective_module(a, j));
            CHECK(basis.size() == a->basis(j, i).size());
            for (const auto& f : basis)
                CHECK(f.is_valid());
        }
}

TEST_CASE("kernels, images and cokernels")
{
    auto eg2 = build_linear_an(7, 3);
    auto p1 = projective_module(eg2, 0);
    auto s1 = simple_module(eg2, 0);
    auto cover = hom_basis(p1, s1).at(0);
    auto k = kernel(cover);
    CHECK(k.mod.dims == std::vector<int>{0, 1, 1, 0, 0, 0, 0});
    CHECK(k.incl.is_valid());
    CHECK(k.incl.is_mono());
    CHECK(compose(cover, k.incl).is_zero());
    k.mod.validate();

    auto id = identity(p1);
    CHECK(kernel(id).mod.is_zero());
    CHECK(cokernel(id).mod.is_zero());
    CHECK(image(id).mod.dims == p1.dims);
    auto z = zero_morphism(p1, s1);
    CHECK(kernel(z).mod.dims == p1.dims);
    CHECK(cokernel(z).mod.dims == s1.dims);
    CHECK(image(z).mod.is_zero());
}

TEST_CASE("decomposition")
{
    auto a = build_linear_an(3);
    auto s1 = simple_module(a, 0);
    auto ds = direct_sum({s1, s1}, a);
    auto parts = decompose(ds.sum);
    REQUIRE(parts.size() == 2);
    for (const auto& p : parts) {
        CHECK(isomorphic_indecomposables(p.mod, s1));
        CHECK(p.incl.is_valid());
        CHECK(p.proj.is_valid());
        CHECK(compose(p.proj, p.incl).is_iso());
    }
    CHECK(decompose(regular_module(a)).size() == 3);
    auto big = direct_sum({projective_module(a, 0), injective_module(a, 1), simple_module(a, 1), projective_module(a, 1)}, a);
    auto pieces = decompose(big.sum);
    CHECK(pieces.size() == 4);
    CHECK(isomorphic(big.sum, direct_sum({injective_module(a, 1), projective_module(a, 1), simple_module(a, 1), projective_module(a, 0)}, a).sum));
    CHECK_FALSE(isomorphic(big.sum, direct_sum({injective_module(a, 1), projective_module(a, 1), simple_module(a, 2), projective_module(a, 0)}, a).sum));
}

TEST_CASE("duality")
{
    auto a = build_linear_an(4, 2);
    for (int v = 0; v < 4; ++v) {
        auto p = projective_module(a, v);
        auto dp = dual(p);
        CHECK(dp.alg == a->opposite());
        CHECK(isomorphic(dp, injective_module(a->opposite(), v)));
        CHECK(dual(dp).alg == a);
        CHECK(dual(dual(simple_module(a, v))).maps == simple_module(a, v).maps);
    }
}

TEST_CASE("idempotent quotient functors")
{
    auto eg2 = build_linear_an(7, 3);
    auto q3 = quotient_by_idempotent(eg2, {2});
    auto g = apply_G(projective_module(eg2, 0), q3);
    CHECK(g.dims == std::vector<int>{1, 1, 0, 0, 0, 0});
    auto q1 = quotient_by_idempotent(eg2, {0});
    auto f = apply_F(injective_module(eg2, 2), q1);
    CHECK(f.dims == std::vector<int>{1, 1, 0, 0, 0, 0});
    auto q67 = quotient_by_idempotent(eg2, {5, 6});
    auto s2 = simple_module(eg2, 1);
    CHECK(apply_F(s2, q67).dims == restrict_to(s2, q67).dims);
    CHECK(apply_G(s2, q67).dims == restrict_to(s2, q67).dims);
}
