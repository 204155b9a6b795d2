#pragma once

#include "qtilt/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qtilt {

// A finite-dimensional left module given as a representation of the quiver.
// maps[a] has shape dims[tgt(a)] x dims[src(a)].
struct Module {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<Matrix> maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    std::vector<int> support() const;

    // Action of a path starting at vertex i.
    Matrix act(int i, const Path& p) const;
    // Action of an element of e_i A e_j given in basis(i, j) coordinates.
    Matrix act_element(int i, int j, const std::vector<Rational>& coords) const;

    // Throws if shapes are wrong or a relation fails.
    void validate() const;
};

struct Morphism {
    Module src;
    Module tgt;
    std::vector<Matrix> comps; // comps[v]: tgt.dims[v] x src.dims[v]

    bool is_zero() const;
    bool is_mono() const;
    bool is_epi() const;
    bool is_iso() const { return is_mono() && is_epi(); }
    // Naturality check against every arrow.
    bool is_valid() const;
    std::vector<Rational> flatten() const;
};

Module zero_module(const AlgebraPtr& a);
Module simple_module(const AlgebraPtr& a, int v);
Module projective_module(const AlgebraPtr& a, int v);
Module injective_module(const AlgebraPtr& a, int v);
// Direct sum of P_v over the listed vertices, with the concatenated path bases.
Module projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices);
Module regular_module(const AlgebraPtr& a);

// The unique morphism P(vertices) -> target sending the generator e_v of the s-th summand to images[s].
Morphism from_generators(const std::vector<int>& vertices, const Module& target, const std::vector<std::vector<Rational>>& images);

Morphism identity(const Module& m);
Morphism zero_morphism(const Module& src, const Module& tgt);
Morphism compose(const Morphism& g, const Morphism& f); // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& s);
Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs, const Module& src, const Module& tgt);

std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct Submodule {
    Module mod;
    Morphism incl;
};
struct QuotientModule {
    Module mod;
    Morphism proj;
};

// bases[v] has columns spanning a subspace of m at v that is closed under the arrows.
Submodule submodule(const Module& m, const std::vector<Matrix>& bases);
QuotientModule quotient_module(const Module& m, const std::vector<Matrix>& sub_bases);

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
QuotientModule cokernel(const Morphism& f);

struct DirectSum {
    Module sum;
    std::vector<Morphism> incl;
    std::vector<Morphism> proj;
};
DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a);
// Block morphism between direct sums; blocks[t][s] : parts_src[s] -> parts_tgt[t].
Morphism block_morphism(const DirectSum& src, const DirectSum& tgt, const std::vector<std::vector<Morphism>>& blocks);

// Dual over the opposite algebra.
Module dual(const Module& m);
Morphism dual(const Morphism& f);

// Radical of End(M) via the trace form (characteristic zero).
std::vector<Morphism> radical_basis(const Module& m, const std::vector<Morphism>& end_basis);
bool is_indecomposable(const Module& m);

struct Summand {
    Module mod;
    Morphism incl;
    Morphism proj;
};
// Indecomposable summands with inclusion/projection maps; the inclusions give an iso from the sum.
std::vector<Summand> decompose(const Module& m, std::uint64_t seed = 1);

bool isomorphic_indecomposables(const Module& m, const Module& n);
bool isomorphic(const Module& m, const Module& n);
// Invertible element of Hom(m, n) for isomorphic indecomposables, if any.
bool find_isomorphism(const Module& m, const Module& n, Morphism& out);

// Seeded search for a surjective (resp. injective) map: generic combinations of a Hom basis
// attain the maximal rank at every vertex simultaneously.
bool has_epi(const Module& m, const Module& n, std::uint64_t seed = 7);
bool has_mono(const Module& m, const Module& n, std::uint64_t seed = 7);
Morphism random_combination(const std::vector<Morphism>& basis, const Module& src, const Module& tgt, std::mt19937_64& rng);

// Modules over a quotient A/<e>.
bool lives_on(const Module& m, const IdempotentQuotient& q);
Module restrict_to(const Module& m, const IdempotentQuotient& q);
Module extend_from(const Module& m, const IdempotentQuotient& q);
// Largest submodule annihilated by <e>, as a module over the quotient.
Module apply_F(const Module& m, const IdempotentQuotient& q);
// M / <e>M over the quotient.
Module apply_G(const Module& m, const IdempotentQuotient& q);

std::string dim_string(const Module& m);

} // namespace qtilt
