#pragma once

#include "qtilt/module.hpp"

#include <optional>
#include <vector>

namespace qtilt {

// A map P(rows) -> P(cols) between sums of indecomposable projectives, stored by the
// images of generators: entry[t][s] holds coordinates in basis(cols[s], rows[t]).
struct PathMatrix {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<std::vector<std::vector<Rational>>> entry;
};

struct ProjectiveResolution {
    Module target;
    std::vector<std::vector<int>> terms;      // terms[k] lists the vertices of P_k
    std::vector<PathMatrix> diffs;            // diffs[k] : P_{k+1} -> P_k
    std::vector<std::vector<Rational>> augmentation; // images of the generators of P_0 in target
    bool complete = false;                    // the last syzygy vanished

    // Length when complete (proj.dim); -1 for the zero module.
    int length() const;
    Module term(int k) const;
    Morphism differential(int k) const;       // P_{k+1} -> P_k as a module map
    Morphism augmentation_map() const;        // P_0 -> target
};

// Minimal projective resolution computed up to P_{max_len}; stops early when a syzygy vanishes.
ProjectiveResolution minimal_projective_resolution(const Module& m, int max_len);

// Projective cover of m with the chosen top lifts.
Morphism projective_cover(const Module& m, std::vector<int>* vertices = nullptr);
// Minimal injective coresolution terms (vertex lists of indecomposable injectives), via duality.
std::vector<std::vector<int>> injective_coresolution_terms(const Module& m, int max_len, bool* complete = nullptr);

// Cochain maps of Hom(P_*, M): delta[k] : Hom(P_k, M) -> Hom(P_{k+1}, M), as matrices on
// the coordinates Hom(P_v, M) = M_v.
Matrix hom_complex_differential(const ProjectiveResolution& r, int k, const Module& m);

struct ExtClass {
    int degree = 0;
    std::size_t dim = 0;
    // Cocycles spanning a complement of the coboundaries; each as coordinates on P_degree.
    std::vector<std::vector<std::vector<Rational>>> cocycles;
};

ExtClass ext(int i, const Module& n, const Module& m);
std::size_t ext_dim(int i, const Module& n, const Module& m);
// dim Ext^k(target of r, m) for 0 <= k <= top, reusing one resolution (computed to at least top+1).
std::vector<std::size_t> ext_dims(const ProjectiveResolution& r, const Module& m, int top);
// Ext through the injective coresolution of m: Ext^i(N, M) = Ext^i_{op}(DM, DN).
std::size_t ext_dim_via_injectives(int i, const Module& n, const Module& m);

Module syzygy(int k, const Module& m);
Module strip_projectives(const Module& m);
Module cosyzygy(int k, const Module& m);

Module transpose_module(const Module& m); // Tr over the opposite algebra
Module tau(const Module& m);
Module tau_inverse(const Module& m);
Module tau_d(int d, const Module& m);
Module tau_d_inverse(int d, const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);
int projective_dimension(const Module& m, int cap); // -1 beyond cap
int injective_dimension(const Module& m, int cap);

// -1 when some simple has projective dimension above cap.
int global_dimension(const AlgebraPtr& a, int cap = 16);

struct DominantDimension {
    int value = 0;
    bool exact = false; // false when the coresolution was cut at the cap
};
DominantDimension dominant_dimension(const AlgebraPtr& a, int cap);

// All indecomposables as tau^{-k} P_v. Exhaustive only for representation-directed algebras,
// where no indecomposable is tau-periodic. complete is false when cap objects were exceeded.
std::vector<Module> indecomposables_by_orbits(const AlgebraPtr& a, std::size_t cap, bool* complete = nullptr);

// dim Hom(M, tau_d N) == dim Ext^d(N, M); throws when gl.dim exceeds d.
bool hom_tau_ext_check(int d, const Module& m, const Module& n);

} // namespace qtilt
