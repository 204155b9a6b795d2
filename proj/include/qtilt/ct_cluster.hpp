#pragma once

#include "qtilt/errors.hpp"
#include "qtilt/homology.hpp"
#include "qtilt/presentation.hpp"

#include <map>
#include <optional>

namespace qtilt {

// The indecomposables of a d-cluster-tilting subcategory C with cached Hom and Ext data.
struct CTCatalog {
    AlgebraPtr alg;
    int d = 1;
    std::vector<Module> objects; // sorted lexicographically by dimension vector
    std::vector<std::vector<std::vector<Morphism>>> hom; // hom[i][j]: basis of Hom(X_i, X_j)
    std::vector<std::vector<std::vector<Morphism>>> rad; // radical part of hom[i][j]
    // ext[k][i][j] = dim Ext^k(X_i, X_j) for 0 <= k <= d
    std::vector<std::vector<std::vector<std::size_t>>> ext;

    std::size_t size() const { return objects.size(); }
    int index_of(const Module& m) const; // -1 when not isomorphic to an object
    // Catalog index of every indecomposable summand; throws Falsification if one lies outside.
    std::vector<int> summand_indices(const Module& m) const;
    DirectSum sum(const std::vector<int>& idx) const;
    std::vector<int> all() const;
    std::vector<int> projective_indices() const;
    std::vector<int> injective_indices() const;
};

// C = add of the tau_d-orbits of the injectives. Throws InvalidInput when gl.dim > d and
// CapExceeded when more than cap_orbit objects appear (0 means 10 per vertex).
CTCatalog build_ct_catalog(const AlgebraPtr& a, int d, std::size_t cap_orbit = 0);
// A catalog from an explicit object list (tables are filled in, nothing is certified).
CTCatalog make_catalog(const AlgebraPtr& a, int d, std::vector<Module> objects, bool sort_objects = true);

struct CTReport {
    bool certified = false;
    bool conclusive = true;            // the indecomposable enumeration finished
    std::size_t indecomposables = 0;
    std::vector<Module> violators;     // membership disagrees with Ext-vanishing
    std::vector<std::string> notes;
};
// Both Ext-vanishing characterizations checked against all indecomposables.
CTReport certify_ct(const CTCatalog& c, std::size_t cap = 500);
// Same check for an arbitrary list of objects over some algebra.
CTReport certify_ct(const AlgebraPtr& a, int d, const std::vector<Module>& objects, std::size_t cap = 500);

// kA_n for d = 1; otherwise the endomorphism algebra of the (d-1)-cluster-tilting generator
// of the previous stage.
AlgebraPtr iterate_auslander(int n, int d);

// ---------------------------------------------------------------------------------
// approximations

struct Approximation {
    std::vector<int> terms; // catalog indices with multiplicity, in summand order
    DirectSum sum;
    Morphism map; // sum -> x for right approximations, x -> sum for left ones
};

// Minimal right add(cls)-approximation of x.
Approximation right_approximation(const CTCatalog& c, const std::vector<int>& cls, const Module& x);
// Minimal left add(cls)-approximation of x.
Approximation left_approximation(const CTCatalog& c, const std::vector<int>& cls, const Module& x);
// Minimal left approximation of the subfunctor allowed[i] of Hom(x, X_i) for i in cls.
Approximation left_approximation(const CTCatalog& c, const std::vector<int>& cls, const Module& x,
                                 const std::map<int, std::vector<Morphism>>& allowed);

// A chain of modules and maps, maps[k] : mods[k] -> mods[k+1].
struct Chain {
    std::vector<std::vector<int>> terms;
    std::vector<Module> mods;
    std::vector<Morphism> maps;
};

// Exactness of a complex of maps by ranks; with the flags, also 0 -> first and last -> 0.
bool is_exact(const std::vector<Morphism>& maps, bool mono_start, bool epi_end);

// Minimal 0 -> M_1 -> ... -> M_d -> W_1 -> W_2 in C; the chain holds M_1..M_d, W_1, W_2.
// Throws Falsification when the last kernel leaves C.
Chain d_kernel(const CTCatalog& c, const Morphism& f);
// Minimal W_1 -> W_2 -> N_1 -> ... -> N_d -> 0 in C; the chain holds W_1, W_2, N_1..N_d.
Chain d_cokernel(const CTCatalog& c, const Morphism& f);

// ---------------------------------------------------------------------------------
// d-exact sequences

struct DExactSequence {
    std::vector<std::vector<int>> terms; // d+2 positions of catalog indices
    std::vector<Module> mods;
    std::vector<Morphism> maps; // d+1 maps
    bool reduced = true;

    bool all_indecomposable() const;
    std::size_t length() const { return terms.size(); }
};

// Exactness, mono start and epi end.
bool audit(const DExactSequence& s);
// No component between equal summands of neighbouring terms is an isomorphism.
bool is_reduced(const CTCatalog& c, const DExactSequence& s);

// An isomorphism a -> b for arbitrary (possibly decomposable) modules.
bool find_iso(const Module& a, const Module& b, Morphism& out);

// Cocycle (coordinates on the last resolution term of N) of the class of 0 -> M -> ... -> N -> 0.
std::vector<Rational> yoneda_cocycle(const DExactSequence& s, const ProjectiveResolution& rn);

// A d-exact sequence in C realizing the class with the given cocycle in Ext^d(N, M).
DExactSequence realize_ext_class(const CTCatalog& c, const std::vector<int>& n, const std::vector<int>& m,
                                 const std::vector<Rational>& cocycle);

struct EnumerationReport {
    std::vector<DExactSequence> sequences;
    std::size_t ext_classes = 0;     // sum of dim Ext^d over ordered pairs of objects
    std::vector<std::string> failures;
};
// One reduced d-exact sequence per basis class of Ext^d(X_j, X_i), every pair (i, j).
EnumerationReport enumerate_d_exact(const CTCatalog& c);

struct DPushout {
    DExactSequence bottom;         // 0 -> Y_0 -> ... -> Y_d -> X_{d+1} -> 0
    std::vector<Morphism> ladder;  // X_k -> Y_k for 0 <= k <= d+1 (last one identity)
    DExactSequence induced;        // 0 -> X_0 -> X_1+Y_0 -> ... -> X_d+Y_{d-1} -> Y_d -> 0
};
// f : X_0 -> Y_0 with Y_0 the sum of the listed catalog objects.
DPushout d_pushout(const CTCatalog& c, const DExactSequence& s, const Morphism& f, const std::vector<int>& y0);
// g : Y_{d+1} -> X_{d+1}; computed on the dual catalog.
DPushout d_pullback(const CTCatalog& c, const DExactSequence& s, const Morphism& g, const std::vector<int>& y);

// The catalog D(C) over the opposite algebra, object order preserved.
CTCatalog dual_catalog(const CTCatalog& c);
DExactSequence dual_sequence(const DExactSequence& s);

// ---------------------------------------------------------------------------------
// idempotent quotients

struct SupportVerdict {
    std::vector<int> killed;
    IdempotentQuotient q;
    std::vector<int> objects;   // catalog indices living over the quotient
    bool ext_condition = false; // Ext^d(A/<e>, I) = 0 for quotient injectives I
    bool ct_condition = false;  // C cap mod(A/<e>) is d-CT and agrees with F(C) and G(C)
    bool proper = false;
    bool left = false;
    bool right = false;
    // consequences: (d+1)-idempotence and gl.dim(A/<e>) <= d
    bool adapt_hypotheses = false; // A/<e> in C, quotient injectives in C, ext_condition
    bool idempotent_d_plus_one = false;
    bool quotient_gldim_ok = false;
    std::string reason;
};

// Memoized per killed set; all 2^n subsets are small at the scale in scope.
class SupportOracle {
public:
    explicit SupportOracle(const CTCatalog& c) : cat_(&c) {}
    const SupportVerdict& verdict(std::vector<int> killed);
    const CTCatalog& catalog() const { return *cat_; }

private:
    const CTCatalog* cat_;
    std::map<std::vector<int>, SupportVerdict> memo_;
};

SupportVerdict properly_supporting(const CTCatalog& c, const std::vector<int>& killed);

struct AlmostDirectedReport {
    bool length_two = false;
    bool ext_at_most_one = false;
    bool left_condition = false;
    bool right_condition = false;
    std::vector<std::vector<int>> left_witness;  // killed set per object, empty when none
    std::vector<std::vector<int>> right_witness;
    bool holds() const { return length_two && ext_at_most_one && left_condition && right_condition; }
};
AlmostDirectedReport is_almost_directed(const CTCatalog& c, SupportOracle& oracle);

// Search for a properly-supporting idempotent making X_0..X_d projective and X_1..X_{d+1}
// injective over the quotient (an injective X_0 would split the first map). Returns the killed set.
std::optional<std::vector<int>> indec_witness(const DExactSequence& s, SupportOracle& oracle);

} // namespace qtilt
