#pragma once

#include "qtilt/tilting_torsion.hpp"

#include <optional>
#include <utility>

namespace qtilt {

// W1 via minimal d-kernels/d-cokernels of maps between members; W2 via the enumerated
// minimal realizations of Ext^d classes between members.
struct WideReport {
    bool w1 = false;
    bool w2 = false;
    bool experimental = false; // some Ext^d between members has dimension > 1
    std::size_t morphisms_checked = 0;
    std::size_t classes_checked = 0;
    std::vector<std::string> failures;
    bool wide() const { return w1 && w2; }
};
WideReport is_wide(const CTCatalog& c, const std::vector<int>& cls, const std::vector<DExactSequence>& seqs);

// One admissible (M', K_0, f) for an object M, with the d-kernel chain K_d..K_1, K_0, M'.
struct AlphaWitness {
    int m = 0;
    int sub = 0; // M'
    int k0 = 0;
    Chain chain;
    bool in_class = false;
};
struct AlphaClass {
    std::vector<int> objects;
    std::vector<AlphaWitness> witnesses; // every checked triple, members and rejections alike
};
AlphaClass alpha(const CTCatalog& c, const std::vector<int>& torsion, std::uint64_t seed = 11);

// prec[i][j]: X_i precedes X_j, transitively closed, restricted to members of alpha.
std::vector<std::vector<bool>> prec_relation(const CTCatalog& c, const std::vector<int>& alpha_objects,
                                             const std::vector<DExactSequence>& seqs);

struct WideCollection {
    std::vector<std::vector<int>> classes; // ordered: earlier classes precede later ones
    std::vector<int> generator;            // the union, sorted
    bool acyclic = true;
    bool directed = false;
    bool directed_modulo_shared = false; // ignoring pairs that meet an object lying in both classes
    std::optional<std::pair<int, int>> directed_witness; // (N, M) with Hom(N, M) != 0, N in a later class
    bool resonant = false;
    bool coresonant = false;
};
// Classes are layers of the precedence order (longest chain below an object). An object that
// fits several layers, between its predecessors and its first successor, may sit in more than
// one; the assignment keeps every layer wide and maximizes memberships.
WideCollection prec_partition(const CTCatalog& c, const std::vector<int>& alpha_objects, const std::vector<DExactSequence>& seqs);

// Fills the flags of coll; the standard classes are lists of sorted catalog index lists.
void collection_flags(const CTCatalog& c, WideCollection& coll, const std::vector<std::vector<int>>& standard_torsion,
                      const std::vector<std::vector<int>>& standard_torsion_free);

struct MasodReport {
    std::vector<std::vector<int>> tilting;
    std::vector<std::vector<int>> torsion;       // Fac(T) cap C, same order as tilting
    std::vector<WideCollection> resonant;        // from alpha of each torsion class
    std::vector<std::vector<int>> cotilting;     // proper support-d-cotilting, via the opposite algebra
    std::vector<std::vector<int>> torsion_free;  // Sub(T) cap C, same order as tilting
    std::vector<WideCollection> coresonant;      // computed over the opposite algebra, dualized back
    std::vector<std::pair<int, int>> lattice_edges; // Hasse diagram of torsion classes under inclusion
    AuditResult indec2{"indec2", 0, {}};
    std::vector<std::string> failures;
    bool equinumerous = false;
    bool pass() const { return equinumerous && failures.empty(); }
};
// seed drives the generic surjections tried in alpha.
MasodReport masod_audit(const CTCatalog& c, SupportOracle& oracle, const std::vector<DExactSequence>& seqs,
                        std::uint64_t seed = 11);

// Closure of alpha along indecomposable d-exact sequences, for each d-tilting T.
AuditResult audit_indec2(const CTCatalog& c, const std::vector<std::vector<int>>& tilting, const std::vector<DExactSequence>& seqs);

// Covering pairs (a, b), class a strictly inside class b; classes are sorted index lists.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<int>>& classes);

// Isomorphism of undirected simple graphs on n vertices.
bool graphs_isomorphic(std::size_t n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b);

} // namespace qtilt
