#pragma once

#include "qtilt/ct_cluster.hpp"

namespace qtilt {

// ann(M) inside e_tgt A e_src, as coordinates in basis(src, tgt).
struct AnnihilatorPiece {
    int src = 0;
    int tgt = 0;
    Matrix basis;
};

struct SupportData {
    std::vector<int> support;
    std::vector<int> killed; // e_M: the complement of the support
    std::vector<AnnihilatorPiece> annihilator;
    std::size_t annihilator_dim = 0;
    // ann(M) = <e_M>, compared by dimension (ann always contains <e_M>)
    bool annihilator_is_support_ideal = false;
};

SupportData support_data(const Module& m);
SupportData support_data(const CTCatalog& c, const std::vector<int>& cls);

// d-tilting test for a list of pairwise non-isomorphic indecomposables over alg.
struct TiltingCheck {
    bool pre = false;     // pd <= d and Ext^{1..d}(T, T) = 0
    bool tilting = false; // plus 0 -> A -> T_0 -> ... -> T_d -> 0 in add(T)
    Chain coresolution;
    std::string reason;
};
TiltingCheck check_d_tilting(const AlgebraPtr& alg, int d, const std::vector<Module>& summands);
// Cotilting, checked as tilting of the duals over the opposite algebra.
TiltingCheck check_d_cotilting(const AlgebraPtr& alg, int d, const std::vector<Module>& summands);

struct TiltingVerdict {
    std::vector<int> summands; // catalog indices, sorted
    SupportData support;
    bool pre_d_tilting = false; // over A
    bool d_tilting = false;
    bool d_cotilting = false;
    bool maximal_pre = false;   // among catalog objects
    bool support_d_tilting = false;
    bool proper = false;
    bool support_d_cotilting = false;
    bool proper_cotilting = false;
    std::size_t quotient_rank = 0; // |A/<e_T>|
    TiltingCheck over_quotient;
    TiltingCheck cotilting_over_quotient;
};
TiltingVerdict tilting_verdict(const CTCatalog& c, std::vector<int> summands, SupportOracle& oracle);

struct TiltingEnumeration {
    std::vector<std::vector<int>> modules; // sorted summand lists, in discovery order
    std::size_t candidates = 0;
};
// Proper support-d-tilting modules. With prune_by_count only |T| = |A/<e>| candidates are tested.
// Throws CapExceeded when more than cap_subsets candidates would be tested (0: no cap).
TiltingEnumeration enumerate_proper_support_d_tilting(const CTCatalog& c, SupportOracle& oracle,
                                                      bool prune_by_count = true, std::size_t cap_subsets = 0);

// Trace of add(gens) in m and the reject of m in add(gens).
Submodule trace(const CTCatalog& c, const std::vector<int>& gens, const Module& m);
Submodule reject(const CTCatalog& c, const std::vector<int>& gens, const Module& m);
std::vector<int> fac_cap_c(const CTCatalog& c, const std::vector<int>& gens);
std::vector<int> sub_cap_c(const CTCatalog& c, const std::vector<int>& gens);

struct AxiomReport {
    bool first = false;  // T1 (resp. C1)
    bool second = false; // T2 (resp. C2)
    std::vector<std::string> violations;
};
AxiomReport verify_torsion_axioms(const CTCatalog& c, const std::vector<int>& cls, const std::vector<DExactSequence>& seqs);
AxiomReport verify_torsion_free_axioms(const CTCatalog& c, const std::vector<int>& cls, const std::vector<DExactSequence>& seqs);

// 0 -> T_1 -> ... -> T_d -> M -> F_M -> 0 with T_i in Fac(T) cap C.
struct ElsoSequence {
    Chain chain; // mods: T_1, ..., T_d, M, F_M
    Module f_m;
    bool exact = false;
    bool terms_in_class = false;
};
ElsoSequence elso_sequence(const CTCatalog& c, const std::vector<int>& t, int m_idx);

std::vector<int> ext_projectives(const CTCatalog& c, const std::vector<int>& cls);
std::vector<int> ext_injectives(const CTCatalog& c, const std::vector<int>& cls);

struct ConjectureReport {
    bool skipped = false;
    std::size_t maximal_support_pre = 0;
    std::size_t torsion_classes = 0;
    std::string note;
};
ConjectureReport conjecture_probe(const CTCatalog& c, const std::vector<DExactSequence>& seqs, std::size_t cap = 12);

// A named property check over an instance; failures carry a witness description.
struct AuditResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Lemma-level audits for a list of proper support-d-tilting modules.
AuditResult audit_count(const CTCatalog& c, SupportOracle& oracle, const std::vector<std::vector<int>>& tilting);
AuditResult audit_cotilting(const CTCatalog& c, SupportOracle& oracle, const std::vector<std::vector<int>>& tilting);
AuditResult audit_happel(const CTCatalog& c, SupportOracle& oracle, const std::vector<std::vector<int>>& tilting);
AuditResult audit_chevelle(const CTCatalog& c, const std::vector<std::vector<int>>& tilting);
AuditResult audit_skel2(const CTCatalog& c, SupportOracle& oracle, const std::vector<std::vector<int>>& tilting);
AuditResult audit_elso(const CTCatalog& c, const std::vector<std::vector<int>>& tilting, const std::vector<DExactSequence>& seqs);
AuditResult audit_adapt(const CTCatalog& c, SupportOracle& oracle);
AuditResult audit_indec(const CTCatalog& c, SupportOracle& oracle, const std::vector<DExactSequence>& seqs);

} // namespace qtilt
