#pragma once

#include "qtilt/wide_resonance.hpp"

#include <json.hpp>

#include <iosfwd>

namespace qtilt::cli {

inline constexpr const char* engine_version = "0.3.0";

using Json = nlohmann::json;

Json algebra_to_json(const Algebra& a);
// Throws InvalidInput on schema or presentation errors.
AlgebraPtr algebra_from_json(const Json& j);
// Hex SHA-256 of the canonical algebra JSON.
std::string algebra_digest(const Algebra& a);

// Composition factors by vertex label, e.g. "2345" (labels joined with '.' once any exceeds 9).
std::string module_label(const Module& m);
Json module_to_json(const Module& m);
Module module_from_json(const AlgebraPtr& a, const Json& j);

Json catalog_to_json(const CTCatalog& c);
// Rebuilds and re-certifies a catalog; any schema, relation, indecomposability or
// cluster-tilting violation throws InvalidInput.
CTCatalog catalog_from_json(const Json& j);

struct LatticeData {
    std::vector<std::vector<int>> tilting; // sorted
    std::vector<std::vector<int>> torsion;
    std::vector<std::pair<int, int>> edges; // covering pairs (smaller class, larger class)
};
LatticeData tilting_lattice(const CTCatalog& c, SupportOracle& oracle, std::size_t cap_subsets = 0);
Json lattice_to_json(const CTCatalog& c, const LatticeData& l);
LatticeData lattice_from_json(const Json& j);
std::string lattice_dot(const CTCatalog& c, const LatticeData& l);

// True when the algebra is, up to its presentation as built here, the iterated Auslander
// algebra carrying the d-cluster-tilting subcategory for some linear A_n.
bool auslander_type_a(const Algebra& a, int d);

// Which lemma audits have their hypotheses met by an instance.
struct LemmaScope {
    bool gl_dim_at_most_d = false;
    bool almost_directed = false;
    bool auslander_type_a = false;
};
LemmaScope lemma_scope(const CTCatalog& c, SupportOracle& oracle);
bool lemma_applies(const std::string& audit_name, const LemmaScope& s);

// Full audit report; "pass" is true iff every audited statement held where its hypotheses
// are met. Audits outside their hypotheses are still run and reported as not applicable.
Json audit_report(const CTCatalog& c, SupportOracle& oracle, std::uint64_t seed, std::size_t conjecture_cap = 12);

// The command line: build | tilting | audit. Returns the process exit code:
// 0 ok, 2 invalid input, 3 falsification, 4 cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qtilt::cli
