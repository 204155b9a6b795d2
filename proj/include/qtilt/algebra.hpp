#pragma once

#include "qtilt/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qtilt {

// A path is the list of arrow indices in traversal order. The trivial path at a
// vertex is the empty list; its endpoints always travel alongside it.
using Path = std::vector<int>;

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
};

struct Term {
    Rational coeff;
    Path path;
};

// A linear combination of parallel paths that is declared zero.
struct Relation {
    int src = 0;
    int tgt = 0;
    std::vector<Term> terms;

    bool is_zero_relation() const { return terms.size() == 1; }
    bool is_commutativity() const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    // Vertex labels are user-facing integers; internally vertices are 0..n-1.
    static AlgebraPtr create(std::vector<int> labels, std::vector<Arrow> arrows, std::vector<Relation> relations);

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int v) const { return labels_[v]; }
    int vertex_of_label(int label) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    int arrow_index(const std::string& id) const;
    const std::vector<Relation>& relations() const { return relations_; }

    // All paths of the free path category from i to j.
    const std::vector<Path>& free_paths(int i, int j) const { return free_[i * n() + j]; }
    int free_index(int i, int j, const Path& p) const;
    // Paths forming the normal-form basis of e_i A e_j (paths i -> j).
    const std::vector<Path>& basis(int i, int j) const { return basis_[i * n() + j]; }
    // Coordinates of a free path in basis(i, j).
    std::vector<Rational> reduce(int i, int j, const Path& p) const;
    // Columns: reduction of each free path i -> j.
    const Matrix& reduction(int i, int j) const { return reduce_[i * n() + j]; }

    std::size_t dimension() const;
    bool relations_length_two() const;

    // Product of basis elements x in e_i A e_j and y in e_j A e_k (first x, then y).
    std::vector<Rational> multiply(int i, int j, int k, const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    AlgebraPtr opposite() const;
    AlgebraPtr ptr() const { return shared_from_this(); }

    // Canonical digest of the JSON form.
    std::string digest() const;

private:
    Algebra() = default;
    std::size_t n() const { return labels_.size(); }
    void build();

    std::vector<int> labels_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;

    std::vector<std::vector<Path>> free_;
    std::vector<std::map<Path, int>> free_idx_;
    std::vector<std::vector<Path>> basis_;
    std::vector<Matrix> reduce_;

    mutable std::mutex op_mutex_;
    mutable std::shared_ptr<const Algebra> op_;
    mutable std::weak_ptr<const Algebra> op_parent_;
};

Path reversed(const Path& p);

// Linearly oriented A_n, arrows i -> i+1, optionally modulo all paths of length rad_bound.
AlgebraPtr build_linear_an(int n, int rad_bound = 0);

struct IdempotentQuotient {
    AlgebraPtr parent;
    std::vector<int> killed;        // parent vertex indices
    AlgebraPtr quotient;
    std::vector<int> vertex_map;    // quotient vertex -> parent vertex
    std::vector<int> arrow_map;     // quotient arrow -> parent arrow
    std::vector<int> parent_to_quotient; // parent vertex -> quotient vertex or -1
};

IdempotentQuotient quotient_by_idempotent(const AlgebraPtr& a, const std::vector<int>& killed);

// Structural equality up to relabeling of vertices and arrows; brute force, small quivers only.
bool isomorphic_presentations(const Algebra& a, const Algebra& b);
// A vertex bijection (a-vertex i goes to b-vertex perm[i]) realizing the isomorphism.
std::optional<std::vector<int>> presentation_isomorphism(const Algebra& a, const Algebra& b);

} // namespace qtilt
