#include "qtilt/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtilt {

bool Relation::is_commutativity() const
{
    return terms.size() == 2 && terms[0].coeff == -terms[1].coeff;
}

Path reversed(const Path& p)
{
    return {p.rbegin(), p.rend()};
}

int Algebra::vertex_of_label(int label) const
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label)
            return static_cast<int>(v);
    throw std::invalid_argument("unknown vertex label " + std::to_string(label));
}

int Algebra::arrow_index(const std::string& id) const
{
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].id == id)
            return static_cast<int>(a);
    throw std::invalid_argument("unknown arrow " + id);
}

int Algebra::free_index(int i, int j, const Path& p) const
{
    const auto& m = free_idx_[i * n() + j];
    auto it = m.find(p);
    if (it == m.end())
        throw std::invalid_argument("path does not run between the given vertices");
    return it->second;
}

AlgebraPtr Algebra::create(std::vector<int> labels, std::vector<Arrow> arrows, std::vector<Relation> relations)
{
    std::shared_ptr<Algebra> a(new Algebra());
    a->labels_ = std::move(labels);
    a->arrows_ = std::move(arrows);
    a->relations_ = std::move(relations);
    a->build();
    return a;
}

void Algebra::build()
{
    const int nv = static_cast<int>(n());
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate vertex label");
    }
    for (const auto& ar : arrows_)
        if (ar.src < 0 || ar.tgt < 0 || ar.src >= nv || ar.tgt >= nv)
            throw std::invalid_argument("arrow " + ar.id + " has an undeclared endpoint");
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        for (std::size_t b = a + 1; b < arrows_.size(); ++b)
            if (arrows_[a].id == arrows_[b].id)
                throw std::invalid_argument("duplicate arrow id " + arrows_[a].id);

    // Kahn: the quiver must be acyclic
    std::vector<int> indeg(nv, 0);
    for (const auto& ar : arrows_)
        ++indeg[ar.tgt];
    std::vector<int> queue;
    for (int v = 0; v < nv; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const auto& ar : arrows_)
            if (ar.src == queue[h] && --indeg[ar.tgt] == 0)
                queue.push_back(ar.tgt);
    if (static_cast<int>(queue.size()) != nv)
        throw std::invalid_argument("quiver has an oriented cycle");

    free_.assign(nv * nv, {});
    free_idx_.assign(nv * nv, {});
    for (int i = 0; i < nv; ++i) {
        std::function<void(int, Path&)> walk = [&](int v, Path& p) {
            free_[i * nv + v].push_back(p);
            for (std::size_t a = 0; a < arrows_.size(); ++a)
                if (arrows_[a].src == v) {
                    p.push_back(static_cast<int>(a));
                    walk(arrows_[a].tgt, p);
                    p.pop_back();
                }
        };
        Path p;
        walk(i, p);
    }
    // longest paths first so that they become pivots and leave the normal form
    for (auto& list : free_)
        std::sort(list.begin(), list.end(), [](const Path& x, const Path& y) {
            return x.size() != y.size() ? x.size() > y.size() : x > y;
        });
    for (int k = 0; k < nv * nv; ++k)
        for (std::size_t t = 0; t < free_[k].size(); ++t)
            free_idx_[k][free_[k][t]] = static_cast<int>(t);

    for (const auto& r : relations_) {
        if (r.terms.empty())
            throw std::invalid_argument("empty relation");
        for (const auto& t : r.terms) {
            if (t.path.size() < 2)
                throw std::invalid_argument("relation paths must have length at least 2");
            int v = r.src;
            for (int a : t.path) {
                if (a < 0 || a >= static_cast<int>(arrows_.size()) || arrows_[a].src != v)
                    throw std::invalid_argument("relation path is not a path of the quiver");
                v = arrows_[a].tgt;
            }
            if (v != r.tgt)
                throw std::invalid_argument("relation paths are not parallel");
        }
    }

    basis_.assign(nv * nv, {});
    reduce_.assign(nv * nv, {});
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            const auto& fp = free_[i * nv + j];
            std::vector<std::vector<Rational>> rows;
            for (const auto& r : relations_)
                for (const auto& u : free_[i * nv + r.src])
                    for (const auto& w : free_[r.tgt * nv + j]) {
                        std::vector<Rational> row(fp.size());
                        for (const auto& t : r.terms) {
                            Path p = u;
                            p.insert(p.end(), t.path.begin(), t.path.end());
                            p.insert(p.end(), w.begin(), w.end());
                            row[free_idx_[i * nv + j].at(p)] += t.coeff;
                        }
                        rows.push_back(std::move(row));
                    }
            Matrix ideal(rows.size(), fp.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < fp.size(); ++c)
                    ideal(r, c) = rows[r][c];
            Echelon e = rref(ideal);
            std::vector<int> pivot_row(fp.size(), -1);
            for (std::size_t r = 0; r < e.pivots.size(); ++r)
                pivot_row[e.pivots[r]] = static_cast<int>(r);
            std::vector<std::size_t> nonpivot;
            for (std::size_t c = fp.size(); c-- > 0;)
                if (pivot_row[c] < 0)
                    nonpivot.push_back(c); // ascending length
            auto& basis = basis_[i * nv + j];
            std::vector<int> pos(fp.size(), -1);
            for (std::size_t b = 0; b < nonpivot.size(); ++b) {
                basis.push_back(fp[nonpivot[b]]);
                pos[nonpivot[b]] = static_cast<int>(b);
            }
            Matrix red(nonpivot.size(), fp.size());
            for (std::size_t c = 0; c < fp.size(); ++c) {
                if (pos[c] >= 0) {
                    red(pos[c], c) = 1;
                    continue;
                }
                int r = pivot_row[c];
                for (std::size_t b = 0; b < nonpivot.size(); ++b)
                    red(b, c) = -e.reduced(r, nonpivot[b]);
            }
            reduce_[i * nv + j] = std::move(red);
        }
}

std::vector<Rational> Algebra::reduce(int i, int j, const Path& p) const
{
    return reduction(i, j).col(free_index(i, j, p));
}

std::size_t Algebra::dimension() const
{
    std::size_t d = 0;
    for (const auto& b : basis_)
        d += b.size();
    return d;
}

bool Algebra::relations_length_two() const
{
    for (const auto& r : relations_)
        for (const auto& t : r.terms)
            if (t.path.size() != 2)
                return false;
    return true;
}

std::vector<Rational> Algebra::multiply(int i, int j, int k, const std::vector<Rational>& x, const std::vector<Rational>& y) const
{
    const auto& bx = basis(i, j);
    const auto& by = basis(j, k);
    std::vector<Rational> out(basis(i, k).size());
    for (std::size_t p = 0; p < bx.size(); ++p) {
        if (sgn(x[p]) == 0)
            continue;
        for (std::size_t q = 0; q < by.size(); ++q) {
            if (sgn(y[q]) == 0)
                continue;
            Path pq = bx[p];
            pq.insert(pq.end(), by[q].begin(), by[q].end());
            auto r = reduce(i, k, pq);
            Rational s = x[p] * y[q];
            for (std::size_t t = 0; t < r.size(); ++t)
                out[t] += s * r[t];
        }
    }
    return out;
}

AlgebraPtr Algebra::opposite() const
{
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (auto parent = op_parent_.lock())
        return parent;
    if (op_)
        return op_;
    std::vector<Arrow> arrows;
    for (const auto& a : arrows_)
        arrows.push_back({a.id, a.tgt, a.src});
    std::vector<Relation> rels;
    for (const auto& r : relations_) {
        Relation o{r.tgt, r.src, {}};
        for (const auto& t : r.terms)
            o.terms.push_back({t.coeff, reversed(t.path)});
        rels.push_back(std::move(o));
    }
    std::shared_ptr<Algebra> op(new Algebra());
    op->labels_ = labels_;
    op->arrows_ = std::move(arrows);
    op->relations_ = std::move(rels);
    op->build();
    op->op_parent_ = shared_from_this();
    op_ = op;
    return op_;
}

std::string Algebra::digest() const
{
    std::ostringstream os;
    os << "v";
    for (int l : labels_)
        os << ' ' << l;
    os << "|a";
    for (const auto& a : arrows_)
        os << ' ' << a.id << ':' << labels_[a.src] << '>' << labels_[a.tgt];
    os << "|r";
    for (const auto& r : relations_) {
        os << " [";
        for (const auto& t : r.terms) {
            os << t.coeff.get_str() << '*';
            for (int a : t.path)
                os << arrows_[a].id << '.';
            os << ';';
        }
        os << ']';
    }
    // FNV-1a, stable across platforms unlike std::hash
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << h;
    return hex.str();
}

AlgebraPtr build_linear_an(int n, int rad_bound)
{
    if (n < 1)
        throw std::invalid_argument("linear A_n needs n >= 1");
    if (rad_bound != 0 && rad_bound < 2)
        throw std::invalid_argument("radical bound must be at least 2");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < n; ++i)
        arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    std::vector<Relation> rels;
    if (rad_bound)
        for (int i = 0; i + rad_bound <= n - 1; ++i) {
            Path p(rad_bound);
            std::iota(p.begin(), p.end(), i);
            rels.push_back({i, i + rad_bound, {{Rational(1), p}}});
        }
    return Algebra::create(labels, arrows, rels);
}

IdempotentQuotient quotient_by_idempotent(const AlgebraPtr& a, const std::vector<int>& killed)
{
    IdempotentQuotient q;
    q.parent = a;
    q.killed = killed;
    std::sort(q.killed.begin(), q.killed.end());
    q.killed.erase(std::unique(q.killed.begin(), q.killed.end()), q.killed.end());
    const int nv = static_cast<int>(a->num_vertices());
    std::vector<bool> dead(nv, false);
    for (int v : q.killed) {
        if (v < 0 || v >= nv)
            throw std::invalid_argument("killed vertex out of range");
        dead[v] = true;
    }
    q.parent_to_quotient.assign(nv, -1);
    std::vector<int> labels;
    for (int v = 0; v < nv; ++v)
        if (!dead[v]) {
            q.parent_to_quotient[v] = static_cast<int>(q.vertex_map.size());
            q.vertex_map.push_back(v);
            labels.push_back(a->label(v));
        }
    std::vector<int> arrow_to_q(a->num_arrows(), -1);
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        if (dead[ar.src] || dead[ar.tgt])
            continue;
        arrow_to_q[k] = static_cast<int>(arrows.size());
        q.arrow_map.push_back(static_cast<int>(k));
        arrows.push_back({ar.id, q.parent_to_quotient[ar.src], q.parent_to_quotient[ar.tgt]});
    }
    // relations project termwise: paths through killed vertices vanish
    std::vector<Relation> rels;
    for (const auto& r : a->relations()) {
        if (dead[r.src] || dead[r.tgt])
            continue;
        Relation o{q.parent_to_quotient[r.src], q.parent_to_quotient[r.tgt], {}};
        for (const auto& t : r.terms) {
            Path p;
            bool alive = true;
            for (int ar : t.path) {
                if (arrow_to_q[ar] < 0) {
                    alive = false;
                    break;
                }
                p.push_back(arrow_to_q[ar]);
            }
            if (alive)
                o.terms.push_back({t.coeff, p});
        }
        if (!o.terms.empty())
            rels.push_back(std::move(o));
    }
    q.quotient = Algebra::create(labels, arrows, rels);
    return q;
}

bool isomorphic_presentations(const Algebra& a, const Algebra& b)
{
    return presentation_isomorphism(a, b).has_value();
}

std::optional<std::vector<int>> presentation_isomorphism(const Algebra& a, const Algebra& b)
{
    const int nv = static_cast<int>(a.num_vertices());
    if (nv != static_cast<int>(b.num_vertices()) || a.num_arrows() != b.num_arrows() || a.dimension() != b.dimension())
        return std::nullopt;
    if (nv > 9)
        throw std::invalid_argument("isomorphic_presentations: quiver too large for brute force");
    auto arrow_count = [](const Algebra& x, int i, int j) {
        int c = 0;
        for (const auto& ar : x.arrows())
            c += ar.src == i && ar.tgt == j;
        return c;
    };
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < nv && ok; ++i)
            for (int j = 0; j < nv && ok; ++j)
                ok = arrow_count(a, i, j) == arrow_count(b, perm[i], perm[j])
                    && a.basis(i, j).size() == b.basis(perm[i], perm[j]).size();
        if (!ok)
            continue;
        // with at most one arrow per pair the arrow bijection is forced; compare which paths vanish
        bool simple = true;
        for (int i = 0; i < nv && simple; ++i)
            for (int j = 0; j < nv && simple; ++j)
                simple = arrow_count(a, i, j) <= 1;
        if (!simple)
            return perm;
        std::vector<int> amap(a.num_arrows());
        for (std::size_t k = 0; k < a.num_arrows(); ++k) {
            const auto& ar = a.arrow(static_cast<int>(k));
            for (std::size_t l = 0; l < b.num_arrows(); ++l)
                if (b.arrow(static_cast<int>(l)).src == perm[ar.src] && b.arrow(static_cast<int>(l)).tgt == perm[ar.tgt])
                    amap[k] = static_cast<int>(l);
        }
        for (int i = 0; i < nv && ok; ++i)
            for (int j = 0; j < nv && ok; ++j)
                for (const auto& p : a.free_paths(i, j)) {
                    Path q;
                    for (int x : p)
                        q.push_back(amap[x]);
                    bool za = true, zb = true;
                    for (const auto& c : a.reduce(i, j, p))
                        za = za && sgn(c) == 0;
                    for (const auto& c : b.reduce(perm[i], perm[j], q))
                        zb = zb && sgn(c) == 0;
                    if (za != zb) {
                        ok = false;
                        break;
                    }
                }
        if (ok)
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace qtilt
