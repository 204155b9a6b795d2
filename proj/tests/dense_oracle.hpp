#pragma once

// Independent dense-solve oracles for the module engine. The oracle side only multiplies
// matrices; every rank below comes from its own elimination, not from the engine.

#include "fixtures.hpp"
#include "qtilt/ct_cluster.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace oracle {

using namespace qtilt;


using Dense = std::vector<std::vector<Rational>>;

inline std::size_t dense_rank(Dense a)
{
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

inline Dense to_dense(const Matrix& m)
{
    Dense d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            d[r][c] = m(r, c);
    return d;
}

// Matrix of a linear map, given as a function on a flat vector of `n` unknowns, by columns.
inline Dense linear_map(std::size_t n, const std::function<std::vector<Rational>(const std::vector<Rational>&)>& f)
{
    Dense cols;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> e(n);
        e[k] = 1;
        cols.push_back(f(e));
    }
    const std::size_t rows = n == 0 ? f(std::vector<Rational>()).size() : cols[0].size();
    Dense m(rows, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < rows; ++r)
            m[r][k] = cols[k][r];
    return m;
}

// Flat unknown vector <-> one matrix of shape rows[b] x cols[b] per block b.
inline std::vector<Matrix> unflatten(const std::vector<Rational>& x, const std::vector<std::pair<int, int>>& shapes)
{
    std::vector<Matrix> out;
    std::size_t k = 0;
    for (auto [r, c] : shapes) {
        Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m(i, j) = x[k++];
        out.push_back(std::move(m));
    }
    return out;
}

inline void flatten_into(const Matrix& m, std::vector<Rational>& out)
{
    out.insert(out.end(), m.data().begin(), m.data().end());
}

inline std::size_t flat_size(const std::vector<std::pair<int, int>>& shapes)
{
    std::size_t n = 0;
    for (auto [r, c] : shapes)
        n += static_cast<std::size_t>(r * c);
    return n;
}

// h_v : M_v -> N_v at every vertex.
inline std::vector<std::pair<int, int>> vertex_shapes(const Module& m, const Module& n)
{
    std::vector<std::pair<int, int>> s;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        s.emplace_back(n.dims[v], m.dims[v]);
    return s;
}

inline std::size_t oracle_hom(const Module& m, const Module& n)
{
    const auto& a = *m.alg;
    const auto shapes = vertex_shapes(m, n);
    auto eqs = linear_map(flat_size(shapes), [&](const std::vector<Rational>& x) {
        auto h = unflatten(x, shapes);
        std::vector<Rational> out;
        for (std::size_t k = 0; k < a.num_arrows(); ++k) {
            const auto& ar = a.arrow(static_cast<int>(k));
            flatten_into(n.maps[k] * h[ar.src] - h[ar.tgt] * m.maps[k], out);
        }
        return out;
    });
    return flat_size(shapes) - dense_rank(eqs);
}

// Ext^1(N, M) as extension data E_a = [[M_a, D_a], [0, N_a]] satisfying the relations, modulo
// the data coming from a change of splitting.
std::size_t oracle_ext1(const Module& n, const Module& m)
{
    const auto& a = *m.alg;
    std::vector<std::pair<int, int>> dshape;
    for (std::size_t k = 0; k < a.num_arrows(); ++k) {
        const auto& ar = a.arrow(static_cast<int>(k));
        dshape.emplace_back(m.dims[ar.tgt], n.dims[ar.src]);
    }
    const std::size_t nd = flat_size(dshape);
    auto cocycle = linear_map(nd, [&](const std::vector<Rational>& x) {
        auto dm = unflatten(x, dshape);
        std::vector<Rational> out;
        for (const auto& rel : a.relations()) {
            Matrix total(m.dims[rel.tgt], n.dims[rel.src]);
            for (const auto& t : rel.terms) {
                // off-diagonal block of E along the path: sum over the arrow that uses D
                for (std::size_t j = 0; j < t.path.size(); ++j) {
                    Path before(t.path.begin(), t.path.begin() + static_cast<long>(j));
                    Path after(t.path.begin() + static_cast<long>(j) + 1, t.path.end());
                    const int mid = a.arrow(t.path[j]).tgt;
                    total += (m.act(mid, after) * dm[t.path[j]] * n.act(rel.src, before)).scaled(t.coeff);
                }
            }
            flatten_into(total, out);
        }
        return out;
    });
    const auto hshape = vertex_shapes(n, m);
    auto coboundary = linear_map(flat_size(hshape), [&](const std::vector<Rational>& x) {
        auto h = unflatten(x, hshape);
        std::vector<Rational> out;
        for (std::size_t k = 0; k < a.num_arrows(); ++k) {
            const auto& ar = a.arrow(static_cast<int>(k));
            flatten_into(m.maps[k] * h[ar.src] - h[ar.tgt] * n.maps[k], out);
        }
        return out;
    });
    return (nd - dense_rank(cocycle)) - dense_rank(coboundary);
}

// dim of the top of m at each vertex: dims minus the span of the incoming arrows.
inline std::vector<int> oracle_top(const Module& m)
{
    const auto& a = *m.alg;
    std::vector<int> top = m.dims;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Dense incoming(static_cast<std::size_t>(m.dims[v]));
        for (std::size_t k = 0; k < a.num_arrows(); ++k)
            if (a.arrow(static_cast<int>(k)).tgt == static_cast<int>(v))
                for (std::size_t r = 0; r < incoming.size(); ++r)
                    for (std::size_t c = 0; c < m.maps[k].cols(); ++c)
                        incoming[r].push_back(m.maps[k](r, c));
        top[v] -= static_cast<int>(dense_rank(incoming));
    }
    return top;
}

struct Instance {
    std::string name;
    AlgebraPtr alg;
    int ext_top;
};

inline std::vector<Instance> instances()
{
    return {{"A3", build_linear_an(3), 1},
            {"A4", build_linear_an(4), 1},
            {"A5/rad3", build_linear_an(5, 3), 2},
            {"Auslander A3", fixtures::auslander_a3_by_hand(), 2},
            {"2-Auslander A2", iterate_auslander(2, 2), 2},
            {"A7/rad3", build_linear_an(7, 3), 4}};
}

// Indecomposables plus a seeded handful of two-term sums, all of total dimension <= 30.
inline std::vector<Module> test_modules(const AlgebraPtr& a, std::vector<Module>& indec)
{
    indec = indecomposables_by_orbits(a, 200);
    std::vector<Module> mods = indec;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, indec.size() - 1);
    for (int k = 0; k < 8; ++k) {
        auto s = direct_sum({indec[pick(rng)], indec[pick(rng)]}, a).sum;
        if (s.total_dim() <= 30)
            mods.push_back(std::move(s));
    }
    auto reg = regular_module(a);
    if (reg.total_dim() <= 30)
        mods.push_back(std::move(reg));
    return mods;
}

inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = coef(rng);
            u(j, i) = coef(rng);
        }
    return l * u;
}

struct Sweep {
    std::size_t pairs = 0;
    std::size_t ext_checks = 0;
    std::size_t kernels = 0;
    std::size_t trials = 0;
    std::vector<std::string> failures;
    void fail(const std::string& where, const std::string& what) { failures.push_back(where + ": " + what); }
};

// Hom dimension and basis, Ext^1..Ext^top (by dimension shift, with the syzygy's size checked
// against the top), and kernel/image/cokernel of a random map, on every ordered pair.
inline Sweep engine_sweep()
{
    Sweep s;
    for (const auto& inst : instances()) {
        std::vector<Module> indec;
        auto mods = test_modules(inst.alg, indec);
        std::mt19937_64 rng(17);
        for (std::size_t mi = 0; mi < mods.size(); ++mi)
            for (std::size_t ni = 0; ni < mods.size(); ++ni) {
                const auto& m = mods[mi];
                const auto& n = mods[ni];
                std::ostringstream where;
                where << inst.name << " (" << mi << "," << ni << ")";
                ++s.pairs;
                if (m.total_dim() > 30 || n.total_dim() > 30)
                    s.fail(where.str(), "module above dimension 30");
                const auto h = oracle_hom(m, n);
                auto basis = hom_basis(m, n);
                if (hom_dim(m, n) != h || basis.size() != h)
                    s.fail(where.str(), "Hom dimension");
                Dense flat;
                for (const auto& f : basis) {
                    if (!f.is_valid())
                        s.fail(where.str(), "Hom basis element is not a morphism");
                    flat.push_back(f.flatten());
                }
                if (dense_rank(flat) != basis.size())
                    s.fail(where.str(), "Hom basis is dependent");

                Module z = m;
                for (int i = 1; i <= inst.ext_top; ++i) {
                    ++s.ext_checks;
                    if (ext_dim(i, m, n) != oracle_ext1(z, n))
                        s.fail(where.str(), "Ext^" + std::to_string(i));
                    const auto top = oracle_top(z);
                    int cover = 0;
                    for (std::size_t v = 0; v < top.size(); ++v)
                        for (std::size_t w = 0; w < top.size(); ++w)
                            cover += top[v] * static_cast<int>(inst.alg->basis(static_cast<int>(v), static_cast<int>(w)).size());
                    Module next = syzygy(1, z);
                    if (next.total_dim() != cover - z.total_dim())
                        s.fail(where.str(), "syzygy size in degree " + std::to_string(i));
                    z = std::move(next);
                }

                if (basis.empty())
                    continue;
                auto f = random_combination(basis, m, n, rng);
                auto k = kernel(f);
                auto im = image(f);
                auto q = cokernel(f);
                ++s.kernels;
                for (std::size_t v = 0; v < m.dims.size(); ++v) {
                    const int r = static_cast<int>(dense_rank(to_dense(f.comps[v])));
                    if (k.mod.dims[v] != m.dims[v] - r || im.mod.dims[v] != r || q.mod.dims[v] != n.dims[v] - r)
                        s.fail(where.str(), "kernel/image/cokernel dimensions");
                }
                if (!k.incl.is_valid() || !k.incl.is_mono() || !compose(f, k.incl).is_zero())
                    s.fail(where.str(), "kernel inclusion");
                if (!q.proj.is_epi() || !compose(q.proj, f).is_zero())
                    s.fail(where.str(), "cokernel projection");
            }
    }
    return s;
}

// Sums of 2-4 random indecomposables (total dimension <= 30) behind a random change of basis
// at every vertex must decompose back into the same summands.
inline Sweep krull_schmidt_sweep(int trials, std::uint64_t seed = 2024)
{
    Sweep s;
    auto insts = instances();
    std::vector<std::vector<Module>> indec(insts.size());
    for (std::size_t i = 0; i < insts.size(); ++i)
        indec[i] = indecomposables_by_orbits(insts[i].alg, 200);

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        ++s.trials;
        const std::size_t ai = rng() % insts.size();
        const auto& a = insts[ai].alg;
        const auto& pool = indec[ai];
        std::vector<Module> picked;
        int total = 0;
        const int want = 2 + static_cast<int>(rng() % 3);
        while (static_cast<int>(picked.size()) < want) {
            const auto& x = pool[rng() % pool.size()];
            if (total + x.total_dim() > 30)
                break;
            total += x.total_dim();
            picked.push_back(x);
        }
        if (picked.empty())
            picked.push_back(pool[0]);
        const std::string where = "trial " + std::to_string(trial) + " on " + insts[ai].name;

        Module m = direct_sum(picked, a).sum;
        std::vector<Matrix> g, ginv;
        for (int d : m.dims) {
            g.push_back(random_invertible(static_cast<std::size_t>(d), rng));
            auto inv = inverse(g.back());
            if (!inv || g.back() * *inv != Matrix::identity(static_cast<std::size_t>(d))) {
                s.fail(where, "change of basis is not invertible");
                inv = Matrix::identity(static_cast<std::size_t>(d));
                g.back() = *inv;
            }
            ginv.push_back(*inv);
        }
        for (std::size_t k = 0; k < m.maps.size(); ++k) {
            const auto& ar = a->arrow(static_cast<int>(k));
            m.maps[k] = g[ar.tgt] * m.maps[k] * ginv[ar.src];
        }
        m.validate();

        auto parts = decompose(m, static_cast<std::uint64_t>(trial) + 1);
        if (parts.size() != picked.size()) {
            s.fail(where, std::to_string(parts.size()) + " summands instead of " + std::to_string(picked.size()));
            continue;
        }
        std::vector<int> dims(m.dims.size(), 0);
        std::vector<bool> used(picked.size(), false);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!is_indecomposable(parts[i].mod))
                s.fail(where, "summand is decomposable");
            for (std::size_t v = 0; v < dims.size(); ++v)
                dims[v] += parts[i].mod.dims[v];
            bool matched = false;
            for (std::size_t p = 0; p < picked.size() && !matched; ++p)
                if (!used[p] && isomorphic_indecomposables(parts[i].mod, picked[p]))
                    used[p] = matched = true;
            if (!matched)
                s.fail(where, "summand matches none of the original ones");
            for (std::size_t j = 0; j < parts.size(); ++j) {
                auto pi = compose(parts[j].proj, parts[i].incl);
                if (i == j ? !pi.is_iso() : !pi.is_zero())
                    s.fail(where, "inclusions and projections are not orthogonal");
            }
        }
        if (dims != m.dims)
            s.fail(where, "dimension vectors do not add up");
    }
    return s;
}

} // namespace oracle
