#include "qtilt/homology.hpp"

#include <limits>
#include <stdexcept>

namespace qtilt {

Morphism projective_cover(const Module& m, std::vector<int>* vertices)
{
    const auto& a = m.alg;
    std::vector<int> vs;
    std::vector<std::vector<Rational>> images;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        if (m.dims[v] == 0)
            continue;
        Matrix incoming(m.dims[v], 0);
        for (std::size_t k = 0; k < a->num_arrows(); ++k)
            if (a->arrow(static_cast<int>(k)).tgt == static_cast<int>(v))
                incoming = Matrix::hstack(incoming, m.maps[k]);
        for (auto c : complement_columns(incoming, Matrix::identity(m.dims[v]))) {
            std::vector<Rational> x(m.dims[v]);
            x[c] = 1;
            vs.push_back(static_cast<int>(v));
            images.push_back(std::move(x));
        }
    }
    if (vertices)
        *vertices = vs;
    return from_generators(vs, m, images);
}

int ProjectiveResolution::length() const
{
    return static_cast<int>(terms.size()) - 1;
}

Module ProjectiveResolution::term(int k) const
{
    return projective_sum(target.alg, terms[k]);
}

Morphism ProjectiveResolution::differential(int k) const
{
    const PathMatrix& pm = diffs[k];
    std::vector<std::vector<Rational>> images;
    for (std::size_t t = 0; t < pm.rows.size(); ++t) {
        std::vector<Rational> img;
        for (std::size_t s = 0; s < pm.cols.size(); ++s)
            img.insert(img.end(), pm.entry[t][s].begin(), pm.entry[t][s].end());
        images.push_back(std::move(img));
    }
    return from_generators(pm.rows, term(k), images);
}

Morphism ProjectiveResolution::augmentation_map() const
{
    return from_generators(terms.empty() ? std::vector<int>{} : terms[0], target, augmentation);
}

ProjectiveResolution minimal_projective_resolution(const Module& m, int max_len)
{
    const auto& a = m.alg;
    ProjectiveResolution r;
    r.target = m;
    if (m.is_zero()) {
        r.complete = true;
        return r;
    }
    std::vector<int> vs;
    Morphism pi = projective_cover(m, &vs);
    r.terms.push_back(vs);
    for (std::size_t s = 0; s < vs.size(); ++s) {
        // trivial path of the s-th summand sits after the earlier summands' paths
        std::size_t col = 0;
        for (std::size_t q = 0; q < s; ++q)
            col += a->basis(vs[q], vs[s]).size();
        r.augmentation.push_back(pi.comps[vs[s]].col(col));
    }
    Submodule k = kernel(pi);
    for (int step = 1; step <= max_len; ++step) {
        if (k.mod.is_zero()) {
            r.complete = true;
            return r;
        }
        std::vector<int> ws;
        Morphism cover = projective_cover(k.mod, &ws);
        const auto& prev = r.terms.back();
        PathMatrix pm{ws, prev, {}};
        for (std::size_t t = 0; t < ws.size(); ++t) {
            const int w = ws[t];
            std::size_t col = 0;
            for (std::size_t q = 0; q < t; ++q)
                col += a->basis(ws[q], w).size();
            auto y = cover.comps[w].col(col);
            auto img = (k.incl.comps[w] * Matrix::column(y)).col(0);
            std::vector<std::vector<Rational>> row;
            std::size_t off = 0;
            for (int v : prev) {
                std::size_t len = a->basis(v, w).size();
                row.emplace_back(img.begin() + static_cast<long>(off), img.begin() + static_cast<long>(off + len));
                off += len;
            }
            pm.entry.push_back(std::move(row));
        }
        r.diffs.push_back(std::move(pm));
        r.terms.push_back(ws);
        k = kernel(cover);
    }
    r.complete = k.mod.is_zero();
    return r;
}

std::vector<std::vector<int>> injective_coresolution_terms(const Module& m, int max_len, bool* complete)
{
    auto r = minimal_projective_resolution(dual(m), max_len);
    if (complete)
        *complete = r.complete;
    return r.terms;
}

Matrix hom_complex_differential(const ProjectiveResolution& r, int k, const Module& m)
{
    std::size_t cols = 0, rows = 0;
    if (k < static_cast<int>(r.terms.size()))
        for (int v : r.terms[k])
            cols += m.dims[v];
    if (k + 1 < static_cast<int>(r.terms.size()))
        for (int w : r.terms[k + 1])
            rows += m.dims[w];
    Matrix out(rows, cols);
    if (rows == 0 || cols == 0)
        return out;
    const PathMatrix& pm = r.diffs[k];
    std::size_t ro = 0;
    for (std::size_t t = 0; t < pm.rows.size(); ++t) {
        std::size_t co = 0;
        for (std::size_t s = 0; s < pm.cols.size(); ++s) {
            out.set_block(ro, co, m.act_element(pm.cols[s], pm.rows[t], pm.entry[t][s]));
            co += m.dims[pm.cols[s]];
        }
        ro += m.dims[pm.rows[t]];
    }
    return out;
}

ExtClass ext(int i, const Module& n, const Module& m)
{
    ExtClass e;
    e.degree = i;
    if (n.is_zero() || m.is_zero())
        return e;
    auto r = minimal_projective_resolution(n, i + 1);
    if (i >= static_cast<int>(r.terms.size()))
        return e;
    Matrix di = hom_complex_differential(r, i, m);
    Matrix z = di.rows() ? nullspace(di) : Matrix::identity(di.cols());
    Matrix b = i > 0 ? column_basis(hom_complex_differential(r, i - 1, m)) : Matrix(z.rows(), 0);
    if (b.cols() == 0)
        b = Matrix(z.rows(), 0);
    auto pick = complement_columns(b, z);
    e.dim = pick.size();
    for (auto c : pick) {
        auto col = z.col(c);
        std::vector<std::vector<Rational>> parts;
        std::size_t off = 0;
        for (int v : r.terms[i]) {
            parts.emplace_back(col.begin() + static_cast<long>(off), col.begin() + static_cast<long>(off + m.dims[v]));
            off += m.dims[v];
        }
        e.cocycles.push_back(std::move(parts));
    }
    return e;
}

std::vector<std::size_t> ext_dims(const ProjectiveResolution& r, const Module& m, int top)
{
    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1, 0);
    if (m.is_zero() || r.terms.empty())
        return out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 0; k <= top; ++k)
        ranks[k] = rank(hom_complex_differential(r, k, m));
    for (int k = 0; k <= top && k < static_cast<int>(r.terms.size()); ++k) {
        std::size_t dim = 0;
        for (int v : r.terms[k])
            dim += m.dims[v];
        out[k] = dim - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
    }
    return out;
}

std::size_t ext_dim(int i, const Module& n, const Module& m)
{
    return ext(i, n, m).dim;
}

std::size_t ext_dim_via_injectives(int i, const Module& n, const Module& m)
{
    return ext_dim(i, dual(m), dual(n));
}

Module strip_projectives(const Module& m)
{
    std::vector<Module> keep;
    for (const auto& s : decompose(m))
        if (!is_projective(s.mod))
            keep.push_back(s.mod);
    return direct_sum(keep, m.alg).sum;
}

Module syzygy(int k, const Module& m)
{
    if (k == 0)
        return strip_projectives(m);
    Module cur = m;
    for (int j = 0; j < k && !cur.is_zero(); ++j)
        cur = kernel(projective_cover(cur)).mod;
    return cur;
}

Module cosyzygy(int k, const Module& m)
{
    return dual(syzygy(k, dual(m)));
}

Module transpose_module(const Module& m)
{
    auto op = m.alg->opposite();
    auto r = minimal_projective_resolution(m, 1);
    if (r.terms.size() < 2)
        return zero_module(op);
    const auto& a = m.alg;
    const PathMatrix& pm = r.diffs[0];
    Module tgt = projective_sum(op, pm.rows);
    std::vector<std::vector<Rational>> images;
    for (std::size_t s = 0; s < pm.cols.size(); ++s) {
        const int v = pm.cols[s];
        std::vector<Rational> img;
        for (std::size_t t = 0; t < pm.rows.size(); ++t) {
            const int w = pm.rows[t];
            std::vector<Rational> part(op->basis(w, v).size());
            const auto& bs = a->basis(v, w);
            for (std::size_t b = 0; b < bs.size(); ++b) {
                if (sgn(pm.entry[t][s][b]) == 0)
                    continue;
                auto red = op->reduce(w, v, reversed(bs[b]));
                for (std::size_t q = 0; q < red.size(); ++q)
                    part[q] += pm.entry[t][s][b] * red[q];
            }
            img.insert(img.end(), part.begin(), part.end());
        }
        images.push_back(std::move(img));
    }
    return cokernel(from_generators(pm.cols, tgt, images)).mod;
}

Module tau(const Module& m)
{
    return dual(transpose_module(m));
}

Module tau_inverse(const Module& m)
{
    return dual(tau(dual(m)));
}

Module tau_d(int d, const Module& m)
{
    if (d < 1)
        throw std::invalid_argument("tau_d needs d >= 1");
    return tau(syzygy(d - 1, m));
}

Module tau_d_inverse(int d, const Module& m)
{
    if (d < 1)
        throw std::invalid_argument("tau_d needs d >= 1");
    return tau_inverse(cosyzygy(d - 1, m));
}

bool is_projective(const Module& m)
{
    if (m.is_zero())
        return true;
    std::vector<int> vs;
    projective_cover(m, &vs);
    return projective_sum(m.alg, vs).total_dim() == m.total_dim();
}

bool is_injective(const Module& m)
{
    return is_projective(dual(m));
}

int projective_dimension(const Module& m, int cap)
{
    auto r = minimal_projective_resolution(m, cap);
    if (!r.complete)
        return -1;
    return std::max(0, r.length());
}

int injective_dimension(const Module& m, int cap)
{
    return projective_dimension(dual(m), cap);
}

int global_dimension(const AlgebraPtr& a, int cap)
{
    int g = 0;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        int p = projective_dimension(simple_module(a, static_cast<int>(v)), cap);
        if (p < 0)
            return -1;
        g = std::max(g, p);
    }
    return g;
}

DominantDimension dominant_dimension(const AlgebraPtr& a, int cap)
{
    bool complete = false;
    auto terms = injective_coresolution_terms(regular_module(a), cap, &complete);
    std::vector<int> proj_inj(a->num_vertices(), -1);
    auto pi = [&](int w) {
        if (proj_inj[w] < 0)
            proj_inj[w] = is_projective(injective_module(a, w)) ? 1 : 0;
        return proj_inj[w] == 1;
    };
    DominantDimension dd;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        for (int w : terms[k])
            if (!pi(w)) {
                dd.value = static_cast<int>(k);
                dd.exact = true;
                return dd;
            }
    }
    if (complete) {
        dd.value = std::numeric_limits<int>::max();
        dd.exact = true;
    } else {
        dd.value = static_cast<int>(terms.size());
        dd.exact = false;
    }
    return dd;
}

std::vector<Module> indecomposables_by_orbits(const AlgebraPtr& a, std::size_t cap, bool* complete)
{
    std::vector<Module> out;
    if (complete)
        *complete = true;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        Module m = projective_module(a, static_cast<int>(v));
        while (!m.is_zero()) {
            bool seen = false;
            for (const auto& x : out)
                if (x.dims == m.dims && isomorphic_indecomposables(x, m)) {
                    seen = true;
                    break;
                }
            if (seen)
                break;
            if (out.size() == cap) {
                if (complete)
                    *complete = false;
                return out;
            }
            out.push_back(m);
            m = tau_inverse(m);
        }
    }
    return out;
}

bool hom_tau_ext_check(int d, const Module& m, const Module& n)
{
    int g = global_dimension(m.alg, d + 1);
    if (g < 0 || g > d)
        throw std::invalid_argument("hom_tau_ext_check needs gl.dim <= d");
    return hom_dim(m, tau_d(d, n)) == ext_dim(d, n, m);
}

} // namespace qtilt
