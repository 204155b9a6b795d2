#include "qtilt/module.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtilt {

int Module::total_dim() const
{
    int t = 0;
    for (int d : dims)
        t += d;
    return t;
}

std::vector<int> Module::support() const
{
    std::vector<int> s;
    for (std::size_t v = 0; v < dims.size(); ++v)
        if (dims[v] > 0)
            s.push_back(static_cast<int>(v));
    return s;
}

Matrix Module::act(int i, const Path& p) const
{
    Matrix m = Matrix::identity(dims[i]);
    for (int a : p)
        m = maps[a] * m;
    return m;
}

Matrix Module::act_element(int i, int j, const std::vector<Rational>& coords) const
{
    const auto& b = alg->basis(i, j);
    Matrix out(dims[j], dims[i]);
    for (std::size_t k = 0; k < b.size(); ++k)
        if (sgn(coords[k]) != 0)
            out += act(i, b[k]).scaled(coords[k]);
    return out;
}

void Module::validate() const
{
    if (dims.size() != alg->num_vertices() || maps.size() != alg->num_arrows())
        throw std::invalid_argument("module does not match its algebra");
    for (int d : dims)
        if (d < 0)
            throw std::invalid_argument("negative dimension");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto& ar = alg->arrow(static_cast<int>(a));
        if (maps[a].rows() != static_cast<std::size_t>(dims[ar.tgt]) || maps[a].cols() != static_cast<std::size_t>(dims[ar.src]))
            throw std::invalid_argument("arrow matrix for " + ar.id + " has the wrong shape");
    }
    for (const auto& r : alg->relations()) {
        Matrix s(dims[r.tgt], dims[r.src]);
        for (const auto& t : r.terms)
            s += act(r.src, t.path).scaled(t.coeff);
        if (!s.is_zero())
            throw std::invalid_argument("module violates a relation");
    }
}

bool Morphism::is_zero() const
{
    for (const auto& c : comps)
        if (!c.is_zero())
            return false;
    return true;
}

bool Morphism::is_mono() const
{
    for (std::size_t v = 0; v < comps.size(); ++v)
        if (rank(comps[v]) != static_cast<std::size_t>(src.dims[v]))
            return false;
    return true;
}

bool Morphism::is_epi() const
{
    for (std::size_t v = 0; v < comps.size(); ++v)
        if (rank(comps[v]) != static_cast<std::size_t>(tgt.dims[v]))
            return false;
    return true;
}

bool Morphism::is_valid() const
{
    if (comps.size() != src.dims.size())
        return false;
    for (std::size_t v = 0; v < comps.size(); ++v)
        if (comps[v].rows() != static_cast<std::size_t>(tgt.dims[v]) || comps[v].cols() != static_cast<std::size_t>(src.dims[v]))
            return false;
    for (std::size_t a = 0; a < src.maps.size(); ++a) {
        const auto& ar = src.alg->arrow(static_cast<int>(a));
        if (tgt.maps[a] * comps[ar.src] != comps[ar.tgt] * src.maps[a])
            return false;
    }
    return true;
}

std::vector<Rational> Morphism::flatten() const
{
    std::vector<Rational> out;
    for (const auto& c : comps)
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

Module zero_module(const AlgebraPtr& a)
{
    Module m{a, std::vector<int>(a->num_vertices(), 0), {}};
    m.maps.assign(a->num_arrows(), Matrix(0, 0));
    return m;
}

Module simple_module(const AlgebraPtr& a, int v)
{
    Module m{a, std::vector<int>(a->num_vertices(), 0), {}};
    m.dims[v] = 1;
    for (const auto& ar : a->arrows())
        m.maps.emplace_back(m.dims[ar.tgt], m.dims[ar.src]);
    return m;
}

Module projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices)
{
    const int nv = static_cast<int>(a->num_vertices());
    Module m{a, std::vector<int>(nv, 0), {}};
    for (int j = 0; j < nv; ++j)
        for (int v : vertices)
            m.dims[j] += static_cast<int>(a->basis(v, j).size());
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        Matrix mat(m.dims[ar.tgt], m.dims[ar.src]);
        std::size_t ro = 0, co = 0;
        for (int v : vertices) {
            const auto& bs = a->basis(v, ar.src);
            for (std::size_t c = 0; c < bs.size(); ++c) {
                Path p = bs[c];
                p.push_back(static_cast<int>(k));
                auto red = a->reduce(v, ar.tgt, p);
                for (std::size_t r = 0; r < red.size(); ++r)
                    mat(ro + r, co + c) = red[r];
            }
            ro += a->basis(v, ar.tgt).size();
            co += bs.size();
        }
        m.maps.push_back(std::move(mat));
    }
    return m;
}

Module projective_module(const AlgebraPtr& a, int v)
{
    return projective_sum(a, {v});
}

Module injective_module(const AlgebraPtr& a, int v)
{
    return dual(projective_module(a->opposite(), v));
}

Module regular_module(const AlgebraPtr& a)
{
    std::vector<int> all(a->num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v)
        all[v] = static_cast<int>(v);
    return projective_sum(a, all);
}

Morphism from_generators(const std::vector<int>& vertices, const Module& target, const std::vector<std::vector<Rational>>& images)
{
    const auto& a = target.alg;
    Module src = projective_sum(a, vertices);
    Morphism f{src, target, {}};
    for (std::size_t j = 0; j < a->num_vertices(); ++j) {
        Matrix c(target.dims[j], src.dims[j]);
        std::size_t col = 0;
        for (std::size_t s = 0; s < vertices.size(); ++s) {
            Matrix x = Matrix::column(images[s]);
            for (const auto& p : a->basis(vertices[s], static_cast<int>(j)))
                c.set_block(0, col++, target.act(vertices[s], p) * x);
        }
        f.comps.push_back(std::move(c));
    }
    return f;
}

Morphism identity(const Module& m)
{
    Morphism f{m, m, {}};
    for (int d : m.dims)
        f.comps.push_back(Matrix::identity(d));
    return f;
}

Morphism zero_morphism(const Module& src, const Module& tgt)
{
    Morphism f{src, tgt, {}};
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        f.comps.emplace_back(tgt.dims[v], src.dims[v]);
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    Morphism h{f.src, g.tgt, {}};
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

Morphism add(const Morphism& f, const Morphism& g)
{
    Morphism h = f;
    for (std::size_t v = 0; v < h.comps.size(); ++v)
        h.comps[v] += g.comps[v];
    return h;
}

Morphism scale(const Morphism& f, const Rational& s)
{
    Morphism h = f;
    for (auto& c : h.comps)
        c = c.scaled(s);
    return h;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs, const Module& src, const Module& tgt)
{
    Morphism h = zero_morphism(src, tgt);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(coeffs[k]) != 0)
            for (std::size_t v = 0; v < h.comps.size(); ++v)
                h.comps[v] += basis[k].comps[v].scaled(coeffs[k]);
    return h;
}

std::vector<Morphism> hom_basis(const Module& m, const Module& n)
{
    const auto& a = m.alg;
    const std::size_t nv = a->num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(n.dims[v]) * m.dims[v];
    const std::size_t unknowns = off[nv];
    std::size_t eqs = 0;
    for (const auto& ar : a->arrows())
        eqs += static_cast<std::size_t>(n.dims[ar.tgt]) * m.dims[ar.src];
    Matrix sys(eqs, unknowns);
    std::size_t row = 0;
    // N_a X_s - X_t M_a = 0 for every arrow a: s -> t
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        const int s = ar.src, t = ar.tgt;
        const Matrix& na = n.maps[k];
        const Matrix& ma = m.maps[k];
        for (int r = 0; r < n.dims[t]; ++r)
            for (int c = 0; c < m.dims[s]; ++c, ++row) {
                for (int q = 0; q < n.dims[s]; ++q)
                    if (sgn(na(r, q)) != 0)
                        sys(row, off[s] + q * m.dims[s] + c) += na(r, q);
                for (int q = 0; q < m.dims[t]; ++q)
                    if (sgn(ma(q, c)) != 0)
                        sys(row, off[t] + r * m.dims[t] + q) -= ma(q, c);
            }
    }
    Matrix ns = nullspace(sys);
    std::vector<Morphism> out;
    for (std::size_t b = 0; b < ns.cols(); ++b) {
        Morphism f{m, n, {}};
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix c(n.dims[v], m.dims[v]);
            for (int r = 0; r < n.dims[v]; ++r)
                for (int q = 0; q < m.dims[v]; ++q)
                    c(r, q) = ns(off[v] + r * m.dims[v] + q, b);
            f.comps.push_back(std::move(c));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Module& m, const Module& n)
{
    return hom_basis(m, n).size();
}

Submodule submodule(const Module& m, const std::vector<Matrix>& bases)
{
    const auto& a = m.alg;
    Module s{a, {}, {}};
    for (const auto& b : bases)
        s.dims.push_back(static_cast<int>(b.cols()));
    std::vector<Matrix> linv;
    for (const auto& b : bases)
        linv.push_back(left_inverse(b));
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        s.maps.push_back(linv[ar.tgt] * m.maps[k] * bases[ar.src]);
    }
    Morphism incl{s, m, bases};
    return {s, incl};
}

QuotientModule quotient_module(const Module& m, const std::vector<Matrix>& sub_bases)
{
    const auto& a = m.alg;
    std::vector<Matrix> q, rinv;
    for (std::size_t v = 0; v < sub_bases.size(); ++v) {
        Matrix b = sub_bases[v].cols() ? sub_bases[v] : Matrix(m.dims[v], 0);
        q.push_back(left_nullspace(b));
        if (q.back().rows() == 0)
            q.back() = Matrix(0, m.dims[v]);
        rinv.push_back(right_inverse(q.back()));
    }
    Module c{a, {}, {}};
    for (const auto& x : q)
        c.dims.push_back(static_cast<int>(x.rows()));
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        c.maps.push_back(q[ar.tgt] * m.maps[k] * rinv[ar.src]);
    }
    Morphism proj{m, c, q};
    return {c, proj};
}

Submodule kernel(const Morphism& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        if (f.comps[v].rows() == 0)
            bases.push_back(Matrix::identity(f.src.dims[v]));
        else
            bases.push_back(nullspace(f.comps[v]));
    }
    return submodule(f.src, bases);
}

Submodule image(const Morphism& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        Matrix b = column_basis(f.comps[v]);
        bases.push_back(b.cols() ? b : Matrix(f.tgt.dims[v], 0));
    }
    return submodule(f.tgt, bases);
}

QuotientModule cokernel(const Morphism& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        Matrix b = column_basis(f.comps[v]);
        bases.push_back(b.cols() ? b : Matrix(f.tgt.dims[v], 0));
    }
    return quotient_module(f.tgt, bases);
}

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a)
{
    const std::size_t nv = a->num_vertices();
    DirectSum ds;
    ds.sum = Module{a, std::vector<int>(nv, 0), {}};
    for (const auto& p : parts)
        for (std::size_t v = 0; v < nv; ++v)
            ds.sum.dims[v] += p.dims[v];
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        Matrix mat(ds.sum.dims[ar.tgt], ds.sum.dims[ar.src]);
        std::size_t ro = 0, co = 0;
        for (const auto& p : parts) {
            mat.set_block(ro, co, p.maps[k]);
            ro += p.dims[ar.tgt];
            co += p.dims[ar.src];
        }
        ds.sum.maps.push_back(std::move(mat));
    }
    std::vector<std::size_t> off(nv, 0);
    for (const auto& p : parts) {
        Morphism i{p, ds.sum, {}}, q{ds.sum, p, {}};
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix iv(ds.sum.dims[v], p.dims[v]);
            for (int r = 0; r < p.dims[v]; ++r)
                iv(off[v] + r, r) = 1;
            q.comps.push_back(iv.transpose());
            i.comps.push_back(std::move(iv));
            off[v] += p.dims[v];
        }
        ds.incl.push_back(std::move(i));
        ds.proj.push_back(std::move(q));
    }
    return ds;
}

Morphism block_morphism(const DirectSum& src, const DirectSum& tgt, const std::vector<std::vector<Morphism>>& blocks)
{
    Morphism f = zero_morphism(src.sum, tgt.sum);
    for (std::size_t t = 0; t < tgt.incl.size(); ++t)
        for (std::size_t s = 0; s < src.proj.size(); ++s)
            for (std::size_t v = 0; v < f.comps.size(); ++v)
                f.comps[v] += tgt.incl[t].comps[v] * blocks[t][s].comps[v] * src.proj[s].comps[v];
    return f;
}

Module dual(const Module& m)
{
    Module d{m.alg->opposite(), m.dims, {}};
    for (const auto& mat : m.maps)
        d.maps.push_back(mat.transpose());
    return d;
}

Morphism dual(const Morphism& f)
{
    Morphism d{dual(f.tgt), dual(f.src), {}};
    for (const auto& c : f.comps)
        d.comps.push_back(c.transpose());
    return d;
}

namespace {

Rational trace_product(const Morphism& f, const Morphism& g)
{
    Rational t = 0;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const Matrix& a = f.comps[v];
        const Matrix& b = g.comps[v];
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
                t += a(i, k) * b(k, i);
    }
    return t;
}

// Continued-fraction rationalization with a bounded denominator.
bool rationalize(double x, Rational& out)
{
    if (!std::isfinite(x) || std::fabs(x) > 1e9)
        return false;
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 40; ++it) {
        double fl = std::floor(r);
        long a = static_cast<long>(fl);
        long h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > 100000)
            break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-9)
            break;
        double frac = r - fl;
        if (frac < 1e-12)
            break;
        r = 1.0 / frac;
    }
    if (k1 == 0)
        return false;
    out = Rational(h1, k1);
    out.canonicalize();
    return true;
}

std::vector<Rational> rational_eigenvalues(const Morphism& phi)
{
    std::set<Rational> vals;
    for (const auto& c : phi.comps) {
        const std::size_t n = c.rows();
        if (n == 0)
            continue;
        Eigen::MatrixXd m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(static_cast<long>(i), static_cast<long>(j)) = c(i, j).get_d();
        Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
        for (long k = 0; k < es.eigenvalues().size(); ++k) {
            auto z = es.eigenvalues()[k];
            if (std::fabs(z.imag()) > 1e-7)
                continue;
            Rational q;
            if (rationalize(z.real(), q))
                vals.insert(q);
        }
    }
    return {vals.begin(), vals.end()};
}

// Fitting decomposition of psi; false when one side is trivial.
bool fitting_split(const Module& x, const Morphism& psi, Submodule& ker_part, Submodule& im_part, std::vector<Matrix>& inv_basis)
{
    int n = 0;
    for (int d : x.dims)
        n = std::max(n, d);
    std::vector<Matrix> kb, ib;
    int kdim = 0, idim = 0;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        Matrix p = Matrix::identity(x.dims[v]);
        for (int e = 0; e < n; ++e)
            p = psi.comps[v] * p;
        Matrix k = x.dims[v] ? nullspace(p) : Matrix(0, 0);
        Matrix i = column_basis(p);
        if (i.cols() == 0)
            i = Matrix(x.dims[v], 0);
        kdim += static_cast<int>(k.cols());
        idim += static_cast<int>(i.cols());
        kb.push_back(std::move(k));
        ib.push_back(std::move(i));
    }
    if (kdim == 0 || idim == 0)
        return false;
    ker_part = submodule(x, kb);
    im_part = submodule(x, ib);
    inv_basis.clear();
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        inv_basis.push_back(*inverse(Matrix::hstack(kb[v], ib[v])));
    return true;
}

bool try_split(const Module& x, const std::vector<Morphism>& end, std::mt19937_64& rng, Submodule& a, Submodule& b, std::vector<Matrix>& inv)
{
    auto attempt = [&](const Morphism& phi) {
        for (const auto& lambda : rational_eigenvalues(phi)) {
            Morphism psi = add(phi, scale(identity(x), -lambda));
            if (fitting_split(x, psi, a, b, inv))
                return true;
        }
        return false;
    };
    for (const auto& e : end)
        if (attempt(e))
            return true;
    for (const auto& e : end)
        for (const auto& f : end)
            if (attempt(compose(e, f)))
                return true;
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int it = 0; it < 64; ++it) {
        std::vector<Rational> c(end.size());
        for (auto& q : c)
            q = dist(rng);
        Morphism phi = linear_combination(end, c, x, x);
        if (attempt(phi) || attempt(compose(phi, phi)))
            return true;
    }
    return false;
}

} // namespace

std::vector<Morphism> radical_basis(const Module& m, const std::vector<Morphism>& end_basis)
{
    const std::size_t k = end_basis.size();
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            g(i, j) = g(j, i) = trace_product(end_basis[i], end_basis[j]);
    Matrix ns = nullspace(g);
    std::vector<Morphism> out;
    for (std::size_t c = 0; c < ns.cols(); ++c)
        out.push_back(linear_combination(end_basis, ns.col(c), m, m));
    return out;
}

bool is_indecomposable(const Module& m)
{
    if (m.is_zero())
        return false;
    auto end = hom_basis(m, m);
    return end.size() - radical_basis(m, end).size() == 1;
}

std::vector<Summand> decompose(const Module& m, std::uint64_t seed)
{
    std::vector<Summand> out;
    if (m.is_zero())
        return out;
    std::mt19937_64 rng(seed);
    std::function<void(const Module&, const Morphism&, const Morphism&)> rec =
        [&](const Module& x, const Morphism& incl, const Morphism& proj) {
            auto end = hom_basis(x, x);
            if (end.size() - radical_basis(x, end).size() == 1) {
                out.push_back({x, incl, proj});
                return;
            }
            Submodule a, b;
            std::vector<Matrix> inv;
            if (!try_split(x, end, rng, a, b, inv))
                throw std::runtime_error("decompose: no splitting endomorphism found");
            // rows of inv split x into the two Fitting components
            Morphism pa{x, a.mod, {}}, pb{x, b.mod, {}};
            for (std::size_t v = 0; v < x.dims.size(); ++v) {
                std::size_t ka = static_cast<std::size_t>(a.mod.dims[v]);
                std::size_t kb = static_cast<std::size_t>(b.mod.dims[v]);
                pa.comps.push_back(inv[v].block(0, 0, ka, inv[v].cols()));
                pb.comps.push_back(inv[v].block(ka, 0, kb, inv[v].cols()));
            }
            rec(a.mod, compose(incl, a.incl), compose(pa, proj));
            rec(b.mod, compose(incl, b.incl), compose(pb, proj));
        };
    rec(m, identity(m), identity(m));
    return out;
}

bool find_isomorphism(const Module& m, const Module& n, Morphism& out)
{
    if (m.dims != n.dims)
        return false;
    for (auto& f : hom_basis(m, n))
        if (f.is_iso()) {
            out = std::move(f);
            return true;
        }
    return false;
}

bool isomorphic_indecomposables(const Module& m, const Module& n)
{
    Morphism f;
    return find_isomorphism(m, n, f);
}

bool isomorphic(const Module& m, const Module& n)
{
    if (m.dims != n.dims)
        return false;
    auto a = decompose(m);
    auto b = decompose(n);
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size() && !hit; ++j)
            if (!used[j] && isomorphic_indecomposables(x.mod, b[j].mod))
                used[j] = hit = true;
        if (!hit)
            return false;
    }
    return true;
}

Morphism random_combination(const std::vector<Morphism>& basis, const Module& src, const Module& tgt, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-1000, 1000);
    std::vector<Rational> c(basis.size());
    for (auto& q : c)
        q = dist(rng);
    return linear_combination(basis, c, src, tgt);
}

bool has_epi(const Module& m, const Module& n, std::uint64_t seed)
{
    if (n.is_zero())
        return true;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (m.dims[v] < n.dims[v])
            return false;
    auto basis = hom_basis(m, n);
    if (basis.empty())
        return false;
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 6; ++it)
        if (random_combination(basis, m, n, rng).is_epi())
            return true;
    return false;
}

bool has_mono(const Module& m, const Module& n, std::uint64_t seed)
{
    if (m.is_zero())
        return true;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (m.dims[v] > n.dims[v])
            return false;
    auto basis = hom_basis(m, n);
    if (basis.empty())
        return false;
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 6; ++it)
        if (random_combination(basis, m, n, rng).is_mono())
            return true;
    return false;
}

bool lives_on(const Module& m, const IdempotentQuotient& q)
{
    for (int v : q.killed)
        if (m.dims[v] != 0)
            return false;
    return true;
}

Module restrict_to(const Module& m, const IdempotentQuotient& q)
{
    if (!lives_on(m, q))
        throw std::invalid_argument("module is not supported on the quotient");
    Module r{q.quotient, {}, {}};
    for (int v : q.vertex_map)
        r.dims.push_back(m.dims[v]);
    for (int a : q.arrow_map)
        r.maps.push_back(m.maps[a]);
    return r;
}

Module extend_from(const Module& m, const IdempotentQuotient& q)
{
    const auto& a = q.parent;
    Module e{a, std::vector<int>(a->num_vertices(), 0), {}};
    for (std::size_t v = 0; v < q.vertex_map.size(); ++v)
        e.dims[q.vertex_map[v]] = m.dims[v];
    std::vector<int> to_q(a->num_arrows(), -1);
    for (std::size_t k = 0; k < q.arrow_map.size(); ++k)
        to_q[q.arrow_map[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < a->num_arrows(); ++k) {
        const auto& ar = a->arrow(static_cast<int>(k));
        if (to_q[k] >= 0)
            e.maps.push_back(m.maps[to_q[k]]);
        else
            e.maps.emplace_back(e.dims[ar.tgt], e.dims[ar.src]);
    }
    return e;
}

Module apply_F(const Module& m, const IdempotentQuotient& q)
{
    const auto& a = m.alg;
    const int nv = static_cast<int>(a->num_vertices());
    std::vector<bool> dead(nv, false);
    for (int v : q.killed)
        dead[v] = true;
    std::vector<Matrix> bases;
    for (int v = 0; v < nv; ++v) {
        if (dead[v] || m.dims[v] == 0) {
            bases.emplace_back(m.dims[v], 0);
            continue;
        }
        Matrix stack(0, m.dims[v]);
        for (int k : q.killed)
            for (const auto& p : a->basis(v, k))
                stack = Matrix::vstack(stack, m.act(v, p));
        bases.push_back(stack.rows() ? nullspace(stack) : Matrix::identity(m.dims[v]));
    }
    return restrict_to(submodule(m, bases).mod, q);
}

Module apply_G(const Module& m, const IdempotentQuotient& q)
{
    const auto& a = m.alg;
    const int nv = static_cast<int>(a->num_vertices());
    std::vector<bool> dead(nv, false);
    for (int v : q.killed)
        dead[v] = true;
    std::vector<Matrix> bases;
    for (int v = 0; v < nv; ++v) {
        if (dead[v]) {
            bases.push_back(Matrix::identity(m.dims[v]));
            continue;
        }
        Matrix span(m.dims[v], 0);
        for (int k : q.killed)
            for (const auto& p : a->basis(k, v))
                span = Matrix::hstack(span, m.act(k, p));
        Matrix b = column_basis(span);
        bases.push_back(b.cols() ? b : Matrix(m.dims[v], 0));
    }
    return restrict_to(quotient_module(m, bases).mod, q);
}

std::string dim_string(const Module& m)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        os << (v ? "," : "") << m.dims[v];
    os << ')';
    return os.str();
}

} // namespace qtilt
