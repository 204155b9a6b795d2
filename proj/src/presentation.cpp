#include "qtilt/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtilt {

namespace {

Matrix columns_of(const std::vector<Morphism>& fs, std::size_t len)
{
    std::vector<std::vector<Rational>> cols;
    for (const auto& f : fs)
        cols.push_back(f.flatten());
    return Matrix::from_columns(len, cols);
}

std::size_t flat_len(const Module& a, const Module& b)
{
    std::size_t s = 0;
    for (std::size_t v = 0; v < a.dims.size(); ++v)
        s += static_cast<std::size_t>(a.dims[v]) * static_cast<std::size_t>(b.dims[v]);
    return s;
}

struct Builder {
    std::vector<Module> mods;
    std::size_t m = 0;
    std::vector<std::vector<std::vector<Morphism>>> hom, rad;

    void homs()
    {
        m = mods.size();
        hom.assign(m, std::vector<std::vector<Morphism>>(m));
        rad = hom;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                hom[i][j] = hom_basis(mods[i], mods[j]);
                if (i != j) {
                    rad[i][j] = hom[i][j];
                    continue;
                }
                rad[i][i] = radical_basis(mods[i], hom[i][i]);
                if (hom[i][i].size() - rad[i][i].size() != 1)
                    throw std::invalid_argument("endomorphism_presentation: input " + std::to_string(i) +
                                                " is decomposable or has non-split top");
            }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (mods[i].dims == mods[j].dims && isomorphic_indecomposables(mods[i], mods[j]))
                    throw std::invalid_argument("endomorphism_presentation: inputs are not pairwise non-isomorphic");
    }

    // Irreducible maps i -> j: a complement of rad^2 in rad.
    std::vector<Morphism> irreducibles(std::size_t i, std::size_t j) const
    {
        const std::size_t len = flat_len(mods[i], mods[j]);
        std::vector<Morphism> sq;
        for (std::size_t k = 0; k < m; ++k)
            for (const auto& f : rad[i][k])
                for (const auto& g : rad[k][j])
                    sq.push_back(compose(g, f));
        Matrix r2 = sq.empty() ? Matrix(len, 0) : columns_of(sq, len);
        Matrix r1 = rad[i][j].empty() ? Matrix(len, 0) : columns_of(rad[i][j], len);
        std::vector<Morphism> out;
        for (auto c : complement_columns(r2, r1))
            out.push_back(rad[i][j][c]);
        return out;
    }
};

Morphism evaluate(const Path& p, int start, const std::vector<Module>& mods, const std::vector<Morphism>& maps)
{
    Morphism acc = identity(mods[start]);
    for (int a : p)
        acc = compose(maps[a], acc);
    return acc;
}

// Relations of the path category that hold for the chosen maps, one generating set per pair.
std::vector<Relation> relations_for(const AlgebraPtr& free, const std::vector<Module>& mods, const std::vector<Morphism>& maps)
{
    const int n = static_cast<int>(free->num_vertices());
    // kernel of the evaluation map per pair
    std::vector<Matrix> ker(static_cast<std::size_t>(n * n));
    std::vector<int> longest(static_cast<std::size_t>(n * n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ps = free->free_paths(i, j);
            for (const auto& p : ps)
                longest[i * n + j] = std::max(longest[i * n + j], static_cast<int>(p.size()));
            const std::size_t len = flat_len(mods[i], mods[j]);
            std::vector<std::vector<Rational>> cols;
            for (const auto& p : ps)
                cols.push_back(evaluate(p, i, mods, maps).flatten());
            Matrix ev = Matrix::from_columns(len, cols);
            if (rank(ev) != hom_dim(mods[i], mods[j]))
                throw std::runtime_error("endomorphism_presentation: irreducible maps do not generate");
            ker[i * n + j] = ps.empty() ? Matrix(0, 0) : nullspace(ev);
        }
    std::vector<int> order(static_cast<std::size_t>(n * n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return longest[x] < longest[y]; });

    std::vector<Relation> rels;
    for (int idx : order) {
        const int i = idx / n, j = idx % n;
        const Matrix& k = ker[idx];
        if (k.cols() == 0)
            continue;
        const auto& ps = free->free_paths(i, j);
        // one-arrow extensions of the relation spaces of strictly shorter pairs
        std::vector<std::vector<Rational>> gen;
        for (std::size_t a = 0; a < free->num_arrows(); ++a) {
            const auto& ar = free->arrow(static_cast<int>(a));
            if (ar.src == i && ker[ar.tgt * n + j].cols() > 0) {
                const auto& inner = free->free_paths(ar.tgt, j);
                const Matrix& ki = ker[ar.tgt * n + j];
                for (std::size_t c = 0; c < ki.cols(); ++c) {
                    std::vector<Rational> v(ps.size());
                    for (std::size_t q = 0; q < inner.size(); ++q) {
                        Path p{static_cast<int>(a)};
                        p.insert(p.end(), inner[q].begin(), inner[q].end());
                        v[free->free_index(i, j, p)] += ki(q, c);
                    }
                    gen.push_back(std::move(v));
                }
            }
            if (ar.tgt == j && ker[i * n + ar.src].cols() > 0) {
                const auto& inner = free->free_paths(i, ar.src);
                const Matrix& ki = ker[i * n + ar.src];
                for (std::size_t c = 0; c < ki.cols(); ++c) {
                    std::vector<Rational> v(ps.size());
                    for (std::size_t q = 0; q < inner.size(); ++q) {
                        Path p = inner[q];
                        p.push_back(static_cast<int>(a));
                        v[free->free_index(i, j, p)] += ki(q, c);
                    }
                    gen.push_back(std::move(v));
                }
            }
        }
        Matrix known = gen.empty() ? Matrix(ps.size(), 0) : Matrix::from_columns(ps.size(), gen);
        // prefer sparse generators: reduced echelon rows of the kernel
        Matrix kr = rref(k.transpose()).reduced.transpose();
        for (auto c : complement_columns(known, kr)) {
            Relation r{i, j, {}};
            auto col = kr.col(c);
            Rational lead;
            for (std::size_t q = 0; q < ps.size(); ++q)
                if (sgn(col[q]) != 0) {
                    if (sgn(lead) == 0)
                        lead = col[q];
                    r.terms.push_back({col[q] / lead, ps[q]});
                }
            std::sort(r.terms.begin(), r.terms.end(), [](const Term& x, const Term& y) { return x.path < y.path; });
            if (sgn(r.terms.front().coeff) < 0)
                for (auto& t : r.terms)
                    t.coeff = -t.coeff;
            rels.push_back(std::move(r));
        }
    }
    return rels;
}

} // namespace

EndomorphismPresentation endomorphism_presentation(const std::vector<Module>& mods)
{
    if (mods.empty())
        throw std::invalid_argument("endomorphism_presentation: empty input");
    Builder b;
    b.mods = mods;
    b.homs();
    const int n = static_cast<int>(b.m);

    std::vector<Arrow> arrows;
    std::vector<Morphism> maps;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (auto& f : b.irreducibles(i, j)) {
                arrows.push_back({"b" + std::to_string(arrows.size() + 1), i, j});
                maps.push_back(std::move(f));
            }
    std::vector<int> labels(b.m);
    std::iota(labels.begin(), labels.end(), 1);
    auto free = Algebra::create(labels, arrows, {});

    auto rels = relations_for(free, mods, maps);
    // Rescale arrows so that two-term relations read p - q. Each relation fixes the scale
    // of one arrow not yet pinned down by an earlier relation.
    std::vector<bool> pinned(arrows.size(), false);
    bool changed = false;
    for (const auto& r : rels) {
        if (r.terms.size() != 2)
            continue;
        const Rational ratio = r.terms[1].coeff / r.terms[0].coeff;
        if (ratio == -1)
            continue;
        int free_arrow = -1;
        for (int a : r.terms[1].path)
            if (!pinned[a] && std::find(r.terms[0].path.begin(), r.terms[0].path.end(), a) == r.terms[0].path.end())
                free_arrow = a;
        if (free_arrow < 0)
            continue;
        // c0 p + c1 q = 0; scaling an arrow of q by s turns c1 into c1 / s
        maps[free_arrow] = scale(maps[free_arrow], -ratio);
        for (int a : r.terms[0].path)
            pinned[a] = true;
        for (int a : r.terms[1].path)
            pinned[a] = true;
        changed = true;
    }
    if (changed)
        rels = relations_for(free, mods, maps);

    EndomorphismPresentation out;
    out.alg = Algebra::create(labels, arrows, rels);
    out.arrow_maps = std::move(maps);
    std::size_t total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            total += b.hom[i][j].size();
    if (out.alg->dimension() != total)
        throw std::runtime_error("endomorphism_presentation: presented dimension differs from dim End");
    out.length_two = out.alg->relations_length_two();
    return out;
}

} // namespace qtilt
