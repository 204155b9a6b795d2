#include "qtilt/wide_resonance.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace qtilt {

namespace {

bool contains(const std::vector<int>& sorted, int x)
{
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool all_in(const std::vector<int>& terms, const std::vector<int>& cls)
{
    return std::all_of(terms.begin(), terms.end(), [&](int x) { return contains(cls, x); });
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string list_string(const std::vector<int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Basis maps plus one seeded generic combination.
std::vector<Morphism> test_maps(const std::vector<Morphism>& basis, const Module& src, const Module& tgt, std::mt19937_64& rng)
{
    std::vector<Morphism> out = basis;
    if (basis.size() > 1)
        out.push_back(random_combination(basis, src, tgt, rng));
    return out;
}

} // namespace

WideReport is_wide(const CTCatalog& c, const std::vector<int>& cls_in, const std::vector<DExactSequence>& seqs)
{
    const auto cls = sorted_unique(cls_in);
    WideReport r;
    r.w1 = r.w2 = true;
    std::mt19937_64 rng(5);
    for (int i : cls)
        for (int j : cls)
            for (const auto& f : test_maps(c.hom[i][j], c.objects[i], c.objects[j], rng)) {
                ++r.morphisms_checked;
                Chain k = d_kernel(c, f);
                for (int p = 0; p < c.d; ++p)
                    if (!all_in(k.terms[p], cls)) {
                        r.w1 = false;
                        r.failures.push_back("d-kernel of a map " + std::to_string(i) + " -> " + std::to_string(j) + " leaves the class");
                        break;
                    }
                Chain q = d_cokernel(c, f);
                for (int p = 2; p < c.d + 2; ++p)
                    if (!all_in(q.terms[p], cls)) {
                        r.w1 = false;
                        r.failures.push_back("d-cokernel of a map " + std::to_string(i) + " -> " + std::to_string(j) + " leaves the class");
                        break;
                    }
            }
    for (const auto& s : seqs) {
        if (s.terms.front().size() != 1 || s.terms.back().size() != 1)
            continue;
        const int x = s.terms.front()[0], y = s.terms.back()[0];
        if (!contains(cls, x) || !contains(cls, y))
            continue;
        ++r.classes_checked;
        if (c.ext[c.d][y][x] > 1)
            r.experimental = true;
        for (std::size_t p = 1; p + 1 < s.terms.size(); ++p)
            if (!all_in(s.terms[p], cls)) {
                r.w2 = false;
                r.failures.push_back("Ext^d(" + std::to_string(y) + ", " + std::to_string(x) + ") is realized outside the class");
                break;
            }
    }
    return r;
}

AlphaClass alpha(const CTCatalog& c, const std::vector<int>& torsion_in, std::uint64_t seed)
{
    const auto torsion = sorted_unique(torsion_in);
    std::mt19937_64 rng(seed);
    AlphaClass out;
    // d-kernel terms of the surjections K_0 -> M', cached per (K_0, M')
    std::map<std::pair<int, int>, std::vector<AlphaWitness>> memo;
    auto checks = [&](int sub, int k0) -> const std::vector<AlphaWitness>& {
        auto key = std::make_pair(sub, k0);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        std::vector<AlphaWitness> ws;
        const auto& basis = c.hom[k0][sub];
        std::vector<Morphism> epis;
        for (const auto& f : test_maps(basis, c.objects[k0], c.objects[sub], rng))
            if (f.is_epi())
                epis.push_back(f);
        for (const auto& f : epis) {
            AlphaWitness w;
            w.sub = sub;
            w.k0 = k0;
            w.chain = d_kernel(c, f);
            w.in_class = true;
            for (int p = 0; p < c.d; ++p)
                w.in_class = w.in_class && all_in(w.chain.terms[p], torsion);
            ws.push_back(std::move(w));
        }
        return memo.emplace(key, std::move(ws)).first->second;
    };
    for (int m : torsion) {
        bool member = true;
        for (std::size_t sub = 0; sub < c.size(); ++sub) {
            if (!has_mono(c.objects[sub], c.objects[m]))
                continue;
            for (int k0 : torsion)
                for (auto w : checks(static_cast<int>(sub), k0)) {
                    w.m = m;
                    member = member && w.in_class;
                    out.witnesses.push_back(std::move(w));
                }
        }
        if (member)
            out.objects.push_back(m);
    }
    return out;
}

std::vector<std::vector<bool>> prec_relation(const CTCatalog& c, const std::vector<int>& alpha_in, const std::vector<DExactSequence>& seqs)
{
    const auto al = sorted_unique(alpha_in);
    const std::size_t n = c.size();
    std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
    for (const auto& s : seqs) {
        if (!s.all_indecomposable())
            continue;
        if (contains(al, s.terms.front()[0]) && contains(al, s.terms.back()[0]))
            continue;
        for (std::size_t k = 0; k + 1 < s.terms.size(); ++k) {
            const int m = s.terms[k][0], nn = s.terms[k + 1][0];
            if (contains(al, m) && contains(al, nn) && !s.maps[k].is_zero())
                prec[m][nn] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (prec[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (prec[k][j])
                        prec[i][j] = true;
    return prec;
}

WideCollection prec_partition(const CTCatalog& c, const std::vector<int>& alpha_in, const std::vector<DExactSequence>& seqs)
{
    const auto al = sorted_unique(alpha_in);
    WideCollection w;
    w.generator = al;
    if (al.empty())
        return w;
    auto prec = prec_relation(c, al, seqs);
    for (int x : al)
        if (prec[x][x])
            w.acyclic = false;
    if (!w.acyclic) {
        w.classes.push_back(al);
        return w;
    }
    // longest chain below each object; in a closed order a predecessor has fewer predecessors
    std::vector<int> order = al;
    auto npred = [&](int x) { return std::count_if(al.begin(), al.end(), [&](int p) { return prec[p][x]; }); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return npred(a) < npred(b); });
    std::map<int, int> level;
    int top = 0;
    for (int x : order) {
        int l = 0;
        for (int p : al)
            if (prec[p][x])
                l = std::max(l, level[p] + 1);
        level[x] = l;
        top = std::max(top, l);
    }
    // Objects with a range of admissible layers get a nonempty subset of it. Every layer must be
    // wide; among valid assignments the one with most memberships wins, first found on ties.
    std::map<int, int> hi;
    std::vector<int> flexible;
    for (int x : al) {
        hi[x] = top;
        for (int s : al)
            if (prec[x][s])
                hi[x] = std::min(hi[x], level[s] - 1);
        if (hi[x] > level[x])
            flexible.push_back(x);
    }
    std::vector<std::vector<unsigned>> options; // layer masks relative to level[x], larger first
    std::size_t space = 1;
    for (int x : flexible) {
        const int r = hi[x] - level[x] + 1;
        std::vector<unsigned> o;
        for (unsigned m = 1; m < (1u << r); ++m)
            o.push_back(m);
        std::stable_sort(o.begin(), o.end(), [](unsigned a, unsigned b) { return std::popcount(a) > std::popcount(b); });
        space *= o.size();
        options.push_back(std::move(o));
    }
    std::map<std::vector<int>, bool> wide_memo;
    auto layer_wide = [&](const std::vector<int>& cls) {
        auto it = wide_memo.find(cls);
        if (it == wide_memo.end())
            it = wide_memo.emplace(cls, is_wide(c, cls, seqs).wide()).first;
        return it->second;
    };
    auto build = [&](const std::vector<std::size_t>& choice) {
        std::vector<std::vector<int>> layers(static_cast<std::size_t>(top + 1));
        for (int x : al)
            if (hi[x] == level[x])
                layers[level[x]].push_back(x);
        for (std::size_t i = 0; i < flexible.size(); ++i) {
            const int x = flexible[i];
            for (int l = level[x]; l <= hi[x]; ++l)
                if (options[i][choice[i]] & (1u << (l - level[x])))
                    layers[l].push_back(x);
        }
        for (auto& l : layers)
            l = sorted_unique(l);
        return layers;
    };
    std::vector<std::size_t> choice(flexible.size(), 0);
    std::vector<std::vector<int>> best;
    long best_score = -1;
    const std::size_t limit = std::min<std::size_t>(space, 1u << 14);
    for (std::size_t it = 0; it < limit; ++it) {
        auto layers = build(choice);
        long score = 0;
        for (const auto& l : layers)
            score += static_cast<long>(l.size());
        if (score > best_score && std::all_of(layers.begin(), layers.end(), layer_wide)) {
            best_score = score;
            best = std::move(layers);
        }
        for (std::size_t i = 0; i < choice.size(); ++i) {
            if (++choice[i] < options[i].size())
                break;
            choice[i] = 0;
        }
    }
    if (best_score < 0) {
        // nothing is wide: report the home layers and let is_wide flag them
        std::vector<std::size_t> home(flexible.size(), 0);
        for (std::size_t i = 0; i < flexible.size(); ++i)
            home[i] = static_cast<std::size_t>(std::find(options[i].begin(), options[i].end(), 1u) - options[i].begin());
        best = build(home);
    }
    w.classes = std::move(best);
    return w;
}

void collection_flags(const CTCatalog& c, WideCollection& coll, const std::vector<std::vector<int>>& standard_torsion,
                      const std::vector<std::vector<int>>& standard_torsion_free)
{
    coll.directed = coll.directed_modulo_shared = coll.acyclic;
    coll.directed_witness.reset();
    for (std::size_t i = 0; i < coll.classes.size(); ++i)
        for (std::size_t j = i + 1; j < coll.classes.size(); ++j) {
            const auto& wi = coll.classes[i];
            const auto& wj = coll.classes[j];
            for (int m : wi)
                for (int nn : wj) {
                    if (m == nn || c.hom[nn][m].empty())
                        continue;
                    if (coll.directed) {
                        coll.directed = false;
                        coll.directed_witness = std::make_pair(nn, m);
                    }
                    const bool shared = contains(wj, m) || contains(wi, nn);
                    if (!shared)
                        coll.directed_modulo_shared = false;
                }
        }
    const auto fac = fac_cap_c(c, coll.generator);
    const auto sub = sub_cap_c(c, coll.generator);
    coll.resonant = std::find(standard_torsion.begin(), standard_torsion.end(), fac) != standard_torsion.end();
    coll.coresonant = std::find(standard_torsion_free.begin(), standard_torsion_free.end(), sub) != standard_torsion_free.end();
}

AuditResult audit_indec2(const CTCatalog& c, const std::vector<std::vector<int>>& tilting, const std::vector<DExactSequence>& seqs)
{
    AuditResult r{"indec2", 0, {}};
    for (const auto& t : tilting) {
        if (!support_data(c, t).killed.empty())
            continue;
        const auto al = alpha(c, fac_cap_c(c, t)).objects;
        for (std::size_t q = 0; q < seqs.size(); ++q) {
            const auto& s = seqs[q];
            if (!s.all_indecomposable() || !contains(al, s.terms.front()[0]) || !contains(al, s.terms.back()[0]))
                continue;
            ++r.checked;
            for (const auto& term : s.terms)
                if (!contains(al, term[0])) {
                    r.failures.push_back("sequence " + std::to_string(q) + " leaves alpha at object " + std::to_string(term[0]) +
                                         " for T = " + list_string(t));
                    break;
                }
        }
    }
    return r;
}

MasodReport masod_audit(const CTCatalog& c, SupportOracle& oracle, const std::vector<DExactSequence>& seqs, std::uint64_t seed)
{
    MasodReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    rep.tilting = enumerate_proper_support_d_tilting(c, oracle).modules;
    std::sort(rep.tilting.begin(), rep.tilting.end());
    const std::size_t n = rep.tilting.size();

    // (1) <-> (2): T -> Fac(T) cap C, inverse by Ext-projectives
    for (const auto& t : rep.tilting) {
        auto cls = fac_cap_c(c, t);
        auto ax = verify_torsion_axioms(c, cls, seqs);
        if (!ax.first || !ax.second)
            fail("Fac(T) cap C is not a d-strong torsion class for T = " + list_string(t));
        if (ext_projectives(c, cls) != t)
            fail("Ext-projectives of Fac(T) cap C differ from T = " + list_string(t));
        rep.torsion.push_back(std::move(cls));
    }
    // (1) <-> (4): T -> Sub(T) cap C, inverse by Ext-injectives; T must be proper support-d-cotilting
    for (const auto& t : rep.tilting) {
        auto cls = sub_cap_c(c, t);
        auto ax = verify_torsion_free_axioms(c, cls, seqs);
        if (!ax.first || !ax.second)
            fail("Sub(T) cap C is not a d-strong torsion-free class for T = " + list_string(t));
        if (ext_injectives(c, cls) != t)
            fail("Ext-injectives of Sub(T) cap C differ from T = " + list_string(t));
        rep.torsion_free.push_back(std::move(cls));
    }
    // cotilting modules, enumerated independently as tilting modules over the opposite algebra
    const CTCatalog dc = dual_catalog(c);
    SupportOracle dual_oracle(dc);
    std::vector<DExactSequence> dseqs;
    for (const auto& s : seqs)
        dseqs.push_back(dual_sequence(s));
    rep.cotilting = enumerate_proper_support_d_tilting(dc, dual_oracle).modules;
    std::sort(rep.cotilting.begin(), rep.cotilting.end());
    if (rep.cotilting != rep.tilting)
        fail("proper support-d-cotilting modules differ from the proper support-d-tilting ones");

    // (2) <-> (3) and (4) <-> (5)
    for (std::size_t i = 0; i < n; ++i) {
        auto al = alpha(c, rep.torsion[i], seed).objects;
        auto coll = prec_partition(c, al, seqs);
        collection_flags(c, coll, rep.torsion, rep.torsion_free);
        for (const auto& w : coll.classes) {
            auto wr = is_wide(c, w, seqs);
            if (!wr.wide())
                fail("class " + list_string(w) + " for T = " + list_string(rep.tilting[i]) + " is not wide: " + wr.failures.front());
        }
        if (!coll.acyclic)
            fail("precedence has a cycle for T = " + list_string(rep.tilting[i]));
        if (fac_cap_c(c, coll.generator) != rep.torsion[i])
            fail("Fac of the resonant generator misses the torsion class of T = " + list_string(rep.tilting[i]));
        if (!coll.resonant)
            fail("collection for T = " + list_string(rep.tilting[i]) + " is not resonant");
        rep.resonant.push_back(std::move(coll));

        // torsion-free class over A is a torsion class over A^op after duality
        auto dal = alpha(dc, rep.torsion_free[i], seed).objects;
        auto dcoll = prec_partition(dc, dal, dseqs);
        WideCollection back;
        back.classes.assign(dcoll.classes.rbegin(), dcoll.classes.rend());
        back.generator = dcoll.generator;
        back.acyclic = dcoll.acyclic;
        collection_flags(c, back, rep.torsion, rep.torsion_free);
        for (const auto& w : back.classes) {
            auto wr = is_wide(c, w, seqs);
            if (!wr.wide())
                fail("class " + list_string(w) + " for the torsion-free class of T = " + list_string(rep.tilting[i]) +
                     " is not wide: " + wr.failures.front());
        }
        if (sub_cap_c(c, back.generator) != rep.torsion_free[i])
            fail("Sub of the coresonant generator misses the torsion-free class of T = " + list_string(rep.tilting[i]));
        if (!back.coresonant)
            fail("collection for the torsion-free class of T = " + list_string(rep.tilting[i]) + " is not coresonant");
        rep.coresonant.push_back(std::move(back));
    }

    // injectivity of every map
    auto distinct = [&](const auto& v, const std::string& what) {
        auto s = v;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(what + " are not pairwise distinct");
    };
    distinct(rep.torsion, "torsion classes");
    distinct(rep.torsion_free, "torsion-free classes");
    std::vector<std::vector<std::vector<int>>> res, cores;
    for (const auto& w : rep.resonant)
        res.push_back(w.classes);
    for (const auto& w : rep.coresonant)
        cores.push_back(w.classes);
    distinct(res, "resonant collections");
    distinct(cores, "coresonant collections");
    rep.equinumerous = rep.torsion.size() == n && rep.resonant.size() == n && rep.cotilting.size() == n &&
                       rep.torsion_free.size() == n && rep.coresonant.size() == n;

    rep.lattice_edges = hasse_edges(rep.torsion);
    rep.indec2 = audit_indec2(c, rep.tilting, seqs);
    return rep;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<int>>& classes)
{
    const std::size_t n = classes.size();
    auto below = [&](std::size_t a, std::size_t b) {
        return a != b && classes[a] != classes[b] &&
               std::includes(classes[b].begin(), classes[b].end(), classes[a].begin(), classes[a].end());
    };
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!below(a, b))
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (below(a, k) && below(k, b))
                    cover = false;
            if (cover)
                out.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

bool graphs_isomorphic(std::size_t n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b)
{
    if (a.size() != b.size())
        return false;
    auto adjacency = [&](const std::vector<std::pair<int, int>>& e) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (auto [u, v] : e)
            m[u][v] = m[v][u] = true;
        return m;
    };
    const auto ma = adjacency(a), mb = adjacency(b);
    auto degrees = [&](const std::vector<std::vector<bool>>& m) {
        std::vector<int> d(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = static_cast<int>(std::count(m[i].begin(), m[i].end(), true));
        return d;
    };
    const auto da = degrees(ma), db = degrees(mb);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n)
            return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j])
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = ma[i][k] == mb[j][static_cast<std::size_t>(map[k])];
            if (!ok)
                continue;
            map[i] = static_cast<int>(j);
            used[j] = true;
            if (extend(i + 1))
                return true;
            used[j] = false;
            map[i] = -1;
        }
        return false;
    };
    return extend(0);
}

} // namespace qtilt
