#include "qtilt/cli_io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qtilt::cli {

namespace fs = std::filesystem;

namespace {

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows)
        throw InvalidInput("matrix has the wrong number of rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InvalidInput("matrix has the wrong number of columns");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = parse_rational(j[r][c].get<std::string>());
    }
    return m;
}

Json index_lists(const std::vector<std::vector<int>>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x);
    return out;
}

Json labels_of(const CTCatalog& c, const std::vector<int>& idx)
{
    Json out = Json::array();
    for (int i : idx)
        out.push_back(module_label(c.objects[i]));
    return out;
}

Json audit_json(const AuditResult& r)
{
    return Json{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"pass", r.pass()}};
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    if (!in)
        throw InvalidInput("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& s)
{
    fs::create_directories(p.parent_path());
    std::ofstream out(p);
    out << s;
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
}

Json parse_json(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidInput(what + " is not valid JSON: " + e.what());
    }
}

} // namespace

// ---------------------------------------------------------------------------------
// algebras and modules

Json algebra_to_json(const Algebra& a)
{
    Json arrows = Json::array();
    for (const auto& ar : a.arrows())
        arrows.push_back({{"id", ar.id}, {"src", a.label(ar.src)}, {"tgt", a.label(ar.tgt)}});
    Json rels = Json::array();
    for (const auto& r : a.relations()) {
        Json terms = Json::array();
        for (const auto& t : r.terms) {
            Json path = Json::array();
            for (int k : t.path)
                path.push_back(a.arrow(k).id);
            terms.push_back({{"coeff", to_string(t.coeff)}, {"path", path}});
        }
        rels.push_back({{"src", a.label(r.src)}, {"tgt", a.label(r.tgt)}, {"terms", terms}});
    }
    return Json{{"vertices", a.labels()}, {"arrows", arrows}, {"relations", rels}};
}

AlgebraPtr algebra_from_json(const Json& j)
{
    try {
        std::vector<int> labels = j.at("vertices").get<std::vector<int>>();
        auto vertex = [&](const Json& x) {
            const int l = x.get<int>();
            auto it = std::find(labels.begin(), labels.end(), l);
            if (it == labels.end())
                throw InvalidInput("unknown vertex label " + std::to_string(l));
            return static_cast<int>(it - labels.begin());
        };
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows"))
            arrows.push_back({a.at("id").get<std::string>(), vertex(a.at("src")), vertex(a.at("tgt"))});
        auto arrow = [&](const std::string& id) {
            for (std::size_t k = 0; k < arrows.size(); ++k)
                if (arrows[k].id == id)
                    return static_cast<int>(k);
            throw InvalidInput("unknown arrow " + id);
        };
        std::vector<Relation> rels;
        for (const auto& r : j.value("relations", Json::array())) {
            Relation rel{vertex(r.at("src")), vertex(r.at("tgt")), {}};
            for (const auto& t : r.at("terms")) {
                Path p;
                for (const auto& id : t.at("path"))
                    p.push_back(arrow(id.get<std::string>()));
                rel.terms.push_back({parse_rational(t.at("coeff").get<std::string>()), p});
            }
            rels.push_back(std::move(rel));
        }
        return Algebra::create(labels, arrows, rels);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("algebra JSON: ") + e.what());
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("algebra JSON: ") + e.what());
    }
}

std::string algebra_digest(const Algebra& a)
{
    const std::string text = algebra_to_json(a).dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string module_label(const Module& m)
{
    const auto& labels = m.alg->labels();
    const bool wide = std::any_of(labels.begin(), labels.end(), [](int l) { return l > 9 || l < 0; });
    std::string s;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        for (int k = 0; k < m.dims[v]; ++k) {
            if (wide && !s.empty())
                s += '.';
            s += std::to_string(labels[v]);
        }
    return s.empty() ? "0" : s;
}

Json module_to_json(const Module& m)
{
    Json maps = Json::object();
    for (std::size_t a = 0; a < m.maps.size(); ++a)
        maps[m.alg->arrow(static_cast<int>(a)).id] = matrix_to_json(m.maps[a]);
    return Json{{"dims", m.dims}, {"maps", maps}};
}

Module module_from_json(const AlgebraPtr& a, const Json& j)
{
    try {
        Module m;
        m.alg = a;
        m.dims = j.at("dims").get<std::vector<int>>();
        if (m.dims.size() != a->num_vertices())
            throw InvalidInput("module dimension vector has the wrong length");
        for (int d : m.dims)
            if (d < 0)
                throw InvalidInput("negative dimension");
        const auto& maps = j.at("maps");
        for (std::size_t k = 0; k < a->num_arrows(); ++k) {
            const auto& ar = a->arrow(static_cast<int>(k));
            m.maps.push_back(matrix_from_json(maps.at(ar.id), static_cast<std::size_t>(m.dims[ar.tgt]),
                                              static_cast<std::size_t>(m.dims[ar.src])));
        }
        m.validate();
        return m;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("module JSON: ") + e.what());
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("module JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------------
// catalogs

Json catalog_to_json(const CTCatalog& c)
{
    Json objs = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Json o = module_to_json(c.objects[i]);
        o["index"] = i;
        o["label"] = module_label(c.objects[i]);
        o["projective"] = is_projective(c.objects[i]);
        o["injective"] = is_injective(c.objects[i]);
        objs.push_back(std::move(o));
    }
    Json hom = Json::array(), ext = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Json hr = Json::array(), er = Json::array();
        for (std::size_t k = 0; k < c.size(); ++k) {
            hr.push_back(c.hom[i][k].size());
            er.push_back(c.ext[c.d][i][k]);
        }
        hom.push_back(std::move(hr));
        ext.push_back(std::move(er));
    }
    return Json{{"engine_version", engine_version},
                {"d", c.d},
                {"algebra", algebra_to_json(*c.alg)},
                {"algebra_digest", algebra_digest(*c.alg)},
                {"objects", objs},
                {"hom_dims", hom},
                {"ext_d_dims", ext}};
}

CTCatalog catalog_from_json(const Json& j)
{
    int d = 0;
    AlgebraPtr a;
    std::vector<Module> objs;
    try {
        d = j.at("d").get<int>();
        a = algebra_from_json(j.at("algebra"));
        for (const auto& o : j.at("objects"))
            objs.push_back(module_from_json(a, o));
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("catalog JSON: ") + e.what());
    }
    if (d < 1)
        throw InvalidInput("catalog d must be positive");
    if (j.contains("algebra_digest") && j.at("algebra_digest") != algebra_digest(*a))
        throw InvalidInput("catalog algebra digest does not match its algebra");
    const int g = global_dimension(a, d + 1);
    if (g < 0 || g > d)
        throw InvalidInput("catalog algebra has global dimension above d");
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (objs[i].is_zero() || !is_indecomposable(objs[i]))
            throw InvalidInput("catalog object " + std::to_string(i) + " is not indecomposable");
        for (std::size_t k = 0; k < i; ++k)
            if (objs[k].dims == objs[i].dims && isomorphic_indecomposables(objs[k], objs[i]))
                throw InvalidInput("catalog objects " + std::to_string(k) + " and " + std::to_string(i) + " are isomorphic");
    }
    CTCatalog c = make_catalog(a, d, objs, false);
    auto rep = certify_ct(c);
    if (!rep.certified)
        throw InvalidInput("catalog objects do not form a d-cluster-tilting subcategory");
    if (j.contains("hom_dims") || j.contains("ext_d_dims")) {
        const Json again = catalog_to_json(c);
        if (j.value("hom_dims", again["hom_dims"]) != again["hom_dims"] || j.value("ext_d_dims", again["ext_d_dims"]) != again["ext_d_dims"])
            throw InvalidInput("catalog Hom/Ext tables do not match the objects");
    }
    return c;
}

// ---------------------------------------------------------------------------------
// lattices

LatticeData tilting_lattice(const CTCatalog& c, SupportOracle& oracle, std::size_t cap_subsets)
{
    LatticeData l;
    l.tilting = enumerate_proper_support_d_tilting(c, oracle, true, cap_subsets).modules;
    std::sort(l.tilting.begin(), l.tilting.end());
    for (const auto& t : l.tilting)
        l.torsion.push_back(fac_cap_c(c, t));
    l.edges = hasse_edges(l.torsion);
    return l;
}

Json lattice_to_json(const CTCatalog& c, const LatticeData& l)
{
    Json nodes = Json::array();
    for (std::size_t i = 0; i < l.tilting.size(); ++i)
        nodes.push_back({{"index", i},
                         {"summands", l.tilting[i]},
                         {"summand_labels", labels_of(c, l.tilting[i])},
                         {"torsion_class", l.torsion[i]}});
    Json edges = Json::array();
    for (auto [a, b] : l.edges)
        edges.push_back({a, b});
    return Json{{"engine_version", engine_version},
                {"d", c.d},
                {"algebra_digest", algebra_digest(*c.alg)},
                {"count", l.tilting.size()},
                {"nodes", nodes},
                {"edges", edges}};
}

LatticeData lattice_from_json(const Json& j)
{
    try {
        LatticeData l;
        for (const auto& n : j.at("nodes")) {
            l.tilting.push_back(n.at("summands").get<std::vector<int>>());
            l.torsion.push_back(n.at("torsion_class").get<std::vector<int>>());
        }
        for (const auto& e : j.at("edges"))
            l.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return l;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("lattice JSON: ") + e.what());
    }
}

std::string lattice_dot(const CTCatalog& c, const LatticeData& l)
{
    std::ostringstream os;
    os << "digraph support_tilting_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.tilting.size(); ++i) {
        std::string label;
        for (int s : l.tilting[i])
            label += (label.empty() ? "" : " + ") + module_label(c.objects[s]);
        os << "  n" << i << " [label=\"" << (label.empty() ? "0" : label) << "\"];\n";
    }
    for (auto [a, b] : l.edges)
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------------
// audits

bool auslander_type_a(const Algebra& a, int d)
{
    const std::size_t nv = a.num_vertices();
    std::string digest;
    for (int n = 1;; ++n) {
        // vertex count of the iterated algebra is binomial(n + d - 1, d)
        std::size_t count = 1;
        for (int k = 1; k <= d; ++k)
            count = count * static_cast<std::size_t>(n + k - 1) / static_cast<std::size_t>(k);
        if (count > nv)
            return false;
        if (count < nv)
            continue;
        if (digest.empty())
            digest = algebra_digest(a);
        if (algebra_digest(*iterate_auslander(n, d)) == digest)
            return true;
    }
}

LemmaScope lemma_scope(const CTCatalog& c, SupportOracle& oracle)
{
    LemmaScope s;
    const int g = global_dimension(c.alg, c.d + 1);
    s.gl_dim_at_most_d = g >= 0 && g <= c.d;
    s.almost_directed = is_almost_directed(c, oracle).holds();
    s.auslander_type_a = auslander_type_a(*c.alg, c.d);
    return s;
}

bool lemma_applies(const std::string& audit_name, const LemmaScope& s)
{
    if (audit_name == "chevelle" || audit_name == "skel2" || audit_name == "elso")
        return s.almost_directed && s.gl_dim_at_most_d;
    if (audit_name == "indec" || audit_name == "indec2")
        return s.auslander_type_a;
    return s.gl_dim_at_most_d;
}

Json audit_report(const CTCatalog& c, SupportOracle& oracle, std::uint64_t seed, std::size_t conjecture_cap)
{
    Json rep;
    rep["engine_version"] = engine_version;
    rep["seed"] = seed;
    rep["d"] = c.d;
    rep["algebra_digest"] = algebra_digest(*c.alg);
    bool pass = true;

    auto ct = certify_ct(c);
    rep["cluster_tilting"] = {{"certified", ct.certified}, {"conclusive", ct.conclusive}, {"indecomposables", ct.indecomposables}};
    pass = pass && ct.certified;

    std::size_t pairs = 0, bad_pairs = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k) {
            ++pairs;
            if (!hom_tau_ext_check(c.d, c.objects[i], c.objects[k]))
                ++bad_pairs;
        }
    rep["hom_tau_ext"] = {{"pairs", pairs}, {"failures", bad_pairs}};
    pass = pass && bad_pairs == 0;

    rep["homological"] = {{"global_dimension", global_dimension(c.alg, c.d + 2)},
                          {"dominant_dimension", dominant_dimension(c.alg, c.d + 2).value}};

    auto en = enumerate_d_exact(c);
    rep["d_exact"] = {{"sequences", en.sequences.size()}, {"ext_classes", en.ext_classes}, {"failures", en.failures}};
    pass = pass && en.failures.empty() && en.sequences.size() == en.ext_classes;
    const auto& seqs = en.sequences;

    auto ad = is_almost_directed(c, oracle);
    rep["almost_directed"] = {{"relations_length_two", ad.length_two},
                              {"ext_at_most_one", ad.ext_at_most_one},
                              {"left_condition", ad.left_condition},
                              {"right_condition", ad.right_condition}};

    auto m = masod_audit(c, oracle, seqs, seed);
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.tilting.size(); ++i)
        entries.push_back({{"tilting", m.tilting[i]},
                           {"torsion_class", m.torsion[i]},
                           {"resonant_collection", index_lists(m.resonant[i].classes)},
                           {"resonant_directed", m.resonant[i].directed},
                           {"torsion_free_class", m.torsion_free[i]},
                           {"coresonant_collection", index_lists(m.coresonant[i].classes)},
                           {"coresonant_directed", m.coresonant[i].directed}});
    Json edges = Json::array();
    for (auto [a, b] : m.lattice_edges)
        edges.push_back({a, b});
    rep["bijections"] = {{"sizes",
                          {{"tilting", m.tilting.size()},
                           {"torsion", m.torsion.size()},
                           {"resonant", m.resonant.size()},
                           {"torsion_free", m.torsion_free.size()},
                           {"coresonant", m.coresonant.size()}}},
                         {"cotilting_matches_tilting", m.cotilting == m.tilting},
                         {"entries", entries},
                         {"lattice_edges", edges},
                         {"failures", m.failures},
                         {"pass", m.pass()}};
    pass = pass && m.pass();

    const auto scope = lemma_scope(c, oracle);
    rep["lemma_scope"] = {{"gl_dim_at_most_d", scope.gl_dim_at_most_d},
                          {"almost_directed", scope.almost_directed},
                          {"auslander_type_a", scope.auslander_type_a}};
    Json lemmas = Json::array();
    for (const auto& r : {audit_count(c, oracle, m.tilting), audit_cotilting(c, oracle, m.tilting), audit_happel(c, oracle, m.tilting),
                          audit_chevelle(c, m.tilting), audit_skel2(c, oracle, m.tilting), audit_elso(c, m.tilting, seqs),
                          audit_adapt(c, oracle), audit_indec(c, oracle, seqs), m.indec2}) {
        Json l = audit_json(r);
        l["applies"] = lemma_applies(r.name, scope);
        lemmas.push_back(l);
        if (l["applies"].get<bool>())
            pass = pass && r.pass();
    }
    rep["lemmas"] = lemmas;

    auto cp = conjecture_probe(c, seqs, conjecture_cap);
    rep["conjecture_probe"] = {{"skipped", cp.skipped},
                               {"maximal_support_pre_d_tilting", cp.maximal_support_pre},
                               {"d_strong_torsion_classes", cp.torsion_classes},
                               {"note", cp.note}};
    rep["pass"] = pass;
    return rep;
}

// ---------------------------------------------------------------------------------
// command line

namespace {

struct Options {
    int linear_an = 0;
    int d = 0;
    int rad = 0;
    std::string algebra_file;
    std::string catalog_file;
    std::string out_dir = "qtilt-out";
    std::string format = "json";
    std::size_t cap_orbit = 0;
    std::size_t cap_subsets = 0;
    std::uint64_t seed = 11;
    bool no_cache = false;
};

Json error_json(const std::string& kind, const std::string& message)
{
    return Json{{"error", kind}, {"message", message}};
}

std::string summary(const CTCatalog& c)
{
    std::ostringstream os;
    os << "algebra: " << c.alg->num_vertices() << " vertices, " << c.alg->num_arrows() << " arrows, " << c.alg->relations().size()
       << " relations, dim " << c.alg->dimension() << "\n";
    os << "d = " << c.d << ", catalog objects: " << c.size() << "\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        os << "  " << i << "  " << module_label(c.objects[i]) << "  " << dim_string(c.objects[i]);
        if (is_projective(c.objects[i]))
            os << "  P";
        if (is_injective(c.objects[i]))
            os << "  I";
        os << "\n";
    }
    return os.str();
}

struct Session {
    const Options& o;
    std::ostream& err;
    fs::path out;

    AlgebraPtr algebra() const
    {
        int sources = (o.linear_an > 0) + !o.algebra_file.empty();
        if (sources != 1)
            throw InvalidInput("give exactly one of --linear-an and --algebra (or --catalog alone)");
        if (o.d < 1)
            throw InvalidInput("--d must be given and positive");
        if (o.linear_an > 0)
            return o.rad > 0 ? build_linear_an(o.linear_an, o.rad) : iterate_auslander(o.linear_an, o.d);
        if (o.rad > 0)
            throw InvalidInput("--rad applies to --linear-an only");
        return algebra_from_json(parse_json(read_file(o.algebra_file), o.algebra_file));
    }

    fs::path cache_path(const Algebra& a, int d, const std::string& kind) const
    {
        return out / "cache" / (algebra_digest(a) + "-d" + std::to_string(d) + "-" + kind + ".json");
    }

    // Cached payload, or nullopt when absent, stale, or disabled.
    std::optional<Json> cached(const fs::path& p) const
    {
        if (o.no_cache || !fs::exists(p))
            return std::nullopt;
        Json j = parse_json(read_file(p), p.string());
        if (j.value("engine_version", std::string()) != engine_version) {
            err << "cache: stale entry " << p.filename().string() << " ignored\n";
            return std::nullopt;
        }
        err << "cache: hit " << p.filename().string() << "\n";
        return j;
    }

    CTCatalog catalog() const
    {
        if (!o.catalog_file.empty()) {
            if (o.linear_an > 0 || !o.algebra_file.empty())
                throw InvalidInput("--catalog cannot be combined with another algebra source");
            auto c = catalog_from_json(parse_json(read_file(o.catalog_file), o.catalog_file));
            if (o.d > 0 && o.d != c.d)
                throw InvalidInput("--d disagrees with the catalog file");
            return c;
        }
        auto a = algebra();
        const auto p = cache_path(*a, o.d, "catalog");
        if (auto j = cached(p))
            return catalog_from_json(*j);
        CTCatalog c = build_ct_catalog(a, o.d, o.cap_orbit);
        if (!o.no_cache)
            write_file(p, catalog_to_json(c).dump(1) + "\n");
        return c;
    }

    LatticeData lattice(const CTCatalog& c, SupportOracle& oracle) const
    {
        const auto p = cache_path(*c.alg, c.d, "tilting");
        if (auto j = cached(p))
            return lattice_from_json(*j);
        auto l = tilting_lattice(c, oracle, o.cap_subsets);
        if (!o.no_cache)
            write_file(p, lattice_to_json(c, l).dump(1) + "\n");
        return l;
    }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Proper support-d-tilting modules, torsion classes and wide subcategories of higher Auslander algebras"};
    app.name("qtilt");
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_option("--linear-an", o.linear_an, "Linear A_n: with --rad, A_n/rad^R; otherwise the d-Auslander algebra of A_n")
        ->check(CLI::PositiveNumber);
    app.add_option("--d", o.d, "Cluster-tilting degree d")->check(CLI::PositiveNumber);
    app.add_option("--rad", o.rad, "Radical bound R for --linear-an")->check(CLI::PositiveNumber);
    app.add_option("--algebra", o.algebra_file, "Algebra JSON file");
    app.add_option("--catalog", o.catalog_file, "Catalog JSON file written by build");
    app.add_option("--out", o.out_dir, "Output directory (also holds the cache)");
    app.add_option("--format", o.format, "stdout format for tilting")->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--cap-orbit", o.cap_orbit, "Bound on enumerated indecomposables")->check(CLI::PositiveNumber);
    app.add_option("--cap-subsets", o.cap_subsets, "Bound on tested tilting candidates")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for generic morphisms in the audits");
    app.add_flag("--no-cache", o.no_cache, "Recompute and do not write the cache");
    auto* build = app.add_subcommand("build", "Compute the cluster-tilting catalog");
    auto* tilting = app.add_subcommand("tilting", "Enumerate proper support-d-tilting modules and their lattice");
    auto* audit = app.add_subcommand("audit", "Run the bijection and lemma audits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("invalid_input", e.what()).dump() << "\n";
        return 2;
    }

    try {
        Session s{o, err, fs::path(o.out_dir)};
        CTCatalog c = s.catalog();
        if (build->parsed()) {
            Json j = catalog_to_json(c);
            write_file(s.out / "catalog.json", j.dump(1) + "\n");
            write_file(s.out / "summary.txt", summary(c));
            out << summary(c);
            return 0;
        }
        SupportOracle oracle(c);
        if (tilting->parsed()) {
            auto l = s.lattice(c, oracle);
            const std::string json = lattice_to_json(c, l).dump(1) + "\n";
            const std::string dot = lattice_dot(c, l);
            write_file(s.out / "tilting.json", json);
            write_file(s.out / "lattice.dot", dot);
            out << (o.format == "dot" ? dot : json);
            return 0;
        }
        if (audit->parsed()) {
            Json rep = audit_report(c, oracle, o.seed);
            write_file(s.out / "audit.json", rep.dump(1) + "\n");
            const auto& sizes = rep["bijections"]["sizes"];
            out << "tilting " << sizes["tilting"] << ", torsion " << sizes["torsion"] << ", resonant " << sizes["resonant"]
                << ", torsion-free " << sizes["torsion_free"] << ", coresonant " << sizes["coresonant"] << "\n";
            Json witness = Json::array();
            for (const auto& l : rep["lemmas"]) {
                const bool applies = l["applies"].get<bool>();
                out << l["name"].get<std::string>() << ": " << (l["pass"].get<bool>() ? "ok" : "FAILED") << " (" << l["checked"]
                    << " checked" << (applies ? "" : ", hypotheses not met") << ")\n";
                if (applies && !l["pass"].get<bool>())
                    witness.push_back({{"audit", l["name"]}, {"witness", l["failures"][0]}});
            }
            for (const auto& f : rep["bijections"]["failures"])
                witness.push_back({{"audit", "bijections"}, {"witness", f}});
            out << "overall: " << (rep["pass"].get<bool>() ? "pass" : "falsification") << "\n";
            if (!rep["pass"].get<bool>()) {
                write_file(s.out / "witness.json", witness.dump(1) + "\n");
                return 3;
            }
            return 0;
        }
        return 2;
    } catch (const InvalidInput& e) {
        err << error_json("invalid_input", e.what()).dump() << "\n";
        return 2;
    } catch (const Falsification& e) {
        err << error_json("falsification", e.what()).dump() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        err << error_json("cap_exceeded", e.what()).dump() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << error_json("invalid_input", e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
}

} // namespace qtilt::cli
