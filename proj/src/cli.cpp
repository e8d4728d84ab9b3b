#include "qe/cli.hpp"

#include "qe/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qe {

using nlohmann::ordered_json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config;
    int characteristic = 0;
    std::string points;
    int degree_bound = 5;
    std::string dot;
    bool json = false;
    int field_degree = 0;
    std::string generators;
    bool details = false;
};

struct LoadedConfig {
    SurfaceConfiguration config;
    const ConfigEntry* builtin = nullptr;
    std::string id;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json parse_json_file(const std::string& path)
{
    try {
        return ordered_json::parse(read_file(path));
    } catch (const ordered_json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

LoadedConfig load_config(const std::string& spec)
{
    if (spec.empty())
        throw InputError("--config is required");
    LoadedConfig lc;
    lc.id = spec;
    if (spec.rfind("builtin:", 0) == 0) {
        lc.builtin = &find_config(spec.substr(8));
        lc.config = lc.builtin->config;
        return lc;
    }
    ordered_json j = parse_json_file(spec);
    try {
        SurfaceConfiguration c;
        c.name = spec;
        c.characteristic = j.at("characteristic").get<int>();
        if (c.characteristic != 2 && c.characteristic != 3)
            throw InputError("characteristic must be 2 or 3");
        c.dynkin_label = j.value("dynkin", std::string());
        for (const auto& l : j.at("neg_two"))
            c.neg_two.push_back(parse_label(l.get<std::string>()));
        const auto& fibers = j.at("fibers");
        const auto& mults = j.at("multiplicities");
        if (fibers.size() != mults.size())
            throw InputError("fibers and multiplicities differ in length");
        for (size_t i = 0; i < fibers.size(); ++i) {
            Fiber f;
            f.members = fibers[i].get<std::vector<int>>();
            f.marks = mults[i].get<std::vector<int>>();
            c.fibers.push_back(f);
        }
        c.zero_section = parse_label(j.value("zero_section", std::string("e9")));
        check_fibers(c);
        lc.config = c;
    } catch (const ordered_json::exception& e) {
        throw InputError(spec + ": " + e.what());
    }
    return lc;
}

std::vector<std::string> labels(const std::vector<DivisorClass>& v)
{
    std::vector<std::string> out;
    for (const DivisorClass& c : v)
        out.push_back(format_label(c));
    return out;
}

ordered_json matrix_json(const IntMatrix& m)
{
    ordered_json a = ordered_json::array();
    for (const auto& row : m)
        a.push_back(row);
    return a;
}

void write_dot(const std::string& path, const std::string& text)
{
    if (path.empty())
        return;
    std::ofstream o(path);
    if (!o)
        throw InputError("cannot write " + path);
    o << text;
}

void print_matrix(std::ostream& out, const IntMatrix& m, const std::string& indent = "  ")
{
    for (const auto& row : m) {
        out << indent;
        for (size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << std::setw(3) << row[j];
        out << "\n";
    }
}

int cmd_mw(const Options& o, std::ostream& out)
{
    LoadedConfig lc = load_config(o.config);
    MordellWeilGroup mw = mordell_weil(lc.config);
    auto secs = search_minus_one_curves(lc.config, o.degree_bound);
    bool extremal = static_cast<int64_t>(secs.size()) == mw.order;
    bool match = extremal && (!lc.builtin || lc.builtin->expected_mw_order == mw.order);
    if (o.json) {
        ordered_json j;
        j["command"] = "mw";
        j["config"] = lc.id;
        j["mw_order"] = mw.order;
        j["invariant_factors"] = mw.invariant_factors;
        j["sections"] = labels(secs);
        j["section_count"] = secs.size();
        j["degree_bound"] = o.degree_bound;
        if (lc.builtin)
            j["paper_expected"] = lc.builtin->expected_mw_order;
        j["pass"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "configuration  " << lc.id << "\n";
        out << "|MW|           " << mw.order;
        if (lc.builtin)
            out << " (expected " << lc.builtin->expected_mw_order << ")";
        out << "\ninvariants     ";
        if (mw.invariant_factors.empty())
            out << "trivial";
        for (size_t i = 0; i < mw.invariant_factors.size(); ++i)
            out << (i ? " x " : "") << "Z/" << mw.invariant_factors[i];
        out << "\nsections       " << secs.size() << "\n";
        for (const std::string& s : labels(secs))
            out << "  " << s << "\n";
        out << (match ? "PASS" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

IntMatrix block(const IntMatrix& g, size_t r0, size_t r1, size_t c0, size_t c1)
{
    IntMatrix b;
    for (size_t i = r0; i < r1; ++i)
        b.emplace_back(g[i].begin() + c0, g[i].begin() + c1);
    return b;
}

int cmd_graph(const Options& o, std::ostream& out)
{
    LoadedConfig lc = load_config(o.config);
    auto secs = search_minus_one_curves(lc.config, o.degree_bound);
    IntersectionGraph g = build_graph(lc.config, secs);
    GraphAutomorphisms aut = automorphisms(g);
    size_t n2 = lc.config.neg_two.size(), n = g.size();
    IntMatrix b = block(g.gram, 0, n2, 0, n2), r = block(g.gram, n2, n, n2, n), m = block(g.gram, 0, n2, n2, n);
    write_dot(o.dot, export_dot(g, lc.config.name.empty() ? "G" : lc.config.name));
    if (o.json) {
        ordered_json j;
        j["command"] = "graph";
        j["config"] = lc.id;
        j["neg_two"] = labels(lc.config.neg_two);
        j["sections"] = labels(secs);
        j["B"] = matrix_json(b);
        j["R"] = matrix_json(r);
        j["M"] = matrix_json(m);
        j["automorphism_order"] = aut.order;
        j["automorphism_generators"] = aut.generators;
        out << j.dump(2) << "\n";
    } else {
        out << "configuration  " << lc.id << "\n";
        out << "vertices       " << n2 << " (-2)-curves, " << secs.size() << " sections\n";
        out << "|Aut|          " << aut.order << "\n";
        out << "rows           " << [&] {
            std::string s;
            for (const auto& l : labels(lc.config.neg_two))
                s += (s.empty() ? "" : " ") + l;
            return s;
        }() << "\n";
        out << "columns        " << [&] {
            std::string s;
            for (const auto& l : labels(secs))
                s += (s.empty() ? "" : " ") + l;
            return s;
        }() << "\n";
        out << "B\n";
        print_matrix(out, b);
        out << "R\n";
        print_matrix(out, r);
        out << "M\n";
        print_matrix(out, m);
    }
    return kExitOk;
}

int cmd_blowdowns(const Options& o, std::ostream& out)
{
    LoadedConfig lc = load_config(o.config);
    auto secs = search_minus_one_curves(lc.config, o.degree_bound);
    IntersectionGraph g = build_graph(lc.config, secs);
    BlowdownSearch s = search_blowdowns(g);
    bool match = !lc.builtin || lc.builtin->expected_blowdown_classes == s.classes.size();
    std::string dot;
    ordered_json classes = ordered_json::array();
    std::ostringstream text;
    for (size_t k = 0; k < s.classes.size(); ++k) {
        const BlowdownSequence& seq = s.classes[k];
        Presentation p = presentation_of(seq, g);
        SurfaceConfiguration rel = relabel_diagram(lc.config, p);
        std::vector<std::string> order;
        for (int v : seq.order)
            order.push_back(g.vertices[v].label);
        std::vector<DivisorClass> f(p.exceptional.begin(), p.exceptional.end());
        dot += export_dot(graph_of_classes(rel.neg_two), "class " + std::to_string(k + 1));
        ordered_json c;
        c["index"] = k + 1;
        c["contraction_order"] = order;
        c["orbit_size"] = seq.orbit_size;
        c["line_class"] = format_label(p.line_class);
        c["exceptional_classes"] = labels(f);
        c["matrix_A"] = matrix_json(p.matrix_A);
        c["relabeled_neg_two"] = labels(rel.neg_two);
        c["relabeled_zero_section"] = format_label(rel.zero_section);
        classes.push_back(c);
        text << "class " << k + 1 << " (orbit " << seq.orbit_size << ")\n";
        text << "  contract   ";
        for (size_t i = 0; i < order.size(); ++i)
            text << (i ? ", " : "") << order[i];
        text << "\n  relabeled  ";
        auto rl = labels(rel.neg_two);
        for (size_t i = 0; i < rl.size(); ++i)
            text << (i ? ", " : "") << rl[i];
        text << "\n  A\n";
        print_matrix(text, p.matrix_A, "    ");
    }
    write_dot(o.dot, dot);
    if (o.json) {
        ordered_json j;
        j["command"] = "blowdowns";
        j["config"] = lc.id;
        j["class_count"] = s.classes.size();
        j["contractible_sets"] = s.valid_sets;
        j["automorphism_order"] = s.automorphism_order;
        if (lc.builtin)
            j["paper_expected"] = lc.builtin->expected_blowdown_classes;
        j["pass"] = match;
        j["classes"] = classes;
        out << j.dump(2) << "\n";
    } else {
        out << "configuration      " << lc.id << "\n";
        out << "classes            " << s.classes.size();
        if (lc.builtin)
            out << " (expected " << lc.builtin->expected_blowdown_classes << ")";
        out << "\ncontractible sets  " << s.valid_sets << "\n|Aut|              " << s.automorphism_order << "\n";
        out << text.str();
        out << (match ? "PASS" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

const Field& field_for(int p, int degree, const std::string& text)
{
    if (p != 2 && p != 3)
        throw InputError("--char must be 2 or 3");
    if (degree <= 0)
        degree = p == 2 && text.find("phi") != std::string::npos ? 2 : 1;
    return Field::get(p, degree);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty())
            out.push_back(cur);
    return out;
}

std::vector<std::string> tree_strings(const std::vector<BasePointTree>& z)
{
    std::vector<std::string> out;
    for (const auto& t : z)
        out.push_back(t.to_string());
    return out;
}

struct PencilResult {
    ordered_json json;
    std::string text;
    bool pass = true;
};

PencilResult analyze_pencil(const std::string& name, const std::vector<MultiPoly>& g, int extension,
                            const std::vector<std::vector<FiberType>>& expected_types)
{
    PencilResult r;
    std::ostringstream t;
    r.json["name"] = name;
    r.json["generators"] = {g[0].to_string(), g[1].to_string()};
    t << name << ": " << g[0].to_string() << " , " << g[1].to_string() << "\n";
    std::vector<std::string> problems;
    for (const MultiPoly& h : g)
        if (h.degree() != 3)
            problems.push_back("generator " + h.to_string() + " is not a cubic");
    try {
        auto z = base_locus(g);
        int total = total_multiplicity(z);
        r.json["base_locus"] = tree_strings(z);
        r.json["base_total"] = total;
        t << "  base locus     ";
        for (size_t i = 0; i < z.size(); ++i)
            t << (i ? "; " : "") << z[i].to_string();
        t << "\n  total          " << total << "\n";
        if (total != 9)
            problems.push_back("base locus sums to " + std::to_string(total));
    } catch (const AlgebraError& e) {
        problems.push_back(e.what());
    }
    ordered_json types = ordered_json::array();
    t << "  fiber types   ";
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i].degree() != 3) {
            types.push_back(nullptr);
            t << " -";
            continue;
        }
        FiberType ft = fiber_type(g[i]);
        types.push_back(to_string(ft));
        t << " " << to_string(ft);
        if (i < expected_types.size() && !expected_types[i].empty() &&
            std::find(expected_types[i].begin(), expected_types[i].end(), ft) == expected_types[i].end())
            problems.push_back("generator " + std::to_string(i + 1) + " has fiber type " + to_string(ft));
    }
    t << "\n";
    r.json["fiber_types"] = types;
    try {
        GenericFiberReport gf = generic_fiber_analysis(g[0], g[1], extension);
        r.json["quasi_elliptic"] = gf.quasi_elliptic;
        r.json["generically_singular"] = gf.generically_singular;
        r.json["moving_singularity"] = gf.moving_singularity;
        r.json["singular_members"] = gf.singular_members;
        r.json["members"] = gf.members;
        r.json["analysis_field"] = gf.field;
        t << "  quasi-elliptic " << (gf.quasi_elliptic ? "yes" : "no") << " (" << gf.singular_members << " of "
          << gf.members << " members over " << gf.field << " singular, moving singularity "
          << (gf.moving_singularity ? "yes" : "no") << ")\n";
        if (!gf.quasi_elliptic)
            problems.push_back("not quasi-elliptic");
    } catch (const AlgebraError& e) {
        problems.push_back(e.what());
    }
    r.pass = problems.empty();
    r.json["problems"] = problems;
    r.json["pass"] = r.pass;
    for (const std::string& p : problems)
        t << "  discrepancy    " << p << "\n";
    r.text = t.str();
    return r;
}

int cmd_pencil(const Options& o, std::ostream& out)
{
    std::vector<PencilResult> results;
    std::string id;
    if (!o.generators.empty()) {
        int p = o.characteristic ? o.characteristic : 2;
        const Field& f = field_for(p, o.field_degree, o.generators);
        auto parts = split(o.generators, ';');
        if (parts.size() != 2)
            throw InputError("--generators needs two forms separated by ';'");
        std::vector<MultiPoly> g;
        for (const std::string& s : parts)
            g.push_back(MultiPoly::parse(s, f));
        int ext = 1;
        uint64_t q = f.size(), qq = q;
        while (qq + 1 <= 12) {
            qq *= q;
            ++ext;
        }
        ext = std::max(ext, 2);
        id = o.generators;
        results.push_back(analyze_pencil("custom", g, ext, {}));
    } else {
        LoadedConfig lc = load_config(o.config);
        if (!lc.builtin)
            throw InputError("pencil needs a builtin configuration or --generators");
        id = lc.id;
        for (const PencilExample& p : pencil_registry())
            if (p.config == lc.config.name)
                results.push_back(analyze_pencil(p.name, example_generators(p), p.analysis_extension, p.fiber_types));
        if (results.empty())
            throw InputError("no registered pencil for " + lc.config.name);
    }
    bool all = std::all_of(results.begin(), results.end(), [](const PencilResult& r) { return r.pass; });
    if (o.json) {
        ordered_json j;
        j["command"] = "pencil";
        j["config"] = id;
        j["pencils"] = ordered_json::array();
        for (const auto& r : results)
            j["pencils"].push_back(r.json);
        j["pass"] = all;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            out << r.text;
        out << (all ? "PASS" : "MISMATCH") << "\n";
    }
    return all ? kExitOk : kExitMismatch;
}

FieldElement parse_coordinate(const ordered_json& v, const Field& f)
{
    if (v.is_number_integer())
        return f.from_int(v.get<long long>());
    if (v.is_string()) {
        MultiPoly p = MultiPoly::parse(v.get<std::string>(), f);
        if (p.degree() > 0)
            throw InputError("coordinate " + v.get<std::string>() + " is not a field element");
        return p.is_zero() ? f.zero() : p.term_coeff(0);
    }
    throw InputError("coordinates must be integers or strings");
}

BasePointTree parse_tree(const ordered_json& j, const Field& f, bool root)
{
    BasePointTree t;
    const auto& pt = j.at("point");
    if (!pt.is_array() || pt.size() != (root ? 3u : 2u))
        throw InputError(root ? "a point needs three coordinates" : "an infinitely-near point needs a direction [a,b]");
    for (const auto& c : pt)
        t.coords.push_back(parse_coordinate(c, f));
    if (root) {
        ProjPoint p = ProjPoint::make(t.coords[0], t.coords[1], t.coords[2]);
        t.coords.assign(p.c.begin(), p.c.end());
    } else if (t.coords[0].is_zero() && t.coords[1].is_zero()) {
        throw InputError("direction [0,0]");
    } else if (!t.coords[0].is_zero()) {
        t.coords = {f.one(), t.coords[1] * t.coords[0].inverse()};
    } else {
        t.coords = {f.zero(), f.one()};
    }
    t.local_multiplicity = j.value("mult", 1);
    if (t.local_multiplicity < 1)
        throw InputError("multiplicity must be positive");
    t.multiplicity = t.local_multiplicity * t.local_multiplicity;
    if (j.contains("near"))
        for (const auto& c : j.at("near")) {
            t.children.push_back(parse_tree(c, f, false));
            t.multiplicity += t.children.back().multiplicity;
        }
    return t;
}

int cmd_unexpected(const Options& o, std::ostream& out)
{
    if (o.points.empty())
        throw InputError("--points is required");
    std::vector<BasePointTree> z;
    const NetExample* net = nullptr;
    if (o.points.rfind("builtin:", 0) == 0) {
        try {
            net = &find_net(o.points.substr(8));
        } catch (const ConfigError& e) {
            throw InputError(e.what());
        }
        if (o.characteristic && o.characteristic != net->characteristic)
            throw InputError(o.points + " is a characteristic " + std::to_string(net->characteristic) + " point set");
        z = base_locus(example_generators(*net));
    } else {
        if (!o.characteristic)
            throw InputError("--char is required with a points file");
        std::string text = read_file(o.points);
        const Field& f = field_for(o.characteristic, o.field_degree, text);
        ordered_json j;
        try {
            j = ordered_json::parse(text);
            if (!j.is_array())
                throw InputError("points file must hold a JSON array");
            for (const auto& e : j)
                z.push_back(parse_tree(e, f, true));
        } catch (const ordered_json::exception& e) {
            throw InputError(o.points + ": " + e.what());
        }
        if (z.empty())
            throw InputError("no points given");
    }
    UnexpectedReport rep = unexpected_test(z);
    bool match = true;
    std::string expected_locus;
    if (net) {
        std::vector<std::string> got, want;
        for (const auto& b : summarize_locus(z))
            got.push_back(b.point + "x" + std::to_string(b.count));
        for (const auto& b : net->base_points)
            want.push_back(b.point + "x" + std::to_string(b.count));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        for (size_t i = 0; i < want.size(); ++i)
            expected_locus += (i ? " + " : "") + want[i];
        match = got == want && rep.h0_Z == 3 && rep.is_unexpected && rep.singularity_type == Singularity::Cusp;
    }
    if (o.json) {
        ordered_json j;
        j["command"] = "unexpected";
        j["points"] = o.points;
        j["base_points"] = tree_strings(z);
        j["h0_Z"] = rep.h0_Z;
        j["h0_Z_plus_2P"] = rep.h0_Z_plus_2P;
        j["expected"] = rep.expected;
        j["unexpected"] = rep.is_unexpected;
        j["determinant"] = rep.determinant ? ordered_json(rep.determinant->to_string()) : ordered_json(nullptr);
        j["witness_cubic"] = rep.witness_cubic ? ordered_json(rep.witness_cubic->to_string()) : ordered_json(nullptr);
        j["witness_singularity"] = to_string(rep.singularity_type);
        if (net) {
            j["paper_expected"] = {{"base_points", expected_locus}, {"unexpected", true}, {"singularity", "cusp"}};
            if (!net->note.empty())
                j["note"] = net->note;
            j["pass"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "points            ";
        for (size_t i = 0; i < z.size(); ++i)
            out << (i ? "; " : "") << z[i].to_string();
        out << "\nh0(I_Z(3))        " << rep.h0_Z << "\n";
        out << "h0(I_Z+2P(3))     " << rep.h0_Z_plus_2P << " (expected " << rep.expected << ")\n";
        out << "unexpected        " << (rep.is_unexpected ? "true" : "false") << "\n";
        if (rep.determinant)
            out << "determinant       " << rep.determinant->to_string() << "\n";
        if (rep.witness_cubic)
            out << "witness           " << rep.witness_cubic->to_string() << "\n";
        out << "singularity       " << to_string(rep.singularity_type) << "\n";
        if (net) {
            out << "expected          " << expected_locus << ", unexpected, cusp\n";
            if (!net->note.empty())
                out << "note              " << net->note << "\n";
            out << (match ? "PASS" : "MISMATCH") << "\n";
        }
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<CriterionResult> rs = run_acceptance();
    bool all = std::all_of(rs.begin(), rs.end(), [](const CriterionResult& r) { return r.pass; });
    if (o.json) {
        ordered_json j;
        j["command"] = "verify-paper";
        j["criteria"] = ordered_json::array();
        for (const auto& r : rs)
            j["criteria"].push_back({{"index", r.index}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}});
        j["pass"] = all;
        out << j.dump(2) << "\n";
    } else {
        int passed = 0;
        for (const auto& r : rs) {
            out << format_verdict(r) << "\n";
            if (o.details)
                for (const auto& d : r.details)
                    out << "      " << d << "\n";
            passed += r.pass;
        }
        out << passed << " of " << rs.size() << " criteria pass\n";
    }
    return all ? kExitOk : kExitMismatch;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-elliptic surface toolkit"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s) {
        s->add_option("--config", o.config, "builtin:NAME or a configuration JSON file");
        s->add_option("--degree-bound", o.degree_bound, "largest l-degree searched for sections")->check(CLI::Range(0, 30));
        s->add_option("--dot", o.dot, "write diagrams in DOT format to this path");
        s->add_flag("--json", o.json, "machine-readable output");
    };
    CLI::App* mw = app.add_subcommand("mw", "Mordell-Weil group and sections");
    common(mw);
    CLI::App* graph = app.add_subcommand("graph", "intersection graph, blocks and automorphisms");
    common(graph);
    CLI::App* bd = app.add_subcommand("blowdowns", "blow-down classes, presentations and relabeled diagrams");
    common(bd);
    CLI::App* pencil = app.add_subcommand("pencil", "base locus, fiber types and quasi-ellipticity");
    common(pencil);
    pencil->add_option("--generators", o.generators, "two cubic forms separated by ';'");
    pencil->add_option("--char", o.characteristic, "characteristic (2 or 3)");
    pencil->add_option("--field-degree", o.field_degree, "degree of the coefficient field over GF(p)");
    CLI::App* un = app.add_subcommand("unexpected", "unexpected cubic test for a seven-point set");
    un->add_option("--char", o.characteristic, "characteristic (2 or 3)");
    un->add_option("--points", o.points, "builtin:NAME or a points JSON file");
    un->add_option("--field-degree", o.field_degree, "degree of the coefficient field over GF(p)");
    un->add_flag("--json", o.json, "machine-readable output");
    CLI::App* vp = app.add_subcommand("verify-paper", "run every acceptance check");
    vp->add_flag("--json", o.json, "machine-readable output");
    vp->add_flag("--details", o.details, "print the evidence under each verdict");

    std::vector<const char*> argv = {"qe"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        if (mw->parsed())
            return cmd_mw(o, out);
        if (graph->parsed())
            return cmd_graph(o, out);
        if (bd->parsed())
            return cmd_blowdowns(o, out);
        if (pencil->parsed())
            return cmd_pencil(o, out);
        if (un->parsed())
            return cmd_unexpected(o, out);
        return cmd_verify(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const LabelError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

} // namespace qe
