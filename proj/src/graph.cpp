#include "qe/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qe {

std::vector<int> IntersectionGraph::colors() const
{
    std::vector<int> c;
    for (const Vertex& v : vertices)
        c.push_back(static_cast<int>(v.kind));
    return c;
}

IntersectionGraph IntersectionGraph::induced(const std::vector<int>& idx) const
{
    IntersectionGraph g;
    for (int i : idx)
        g.vertices.push_back(vertices.at(i));
    g.gram.assign(idx.size(), std::vector<int64_t>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b)
            g.gram[a][b] = gram[idx[a]][idx[b]];
    return g;
}

IntersectionGraph IntersectionGraph::reordered(const std::vector<int>& perm) const
{
    return induced(perm);
}

IntersectionGraph graph_of_classes(const std::vector<DivisorClass>& classes)
{
    IntersectionGraph g;
    for (const DivisorClass& c : classes) {
        ClassKind k = classify(c);
        if (k == ClassKind::Other)
            throw ConfigError("class " + format_label(c) + " is neither a (-1)- nor a (-2)-class");
        g.vertices.push_back({c, k == ClassKind::MinusTwoCurveCandidate ? VertexKind::MinusTwo : VertexKind::MinusOne,
                              format_label(c)});
    }
    size_t n = classes.size();
    g.gram.assign(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            g.gram[i][j] = pair(classes[i], classes[j]);
            if (i != j && g.gram[i][j] < 0)
                throw ConfigError("negative intersection between " + g.vertices[i].label + " and " +
                                  g.vertices[j].label);
        }
    return g;
}

IntersectionGraph build_graph(const SurfaceConfiguration& config, const std::vector<DivisorClass>& sections)
{
    std::vector<DivisorClass> all = config.neg_two;
    std::vector<DivisorClass> s = sections;
    std::sort(s.begin(), s.end());
    all.insert(all.end(), s.begin(), s.end());
    return graph_of_classes(all);
}

bool is_automorphism(const IntMatrix& gram, const std::vector<int>& colors, const Perm& p)
{
    size_t n = gram.size();
    if (p.size() != n)
        return false;
    for (size_t i = 0; i < n; ++i) {
        if (colors[p[i]] != colors[i])
            return false;
        for (size_t j = 0; j < n; ++j)
            if (gram[p[i]][p[j]] != gram[i][j])
                return false;
    }
    return true;
}

namespace {

struct Partition {
    std::vector<std::vector<int>> cells;
    std::vector<int> cell_of;

    bool discrete() const { return cells.size() == cell_of.size(); }

    void reindex()
    {
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c])
                cell_of[v] = static_cast<int>(c);
    }
};

uint64_t mix(uint64_t h, uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

using Trace = std::vector<uint64_t>;

// Split cells by keys until stable; the ordering of new cells depends only on
// the keys, so the result is isomorphism invariant.
void refine(const IntMatrix& g, Partition& p, Trace& trace)
{
    size_t n = g.size();
    for (;;) {
        std::vector<std::vector<std::pair<int, int64_t>>> sig(n);
        for (size_t v = 0; v < n; ++v) {
            for (size_t w = 0; w < n; ++w)
                if (w != v && g[v][w] != 0)
                    sig[v].push_back({p.cell_of[w], g[v][w]});
            std::sort(sig[v].begin(), sig[v].end());
        }
        std::vector<std::vector<int>> next;
        bool changed = false;
        for (const auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<std::pair<int, int64_t>>, std::vector<int>> groups;
            for (int v : cell)
                groups[sig[v]].push_back(v);
            if (groups.size() > 1)
                changed = true;
            for (auto& [key, members] : groups) {
                uint64_t h = members.size();
                for (auto& kv : key)
                    h = mix(mix(h, static_cast<uint64_t>(kv.first)), static_cast<uint64_t>(kv.second));
                trace.push_back(h);
                next.push_back(members);
            }
        }
        p.cells = std::move(next);
        p.reindex();
        if (!changed)
            return;
    }
}

Partition initial_partition(const IntMatrix& g, const std::vector<int>& colors, Trace& trace)
{
    size_t n = g.size();
    std::map<std::vector<int64_t>, std::vector<int>> groups;
    for (size_t v = 0; v < n; ++v) {
        std::vector<int64_t> key = {colors[v], g[v][v]};
        std::vector<int64_t> w;
        for (size_t u = 0; u < n; ++u)
            if (u != v && g[v][u] != 0)
                w.push_back(g[v][u]);
        std::sort(w.begin(), w.end());
        key.insert(key.end(), w.begin(), w.end());
        groups[key].push_back(static_cast<int>(v));
    }
    Partition p;
    p.cell_of.assign(n, 0);
    for (auto& [key, members] : groups) {
        uint64_t h = members.size();
        for (int64_t k : key)
            h = mix(h, static_cast<uint64_t>(k));
        trace.push_back(h);
        p.cells.push_back(members);
    }
    p.reindex();
    refine(g, p, trace);
    return p;
}

Partition individualize(const IntMatrix& g, const Partition& p, int v, Trace& trace)
{
    Partition q;
    q.cell_of = p.cell_of;
    for (const auto& cell : p.cells) {
        if (std::find(cell.begin(), cell.end(), v) == cell.end()) {
            q.cells.push_back(cell);
            continue;
        }
        q.cells.push_back({v});
        std::vector<int> rest;
        for (int w : cell)
            if (w != v)
                rest.push_back(w);
        if (!rest.empty())
            q.cells.push_back(rest);
        trace.push_back(mix(0xabcdefULL, cell.size()));
    }
    q.reindex();
    refine(g, q, trace);
    return q;
}

int first_nonsingleton(const Partition& p)
{
    for (size_t c = 0; c < p.cells.size(); ++c)
        if (p.cells[c].size() > 1)
            return static_cast<int>(c);
    return -1;
}

bool same_shape(const Partition& a, const Partition& b)
{
    if (a.cells.size() != b.cells.size())
        return false;
    for (size_t c = 0; c < a.cells.size(); ++c)
        if (a.cells[c].size() != b.cells[c].size())
            return false;
    return true;
}

// Search for an automorphism mapping the left partition's cells onto the right's.
bool match(const IntMatrix& g, const std::vector<int>& colors, const Partition& l, const Partition& r, Perm& out)
{
    if (!same_shape(l, r))
        return false;
    if (l.discrete()) {
        Perm p(g.size());
        for (size_t c = 0; c < l.cells.size(); ++c)
            p[l.cells[c][0]] = r.cells[c][0];
        if (!is_automorphism(g, colors, p))
            return false;
        out = p;
        return true;
    }
    int k = first_nonsingleton(l);
    Trace tl;
    Partition l2 = individualize(g, l, l.cells[k][0], tl);
    for (int v : r.cells[k]) {
        Trace tr;
        Partition r2 = individualize(g, r, v, tr);
        if (tr != tl)
            continue;
        if (match(g, colors, l2, r2, out))
            return true;
    }
    return false;
}

std::vector<int> orbit_of(int x, int n, const std::vector<Perm>& gens)
{
    std::vector<char> seen(n, 0);
    std::vector<int> orbit = {x};
    seen[x] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const Perm& g : gens) {
            int y = g[orbit[i]];
            if (!seen[y]) {
                seen[y] = 1;
                orbit.push_back(y);
            }
        }
    return orbit;
}

} // namespace

std::vector<int> orbit_representatives(int n, const std::vector<Perm>& gens)
{
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (const Perm& g : gens)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g[v]);
            if (a != b)
                rep[std::max(a, b)] = std::min(a, b);
        }
    for (int v = 0; v < n; ++v)
        rep[v] = find(v);
    return rep;
}

GraphAutomorphisms automorphisms(const IntMatrix& gram, const std::vector<int>& colors)
{
    int n = static_cast<int>(gram.size());
    GraphAutomorphisms out;
    if (n == 0)
        return out;
    // partitions with base points 0..i-1 individualized
    std::vector<Partition> prefix;
    Trace t0;
    prefix.push_back(initial_partition(gram, colors, t0));
    for (int i = 0; i < n; ++i) {
        Trace t;
        prefix.push_back(individualize(gram, prefix.back(), i, t));
    }
    std::vector<uint64_t> orbit_size(n, 1);
    for (int i = n - 1; i >= 0; --i) {
        const Partition& p = prefix[i];
        const auto& cell = p.cells[p.cell_of[i]];
        std::vector<int> orbit = orbit_of(i, n, out.generators);
        for (int c : cell) {
            if (std::find(orbit.begin(), orbit.end(), c) != orbit.end())
                continue;
            Trace tl, tr;
            Partition l = individualize(gram, p, i, tl);
            Partition r = individualize(gram, p, c, tr);
            if (tl != tr)
                continue;
            Perm g;
            if (match(gram, colors, l, r, g)) {
                out.generators.push_back(g);
                orbit = orbit_of(i, n, out.generators);
            }
        }
        orbit_size[i] = orbit.size();
    }
    for (uint64_t s : orbit_size) {
        if (s != 0 && out.order > UINT64_MAX / s)
            throw std::overflow_error("automorphism group order overflows 64 bits");
        out.order *= s;
    }
    return out;
}

GraphAutomorphisms automorphisms(const IntersectionGraph& g)
{
    return automorphisms(g.gram, g.colors());
}

namespace {

struct CanonSearch {
    const IntMatrix& g;
    const std::vector<int>& colors;
    size_t n;
    std::vector<Perm> autos;
    bool have = false;
    Trace best_trace;
    std::vector<int64_t> best_key;
    Perm best_lab;
    bool have_first = false;
    std::vector<int64_t> first_key;
    Trace first_trace;
    Perm first_lab;

    std::vector<int64_t> key_of(const Perm& lab) const
    {
        std::vector<int64_t> key;
        key.reserve(n + n * n);
        for (size_t i = 0; i < n; ++i)
            key.push_back(colors[lab[i]]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                key.push_back(g[lab[i]][lab[j]]);
        return key;
    }

    void add_auto(const Perm& from, const Perm& to)
    {
        Perm a(n);
        for (size_t i = 0; i < n; ++i)
            a[from[i]] = to[i];
        bool identity = true;
        for (size_t i = 0; i < n; ++i)
            if (a[i] != static_cast<int>(i))
                identity = false;
        if (!identity && std::find(autos.begin(), autos.end(), a) == autos.end())
            autos.push_back(a);
    }

    // -1 if t is worse than the best prefix (prune), else 0
    bool worse_than_best(const Trace& t) const
    {
        if (!have)
            return false;
        size_t m = std::min(t.size(), best_trace.size());
        for (size_t i = 0; i < m; ++i)
            if (t[i] != best_trace[i])
                return t[i] > best_trace[i];
        return false;
    }

    void leaf(const Partition& p, const Trace& t)
    {
        Perm lab(n);
        for (size_t c = 0; c < n; ++c)
            lab[c] = p.cells[c][0];
        std::vector<int64_t> key = key_of(lab);
        if (!have_first) {
            have_first = true;
            first_key = key;
            first_trace = t;
            first_lab = lab;
        } else if (t == first_trace && key == first_key) {
            add_auto(first_lab, lab);
        }
        if (!have || t < best_trace || (t == best_trace && key < best_key)) {
            have = true;
            best_trace = t;
            best_key = key;
            best_lab = lab;
        } else if (t == best_trace && key == best_key) {
            add_auto(best_lab, lab);
        }
    }

    void search(const Partition& p, const Trace& t, std::vector<int>& fixed)
    {
        if (worse_than_best(t))
            return;
        if (p.discrete()) {
            leaf(p, t);
            return;
        }
        int k = first_nonsingleton(p);
        std::vector<int> explored;
        for (int v : p.cells[k]) {
            if (!explored.empty()) {
                std::vector<Perm> stab;
                for (const Perm& a : autos) {
                    bool fixes = true;
                    for (int f : fixed)
                        if (a[f] != f) {
                            fixes = false;
                            break;
                        }
                    if (fixes)
                        stab.push_back(a);
                }
                std::vector<int> orbit = orbit_of(v, static_cast<int>(n), stab);
                bool skip = false;
                for (int w : explored)
                    if (std::find(orbit.begin(), orbit.end(), w) != orbit.end())
                        skip = true;
                if (skip)
                    continue;
            }
            explored.push_back(v);
            Trace t2 = t;
            Partition q = individualize(g, p, v, t2);
            fixed.push_back(v);
            search(q, t2, fixed);
            fixed.pop_back();
        }
    }
};

} // namespace

CanonicalForm canonical_form(const IntMatrix& gram, const std::vector<int>& colors)
{
    size_t n = gram.size();
    CanonicalForm out;
    if (n == 0)
        return out;
    CanonSearch s{gram, colors, n, {}, false, {}, {}, {}, false, {}, {}, {}};
    s.autos = automorphisms(gram, colors).generators;
    Trace t;
    Partition p = initial_partition(gram, colors, t);
    std::vector<int> fixed;
    s.search(p, t, fixed);
    out.labeling = s.best_lab;
    out.colors.resize(n);
    out.matrix.assign(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; ++i) {
        out.colors[i] = colors[out.labeling[i]];
        for (size_t j = 0; j < n; ++j)
            out.matrix[i][j] = gram[out.labeling[i]][out.labeling[j]];
    }
    return out;
}

CanonicalForm canonical_form(const IntersectionGraph& g)
{
    return canonical_form(g.gram, g.colors());
}

std::optional<Perm> find_isomorphism(const IntersectionGraph& a, const IntersectionGraph& b)
{
    if (a.size() != b.size())
        return std::nullopt;
    CanonicalForm ca = canonical_form(a), cb = canonical_form(b);
    if (!(ca == cb))
        return std::nullopt;
    Perm iso(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        iso[ca.labeling[i]] = cb.labeling[i];
    return iso;
}

std::string export_dot(const IntersectionGraph& g, const std::string& name)
{
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    os << "  node [shape=circle, width=0.25, fixedsize=true, fontsize=10];\n";
    for (const Vertex& v : g.vertices) {
        os << "  \"" << v.label << "\" [xlabel=\"" << v.label << "\", label=\"\"";
        if (v.kind == VertexKind::MinusTwo)
            os << ", style=filled, fillcolor=black";
        else
            os << ", style=solid";
        os << "];\n";
    }
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            for (int64_t k = 0; k < g.gram[i][j]; ++k)
                os << "  \"" << g.vertices[i].label << "\" -- \"" << g.vertices[j].label << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace qe
