#include "qe/graph.hpp"
#include "qe/registry.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qe;

namespace {

IntMatrix cycle_gram(int n)
{
    IntMatrix g(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        g[i][i] = -2;
        g[i][(i + 1) % n] = g[(i + 1) % n][i] = 1;
    }
    return g;
}

} // namespace

TEST_CASE("automorphism group of a cycle is dihedral")
{
    for (int n : {4, 5, 6}) {
        GraphAutomorphisms a = automorphisms(cycle_gram(n), std::vector<int>(n, 0));
        CHECK(a.order == uint64_t(2 * n));
        for (const Perm& p : a.generators)
            CHECK(is_automorphism(cycle_gram(n), std::vector<int>(n, 0), p));
    }
}

TEST_CASE("colors restrict automorphisms")
{
    std::vector<int> colors = {1, 0, 0, 0};
    CHECK(automorphisms(cycle_gram(4), colors).order == 2);
}

TEST_CASE("canonical form is invariant under relabeling")
{
    std::mt19937 rng(11);
    IntMatrix g = cycle_gram(6);
    g[0][3] = g[3][0] = 2;
    std::vector<int> colors = {0, 1, 0, 1, 0, 0};
    CanonicalForm ref = canonical_form(g, colors);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> p(6);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        IntMatrix h(6, std::vector<int64_t>(6));
        std::vector<int> hc(6);
        for (int i = 0; i < 6; ++i) {
            hc[i] = colors[p[i]];
            for (int j = 0; j < 6; ++j)
                h[i][j] = g[p[i]][p[j]];
        }
        CHECK(canonical_form(h, hc) == ref);
    }
    IntMatrix other = cycle_gram(6);
    CHECK_FALSE(canonical_form(other, colors) == ref);
}

TEST_CASE("isomorphism of a graph with a reordering")
{
    const SurfaceConfiguration& c = find_config("D4~^2").config;
    IntersectionGraph g = build_graph(c, search_minus_one_curves(c, 5));
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    IntersectionGraph h = g.reordered(perm);
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (size_t u = 0; u < g.size(); ++u)
        for (size_t v = 0; v < g.size(); ++v)
            CHECK(g.gram[u][v] == h.gram[(*iso)[u]][(*iso)[v]]);
}

TEST_CASE("graph layout and dot export")
{
    const SurfaceConfiguration& c = find_config("E8~").config;
    auto sections = search_minus_one_curves(c, 5);
    IntersectionGraph g = build_graph(c, sections);
    REQUIRE(g.size() == c.neg_two.size() + sections.size());
    CHECK(g.vertices.front().kind == VertexKind::MinusTwo);
    CHECK(g.vertices.back().kind == VertexKind::MinusOne);
    std::string dot = export_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find(g.vertices[0].label) != std::string::npos);
}

TEST_CASE("orbit representatives")
{
    std::vector<Perm> gens = {{1, 0, 2, 3}, {0, 1, 3, 2}};
    std::vector<int> rep = orbit_representatives(4, gens);
    CHECK(rep[0] == rep[1]);
    CHECK(rep[2] == rep[3]);
    CHECK(rep[0] != rep[2]);
}
