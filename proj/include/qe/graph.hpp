#pragma once

#include "qe/curves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qe {

enum class VertexKind { MinusTwo = 0, MinusOne = 1 };

struct Vertex {
    DivisorClass cls;
    VertexKind kind;
    std::string label;
};

struct IntersectionGraph {
    std::vector<Vertex> vertices;
    IntMatrix gram;

    size_t size() const { return vertices.size(); }
    std::vector<int> colors() const;
    // Induced subgraph on the given vertex indices (in that order).
    IntersectionGraph induced(const std::vector<int>& idx) const;
    // Vertex i of the result is vertex perm[i] of this graph.
    IntersectionGraph reordered(const std::vector<int>& perm) const;
};

// (-2)-curves in config order, then sections in canonical order.
IntersectionGraph build_graph(const SurfaceConfiguration& config, const std::vector<DivisorClass>& sections);
IntersectionGraph graph_of_classes(const std::vector<DivisorClass>& classes);

// p[v] is the image of vertex v.
using Perm = std::vector<int>;

struct GraphAutomorphisms {
    std::vector<Perm> generators;
    uint64_t order = 1;
};

GraphAutomorphisms automorphisms(const IntMatrix& gram, const std::vector<int>& colors);
GraphAutomorphisms automorphisms(const IntersectionGraph& g);
bool is_automorphism(const IntMatrix& gram, const std::vector<int>& colors, const Perm& p);

struct CanonicalForm {
    IntMatrix matrix;
    std::vector<int> colors;
    // labeling[i] = original vertex placed at canonical position i
    std::vector<int> labeling;
    bool operator==(const CanonicalForm& o) const { return matrix == o.matrix && colors == o.colors; }
};

CanonicalForm canonical_form(const IntMatrix& gram, const std::vector<int>& colors);
CanonicalForm canonical_form(const IntersectionGraph& g);
// iso[v] = vertex of b matching vertex v of a
std::optional<Perm> find_isomorphism(const IntersectionGraph& a, const IntersectionGraph& b);

std::string export_dot(const IntersectionGraph& g, const std::string& name = "G");

// Orbits of the group generated by gens on {0..n-1}, as a representative map.
std::vector<int> orbit_representatives(int n, const std::vector<Perm>& gens);

} // namespace qe
