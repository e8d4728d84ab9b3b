#pragma once

#include "qe/curves.hpp"
#include "qe/pencil.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qe {

// A relabeled diagram as printed: one label per (-2)-curve, in config order. Aliases map a printed label to the class it denotes when the
// printed text does not parse to that class.
struct PrintedRelabeling {
    std::vector<std::string> labels;
    std::map<std::string, std::string> aliases;
};

struct ConfigEntry {
    SurfaceConfiguration config;
    int64_t expected_mw_order = 1;
    size_t expected_blowdown_classes = 1;
    // count stated in the prose when it differs from the diagrams
    std::optional<size_t> prose_blowdown_count;
    std::vector<std::string> printed_sections;
    // printed (-2) x (-1) block of the intersection matrix, if any
    IntMatrix printed_gamma_m;
    std::vector<std::vector<std::string>> printed_blowdown_sets;
    // printed change-of-basis matrices, one per non-identity blow-down set
    std::vector<IntMatrix> printed_matrices;
    std::vector<PrintedRelabeling> printed_relabelings;
};

struct PencilExample {
    std::string name;
    std::string config;
    int characteristic = 2;
    int field_degree = 1;
    std::vector<std::string> generators;
    // text as printed when it differs from the registered generator
    std::string printed_text;
    // acceptable fiber types for each generator; empty when not described
    std::vector<std::vector<FiberType>> fiber_types;
    // values for the parameters A, B, t (printed a, b, c) in the generator text
    std::map<char, std::string> parameters;
    int analysis_extension = 3;
    std::string note;
};

struct BasePointSpec {
    std::string point;
    int count;
};

struct NetExample {
    std::string name;
    std::string config;
    int characteristic = 2;
    int field_degree = 1;
    std::vector<std::string> generators;
    std::vector<BasePointSpec> base_points;
    std::string note;
};

struct Char3MatrixData {
    std::vector<std::string> pencil;
    std::string third_cubic;
    std::vector<std::vector<std::string>> printed_matrix;
    std::string printed_determinant;
};

const std::vector<ConfigEntry>& config_registry();
const ConfigEntry& find_config(const std::string& name);
const std::vector<PencilExample>& pencil_registry();
const std::vector<NetExample>& net_registry();
const NetExample& find_net(const std::string& name);
const Char3MatrixData& char3_matrix_data();
// The pencil whose base locus gives the two seven-point subsets of A2~+E6~.
const PencilExample& a2e6_subset_pencil();

// Generators of a registered example over its field, parameters substituted.
std::vector<MultiPoly> example_generators(const PencilExample& p);
std::vector<MultiPoly> example_generators(const NetExample& n);
const Field& example_field(int characteristic, int degree);

// A cluster description of a point multiset: (point, count) pairs.
std::vector<BasePointSpec> summarize_locus(const std::vector<BasePointTree>& z);

} // namespace qe
