#pragma once

#include "qe/blowdown.hpp"
#include "qe/registry.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qe {

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
};

// Everything derived from one registered configuration, computed once.
struct ConfigAnalysis {
    const ConfigEntry* entry = nullptr;
    MordellWeilGroup mw;
    std::vector<DivisorClass> sections;
    IntersectionGraph graph;
    GraphAutomorphisms aut;
    BlowdownSearch search;
};

const ConfigAnalysis& analyze_config(const std::string& name);

// Vertex indices of the printed labels in the graph; throws for unknown labels.
std::vector<int> vertices_of(const IntersectionGraph& g, const std::vector<std::string>& labels);
// A contraction order of the given vertices, if one exists.
std::optional<std::vector<int>> contraction_order(const IntersectionGraph& g, const std::vector<int>& set);
// Index into search.classes of the class containing the vertex set.
int class_of(const ConfigAnalysis& a, const std::vector<int>& set);
// Presentation obtained from a printed blow-down set.
Presentation printed_presentation(const ConfigAnalysis& a, const std::vector<std::string>& labels);
// True if a equals b after permuting rows 1..9.
bool equal_up_to_f_permutation(const IntMatrix& a, const IntMatrix& b);
DivisorClass apply_matrix(const IntMatrix& a, const DivisorClass& d);

CriterionResult check_mordell_weil();
CriterionResult check_a1x8_sections();
CriterionResult check_a1x8_gamma();
CriterionResult check_blowdown_counts();
CriterionResult check_printed_matrices();
CriterionResult check_relabeled_diagrams();
CriterionResult check_char3_determinant();
CriterionResult check_nets();
CriterionResult check_char3_nonexistence(int samples = 200, uint32_t seed = 20261019);
CriterionResult check_example_pencils();
CriterionResult check_property_suites(uint32_t seed = 7);

std::vector<CriterionResult> run_acceptance();
std::string format_verdict(const CriterionResult& r);

// Seven-point subsets used by the char-3 non-existence check.
struct SubsetCase {
    std::string name;
    std::vector<BasePointTree> z;
};
std::vector<SubsetCase> char3_subset_cases();
std::vector<BasePointTree> random_seven_points(const Field& f, std::mt19937& rng);

} // namespace qe
