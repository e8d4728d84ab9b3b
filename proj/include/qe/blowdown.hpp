#pragma once

#include "qe/graph.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace qe {

class BlowdownError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ContractionState {
    IntMatrix gram;
    std::vector<int> contracted;
    std::vector<bool> live;
};

ContractionState initial_state(const IntersectionGraph& g);
// gram <- r r^T + gram for the column r of vertex idx.
ContractionState contract(const ContractionState& s, int idx);

struct BlowdownSequence {
    std::vector<int> order;
    IntMatrix final_gram;
    // number of contracted sets in this Aut-orbit
    uint64_t orbit_size = 1;

    uint64_t mask() const;
};

struct BlowdownSearch {
    std::vector<BlowdownSequence> classes;
    uint64_t valid_sets = 0;
    uint64_t automorphism_order = 1;
};

BlowdownSearch search_blowdowns(const IntersectionGraph& g);
std::vector<BlowdownSequence> enumerate_blowdowns(const IntersectionGraph& g);

struct Presentation {
    DivisorClass line_class;
    std::array<DivisorClass, 9> exceptional;
    // Maps signed coordinates (a; c) of a*l + sum c_i e_i to the signed
    // coordinates of the same class in the basis (l', f_1..f_9).
    IntMatrix matrix_A;
    // Inverse of matrix_A: columns are l', f_1..f_9 in the old basis.
    IntMatrix basis_matrix;
};

// Total transforms of the contracted curves in contraction order.
std::vector<DivisorClass> total_transforms(const BlowdownSequence& seq, const IntersectionGraph& g);
Presentation presentation_of(const BlowdownSequence& seq, const IntersectionGraph& g);
// The classes are sorted into canonical order and become f_1..f_9.
Presentation presentation_from_exceptional(std::vector<DivisorClass> f);
// Rewrite a class in the (l', f) basis.
DivisorClass to_new_basis(const Presentation& p, const DivisorClass& d);
SurfaceConfiguration relabel_diagram(const SurfaceConfiguration& config, const Presentation& p);

IntMatrix pairing_matrix();
// A^T G A = G and A K = K in signed coordinates.
bool is_isometry_fixing_k(const IntMatrix& a);

} // namespace qe
