#pragma once

#include "qe/plane_curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qe {

// A base point and the infinitely-near points over it. A root stores its
// projective coordinates; a child stores the direction [a:b] on the
// exceptional line, in the local coordinates (u, v) of its parent. At a root
// the local coordinates are the two coordinates other than the chart
// coordinate, in increasing order. Below a root the chart is
// v = u * (w + b/a); a direction [0:1] means the vertical tangent and swaps
// the roles of u and v for the rest of that branch. Below the first level
// [0:1] is the direction of the exceptional line (a satellite point).
struct BasePointTree {
    std::vector<FieldElement> coords;
    int local_multiplicity = 1;
    // sum of squared local multiplicities over the subtree
    int multiplicity = 1;
    std::vector<BasePointTree> children;

    int point_count() const;
    int depth() const;
    ProjPoint root_point() const;
    std::string to_string() const;
};

std::vector<BasePointTree> base_locus(const std::vector<MultiPoly>& generators, int max_extension = 4);
// Cluster of the system at one point (coordinates in the generators' field).
BasePointTree cluster_at(const std::vector<MultiPoly>& generators, const ProjPoint& p);
int total_multiplicity(const std::vector<BasePointTree>& z);

struct GenericFiberReport {
    bool generically_singular = false;
    bool moving_singularity = false;
    // every singular member is an irreducible cuspidal cubic
    bool all_cuspidal = false;
    bool quasi_elliptic = false;
    int members = 0;
    int singular_members = 0;
    std::string field;
};

GenericFiberReport generic_fiber_analysis(const MultiPoly& f, const MultiPoly& g, int extension = 3);

enum class FiberType {
    ThreeGeneralLines,
    ThreeConcurrentLines,
    LineConic,
    LineTangentConic,
    DoubleLineLine,
    TripleLine,
    IrreducibleNodal,
    IrreducibleCuspidal,
    Smooth,
};

std::string to_string(FiberType t);
std::optional<FiberType> fiber_type_from_string(const std::string& s);
FiberType fiber_type(const MultiPoly& cubic);

// The ten cubic monomials x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
std::vector<Monomial> cubic_monomials();
std::vector<FieldElement> cubic_coefficients(const MultiPoly& f);
MultiPoly cubic_from_coefficients(const std::vector<MultiPoly>& c, const Field& f);

// Linear conditions on cubic coefficients imposed by Z; with the extra flag,
// three more rows for a double point at (A, B, 1).
PolyMatrix conditions_matrix(const std::vector<BasePointTree>& z, bool symbolic_double_point = false);
int linear_system_dim(const std::vector<BasePointTree>& z, bool symbolic_double_point = false);

enum class Singularity { Cusp, Node, Other, None };
std::string to_string(Singularity s);

struct UnexpectedReport {
    int h0_Z = 0;
    int h0_Z_plus_2P = 0;
    int expected = 0;
    bool is_unexpected = false;
    std::optional<MultiPoly> determinant;
    std::optional<PolyMatrix> reduced_matrix;
    std::optional<MultiPoly> witness_cubic;
    bool witness_singular = false;
    Singularity singularity_type = Singularity::None;
};

// basis: optional cubics spanning H^0(I_Z(3)), used to lay out the reduced
// matrix (rows: value, d/dx, d/dy at (A, B, 1); one column per cubic).
UnexpectedReport unexpected_test(const std::vector<BasePointTree>& z, const std::vector<MultiPoly>& basis = {});
Singularity classify_double_point(const MultiPoly& cubic);

// Kernel of a matrix over a field, as a list of vectors.
std::vector<std::vector<FieldElement>> nullspace(const std::vector<std::vector<FieldElement>>& m, const Field& f);

} // namespace qe
