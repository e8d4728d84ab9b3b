#pragma once

#include "qe/poly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qe {

class InfiniteMultiplicity : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Projective point, normalized so the last nonzero coordinate is 1.
struct ProjPoint {
    std::array<FieldElement, 3> c;

    static ProjPoint make(FieldElement a, FieldElement b, FieldElement d);
    int chart() const;
    ProjPoint lift(const Field& f) const;
    bool operator==(const ProjPoint& o) const;
    bool operator<(const ProjPoint& o) const;
    std::string to_string() const;
};

std::vector<ProjPoint> projective_points(const Field& f);

struct Factorization {
    FieldElement unit;
    // Irreducible factors over the coefficient field, leading coefficient 1.
    std::vector<std::pair<MultiPoly, int>> factors;
};

// Factor a form of degree <= 3 in x, y, z by searching for linear factors.
Factorization factor_cubic(const MultiPoly& f);

// Dehomogenize at the chart of p and move p to the origin; the result is a
// polynomial in x, y (the two remaining coordinates in increasing order).
MultiPoly local_equation(const MultiPoly& f, const ProjPoint& p);

// Local intersection number at p (Fulton's recursion).
int intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const ProjPoint& p);
// Same, for polynomials in x, y with the point at the origin.
int local_intersection(const MultiPoly& f, const MultiPoly& g);

// Common zeros of two forms in P^2 over their coefficient field.
std::vector<ProjPoint> common_zeros(const MultiPoly& f, const MultiPoly& g);
// Common zeros of a list of forms.
std::vector<ProjPoint> common_zeros(const std::vector<MultiPoly>& forms);
// True if the two forms have a common factor of positive degree.
bool share_component(const MultiPoly& f, const MultiPoly& g);
// Rational singular points of a form (points where it and all partials vanish).
std::vector<ProjPoint> singular_points(const MultiPoly& f);

// Homogeneous linear substitution helpers used by the search routines.
UPoly restrict_to_affine_line(const MultiPoly& f, FieldElement a);
UPoly restrict_to_infinity(const MultiPoly& f);

} // namespace qe
