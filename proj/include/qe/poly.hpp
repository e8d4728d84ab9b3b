#pragma once

#include "qe/field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qe {

enum Var { VX = 0, VY = 1, VZ = 2, VA = 3, VB = 4, VT = 5 };
constexpr int kNumVars = 6;

// Packed monomial: total degree in the top byte, then one byte per variable
// in the order x, y, z, A, B, t. Integer comparison is graded lex.
using Monomial = uint64_t;

namespace mono {
Monomial make(const std::array<int, kNumVars>& e);
Monomial var(Var v, int power = 1);
int exponent(Monomial m, Var v);
int degree(Monomial m);
Monomial mul(Monomial a, Monomial b);
bool divides(Monomial a, Monomial b);
Monomial div(Monomial a, Monomial b);
std::array<int, kNumVars> exponents(Monomial m);
} // namespace mono

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
    size_t position;
};

struct Term {
    Monomial m;
    uint32_t c;
};

class MultiPoly {
public:
    explicit MultiPoly(const Field& f) : field_(&f) {}
    static MultiPoly constant(FieldElement c);
    static MultiPoly variable(const Field& f, Var v, int power = 1);
    static MultiPoly monomial(FieldElement c, Monomial m);
    static MultiPoly parse(const std::string& text, const Field& f);

    const Field& field() const { return *field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    FieldElement coeff(Monomial m) const;
    FieldElement term_coeff(size_t i) const { return {field_, terms_[i].c}; }
    Monomial leading_monomial() const;
    FieldElement leading_coeff() const;

    int degree() const;
    int degree_in(Var v) const;
    // Lowest total degree among terms in the given variables (-1 for zero).
    int order(const std::vector<Var>& vars) const;
    int total_degree_in(const std::vector<Var>& vars) const;
    bool is_homogeneous(const std::vector<Var>& vars) const;
    // Terms of total degree d in vars.
    MultiPoly homogeneous_part(const std::vector<Var>& vars, int d) const;
    bool uses(Var v) const { return degree_in(v) > 0; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(FieldElement c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    MultiPoly pow(int e) const;

    MultiPoly derivative(Var v) const;
    // Replace variable v by the polynomial s.
    MultiPoly substitute(Var v, const MultiPoly& s) const;
    // Substitute field values for the variables present in the map.
    MultiPoly evaluate_partial(const std::array<std::optional<FieldElement>, kNumVars>& vals) const;
    // Full evaluation; every variable used must be assigned.
    FieldElement evaluate(const std::array<std::optional<FieldElement>, kNumVars>& vals) const;
    // Evaluate a form in x,y,z at a projective point.
    FieldElement evaluate_xyz(FieldElement a, FieldElement b, FieldElement c) const;
    MultiPoly shift(FieldElement dx, FieldElement dy) const;
    // x -> x + A, y -> y + B with symbolic A, B.
    MultiPoly shift_symbolic() const;
    MultiPoly dehomogenize_z() const;
    MultiPoly swap_vars(Var a, Var b) const;

    // Image under the embedding of this field into f.
    MultiPoly lift(const Field& f) const;
    // Divide by the leading coefficient.
    MultiPoly monic() const;
    // Exact division; nullopt if d does not divide this polynomial.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    std::string to_string() const;

private:
    void normalize();
    const Field* field_;
    std::vector<Term> terms_; // strictly decreasing monomials, nonzero coefficients
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Fraction-free (Bareiss) determinant.
MultiPoly det(const PolyMatrix& m);
// Rank over the fraction field of the polynomial ring.
int rank(const PolyMatrix& m);

// Dense univariate polynomials over a field, low degree first, trimmed.
using UPoly = std::vector<FieldElement>;
UPoly upoly_trim(UPoly p);
UPoly upoly_gcd(UPoly a, UPoly b);
FieldElement upoly_eval(const UPoly& p, FieldElement x);
// Roots in the coefficient field, by enumeration after gcd reduction.
std::vector<FieldElement> upoly_roots(const UPoly& p);
// View a polynomial in a single variable v (other variables absent) as UPoly.
UPoly to_upoly(const MultiPoly& p, Var v);

} // namespace qe
