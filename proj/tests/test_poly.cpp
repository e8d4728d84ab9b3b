#include "qe/poly.hpp"

#include <doctest.h>

using namespace qe;

TEST_CASE("parse and print round trip")
{
    const Field& f = Field::get(2, 2);
    MultiPoly p = MultiPoly::parse("x^2z+phi xz^2+phi^2y^2z", f);
    CHECK(MultiPoly::parse(p.to_string(), f) == p);
    CHECK(p.is_homogeneous({VX, VY, VZ}));
    CHECK(p.degree() == 3);
    CHECK_THROWS_AS(MultiPoly::parse("x^2+", f), ParseError);
    CHECK_THROWS_AS(MultiPoly::parse("phi x", Field::get(3, 1)), ParseError);
}

TEST_CASE("characteristic 2 squaring is additive")
{
    const Field& f = Field::get(2, 1);
    MultiPoly a = MultiPoly::parse("x+y+z", f);
    CHECK(a * a == MultiPoly::parse("x^2+y^2+z^2", f));
    const Field& g = Field::get(3, 1);
    MultiPoly b = MultiPoly::parse("x+y+z", g);
    CHECK(b.pow(3) == MultiPoly::parse("x^3+y^3+z^3", g));
}

TEST_CASE("derivatives, substitution and exact division")
{
    const Field& f = Field::get(3, 1);
    MultiPoly p = MultiPoly::parse("x^3+2x^2y+y^2z", f);
    CHECK(p.derivative(VX) == MultiPoly::parse("x y", f));
    CHECK(p.derivative(VZ) == MultiPoly::parse("y^2", f));
    MultiPoly q = p.substitute(VY, MultiPoly::parse("x", f));
    CHECK(q == MultiPoly::parse("x^3+2x^3+x^2z", f));
    MultiPoly l = MultiPoly::parse("x+y", f);
    CHECK(*(l * p).divide_exact(l) == p);
    CHECK_FALSE(p.divide_exact(l).has_value());
}

TEST_CASE("symbolic shift")
{
    const Field& f = Field::get(2, 1);
    MultiPoly p = MultiPoly::parse("x^2z+y z^2", f);
    MultiPoly s = p.shift_symbolic().dehomogenize_z();
    // (x+A)^2 + (y+B)
    CHECK(s == MultiPoly::parse("x^2+A^2+y+B", f));
}

TEST_CASE("Bareiss determinant on a small symbolic matrix")
{
    const Field& f = Field::get(3, 1);
    PolyMatrix m = {{MultiPoly::parse("A", f), MultiPoly::parse("B", f)},
                    {MultiPoly::parse("1", f), MultiPoly::parse("A+B", f)}};
    CHECK(det(m) == MultiPoly::parse("A^2+AB-B", f));
    CHECK(rank(m) == 2);
    PolyMatrix s = {{MultiPoly::parse("A", f), MultiPoly::parse("A B", f)},
                    {MultiPoly::parse("1", f), MultiPoly::parse("B", f)}};
    CHECK(det(s).is_zero());
    CHECK(rank(s) == 1);
}

TEST_CASE("univariate roots")
{
    const Field& f = Field::get(2, 2);
    // t^2 + t + 1 has the two roots phi and phi + 1
    UPoly p = {f.one(), f.one(), f.one()};
    auto r = upoly_roots(p);
    CHECK(r.size() == 2);
    for (FieldElement x : r)
        CHECK(upoly_eval(p, x).is_zero());
}
