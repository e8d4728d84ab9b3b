#include "qe/plane_curve.hpp"

#include <doctest.h>

using namespace qe;

namespace {

MultiPoly P(const std::string& s, const Field& f)
{
    return MultiPoly::parse(s, f);
}

} // namespace

TEST_CASE("local intersection numbers")
{
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);
    for (int k = 1; k <= 5; ++k)
        CHECK(local_intersection(P("y", f3), P("y-x^" + std::to_string(k), f3)) == k);
    CHECK(local_intersection(P("y^2-x^3", f3), P("x", f3)) == 2);
    CHECK(local_intersection(P("y^2-x^3", f3), P("y", f3)) == 3);
    // I(x, g) = 2 plus I(x+y^2, x^2) = 4
    CHECK(local_intersection(P("x(x+y^2)", f2), P("x+y^2+x^2", f2)) == 6);
    CHECK(local_intersection(P("x+1", f2), P("y", f2)) == 0);
    CHECK_THROWS_AS(local_intersection(P("x y", f2), P("x", f2)), InfiniteMultiplicity);
}

TEST_CASE("Bezout for cubics through projective points")
{
    const Field& f = Field::get(3, 1);
    MultiPoly a = P("x(x+z)(x-z)", f), b = P("y(y+z)(y-z)", f);
    int total = 0;
    for (const ProjPoint& p : common_zeros(a, b))
        total += intersection_multiplicity(a, b, p);
    CHECK(total == 9);
    CHECK(common_zeros(a, b).size() == 9);
}

TEST_CASE("projective points and normalization")
{
    CHECK(projective_points(Field::get(2, 1)).size() == 7);
    CHECK(projective_points(Field::get(3, 1)).size() == 13);
    CHECK(projective_points(Field::get(2, 2)).size() == 21);
    const Field& f = Field::get(3, 1);
    ProjPoint p = ProjPoint::make(f.from_int(2), f.one(), f.from_int(2));
    CHECK(p.c[2].is_one());
    CHECK(p == ProjPoint::make(f.one(), f.from_int(2), f.one()));
}

TEST_CASE("common components")
{
    const Field& f = Field::get(2, 1);
    CHECK(share_component(P("xy(x+y)", f), P("xz(x+z)", f)));
    CHECK_FALSE(share_component(P("x^3+y^2z", f), P("y^3", f)));
    CHECK(share_component(P("z x^2", f), P("z y", f)));
    CHECK(share_component(P("(x+y+z)(x^2+yz)", f), P("(x^2+yz)z", f)));
    CHECK_FALSE(share_component(P("x^2+yz", f), P("y^2+xz", f)));
}

TEST_CASE("cubic factorization")
{
    const Field& f = Field::get(3, 1);
    Factorization a = factor_cubic(P("x^3-y^3", f));
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].second == 3);
    Factorization b = factor_cubic(P("x(y^2+xz)", f));
    CHECK(b.factors.size() == 2);
    Factorization c = factor_cubic(P("x^3+y^2z+z^3", f));
    CHECK(c.factors.size() == 1);
    CHECK(c.factors[0].first.degree() == 3);
}

TEST_CASE("singular points")
{
    const Field& f2 = Field::get(2, 1);
    auto s = singular_points(P("x^3+y^2z", f2));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == ProjPoint::make(f2.zero(), f2.zero(), f2.one()));
    CHECK(singular_points(P("y^2z+xyz+x^3+z^3", f2)).empty());
}
