#include "qe/pencil.hpp"
#include "qe/registry.hpp"

#include <doctest.h>

using namespace qe;

namespace {

MultiPoly P(const std::string& s, const Field& f)
{
    return MultiPoly::parse(s, f);
}

// Rank over GF(2) of the evaluation matrix of the ten cubic monomials.
int gf2_rank(std::vector<std::vector<int>> m)
{
    int r = 0;
    for (size_t c = 0; c < m[0].size() && r < int(m.size()); ++c) {
        size_t piv = r;
        while (piv < m.size() && !m[piv][c])
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[r]);
        for (size_t i = 0; i < m.size(); ++i)
            if (int(i) != r && m[i][c])
                for (size_t j = 0; j < m[i].size(); ++j)
                    m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

BasePointTree simple_point(const ProjPoint& p)
{
    BasePointTree t;
    t.coords.assign(p.c.begin(), p.c.end());
    return t;
}

} // namespace

TEST_CASE("fiber types of cubics")
{
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);
    CHECK(fiber_type(P("xyz", f3)) == FiberType::ThreeGeneralLines);
    CHECK(fiber_type(P("x(x+z)(x-z)", f3)) == FiberType::ThreeConcurrentLines);
    CHECK(fiber_type(P("x^3", f2)) == FiberType::TripleLine);
    CHECK(fiber_type(P("x^2y", f3)) == FiberType::DoubleLineLine);
    CHECK(fiber_type(P("x^3+y^2z", f2)) == FiberType::IrreducibleCuspidal);
    CHECK(fiber_type(P("x^3+y^2z", f3)) == FiberType::IrreducibleCuspidal);
    CHECK(fiber_type(P("y^2z-x^3-x^2z", f3)) == FiberType::IrreducibleNodal);
    CHECK(fiber_type(P("(y^2+xz)(x+z)", f3)) == FiberType::LineConic);
    CHECK(fiber_type(P("(y^2+xz)(x+z)", f2)) == FiberType::LineTangentConic);
    CHECK(fiber_type(P("y^2z+xyz+x^3+z^3", f2)) == FiberType::Smooth);
    CHECK(fiber_type_from_string(to_string(FiberType::LineConic)) == FiberType::LineConic);
}

TEST_CASE("base locus of the GF(3) line-conic pencil")
{
    const Field& f = Field::get(3, 1);
    auto z = base_locus({P("2x^2z+yz^2", f), P("xy^2+2yz^2", f)});
    CHECK(total_multiplicity(z) == 9);
    std::vector<int> m;
    for (const BasePointTree& t : z)
        m.push_back(t.multiplicity);
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<int>{2, 2, 2, 3});
}

TEST_CASE("every registered pencil has nine base points")
{
    for (const PencilExample& p : pencil_registry()) {
        auto g = example_generators(p);
        if (g[0].degree() != 3)
            continue;
        CAPTURE(p.name);
        CHECK(total_multiplicity(base_locus(g)) == 9);
    }
}

TEST_CASE("Fano points impose independent conditions")
{
    const Field& f = Field::get(2, 1);
    std::vector<std::vector<int>> rows;
    std::vector<BasePointTree> z;
    for (const ProjPoint& p : projective_points(f)) {
        std::vector<int> row;
        for (Monomial m : cubic_monomials())
            row.push_back(MultiPoly::monomial(f.one(), m).evaluate_xyz(p.c[0], p.c[1], p.c[2]).v);
        rows.push_back(row);
        z.push_back(simple_point(p));
    }
    int r = gf2_rank(rows);
    CHECK(r == 7);
    CHECK(linear_system_dim(z) == 10 - r);
    CHECK(linear_system_dim(z, true) == 1);
    UnexpectedReport rep = unexpected_test(z);
    CHECK(rep.is_unexpected);
    CHECK(rep.singularity_type == Singularity::Cusp);
}

TEST_CASE("kernel determinant of the GF(3) seven points")
{
    const Field& f = Field::get(3, 1);
    const Char3MatrixData& t = char3_matrix_data();
    std::vector<MultiPoly> basis = {P(t.third_cubic, f)};
    for (const std::string& g : t.pencil)
        basis.push_back(P(g, f));
    // value, d/dx, d/dy of each cubic at (A, B, 1)
    auto at_ab = [&](const MultiPoly& q) {
        return q.substitute(VX, MultiPoly::variable(f, VA))
            .substitute(VY, MultiPoly::variable(f, VB))
            .substitute(VZ, MultiPoly::constant(f.one()));
    };
    PolyMatrix oracle(3);
    for (const MultiPoly& c : basis) {
        oracle[0].push_back(at_ab(c));
        oracle[1].push_back(at_ab(c.derivative(VX)));
        oracle[2].push_back(at_ab(c.derivative(VY)));
    }
    UnexpectedReport rep = unexpected_test(base_locus(basis), basis);
    REQUIRE(rep.determinant.has_value());
    CHECK(*rep.determinant == det(oracle));
    CHECK(*rep.determinant == P("A^3B^2-A^2B^4+A^2B-B^5", f));
    CHECK_FALSE(rep.is_unexpected);
}

TEST_CASE("quasi-elliptic pencils")
{
    const Field& f2 = Field::get(2, 1);
    GenericFiberReport qe = generic_fiber_analysis(P("x^3+y^2z", f2), P("z^3", f2), 4);
    CHECK(qe.quasi_elliptic);
    GenericFiberReport e = generic_fiber_analysis(P("y^2z+xyz+x^3", f2), P("z^3", f2), 4);
    CHECK_FALSE(e.quasi_elliptic);
}

TEST_CASE("symbolic double point rows")
{
    const Field& f = Field::get(2, 1);
    std::vector<BasePointTree> z;
    for (const ProjPoint& p : projective_points(f))
        z.push_back(simple_point(p));
    PolyMatrix m = conditions_matrix(z, true);
    CHECK(m.size() == 10);
    CHECK(m[0].size() == 10);
    CHECK(rank(m) == 9);
}
