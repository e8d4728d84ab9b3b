#include "qe/plane_curve.hpp"

#include <algorithm>

namespace qe {

namespace {

const std::vector<Var> kXYZ = {VX, VY, VZ};
const std::vector<Var> kXY = {VX, VY};

} // namespace

ProjPoint ProjPoint::make(FieldElement a, FieldElement b, FieldElement d)
{
    std::array<FieldElement, 3> c = {a, b, d};
    int k = 2;
    while (k >= 0 && c[k].is_zero())
        --k;
    if (k < 0)
        throw AlgebraError("zero vector is not a projective point");
    FieldElement inv = c[k].inverse();
    for (auto& x : c)
        x = x * inv;
    return {c};
}

int ProjPoint::chart() const
{
    for (int k = 2; k >= 0; --k)
        if (!c[k].is_zero())
            return k;
    return -1;
}

ProjPoint ProjPoint::lift(const Field& f) const
{
    return {{f.embed(c[0]), f.embed(c[1]), f.embed(c[2])}};
}

bool ProjPoint::operator==(const ProjPoint& o) const
{
    return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2];
}

bool ProjPoint::operator<(const ProjPoint& o) const
{
    for (int k = 0; k < 3; ++k)
        if (c[k].v != o.c[k].v)
            return c[k].v < o.c[k].v;
    return false;
}

std::string ProjPoint::to_string() const
{
    return "(" + c[0].to_string() + "," + c[1].to_string() + "," + c[2].to_string() + ")";
}

std::vector<ProjPoint> projective_points(const Field& f)
{
    std::vector<ProjPoint> out;
    auto el = f.elements();
    for (auto& a : el)
        for (auto& b : el)
            out.push_back({{a, b, f.one()}});
    for (auto& a : el)
        out.push_back({{a, f.one(), f.zero()}});
    out.push_back({{f.one(), f.zero(), f.zero()}});
    std::sort(out.begin(), out.end());
    return out;
}

Factorization factor_cubic(const MultiPoly& input)
{
    if (input.is_zero())
        throw AlgebraError("factor_cubic: zero input");
    if (!input.is_homogeneous(kXYZ) || input.degree() > 3)
        throw AlgebraError("factor_cubic: expected a form of degree <= 3 in x, y, z");
    const Field& f = input.field();
    Factorization out{f.one(), {}};
    MultiPoly rest = input;
    if (rest.degree() > 0) {
        for (const ProjPoint& l : projective_points(f)) {
            MultiPoly line = MultiPoly::variable(f, VX) * l.c[0] + MultiPoly::variable(f, VY) * l.c[1] +
                             MultiPoly::variable(f, VZ) * l.c[2];
            int mult = 0;
            while (rest.degree() > 0) {
                auto q = rest.divide_exact(line);
                if (!q)
                    break;
                rest = *q;
                ++mult;
            }
            if (mult)
                out.factors.push_back({line, mult});
            if (rest.degree() <= 0)
                break;
        }
    }
    if (rest.degree() > 0) {
        out.unit = rest.leading_coeff();
        out.factors.push_back({rest.monic(), 1});
    } else {
        out.unit = rest.leading_coeff();
    }
    return out;
}

MultiPoly local_equation(const MultiPoly& f, const ProjPoint& p)
{
    const Field& fld = f.field();
    ProjPoint q = p.lift(fld);
    int c = q.chart();
    std::array<std::optional<FieldElement>, kNumVars> vals{};
    vals[c] = fld.one();
    MultiPoly g = f.evaluate_partial(vals);
    FieldElement a, b;
    if (c == 0) {
        g = g.substitute(VY, MultiPoly::variable(fld, VX)).substitute(VZ, MultiPoly::variable(fld, VY));
        a = q.c[1];
        b = q.c[2];
    } else if (c == 1) {
        g = g.substitute(VZ, MultiPoly::variable(fld, VY));
        a = q.c[0];
        b = q.c[2];
    } else {
        a = q.c[0];
        b = q.c[1];
    }
    return g.shift(a, b);
}

namespace {

MultiPoly restrict_y0(const MultiPoly& f)
{
    std::array<std::optional<FieldElement>, kNumVars> vals{};
    vals[VY] = f.field().zero();
    return f.evaluate_partial(vals);
}

int lowest_x_power(const MultiPoly& g)
{
    int best = -1;
    for (const Term& t : g.terms()) {
        int e = mono::exponent(t.m, VX);
        if (best < 0 || e < best)
            best = e;
    }
    return best;
}

FieldElement constant_term(const MultiPoly& f)
{
    return f.coeff(0);
}

int fulton(MultiPoly f, MultiPoly g, int depth)
{
    if (depth > 10000)
        throw AlgebraError("intersection recursion did not terminate");
    if (f.is_zero() || g.is_zero())
        throw InfiniteMultiplicity("infinite intersection multiplicity (common component)");
    if (!constant_term(f).is_zero() || !constant_term(g).is_zero())
        return 0;
    MultiPoly f0 = restrict_y0(f), g0 = restrict_y0(g);
    int r = f0.is_zero() ? -1 : f0.degree_in(VX);
    int s = g0.is_zero() ? -1 : g0.degree_in(VX);
    if (r < 0 && s < 0)
        throw InfiniteMultiplicity("infinite intersection multiplicity (common component)");
    if (r < 0 || s < 0) {
        if (s < 0) {
            std::swap(f, g);
            std::swap(f0, g0);
        }
        // f = y * h
        MultiPoly h = *f.divide_exact(MultiPoly::variable(f.field(), VY));
        return lowest_x_power(g0) + fulton(h, g, depth + 1);
    }
    if (r > s) {
        std::swap(f, g);
        std::swap(f0, g0);
        std::swap(r, s);
    }
    FieldElement lf = f0.coeff(mono::var(VX, r));
    FieldElement lg = g0.coeff(mono::var(VX, s));
    MultiPoly g1 = g * lf - MultiPoly::monomial(lg, mono::var(VX, s - r)) * f;
    return fulton(f, g1, depth + 1);
}

} // namespace

int local_intersection(const MultiPoly& f, const MultiPoly& g)
{
    return fulton(f, g, 0);
}

int intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const ProjPoint& p)
{
    if (&f.field() != &g.field())
        throw AlgebraError("forms over different fields");
    return fulton(local_equation(f, p), local_equation(g, p), 0);
}

UPoly restrict_to_affine_line(const MultiPoly& f, FieldElement a)
{
    // f(a, y, 1) as a polynomial in y
    const Field& fld = f.field();
    UPoly out(static_cast<size_t>(std::max(f.degree(), 0)) + 1, fld.zero());
    for (size_t i = 0; i < f.terms().size(); ++i) {
        Monomial m = f.terms()[i].m;
        int ex = mono::exponent(m, VX), ey = mono::exponent(m, VY);
        out[ey] += f.term_coeff(i) * a.pow(static_cast<uint64_t>(ex));
    }
    return upoly_trim(out);
}

UPoly restrict_to_infinity(const MultiPoly& f)
{
    // f(1, y, 0)
    const Field& fld = f.field();
    UPoly out(static_cast<size_t>(std::max(f.degree(), 0)) + 1, fld.zero());
    for (size_t i = 0; i < f.terms().size(); ++i) {
        Monomial m = f.terms()[i].m;
        if (mono::exponent(m, VZ) != 0)
            continue;
        out[mono::exponent(m, VY)] += f.term_coeff(i);
    }
    return upoly_trim(out);
}

std::vector<ProjPoint> common_zeros(const std::vector<MultiPoly>& forms)
{
    if (forms.empty())
        throw AlgebraError("common_zeros: no forms");
    const Field& fld = forms[0].field();
    std::vector<ProjPoint> out;
    auto scan = [&](auto restrict, auto make_point) {
        UPoly g;
        bool all_zero = true;
        for (const MultiPoly& f : forms) {
            UPoly u = restrict(f);
            if (u.empty())
                continue;
            all_zero = false;
            g = g.empty() ? u : upoly_gcd(g, u);
            if (g.size() == 1)
                return;
        }
        if (all_zero)
            throw InfiniteMultiplicity("forms share a common line component");
        for (FieldElement y : upoly_roots(g))
            out.push_back(make_point(y));
    };
    for (FieldElement a : fld.elements())
        scan([&](const MultiPoly& f) { return restrict_to_affine_line(f, a); },
             [&](FieldElement y) { return ProjPoint{{a, y, fld.one()}}; });
    scan([&](const MultiPoly& f) { return restrict_to_infinity(f); },
         [&](FieldElement y) { return ProjPoint::make(fld.one(), y, fld.zero()); });
    bool at_y = true;
    for (const MultiPoly& f : forms)
        if (!f.evaluate_xyz(fld.zero(), fld.one(), fld.zero()).is_zero())
            at_y = false;
    if (at_y)
        out.push_back({{fld.zero(), fld.one(), fld.zero()}});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjPoint> common_zeros(const MultiPoly& f, const MultiPoly& g)
{
    return common_zeros(std::vector<MultiPoly>{f, g});
}

std::vector<ProjPoint> singular_points(const MultiPoly& f)
{
    std::vector<MultiPoly> forms = {f};
    for (Var v : kXYZ) {
        MultiPoly d = f.derivative(v);
        if (!d.is_zero())
            forms.push_back(d);
    }
    try {
        return common_zeros(forms);
    } catch (const InfiniteMultiplicity&) {
        // singular along a whole line: report its rational points
        std::vector<ProjPoint> out;
        for (const ProjPoint& p : projective_points(f.field())) {
            bool all = true;
            for (const MultiPoly& g : forms)
                if (!g.evaluate_xyz(p.c[0], p.c[1], p.c[2]).is_zero())
                    all = false;
            if (all)
                out.push_back(p);
        }
        return out;
    }
}

namespace {

// Coefficients of p as a polynomial in v, low degree first.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v)
{
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(p.degree_in(v), 0)) + 1, MultiPoly(p.field()));
    for (size_t i = 0; i < p.terms().size(); ++i) {
        auto e = mono::exponents(p.terms()[i].m);
        int k = e[v];
        e[v] = 0;
        out[k] += MultiPoly::monomial(p.term_coeff(i), mono::make(e));
    }
    return out;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v)
{
    auto a = coefficients_in(f, v), b = coefficients_in(g, v);
    size_t m = a.size() - 1, n = b.size() - 1;
    if (m + n == 0)
        return MultiPoly::constant(f.field().one());
    PolyMatrix s(m + n, std::vector<MultiPoly>(m + n, MultiPoly(f.field())));
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k <= m; ++k)
            s[r][r + k] = a[m - k];
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k <= n; ++k)
            s[n + r][r + k] = b[n - k];
    return det(s);
}

} // namespace

bool share_component(const MultiPoly& f, const MultiPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return true;
    MultiPoly z = MultiPoly::variable(f.field(), VZ);
    if (f.divide_exact(z) && g.divide_exact(z))
        return true;
    MultiPoly fa = f.dehomogenize_z(), ga = g.dehomogenize_z();
    return resultant(fa, ga, VY).is_zero() || resultant(fa, ga, VX).is_zero();
}

} // namespace qe
