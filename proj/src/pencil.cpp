#include "qe/pencil.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qe {

namespace {

const std::vector<Var> kXY = {VX, VY};

MultiPoly var(const Field& f, Var v) { return MultiPoly::variable(f, v); }
MultiPoly cst(FieldElement c) { return MultiPoly::constant(c); }

// Transform of g under v = u (w + s), divided by u^r (x plays u, y plays w).
MultiPoly blow_up(const MultiPoly& g, FieldElement s, int r)
{
    const Field& f = g.field();
    MultiPoly t = g.substitute(VY, var(f, VX) * (var(f, VY) + cst(s)));
    auto q = t.divide_exact(MultiPoly::variable(f, VX, r));
    if (!q)
        throw AlgebraError("strict transform is not divisible by the exceptional divisor");
    return *q;
}

BasePointTree build_cluster(const std::vector<MultiPoly>& local, std::vector<FieldElement> coords)
{
    const Field& f = local[0].field();
    int r = -1;
    for (const MultiPoly& g : local) {
        if (g.is_zero())
            continue;
        int o = g.order(kXY);
        if (r < 0 || o < r)
            r = o;
    }
    if (r < 0)
        throw InfiniteMultiplicity("every generator vanishes identically near the point");
    if (r == 0)
        throw AlgebraError("not a base point");
    BasePointTree node;
    node.coords = std::move(coords);
    node.local_multiplicity = r;
    node.multiplicity = r * r;
    std::vector<MultiPoly> leads;
    for (const MultiPoly& g : local)
        if (!g.is_zero() && g.order(kXY) == r)
            leads.push_back(g.homogeneous_part(kXY, r));
    auto vanish = [&](FieldElement a, FieldElement b) {
        for (const MultiPoly& l : leads)
            if (!l.evaluate_xyz(a, b, f.one()).is_zero())
                return false;
        return true;
    };
    for (FieldElement s : f.elements()) {
        if (!vanish(f.one(), s))
            continue;
        std::vector<MultiPoly> next;
        for (const MultiPoly& g : local)
            next.push_back(blow_up(g, s, r));
        BasePointTree child = build_cluster(next, {f.one(), s});
        node.multiplicity += child.multiplicity;
        node.children.push_back(std::move(child));
    }
    if (vanish(f.zero(), f.one())) {
        std::vector<MultiPoly> next;
        for (const MultiPoly& g : local)
            next.push_back(blow_up(g.swap_vars(VX, VY), f.zero(), r));
        BasePointTree child = build_cluster(next, {f.zero(), f.one()});
        node.multiplicity += child.multiplicity;
        node.children.push_back(std::move(child));
    }
    return node;
}

// Certified base locus of a pencil over GF(q^e): every local cluster weight
// equals the local intersection number and the total is 9.
std::optional<std::vector<BasePointTree>> pencil_locus_over(const MultiPoly& f0, const MultiPoly& g0, const Field& fld)
{
    MultiPoly f = f0.lift(fld), g = g0.lift(fld);
    std::vector<BasePointTree> out;
    int total = 0;
    for (const ProjPoint& p : common_zeros(f, g)) {
        int im = intersection_multiplicity(f, g, p);
        BasePointTree t = cluster_at({f, g}, p);
        if (t.multiplicity != im)
            return std::nullopt;
        total += im;
        out.push_back(std::move(t));
    }
    int bezout = f.degree() * g.degree();
    if (total != bezout)
        return std::nullopt;
    return out;
}

} // namespace

int BasePointTree::point_count() const
{
    int n = 1;
    for (const auto& c : children)
        n += c.point_count();
    return n;
}

int BasePointTree::depth() const
{
    int d = 0;
    for (const auto& c : children)
        d = std::max(d, c.depth());
    return d + 1;
}

ProjPoint BasePointTree::root_point() const
{
    if (coords.size() != 3)
        throw std::invalid_argument("not a root node");
    return ProjPoint::make(coords[0], coords[1], coords[2]);
}

std::string BasePointTree::to_string() const
{
    std::ostringstream os;
    if (coords.size() == 3)
        os << root_point().to_string();
    else
        os << "[" << coords[0].to_string() << ":" << coords[1].to_string() << "]";
    os << "x" << point_count();
    if (local_multiplicity > 1)
        os << "(m" << local_multiplicity << ")";
    if (!children.empty()) {
        os << " {";
        for (size_t i = 0; i < children.size(); ++i)
            os << (i ? ", " : "") << children[i].to_string();
        os << "}";
    }
    return os.str();
}

BasePointTree cluster_at(const std::vector<MultiPoly>& generators, const ProjPoint& p)
{
    std::vector<MultiPoly> local;
    for (const MultiPoly& g : generators)
        local.push_back(local_equation(g, p));
    ProjPoint q = p.lift(generators[0].field());
    return build_cluster(local, {q.c[0], q.c[1], q.c[2]});
}

int total_multiplicity(const std::vector<BasePointTree>& z)
{
    int t = 0;
    for (const auto& b : z)
        t += b.multiplicity;
    return t;
}

std::vector<BasePointTree> base_locus(const std::vector<MultiPoly>& generators, int max_extension)
{
    if (generators.size() < 2)
        throw AlgebraError("a linear system needs at least two generators");
    const Field& base = generators[0].field();
    for (const MultiPoly& g : generators) {
        if (&g.field() != &base)
            throw AlgebraError("generators over different fields");
        if (g.is_zero() || !g.is_homogeneous({VX, VY, VZ}) || g.uses(VA) || g.uses(VB) || g.uses(VT))
            throw AlgebraError("generators must be nonzero forms in x, y, z");
    }
    size_t n = generators.size();
    bool any_pair = false;
    for (int e = 1; e <= max_extension; ++e) {
        const Field& fld = Field::get(base.p(), base.degree() * e);
        std::vector<MultiPoly> lifted;
        for (const MultiPoly& h : generators)
            lifted.push_back(h.lift(fld));
        // pencil pairs inside the system, tried in order
        std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                pairs.push_back({lifted[i], lifted[j]});
        if (n >= 3) {
            pairs.push_back({lifted[0], lifted[1] + lifted[2]});
            pairs.push_back({lifted[0] + lifted[1], lifted[2]});
            pairs.push_back({lifted[0] + lifted[2], lifted[1] + lifted[2]});
            if (fld.degree() > 1) {
                FieldElement w = fld.generator();
                pairs.push_back({lifted[0] + lifted[2] * w, lifted[1] + lifted[2] * (w * w)});
            }
        }
        for (const auto& [f, g] : pairs) {
            if (share_component(f, g))
                continue;
            any_pair = true;
            std::optional<std::vector<BasePointTree>> loc;
            try {
                loc = pencil_locus_over(f, g, fld);
            } catch (const InfiniteMultiplicity&) {
                continue;
            }
            if (!loc)
                break; // needs a larger field
            if (n == 2)
                return *loc;
            std::vector<BasePointTree> out;
            for (const BasePointTree& t : *loc) {
                ProjPoint p = t.root_point();
                bool all = true;
                for (const MultiPoly& h : lifted)
                    if (!h.evaluate_xyz(p.c[0], p.c[1], p.c[2]).is_zero())
                        all = false;
                if (all)
                    out.push_back(cluster_at(lifted, p));
            }
            return out;
        }
    }
    if (!any_pair)
        throw InfiniteMultiplicity("generators share a common component");
    throw AlgebraError("unresolved base locus: multiplicities do not reach 9 over GF(" + std::to_string(base.p()) +
                       "^" + std::to_string(base.degree() * max_extension) + ")");
}

GenericFiberReport generic_fiber_analysis(const MultiPoly& f0, const MultiPoly& g0, int extension)
{
    const Field& base = f0.field();
    const Field& fld = Field::get(base.p(), base.degree() * extension);
    if (fld.size() + 1 <= 12)
        throw AlgebraError("field " + fld.name() + " is too small to certify generic singularity; use a larger extension");
    MultiPoly f = f0.lift(fld), g = g0.lift(fld);
    if (share_component(f, g))
        throw InfiniteMultiplicity("pencil has a fixed component");
    GenericFiberReport rep;
    rep.field = fld.name();
    std::optional<std::set<ProjPoint>> common;
    bool cuspidal = true;
    auto visit = [&](const MultiPoly& member) {
        ++rep.members;
        std::vector<ProjPoint> sing = singular_points(member);
        bool reducible = false;
        if (sing.empty() || cuspidal) {
            Factorization fac = factor_cubic(member);
            for (auto& [h, m] : fac.factors)
                if (h.degree() < 3 || m > 1)
                    reducible = true;
        }
        if (sing.empty() && !reducible)
            return;
        ++rep.singular_members;
        if (cuspidal && (reducible || sing.size() != 1 ||
                         classify_double_point(local_equation(member, sing[0])) != Singularity::Cusp))
            cuspidal = false;
        std::set<ProjPoint> s(sing.begin(), sing.end());
        if (!common) {
            common = s;
        } else {
            std::set<ProjPoint> keep;
            for (const ProjPoint& p : *common)
                if (s.count(p))
                    keep.insert(p);
            common = keep;
        }
    };
    for (FieldElement t : fld.elements())
        visit(f + g * t);
    visit(g);
    rep.generically_singular = rep.singular_members > 12;
    rep.moving_singularity = common && common->empty();
    rep.all_cuspidal = cuspidal;
    rep.quasi_elliptic = rep.generically_singular && (rep.moving_singularity || rep.all_cuspidal);
    return rep;
}

std::string to_string(FiberType t)
{
    switch (t) {
    case FiberType::ThreeGeneralLines:
        return "ThreeGeneralLines";
    case FiberType::ThreeConcurrentLines:
        return "ThreeConcurrentLines";
    case FiberType::LineConic:
        return "Line+Conic";
    case FiberType::LineTangentConic:
        return "Line+TangentConic";
    case FiberType::DoubleLineLine:
        return "DoubleLine+Line";
    case FiberType::TripleLine:
        return "TripleLine";
    case FiberType::IrreducibleNodal:
        return "IrreducibleNodal";
    case FiberType::IrreducibleCuspidal:
        return "IrreducibleCuspidal";
    case FiberType::Smooth:
        return "Smooth";
    }
    return "?";
}

std::optional<FiberType> fiber_type_from_string(const std::string& s)
{
    for (int i = 0; i <= static_cast<int>(FiberType::Smooth); ++i)
        if (to_string(static_cast<FiberType>(i)) == s)
            return static_cast<FiberType>(i);
    return std::nullopt;
}

namespace {

std::array<FieldElement, 3> line_coeffs(const MultiPoly& l)
{
    return {l.coeff(mono::var(VX)), l.coeff(mono::var(VY)), l.coeff(mono::var(VZ))};
}

FiberType classify_lines(std::vector<std::pair<MultiPoly, int>> lines)
{
    std::vector<MultiPoly> distinct;
    int maxmult = 0;
    for (auto& [l, m] : lines) {
        maxmult = std::max(maxmult, m);
        distinct.push_back(l.monic());
    }
    if (maxmult == 3)
        return FiberType::TripleLine;
    if (maxmult == 2)
        return FiberType::DoubleLineLine;
    PolyMatrix m;
    for (const MultiPoly& l : distinct) {
        auto c = line_coeffs(l);
        m.push_back({cst(c[0]), cst(c[1]), cst(c[2])});
    }
    return det(m).is_zero() ? FiberType::ThreeConcurrentLines : FiberType::ThreeGeneralLines;
}

// Lines of a cubic over its field when it splits completely, else empty.
std::vector<std::pair<MultiPoly, int>> split_lines(const MultiPoly& c)
{
    Factorization fac = factor_cubic(c);
    std::vector<std::pair<MultiPoly, int>> out;
    for (auto& [h, m] : fac.factors) {
        if (h.degree() != 1)
            return {};
        out.push_back({h, m});
    }
    return out;
}

// Restriction of a conic to a line is a perfect square.
bool tangent(const MultiPoly& conic, const MultiPoly& line)
{
    const Field& f = conic.field();
    auto c = line_coeffs(line);
    // two points spanning the line
    std::vector<std::array<FieldElement, 3>> pts;
    for (const ProjPoint& p : projective_points(f)) {
        if ((c[0] * p.c[0] + c[1] * p.c[1] + c[2] * p.c[2]).is_zero())
            pts.push_back(p.c);
        if (pts.size() == 2)
            break;
    }
    MultiPoly s = var(f, VX), t = var(f, VY);
    MultiPoly X = s * pts[0][0] + t * pts[1][0];
    MultiPoly Y = s * pts[0][1] + t * pts[1][1];
    MultiPoly Z = s * pts[0][2] + t * pts[1][2];
    MultiPoly q(f);
    for (size_t i = 0; i < conic.terms().size(); ++i) {
        Monomial m = conic.terms()[i].m;
        q += cst(conic.term_coeff(i)) * X.pow(mono::exponent(m, VX)) * Y.pow(mono::exponent(m, VY)) *
             Z.pow(mono::exponent(m, VZ));
    }
    FieldElement a = q.coeff(mono::var(VX, 2)), b = q.coeff(mono::mul(mono::var(VX), mono::var(VY))),
                 d = q.coeff(mono::var(VY, 2));
    if (f.p() == 2)
        return b.is_zero();
    return (b * b - f.from_int(4) * a * d).is_zero();
}

} // namespace

Singularity classify_double_point(const MultiPoly& local)
{
    // local: polynomial in x, y (coefficients possibly in A, B) singular at the origin
    const Field& f = local.field();
    MultiPoly q = local.homogeneous_part(kXY, 2);
    MultiPoly c20(f), c11(f), c02(f);
    for (size_t i = 0; i < q.terms().size(); ++i) {
        Monomial m = q.terms()[i].m;
        int ex = mono::exponent(m, VX), ey = mono::exponent(m, VY);
        Monomial rest = mono::div(m, mono::mul(mono::var(VX, ex), mono::var(VY, ey)));
        MultiPoly t = MultiPoly::monomial(q.term_coeff(i), rest);
        if (ex == 2)
            c20 += t;
        else if (ex == 1)
            c11 += t;
        else
            c02 += t;
    }
    if (c20.is_zero() && c11.is_zero() && c02.is_zero())
        return Singularity::Other;
    if (f.p() == 2)
        return c11.is_zero() ? Singularity::Cusp : Singularity::Node;
    MultiPoly disc = c11 * c11 - c20 * c02 * f.from_int(4);
    return disc.is_zero() ? Singularity::Cusp : Singularity::Node;
}

FiberType fiber_type(const MultiPoly& cubic)
{
    if (cubic.is_zero())
        throw AlgebraError("fiber_type: zero cubic");
    if (cubic.degree() != 3 || !cubic.is_homogeneous({VX, VY, VZ}))
        throw AlgebraError("fiber_type: not a cubic form");
    const Field& base = cubic.field();
    Factorization fac = factor_cubic(cubic);
    std::vector<std::pair<MultiPoly, int>> lines;
    std::optional<MultiPoly> conic;
    for (auto& [h, m] : fac.factors) {
        if (h.degree() == 1)
            lines.push_back({h, m});
        else if (h.degree() == 2)
            conic = h;
    }
    if (conic) {
        const Field& ext = Field::get(base.p(), base.degree() * 2);
        auto split = split_lines(conic->lift(ext));
        if (!split.empty()) {
            split.push_back({lines[0].first.lift(ext), lines[0].second});
            // merge equal lines
            std::vector<std::pair<MultiPoly, int>> merged;
            for (auto& [l, m] : split) {
                MultiPoly lm = l.monic();
                bool found = false;
                for (auto& [k, km] : merged)
                    if (k == lm) {
                        km += m;
                        found = true;
                    }
                if (!found)
                    merged.push_back({lm, m});
            }
            return classify_lines(merged);
        }
        return tangent(*conic, lines[0].first) ? FiberType::LineTangentConic : FiberType::LineConic;
    }
    if (!lines.empty())
        return classify_lines(lines);
    const Field& ext3 = Field::get(base.p(), base.degree() * 3);
    auto split = split_lines(cubic.lift(ext3));
    if (!split.empty())
        return classify_lines(split);
    std::vector<ProjPoint> sing = singular_points(cubic);
    if (sing.empty())
        return FiberType::Smooth;
    Singularity s = classify_double_point(local_equation(cubic, sing[0]));
    return s == Singularity::Cusp ? FiberType::IrreducibleCuspidal : FiberType::IrreducibleNodal;
}

std::vector<Monomial> cubic_monomials()
{
    std::vector<Monomial> out;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b)
            out.push_back(mono::make({a, b, 3 - a - b, 0, 0, 0}));
    return out;
}

std::vector<FieldElement> cubic_coefficients(const MultiPoly& f)
{
    std::vector<FieldElement> out;
    for (Monomial m : cubic_monomials())
        out.push_back(f.coeff(m));
    return out;
}

MultiPoly cubic_from_coefficients(const std::vector<MultiPoly>& c, const Field& f)
{
    MultiPoly out(f);
    auto ms = cubic_monomials();
    for (size_t i = 0; i < ms.size(); ++i)
        out += c[i] * MultiPoly::monomial(f.one(), ms[i]);
    return out;
}

namespace {

using Series = std::vector<FieldElement>;

Series series_mul(const Series& a, const Series& b)
{
    Series out(a.size(), a[0].field->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

const Field& common_field(const std::vector<BasePointTree>& z)
{
    const Field* f = nullptr;
    for (const BasePointTree& t : z) {
        if (t.coords.size() != 3)
            throw std::invalid_argument("base point trees must be rooted at projective points");
        const Field* g = t.coords[0].field;
        if (!f || g->degree() > f->degree())
            f = g;
    }
    if (!f)
        throw std::invalid_argument("empty point set");
    return *f;
}

void collect_paths(const BasePointTree& t, std::vector<const BasePointTree*>& cur,
                   std::vector<std::vector<const BasePointTree*>>& out)
{
    cur.push_back(&t);
    if (t.children.empty())
        out.push_back(cur);
    for (const auto& c : t.children)
        collect_paths(c, cur, out);
    cur.pop_back();
}

void add_rows_for_tree(const BasePointTree& t, const Field& f, PolyMatrix& rows)
{
    ProjPoint p = t.root_point().lift(f);
    auto ms = cubic_monomials();
    if (t.children.empty()) {
        // all Taylor coefficients of order < m vanish
        int r = t.local_multiplicity;
        std::vector<MultiPoly> local;
        for (Monomial m : ms)
            local.push_back(local_equation(MultiPoly::monomial(f.one(), m), p));
        for (int d = 0; d < r; ++d)
            for (int i = d; i >= 0; --i) {
                Monomial lm = mono::make({i, d - i, 0, 0, 0, 0});
                std::vector<MultiPoly> row;
                for (const MultiPoly& g : local)
                    row.push_back(cst(g.coeff(lm)));
                rows.push_back(row);
            }
        return;
    }
    std::vector<std::vector<const BasePointTree*>> paths;
    std::vector<const BasePointTree*> cur;
    collect_paths(t, cur, paths);
    int c = p.chart();
    int li = c == 0 ? 1 : 0, lj = c == 2 ? 1 : 2;
    for (const auto& path : paths) {
        size_t n = path.size();
        for (const BasePointTree* node : path)
            if (node->local_multiplicity != 1)
                throw AlgebraError("conditions for singular infinitely-near chains are unsupported");
        // arc u -> (u, sum s_k u^k) in local coordinates, possibly swapped
        bool swapped = path[1]->coords[0].is_zero();
        Series main(n, f.zero()), other(n, f.zero());
        if (n > 1)
            main[1] = f.one();
        for (size_t k = 1; k < n; ++k) {
            FieldElement a = path[k]->coords[0].field == &f ? path[k]->coords[0] : f.embed(path[k]->coords[0]);
            FieldElement b = path[k]->coords[1].field == &f ? path[k]->coords[1] : f.embed(path[k]->coords[1]);
            if (k == 1 && swapped)
                continue;
            if (a.is_zero())
                throw AlgebraError("satellite infinitely-near point: unsupported");
            other[k] = b / a;
        }
        std::array<Series, 3> X;
        for (int v = 0; v < 3; ++v) {
            X[v] = Series(n, f.zero());
            X[v][0] = p.c[v];
        }
        Series& ui = swapped ? other : main;
        Series& uj = swapped ? main : other;
        for (size_t k = 1; k < n; ++k) {
            X[li][k] = ui[k];
            X[lj][k] = uj[k];
        }
        std::vector<Series> vals;
        for (Monomial m : ms) {
            Series s(n, f.zero());
            s[0] = f.one();
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < mono::exponent(m, static_cast<Var>(v)); ++e)
                    s = series_mul(s, X[v]);
            vals.push_back(s);
        }
        for (size_t k = 0; k < n; ++k) {
            std::vector<MultiPoly> row;
            for (const Series& s : vals)
                row.push_back(cst(s[k]));
            rows.push_back(row);
        }
    }
}

std::vector<MultiPoly> double_point_rows_for(const MultiPoly& cubic)
{
    const Field& f = cubic.field();
    auto at = [&](const MultiPoly& g) {
        return g.substitute(VX, var(f, VA)).substitute(VY, var(f, VB)).substitute(VZ, cst(f.one()));
    };
    return {at(cubic), at(cubic.derivative(VX)), at(cubic.derivative(VY))};
}

std::vector<std::vector<FieldElement>> to_numeric(const PolyMatrix& m, const Field& f)
{
    std::vector<std::vector<FieldElement>> out;
    for (const auto& row : m) {
        std::vector<FieldElement> r;
        for (const MultiPoly& e : row) {
            if (e.degree() > 0)
                throw AlgebraError("expected a constant matrix");
            r.push_back(e.is_zero() ? f.zero() : e.term_coeff(0));
        }
        out.push_back(r);
    }
    return out;
}

} // namespace

PolyMatrix conditions_matrix(const std::vector<BasePointTree>& z, bool symbolic_double_point)
{
    PolyMatrix rows;
    if (z.empty()) {
        if (symbolic_double_point)
            throw std::invalid_argument("a symbolic double point needs a coefficient field; pass a nonempty Z");
        return rows;
    }
    const Field& f = common_field(z);
    for (const BasePointTree& t : z)
        add_rows_for_tree(t, f, rows);
    if (symbolic_double_point) {
        PolyMatrix extra(3);
        for (Monomial m : cubic_monomials()) {
            auto r = double_point_rows_for(MultiPoly::monomial(f.one(), m));
            for (int i = 0; i < 3; ++i)
                extra[i].push_back(r[i]);
        }
        rows.insert(rows.end(), extra.begin(), extra.end());
    }
    return rows;
}

int linear_system_dim(const std::vector<BasePointTree>& z, bool symbolic_double_point)
{
    PolyMatrix m = conditions_matrix(z, symbolic_double_point);
    return 10 - (m.empty() ? 0 : rank(m));
}

std::vector<std::vector<FieldElement>> nullspace(const std::vector<std::vector<FieldElement>>& input, const Field& f)
{
    if (input.empty())
        return {};
    std::vector<std::vector<FieldElement>> m = input;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        FieldElement inv = m[r][c].inverse();
        for (auto& x : m[r])
            x = x * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            FieldElement k = m[i][c];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] -= k * m[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<FieldElement>> out;
    for (size_t c = 0; c < cols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end())
            continue;
        std::vector<FieldElement> v(cols, f.zero());
        v[c] = f.one();
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m[i][c];
        out.push_back(v);
    }
    return out;
}

std::string to_string(Singularity s)
{
    switch (s) {
    case Singularity::Cusp:
        return "cusp";
    case Singularity::Node:
        return "node";
    case Singularity::Other:
        return "other";
    case Singularity::None:
        return "none";
    }
    return "?";
}

namespace {

// A nonzero kernel vector of a polynomial matrix (rank < columns), by Cramer.
std::vector<MultiPoly> polynomial_kernel_vector(const PolyMatrix& m, const Field& f)
{
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<size_t> rows_sel;
    PolyMatrix sub;
    for (size_t i = 0; i < m.size(); ++i) {
        PolyMatrix trial = sub;
        trial.push_back(m[i]);
        if (rank(trial) > static_cast<int>(sub.size()))
            sub = trial;
    }
    size_t rho = sub.size();
    std::vector<MultiPoly> v(cols, MultiPoly(f));
    if (rho == 0) {
        v[0] = cst(f.one());
        return v;
    }
    // choose rho independent columns
    std::vector<size_t> cs;
    for (size_t c = 0; c < cols && cs.size() < rho; ++c) {
        std::vector<size_t> trial = cs;
        trial.push_back(c);
        PolyMatrix t(rho);
        for (size_t i = 0; i < rho; ++i)
            for (size_t k : trial)
                t[i].push_back(sub[i][k]);
        if (rank(t) == static_cast<int>(trial.size()))
            cs = trial;
    }
    size_t extra = 0;
    while (std::find(cs.begin(), cs.end(), extra) != cs.end())
        ++extra;
    auto minor_with = [&](int replace) {
        PolyMatrix t(rho);
        for (size_t i = 0; i < rho; ++i)
            for (size_t k = 0; k < rho; ++k)
                t[i].push_back(static_cast<int>(k) == replace ? sub[i][extra] : sub[i][cs[k]]);
        return det(t);
    };
    v[extra] = minor_with(-1);
    for (size_t k = 0; k < rho; ++k)
        v[cs[k]] = -minor_with(static_cast<int>(k));
    return v;
}

} // namespace

UnexpectedReport unexpected_test(const std::vector<BasePointTree>& z, const std::vector<MultiPoly>& basis_in)
{
    const Field& f = common_field(z);
    PolyMatrix cond = conditions_matrix(z, false);
    auto numeric = to_numeric(cond, f);
    auto ker = nullspace(numeric, f);
    UnexpectedReport rep;
    rep.h0_Z = static_cast<int>(ker.size());
    rep.expected = std::max(0, rep.h0_Z - 3);

    std::vector<MultiPoly> basis;
    if (!basis_in.empty()) {
        std::vector<std::vector<FieldElement>> coeff_rows;
        for (const MultiPoly& b : basis_in) {
            MultiPoly bl = b.lift(f);
            auto c = cubic_coefficients(bl);
            for (const auto& row : numeric) {
                FieldElement s = f.zero();
                for (size_t k = 0; k < 10; ++k)
                    s += row[k] * c[k];
                if (!s.is_zero())
                    throw AlgebraError("basis cubic " + b.to_string() + " does not satisfy the point conditions");
            }
            coeff_rows.push_back(c);
            basis.push_back(bl);
        }
        PolyMatrix cm;
        for (const auto& r : coeff_rows) {
            std::vector<MultiPoly> pr;
            for (FieldElement x : r)
                pr.push_back(cst(x));
            cm.push_back(pr);
        }
        if (static_cast<int>(basis.size()) != rep.h0_Z || rank(cm) != rep.h0_Z)
            throw AlgebraError("supplied cubics do not form a basis of the linear system");
    } else {
        auto ms = cubic_monomials();
        for (const auto& v : ker) {
            MultiPoly c(f);
            for (size_t k = 0; k < 10; ++k)
                c += MultiPoly::monomial(v[k], ms[k]);
            basis.push_back(c);
        }
    }
    if (basis.empty()) {
        rep.h0_Z_plus_2P = 0;
        return rep;
    }
    PolyMatrix red(3);
    for (const MultiPoly& b : basis) {
        auto r = double_point_rows_for(b);
        for (int i = 0; i < 3; ++i)
            red[i].push_back(r[i]);
    }
    int rk = rank(red);
    rep.h0_Z_plus_2P = rep.h0_Z - rk;
    rep.is_unexpected = rep.h0_Z_plus_2P > rep.expected;
    rep.reduced_matrix = red;
    if (rep.h0_Z == 3)
        rep.determinant = det(red);
    if (rep.h0_Z_plus_2P > 0) {
        auto v = polynomial_kernel_vector(red, f);
        MultiPoly w(f);
        for (size_t j = 0; j < basis.size(); ++j)
            w += v[j] * basis[j];
        rep.witness_cubic = w;
        auto chk = double_point_rows_for(w);
        rep.witness_singular = !w.is_zero() && chk[0].is_zero() && chk[1].is_zero() && chk[2].is_zero();
        MultiPoly local = w.shift_symbolic().dehomogenize_z();
        rep.singularity_type = rep.witness_singular ? classify_double_point(local) : Singularity::Other;
    }
    return rep;
}

} // namespace qe
