#include "qe/poly.hpp"

#include <algorithm>
#include <cctype>

namespace qe {

namespace mono {

static int shift_of(int v)
{
    return 40 - 8 * v;
}

Monomial make(const std::array<int, kNumVars>& e)
{
    Monomial m = 0;
    int d = 0;
    for (int v = 0; v < kNumVars; ++v) {
        if (e[v] < 0 || e[v] > 255)
            throw AlgebraError("exponent out of range");
        m |= static_cast<Monomial>(e[v]) << shift_of(v);
        d += e[v];
    }
    if (d > 255)
        throw AlgebraError("degree out of range");
    return m | (static_cast<Monomial>(d) << 56);
}

Monomial var(Var v, int power)
{
    std::array<int, kNumVars> e{};
    e[v] = power;
    return make(e);
}

int exponent(Monomial m, Var v)
{
    return static_cast<int>((m >> shift_of(v)) & 0xff);
}

int degree(Monomial m)
{
    return static_cast<int>(m >> 56);
}

std::array<int, kNumVars> exponents(Monomial m)
{
    std::array<int, kNumVars> e{};
    for (int v = 0; v < kNumVars; ++v)
        e[v] = exponent(m, static_cast<Var>(v));
    return e;
}

Monomial mul(Monomial a, Monomial b)
{
    auto ea = exponents(a), eb = exponents(b);
    for (int v = 0; v < kNumVars; ++v)
        ea[v] += eb[v];
    return make(ea);
}

bool divides(Monomial a, Monomial b)
{
    for (int v = 0; v < kNumVars; ++v)
        if (exponent(a, static_cast<Var>(v)) > exponent(b, static_cast<Var>(v)))
            return false;
    return true;
}

Monomial div(Monomial a, Monomial b)
{
    auto ea = exponents(a), eb = exponents(b);
    for (int v = 0; v < kNumVars; ++v)
        ea[v] -= eb[v];
    return make(ea);
}

} // namespace mono

static void check_same(const MultiPoly& a, const MultiPoly& b)
{
    if (&a.field() != &b.field())
        throw AlgebraError("polynomials over different fields");
}

void MultiPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = field_->add(out.back().c, t.c);
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }), out.end());
    terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(FieldElement c)
{
    MultiPoly p(*c.field);
    if (!c.is_zero())
        p.terms_.push_back({0, c.v});
    return p;
}

MultiPoly MultiPoly::variable(const Field& f, Var v, int power)
{
    MultiPoly p(f);
    p.terms_.push_back({mono::var(v, power), 1});
    return p;
}

MultiPoly MultiPoly::monomial(FieldElement c, Monomial m)
{
    MultiPoly p(*c.field);
    if (!c.is_zero())
        p.terms_.push_back({m, c.v});
    return p;
}

FieldElement MultiPoly::coeff(Monomial m) const
{
    for (const Term& t : terms_)
        if (t.m == m)
            return {field_, t.c};
    return field_->zero();
}

Monomial MultiPoly::leading_monomial() const
{
    if (terms_.empty())
        throw AlgebraError("leading monomial of zero polynomial");
    return terms_.front().m;
}

FieldElement MultiPoly::leading_coeff() const
{
    if (terms_.empty())
        throw AlgebraError("leading coefficient of zero polynomial");
    return {field_, terms_.front().c};
}

int MultiPoly::degree() const
{
    return terms_.empty() ? -1 : mono::degree(terms_.front().m);
}

int MultiPoly::degree_in(Var v) const
{
    int d = terms_.empty() ? -1 : 0;
    for (const Term& t : terms_)
        d = std::max(d, mono::exponent(t.m, v));
    return d;
}

static int partial_degree(Monomial m, const std::vector<Var>& vars)
{
    int d = 0;
    for (Var v : vars)
        d += mono::exponent(m, v);
    return d;
}

int MultiPoly::order(const std::vector<Var>& vars) const
{
    if (terms_.empty())
        return -1;
    int d = 1 << 20;
    for (const Term& t : terms_)
        d = std::min(d, partial_degree(t.m, vars));
    return d;
}

int MultiPoly::total_degree_in(const std::vector<Var>& vars) const
{
    int d = -1;
    for (const Term& t : terms_)
        d = std::max(d, partial_degree(t.m, vars));
    return d;
}

bool MultiPoly::is_homogeneous(const std::vector<Var>& vars) const
{
    return order(vars) == total_degree_in(vars);
}

MultiPoly MultiPoly::homogeneous_part(const std::vector<Var>& vars, int d) const
{
    MultiPoly r(*field_);
    for (const Term& t : terms_)
        if (partial_degree(t.m, vars) == d)
            r.terms_.push_back(t);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    check_same(*this, o);
    MultiPoly r(*field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].m > o.terms_[j].m)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].m > terms_[i].m) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            uint32_t c = field_->add(terms_[i].c, o.terms_[j].c);
            if (c)
                r.terms_.push_back({terms_[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (Term& t : r.terms_)
        t.c = field_->neg(t.c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    return *this + (-o);
}

MultiPoly MultiPoly::operator*(FieldElement c) const
{
    if (c.field != field_)
        throw AlgebraError("scalar from a different field");
    MultiPoly r(*field_);
    if (c.is_zero())
        return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_)
        t.c = field_->mul(t.c, c.v);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_same(*this, o);
    MultiPoly r(*field_);
    if (terms_.empty() || o.terms_.empty())
        return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            r.terms_.push_back({mono::mul(a.m, b.m), field_->mul(a.c, b.c)});
    r.normalize();
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const
{
    if (field_ != o.field_ || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0)
        throw AlgebraError("negative exponent");
    MultiPoly r = constant(field_->one()), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const
{
    MultiPoly r(*field_);
    for (const Term& t : terms_) {
        int k = mono::exponent(t.m, v);
        if (k == 0)
            continue;
        uint32_t c = field_->mul(t.c, field_->from_int(k).v);
        if (c == 0)
            continue;
        auto e = mono::exponents(t.m);
        e[v] -= 1;
        r.terms_.push_back({mono::make(e), c});
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& s) const
{
    check_same(*this, s);
    int maxk = degree_in(v);
    std::vector<MultiPoly> powers;
    powers.push_back(constant(field_->one()));
    for (int k = 1; k <= maxk; ++k)
        powers.push_back(powers.back() * s);
    MultiPoly r(*field_);
    // group terms by exponent of v to limit multiplications
    std::vector<MultiPoly> rest(std::max(maxk + 1, 0), MultiPoly(*field_));
    for (const Term& t : terms_) {
        int k = mono::exponent(t.m, v);
        auto e = mono::exponents(t.m);
        e[v] = 0;
        rest[k].terms_.push_back({mono::make(e), t.c});
    }
    for (int k = 0; k <= maxk; ++k) {
        if (rest[k].terms_.empty())
            continue;
        rest[k].normalize();
        r += rest[k] * powers[k];
    }
    return r;
}

MultiPoly MultiPoly::evaluate_partial(const std::array<std::optional<FieldElement>, kNumVars>& vals) const
{
    MultiPoly r(*field_);
    for (const Term& t : terms_) {
        auto e = mono::exponents(t.m);
        uint32_t c = t.c;
        for (int v = 0; v < kNumVars; ++v) {
            if (!vals[v] || e[v] == 0)
                continue;
            if (vals[v]->field != field_)
                throw AlgebraError("evaluation point in a different field");
            c = field_->mul(c, vals[v]->pow(static_cast<uint64_t>(e[v])).v);
            e[v] = 0;
        }
        if (c)
            r.terms_.push_back({mono::make(e), c});
    }
    r.normalize();
    return r;
}

FieldElement MultiPoly::evaluate(const std::array<std::optional<FieldElement>, kNumVars>& vals) const
{
    MultiPoly r = evaluate_partial(vals);
    if (r.is_zero())
        return field_->zero();
    if (r.terms_.size() != 1 || r.terms_[0].m != 0)
        throw AlgebraError("evaluation leaves free variables (wrong arity)");
    return {field_, r.terms_[0].c};
}

FieldElement MultiPoly::evaluate_xyz(FieldElement a, FieldElement b, FieldElement c) const
{
    std::array<std::optional<FieldElement>, kNumVars> vals{};
    vals[VX] = a;
    vals[VY] = b;
    vals[VZ] = c;
    return evaluate(vals);
}

MultiPoly MultiPoly::shift(FieldElement dx, FieldElement dy) const
{
    MultiPoly x = variable(*field_, VX) + constant(dx);
    MultiPoly y = variable(*field_, VY) + constant(dy);
    return substitute(VX, x).substitute(VY, y);
}

MultiPoly MultiPoly::shift_symbolic() const
{
    MultiPoly x = variable(*field_, VX) + variable(*field_, VA);
    MultiPoly y = variable(*field_, VY) + variable(*field_, VB);
    // substitute into fresh copies to avoid capturing the new A, B
    MultiPoly r = substitute(VX, x);
    return r.substitute(VY, y);
}

MultiPoly MultiPoly::dehomogenize_z() const
{
    std::array<std::optional<FieldElement>, kNumVars> vals{};
    vals[VZ] = field_->one();
    return evaluate_partial(vals);
}

MultiPoly MultiPoly::swap_vars(Var a, Var b) const
{
    MultiPoly r(*field_);
    for (const Term& t : terms_) {
        auto e = mono::exponents(t.m);
        std::swap(e[a], e[b]);
        r.terms_.push_back({mono::make(e), t.c});
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::lift(const Field& f) const
{
    if (&f == field_)
        return *this;
    const auto& table = f.embedding_from(*field_);
    MultiPoly r(f);
    r.terms_ = terms_;
    for (Term& t : r.terms_)
        t.c = table[t.c];
    return r;
}

MultiPoly MultiPoly::monic() const
{
    if (terms_.empty())
        return *this;
    return *this * leading_coeff().inverse();
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const
{
    check_same(*this, d);
    if (d.is_zero())
        throw AlgebraError("division by zero polynomial");
    MultiPoly rem = *this, q(*field_);
    Monomial lm = d.leading_monomial();
    FieldElement linv = d.leading_coeff().inverse();
    while (!rem.is_zero()) {
        Monomial m = rem.leading_monomial();
        if (!mono::divides(lm, m))
            return std::nullopt;
        MultiPoly t = monomial(rem.leading_coeff() * linv, mono::div(m, lm));
        q.terms_.push_back(t.terms_[0]);
        rem -= t * d;
    }
    q.normalize();
    return q;
}

static std::string monomial_string(Monomial m)
{
    static const char* names[kNumVars] = {"x", "y", "z", "A", "B", "t"};
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        int e = mono::exponent(m, static_cast<Var>(v));
        if (e == 0)
            continue;
        s += names[v];
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty())
            out += "+";
        std::string c = FieldElement{field_, t.c}.to_string();
        if (t.m == 0) {
            out += c;
            continue;
        }
        if (c != "1")
            out += c.find('+') != std::string::npos ? "(" + c + ")" : c;
        out += monomial_string(t.m);
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const Field& f) : s_(s), f_(f) {}

    MultiPoly run()
    {
        skip();
        if (pos_ == s_.size())
            throw ParseError("empty polynomial", pos_);
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_factor_start()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    MultiPoly expr()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        MultiPoly r = term();
        if (neg)
            r = -r;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
                break;
            char op = s_[pos_++];
            MultiPoly t = term();
            r = op == '+' ? r + t : r - t;
        }
        return r;
    }

    MultiPoly term()
    {
        if (!at_factor_start())
            throw ParseError("expected a factor", pos_);
        MultiPoly r = factor();
        while (at_factor_start())
            r = r * factor();
        return r;
    }

    int integer()
    {
        size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000)
                throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError("expected an integer", pos_);
        return static_cast<int>(v);
    }

    MultiPoly power_suffix(MultiPoly base)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            int e = integer();
            return base.pow(e);
        }
        return base;
    }

    MultiPoly factor()
    {
        skip();
        size_t start = pos_;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return power_suffix(r);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return power_suffix(MultiPoly::constant(f_.from_int(integer())));
        if (s_.compare(pos_, 3, "phi") == 0) {
            pos_ += 3;
            if (!f_.has_phi())
                throw ParseError("coefficient phi not in field " + f_.name(), start);
            return power_suffix(MultiPoly::constant(f_.phi()));
        }
        if (c == 'g') {
            ++pos_;
            if (f_.degree() == 1)
                throw ParseError("coefficient g not in field " + f_.name(), start);
            return power_suffix(MultiPoly::constant(f_.generator()));
        }
        Var v;
        switch (c) {
        case 'x': v = VX; break;
        case 'y': v = VY; break;
        case 'z': v = VZ; break;
        case 'A': v = VA; break;
        case 'B': v = VB; break;
        case 't': v = VT; break;
        default:
            throw ParseError(std::string("unknown variable '") + c + "'", start);
        }
        ++pos_;
        return power_suffix(MultiPoly::variable(f_, v));
    }

    const std::string& s_;
    const Field& f_;
    size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text, const Field& f)
{
    return PolyParser(text, f).run();
}

MultiPoly det(const PolyMatrix& input)
{
    size_t n = input.size();
    if (n == 0)
        throw AlgebraError("determinant of empty matrix");
    const Field& f = input[0][0].field();
    for (const auto& row : input)
        if (row.size() != n)
            throw AlgebraError("determinant of non-square matrix");
    PolyMatrix m = input;
    MultiPoly prev = MultiPoly::constant(f.one());
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t i = k + 1;
            while (i < n && m[i][k].is_zero())
                ++i;
            if (i == n)
                return MultiPoly(f);
            std::swap(m[i], m[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q)
                    throw AlgebraError("Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(f);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

int rank(const PolyMatrix& input)
{
    if (input.empty())
        return 0;
    const Field& f = input[0].empty() ? Field::get(2, 1) : input[0][0].field();
    PolyMatrix m = input;
    size_t rows = m.size(), cols = m[0].size();
    MultiPoly prev = MultiPoly::constant(f.one());
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                MultiPoly num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                auto q = num.divide_exact(prev);
                if (!q)
                    throw AlgebraError("Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][c] = MultiPoly(f);
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

UPoly upoly_trim(UPoly p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}

static UPoly upoly_mod(UPoly a, const UPoly& b)
{
    a = upoly_trim(a);
    FieldElement inv = b.back().inverse();
    while (a.size() >= b.size()) {
        FieldElement c = a.back() * inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a = upoly_trim(a);
    }
    return a;
}

UPoly upoly_gcd(UPoly a, UPoly b)
{
    a = upoly_trim(a);
    b = upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement inv = a.back().inverse();
        for (auto& c : a)
            c *= inv;
    }
    return a;
}

FieldElement upoly_eval(const UPoly& p, FieldElement x)
{
    FieldElement r = x.field->zero();
    for (size_t i = p.size(); i-- > 0;)
        r = r * x + p[i];
    return r;
}

std::vector<FieldElement> upoly_roots(const UPoly& p)
{
    UPoly t = upoly_trim(p);
    std::vector<FieldElement> out;
    if (t.size() <= 1)
        return out;
    const Field& f = *t[0].field;
    for (uint32_t i = 0; i < f.size(); ++i) {
        FieldElement x{&f, i};
        if (upoly_eval(t, x).is_zero())
            out.push_back(x);
    }
    return out;
}

UPoly to_upoly(const MultiPoly& p, Var v)
{
    UPoly out(std::max(p.degree_in(v) + 1, 0), p.field().zero());
    for (size_t i = 0; i < p.terms().size(); ++i) {
        Monomial m = p.terms()[i].m;
        int k = mono::exponent(m, v);
        if (mono::degree(m) != k)
            throw AlgebraError("polynomial is not univariate");
        out[k] = out[k] + p.term_coeff(i);
    }
    return upoly_trim(out);
}

} // namespace qe
