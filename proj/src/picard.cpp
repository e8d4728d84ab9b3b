#include "qe/picard.hpp"

#include <algorithm>

#include <cctype>

namespace qe {

int64_t checked_add(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

DivisorClass DivisorClass::line()
{
    DivisorClass d;
    d.coeff_l = 1;
    return d;
}

DivisorClass DivisorClass::exceptional(int i)
{
    if (i < 1 || i > 9)
        throw std::out_of_range("exceptional index must be in 1..9");
    DivisorClass d;
    d.b[i - 1] = -1;
    return d;
}

DivisorClass DivisorClass::from_signed(const std::array<int64_t, 10>& v)
{
    DivisorClass d;
    d.coeff_l = v[0];
    for (int i = 0; i < 9; ++i)
        d.b[i] = checked_sub(0, v[i + 1]);
    return d;
}

std::array<int64_t, 10> DivisorClass::to_signed() const
{
    std::array<int64_t, 10> v{};
    v[0] = coeff_l;
    for (int i = 0; i < 9; ++i)
        v[i + 1] = checked_sub(0, b[i]);
    return v;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const
{
    DivisorClass r;
    r.coeff_l = checked_add(coeff_l, o.coeff_l);
    for (int i = 0; i < 9; ++i)
        r.b[i] = checked_add(b[i], o.b[i]);
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const
{
    DivisorClass r;
    r.coeff_l = checked_sub(coeff_l, o.coeff_l);
    for (int i = 0; i < 9; ++i)
        r.b[i] = checked_sub(b[i], o.b[i]);
    return r;
}

DivisorClass DivisorClass::operator-() const
{
    return DivisorClass{} - *this;
}

DivisorClass DivisorClass::operator*(int64_t k) const
{
    DivisorClass r;
    r.coeff_l = checked_mul(coeff_l, k);
    for (int i = 0; i < 9; ++i)
        r.b[i] = checked_mul(b[i], k);
    return r;
}

bool DivisorClass::operator<(const DivisorClass& o) const
{
    if (coeff_l != o.coeff_l)
        return coeff_l < o.coeff_l;
    return b < o.b;
}

int64_t pair(const DivisorClass& d, const DivisorClass& e)
{
    int64_t s = checked_mul(d.coeff_l, e.coeff_l);
    for (int i = 0; i < 9; ++i)
        s = checked_sub(s, checked_mul(d.b[i], e.b[i]));
    return s;
}

DivisorClass canonical_class()
{
    DivisorClass k;
    k.coeff_l = -3;
    k.b.fill(-1);
    return k;
}

ClassKind classify(const DivisorClass& d)
{
    int64_t dd = pair(d, d), dk = pair(d, canonical_class());
    if (dd == -1 && dk == -1)
        return ClassKind::MinusOneCurveCandidate;
    if (dd == -2 && dk == 0)
        return ClassKind::MinusTwoCurveCandidate;
    return ClassKind::Other;
}

std::string to_string(ClassKind k)
{
    switch (k) {
    case ClassKind::MinusOneCurveCandidate: return "MinusOneCurveCandidate";
    case ClassKind::MinusTwoCurveCandidate: return "MinusTwoCurveCandidate";
    default: return "Other";
    }
}

namespace {

class LabelParser {
public:
    explicit LabelParser(const std::string& s) : s_(s) {}

    DivisorClass run()
    {
        if (s_.empty())
            throw LabelError("empty label", 0);
        DivisorClass d;
        if (s_.compare(0, 2, "-K") == 0)
            d = anticanonical_form();
        else
            d = longform();
        if (pos_ != s_.size())
            throw LabelError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return d;
    }

private:
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    void expect(char c)
    {
        if (!peek(c))
            throw LabelError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int index()
    {
        if (!peek_digit())
            throw LabelError("expected an index digit", pos_);
        int i = s_[pos_] - '0';
        if (i < 1 || i > 9)
            throw LabelError("index outside 1..9", pos_);
        ++pos_;
        return i;
    }

    void mark(int i, size_t at)
    {
        if (used_[i])
            throw LabelError("repeated index " + std::to_string(i), at);
        used_[i] = true;
    }

    DivisorClass anticanonical_form()
    {
        pos_ = 2;
        DivisorClass d = -canonical_class();
        if (peek('-')) {
            ++pos_;
            expect('e');
            size_t at = pos_;
            int i = index();
            mark(i, at);
            d.b[i - 1] += 1;
        }
        if (peek('+')) {
            ++pos_;
            expect('e');
            size_t at = pos_;
            int j = index();
            mark(j, at);
            d.b[j - 1] -= 1;
        }
        return d;
    }

    DivisorClass longform()
    {
        DivisorClass d;
        int sign = 1;
        if (peek('-')) {
            sign = -1;
            ++pos_;
        }
        bool first = true;
        for (;;) {
            if (!first) {
                if (peek('+'))
                    sign = 1;
                else if (peek('-'))
                    sign = -1;
                else
                    break;
                ++pos_;
            }
            size_t term_start = pos_;
            int64_t coef = 1;
            bool has_coef = false;
            if (peek_digit()) {
                coef = 0;
                has_coef = true;
                while (peek_digit()) {
                    coef = checked_add(checked_mul(coef, 10), s_[pos_] - '0');
                    ++pos_;
                }
            }
            if (peek('l')) {
                if (saw_l_)
                    throw LabelError("repeated l term", term_start);
                saw_l_ = true;
                ++pos_;
                d.coeff_l = sign * coef;
                // shorthand: coef? "l" "-" idx+
                if (first && sign == 1 && peek('-') && pos_ + 1 < s_.size() &&
                    std::all_of(s_.begin() + pos_ + 1, s_.end(),
                                [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
                    if (has_coef && (coef < 2 || coef > 9))
                        throw LabelError("shorthand coefficient outside 2..9", term_start);
                    ++pos_;
                    while (pos_ < s_.size()) {
                        size_t at = pos_;
                        int i = index();
                        mark(i, at);
                        d.b[i - 1] = 1;
                    }
                    return d;
                }
            } else if (peek('e')) {
                ++pos_;
                size_t at = pos_;
                int i = index();
                mark(i, at);
                d.b[i - 1] = -sign * coef;
            } else {
                throw LabelError("expected 'l' or 'e'", pos_);
            }
            first = false;
        }
        return d;
    }

    const std::string& s_;
    size_t pos_ = 0;
    std::array<bool, 10> used_{};
    bool saw_l_ = false;
};

std::string longform_text(const DivisorClass& d)
{
    std::string out;
    auto term = [&](int64_t c, const std::string& sym) {
        if (c == 0)
            return;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        int64_t a = c < 0 ? -c : c;
        if (a != 1)
            out += std::to_string(a);
        out += sym;
    };
    term(d.coeff_l, "l");
    for (int i = 0; i < 9; ++i)
        term(-d.b[i], "e" + std::to_string(i + 1));
    return out.empty() ? "0l" : out;
}

} // namespace

DivisorClass parse_label(const std::string& text)
{
    return LabelParser(text).run();
}

std::vector<std::string> label_candidates(const DivisorClass& d)
{
    std::vector<std::string> out;
    // coef? l - idx+
    bool zero_one = true, any = false;
    for (int64_t v : d.b) {
        if (v != 0 && v != 1)
            zero_one = false;
        if (v == 1)
            any = true;
    }
    if (zero_one && any && d.coeff_l >= 1 && d.coeff_l <= 9) {
        std::string s = d.coeff_l == 1 ? "l-" : std::to_string(d.coeff_l) + "l-";
        for (int i = 0; i < 9; ++i)
            if (d.b[i] == 1)
                s += std::to_string(i + 1);
        out.push_back(s);
    }
    if (d.coeff_l == 0) {
        int neg = -1, pos = -1, others = 0;
        for (int i = 0; i < 9; ++i) {
            if (d.b[i] == -1 && neg < 0)
                neg = i;
            else if (d.b[i] == 1 && pos < 0)
                pos = i;
            else if (d.b[i] != 0)
                ++others;
        }
        if (others == 0 && neg >= 0 && pos < 0)
            out.push_back("e" + std::to_string(neg + 1));
        if (others == 0 && neg >= 0 && pos >= 0)
            out.push_back("e" + std::to_string(neg + 1) + "-e" + std::to_string(pos + 1));
    }
    if (d.coeff_l == 3) {
        int minus = -1, plus = -1;
        bool ok = true;
        for (int i = 0; i < 9 && ok; ++i) {
            int64_t r = d.b[i] - 1;
            if (r == 0)
                continue;
            if (r == 1 && minus < 0)
                minus = i;
            else if (r == -1 && plus < 0)
                plus = i;
            else
                ok = false;
        }
        if (ok) {
            std::string s = "-K";
            if (minus >= 0)
                s += "-e" + std::to_string(minus + 1);
            if (plus >= 0)
                s += "+e" + std::to_string(plus + 1);
            out.push_back(s);
        }
    }
    out.push_back(longform_text(d));
    return out;
}

std::string format_label(const DivisorClass& d)
{
    auto c = label_candidates(d);
    std::string best = c[0];
    for (const auto& s : c)
        if (s.size() < best.size())
            best = s;
    return best;
}

} // namespace qe
