#include "qe/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qe {

namespace {

std::mutex& field_mutex()
{
    static std::mutex m;
    return m;
}

std::vector<int> digits_of(uint32_t v, int p, int n)
{
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
        d[i] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

uint32_t value_of(const std::vector<int>& d, int p)
{
    uint32_t v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        v = v * p + d[i];
    return v;
}

// Multiply the residue d by t modulo the monic modulus m.
void times_t(std::vector<int>& d, const std::vector<int>& m, int p)
{
    int n = static_cast<int>(d.size());
    int top = d[n - 1];
    for (int i = n - 1; i > 0; --i)
        d[i] = d[i - 1];
    d[0] = 0;
    for (int i = 0; i < n; ++i)
        d[i] = ((d[i] - top * m[i]) % p + p) % p;
}

bool is_primitive(const std::vector<int>& m, int p, int n)
{
    if (m[0] == 0)
        return false;
    uint64_t q = 1;
    for (int i = 0; i < n; ++i)
        q *= p;
    std::vector<int> d(n, 0);
    d[0] = 1;
    for (uint64_t k = 1; k < q - 1; ++k) {
        times_t(d, m, p);
        if (value_of(d, p) == 1)
            return false;
    }
    times_t(d, m, p);
    return value_of(d, p) == 1;
}

} // namespace

std::vector<int> field_modulus(int p, int n)
{
    if (n == 1)
        return {p - 1, 1};
    if (p == 3 && n == 2)
        return {2, 2, 1};
    uint64_t count = 1;
    for (int i = 0; i < n; ++i)
        count *= p;
    for (uint64_t i = 1; i < count; ++i) {
        std::vector<int> m = digits_of(static_cast<uint32_t>(i), p, n);
        m.push_back(1);
        if (is_primitive(m, p, n))
            return m;
    }
    throw AlgebraError("no primitive modulus found");
}

Field::Field(int p, int n) : p_(p), n_(n)
{
    q_ = 1;
    for (int i = 0; i < n; ++i)
        q_ *= p;
    modulus_ = field_modulus(p, n);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (n == 1) {
        // prime field: find a primitive root
        for (uint32_t g = 1; g < q_; ++g) {
            uint32_t x = 1;
            bool ok = true;
            for (uint32_t k = 0; k < q_ - 1; ++k) {
                if (k > 0 && x == 1) {
                    ok = false;
                    break;
                }
                exp_[k] = x;
                x = x * g % q_;
            }
            if (ok)
                break;
        }
    } else {
        std::vector<int> d(n, 0);
        d[0] = 1;
        for (uint32_t k = 0; k < q_ - 1; ++k) {
            exp_[k] = value_of(d, p);
            times_t(d, modulus_, p);
        }
    }
    for (uint32_t k = 0; k < q_ - 1; ++k)
        log_[exp_[k]] = k;
    if (p == 3) {
        zech_.assign(q_ - 1, UINT32_MAX);
        for (uint32_t k = 0; k < q_ - 1; ++k) {
            std::vector<int> a = digits_of(exp_[k], p, n);
            a[0] = (a[0] + 1) % p;
            uint32_t s = value_of(a, p);
            if (s != 0)
                zech_[k] = log_[s];
        }
    }
}

const Field& Field::get(int p, int n)
{
    if (p != 2 && p != 3)
        throw AlgebraError("characteristic must be 2 or 3");
    if (n < 1 || (p == 2 && n > 16) || (p == 3 && n > 10))
        throw AlgebraError("unsupported extension degree " + std::to_string(n));
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(field_mutex());
    auto& slot = cache[{p, n}];
    if (!slot)
        slot.reset(new Field(p, n));
    return *slot;
}

FieldElement Field::from_int(long long k) const
{
    long long r = ((k % p_) + p_) % p_;
    return {this, static_cast<uint32_t>(r)};
}

FieldElement Field::element(uint32_t v) const
{
    if (v >= q_)
        throw AlgebraError("element index out of range");
    return {this, v};
}

FieldElement Field::generator() const
{
    if (n_ == 1)
        throw AlgebraError("coefficient g not in field " + name());
    return {this, static_cast<uint32_t>(p_)};
}

FieldElement Field::phi() const
{
    if (!has_phi())
        throw AlgebraError("coefficient phi not in field " + name());
    return embed(Field::get(2, 2).generator());
}

uint32_t Field::add(uint32_t a, uint32_t b) const
{
    if (p_ == 2)
        return a ^ b;
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    uint32_t la = log_[a], lb = log_[b];
    uint32_t d = (lb + (q_ - 1) - la) % (q_ - 1);
    uint32_t z = zech_[d];
    if (z == UINT32_MAX)
        return 0;
    return exp_[(la + z) % (q_ - 1)];
}

uint32_t Field::neg(uint32_t a) const
{
    if (p_ == 2 || a == 0)
        return a;
    // -1 = g^((q-1)/2)
    return exp_[(log_[a] + (q_ - 1) / 2) % (q_ - 1)];
}

uint32_t Field::mul(uint32_t a, uint32_t b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint32_t Field::inv(uint32_t a) const
{
    if (a == 0)
        throw AlgebraError("division by zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

const std::vector<uint32_t>& Field::embedding_from(const Field& sub) const
{
    if (!contains(sub))
        throw AlgebraError("cannot embed " + sub.name() + " into " + name());
    std::lock_guard<std::mutex> lock(field_mutex());
    auto it = embeddings_.find(&sub);
    if (it != embeddings_.end())
        return it->second;
    std::vector<uint32_t> table(sub.q_);
    if (sub.n_ == 1) {
        for (uint32_t i = 0; i < sub.q_; ++i)
            table[i] = i;
    } else {
        // image of the generator: least-index root of sub's modulus here
        uint32_t root = 0;
        bool found = false;
        for (uint32_t r = 0; r < q_ && !found; ++r) {
            uint32_t acc = 0;
            uint32_t pw = 1;
            for (size_t i = 0; i < sub.modulus_.size(); ++i) {
                uint32_t c = static_cast<uint32_t>(sub.modulus_[i]);
                acc = add(acc, mul(c, pw));
                pw = mul(pw, r);
            }
            if (acc == 0) {
                root = r;
                found = true;
            }
        }
        if (!found)
            throw AlgebraError("embedding root not found");
        for (uint32_t i = 0; i < sub.q_; ++i) {
            std::vector<int> d = digits_of(i, p_, sub.n_);
            uint32_t acc = 0, pw = 1;
            for (int k = 0; k < sub.n_; ++k) {
                acc = add(acc, mul(static_cast<uint32_t>(d[k]), pw));
                pw = mul(pw, root);
            }
            table[i] = acc;
        }
    }
    return embeddings_.emplace(&sub, std::move(table)).first->second;
}

FieldElement Field::embed(FieldElement a) const
{
    if (a.field == this)
        return a;
    return {this, embedding_from(*a.field)[a.v]};
}

std::string Field::name() const
{
    return "GF(" + std::to_string(q_) + ")";
}

std::vector<FieldElement> Field::elements() const
{
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint32_t i = 0; i < q_; ++i)
        out.push_back({this, i});
    return out;
}

static void same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.field != b.field)
        throw AlgebraError("field mismatch");
}

FieldElement FieldElement::operator+(FieldElement o) const
{
    same_field(*this, o);
    return {field, field->add(v, o.v)};
}

FieldElement FieldElement::operator-(FieldElement o) const
{
    same_field(*this, o);
    return {field, field->add(v, field->neg(o.v))};
}

FieldElement FieldElement::operator*(FieldElement o) const
{
    same_field(*this, o);
    return {field, field->mul(v, o.v)};
}

FieldElement FieldElement::operator/(FieldElement o) const
{
    same_field(*this, o);
    return {field, field->mul(v, field->inv(o.v))};
}

FieldElement FieldElement::operator-() const
{
    return {field, field->neg(v)};
}

FieldElement FieldElement::inverse() const
{
    return {field, field->inv(v)};
}

FieldElement FieldElement::pow(uint64_t e) const
{
    FieldElement r = field->one(), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const
{
    return pow(static_cast<uint64_t>(field->p()));
}

std::string FieldElement::to_string() const
{
    const Field& f = *field;
    if (f.degree() == 1)
        return std::to_string(v);
    bool gf4 = f.p() == 2 && f.degree() == 2;
    std::string sym = gf4 ? "phi" : "g";
    std::vector<int> d = digits_of(v, f.p(), f.degree());
    std::string out;
    for (int i = f.degree() - 1; i >= 0; --i) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1)
            out += std::to_string(d[i]);
        out += sym;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace qe
