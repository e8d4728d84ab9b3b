#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qe {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Field;

// Element of a finite field. The value is the base-p digit encoding of the
// polynomial representative in the generator g (digit i = coefficient of g^i).
struct FieldElement {
    const Field* field = nullptr;
    uint32_t v = 0;

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator/(FieldElement o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
    FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
    FieldElement& operator*=(FieldElement o) { return *this = *this * o; }
    bool operator==(const FieldElement& o) const { return field == o.field && v == o.v; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    FieldElement frobenius() const;
    std::string to_string() const;
};

class Field {
public:
    // Fields are interned; p must be 2 or 3.
    static const Field& get(int p, int n);

    int p() const { return p_; }
    int degree() const { return n_; }
    uint32_t size() const { return q_; }
    // Modulus coefficients, low degree first, monic of degree n.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement from_int(long long k) const;
    FieldElement element(uint32_t v) const;
    // The generator g (a root of the modulus); throws for prime fields.
    FieldElement generator() const;
    // Root of t^2+t+1 embedded from GF(4); needs p = 2 and n even.
    FieldElement phi() const;
    bool has_phi() const { return p_ == 2 && n_ % 2 == 0; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;

    // Embedding table from sub into this field (sub.degree() must divide n).
    const std::vector<uint32_t>& embedding_from(const Field& sub) const;
    FieldElement embed(FieldElement a) const;

    bool contains(const Field& sub) const { return sub.p_ == p_ && n_ % sub.n_ == 0; }
    std::string name() const;
    std::vector<FieldElement> elements() const;

private:
    Field(int p, int n);
    int p_, n_;
    uint32_t q_;
    std::vector<int> modulus_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> zech_;
    mutable std::map<const Field*, std::vector<uint32_t>> embeddings_;
};

// Monic primitive modulus used for GF(p^n), low degree first.
std::vector<int> field_modulus(int p, int n);

} // namespace qe
