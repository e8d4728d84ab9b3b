#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qe {

// Checked 64-bit arithmetic; overflow throws std::overflow_error.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// The class coeff_l * l - sum b_i e_i in Pic of the plane blown up in nine points.
struct DivisorClass {
    int64_t coeff_l = 0;
    std::array<int64_t, 9> b{};

    static DivisorClass line();
    static DivisorClass exceptional(int i); // e_i, 1-based
    static DivisorClass from_signed(const std::array<int64_t, 10>& v);
    // (a; c_1..c_9) with class a*l + sum c_i e_i
    std::array<int64_t, 10> to_signed() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(int64_t k) const;
    bool operator==(const DivisorClass& o) const { return coeff_l == o.coeff_l && b == o.b; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
    // canonical order: coeff_l, then b lexicographically
    bool operator<(const DivisorClass& o) const;
};

int64_t pair(const DivisorClass& d, const DivisorClass& e);
DivisorClass canonical_class();

enum class ClassKind { MinusOneCurveCandidate, MinusTwoCurveCandidate, Other };
ClassKind classify(const DivisorClass& d);
std::string to_string(ClassKind k);

class LabelError : public std::invalid_argument {
public:
    LabelError(const std::string& msg, size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
    size_t position;
};

DivisorClass parse_label(const std::string& text);
std::string format_label(const DivisorClass& d);
// Every label form accepted by the grammar that denotes d, in tie-break order.
std::vector<std::string> label_candidates(const DivisorClass& d);

} // namespace qe
