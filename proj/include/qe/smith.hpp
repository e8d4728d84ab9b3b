#pragma once

#include <cstdint>
#include <vector>

namespace qe {

using IntMatrix = std::vector<std::vector<int64_t>>;

struct SmithResult {
    IntMatrix D, U, V; // U * M * V = D
};

SmithResult smith_normal_form(const IntMatrix& m);

IntMatrix identity_matrix(size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
// Exact determinant of a small integer matrix (Bareiss).
int64_t determinant(const IntMatrix& a);

// Basis (as columns) of the integer kernel {v : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

} // namespace qe
