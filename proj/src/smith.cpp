#include "qe/smith.hpp"

#include "qe/picard.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qe {

IntMatrix identity_matrix(size_t n)
{
    IntMatrix m(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<int64_t>(m, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k)
            throw std::invalid_argument("matmul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (size_t j = 0; j < m; ++j)
                r[i][j] = checked_add(r[i][j], checked_mul(a[i][t], b[t][j]));
        }
    }
    return r;
}

IntMatrix transpose(const IntMatrix& a)
{
    if (a.empty())
        return {};
    IntMatrix r(a[0].size(), std::vector<int64_t>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j)
            r[j][i] = a[i][j];
    return r;
}

int64_t determinant(const IntMatrix& input)
{
    size_t n = input.size();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    int64_t prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t i = k + 1;
            while (i < n && m[i][k] == 0)
                ++i;
            if (i == n)
                return 0;
            std::swap(m[i], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

void row_op(IntMatrix& a, size_t dst, size_t src, int64_t k)
{
    // row dst -= k * row src
    for (size_t j = 0; j < a[dst].size(); ++j)
        a[dst][j] = checked_sub(a[dst][j], checked_mul(k, a[src][j]));
}

void col_op(IntMatrix& a, size_t dst, size_t src, int64_t k)
{
    for (auto& row : a)
        row[dst] = checked_sub(row[dst], checked_mul(k, row[src]));
}

void swap_cols(IntMatrix& a, size_t i, size_t j)
{
    for (auto& row : a)
        std::swap(row[i], row[j]);
}

int64_t floor_div(int64_t a, int64_t b)
{
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m)
{
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithResult res{m, identity_matrix(rows), identity_matrix(cols)};
    IntMatrix& d = res.D;
    for (size_t t = 0; t < rows && t < cols; ++t) {
        for (;;) {
            // pivot: smallest nonzero absolute value in the trailing block
            size_t pi = rows, pj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pi == rows || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done;
            std::swap(d[pi], d[t]);
            std::swap(res.U[pi], res.U[t]);
            swap_cols(d, pj, t);
            swap_cols(res.V, pj, t);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                int64_t q = floor_div(d[i][t], d[t][t]);
                if (q) {
                    row_op(d, i, t, q);
                    row_op(res.U, i, t, q);
                }
                if (d[i][t] != 0)
                    clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                int64_t q = floor_div(d[t][j], d[t][t]);
                if (q) {
                    col_op(d, j, t, q);
                    col_op(res.V, j, t, q);
                }
                if (d[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility of the trailing block by the pivot
            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            row_op(d, t, bad, -1);
            row_op(res.U, t, bad, -1);
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t])
                x = -x;
            for (auto& x : res.U[t])
                x = -x;
        }
    }
done:
    return res;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithResult s = smith_normal_form(m);
    size_t cols = m.empty() ? 0 : m[0].size();
    size_t r = 0;
    while (r < s.D.size() && r < cols && s.D[r][r] != 0)
        ++r;
    IntMatrix k(cols, std::vector<int64_t>(cols - r));
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = r; j < cols; ++j)
            k[i][j - r] = s.V[i][j];
    return k;
}

} // namespace qe
