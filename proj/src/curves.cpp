#include "qe/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace qe {

std::vector<int64_t> coords(const DivisorClass& d)
{
    std::vector<int64_t> v = {d.coeff_l};
    v.insert(v.end(), d.b.begin(), d.b.end());
    return v;
}

DivisorClass from_coords(const std::vector<int64_t>& v)
{
    if (v.size() != 10)
        throw std::invalid_argument("class coordinates must have length 10");
    DivisorClass d;
    d.coeff_l = v[0];
    for (int i = 0; i < 9; ++i)
        d.b[i] = v[i + 1];
    return d;
}

std::vector<std::vector<int>> dynkin_components(const std::vector<DivisorClass>& curves)
{
    int n = static_cast<int>(curves.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack = {s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && v != u && pair(curves[u], curves[v]) != 0) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

std::string affine_type(const IntMatrix& g)
{
    int n = static_cast<int>(g.size());
    if (n == 2 && g[0][1] == 2)
        return "A1~";
    int edges = 0;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g[i][j] == 0)
                continue;
            if (g[i][j] != 1)
                return "unknown";
            ++edges;
            ++deg[i];
            ++deg[j];
        }
    if (n >= 3 && edges == n && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
        return "A" + std::to_string(n - 1) + "~";
    if (edges != n - 1)
        return "unknown";
    int deg3 = 0, deg4 = 0, center = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] == 3) {
            ++deg3;
            center = i;
        } else if (deg[i] == 4) {
            ++deg4;
        } else if (deg[i] > 4) {
            return "unknown";
        }
    }
    if (deg4 == 1 && deg3 == 0 && n == 5)
        return "D4~";
    if (deg3 == 2 && deg4 == 0)
        return "D" + std::to_string(n - 1) + "~";
    if (deg3 == 1 && deg4 == 0) {
        std::vector<int> arms;
        for (int v = 0; v < n; ++v) {
            if (g[center][v] == 0 || v == center)
                continue;
            int len = 1, prev = center, cur = v;
            for (;;) {
                int next = -1;
                for (int w = 0; w < n; ++w)
                    if (w != cur && w != prev && g[cur][w] != 0)
                        next = w;
                if (next < 0)
                    break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<int>{2, 2, 2})
            return "E6~";
        if (arms == std::vector<int>{1, 3, 3})
            return "E7~";
        if (arms == std::vector<int>{1, 2, 5})
            return "E8~";
    }
    return "unknown";
}

std::vector<FiberReport> check_fibers(const SurfaceConfiguration& config)
{
    for (size_t i = 0; i < config.neg_two.size(); ++i)
        if (classify(config.neg_two[i]) != ClassKind::MinusTwoCurveCandidate)
            throw ConfigError("class " + format_label(config.neg_two[i]) + " is not a (-2)-class");
    std::vector<int> seen(config.neg_two.size(), 0);
    std::vector<FiberReport> out;
    DivisorClass minus_k = -canonical_class();
    for (size_t f = 0; f < config.fibers.size(); ++f) {
        const Fiber& fib = config.fibers[f];
        if (fib.members.size() != fib.marks.size())
            throw ConfigError("fiber " + std::to_string(f) + ": members and marks differ in length");
        DivisorClass sum;
        IntMatrix g(fib.members.size(), std::vector<int64_t>(fib.members.size()));
        for (size_t i = 0; i < fib.members.size(); ++i) {
            int m = fib.members[i];
            if (m < 0 || m >= static_cast<int>(config.neg_two.size()))
                throw ConfigError("fiber " + std::to_string(f) + ": member index out of range");
            ++seen[m];
            sum = sum + config.neg_two[m] * fib.marks[i];
            for (size_t j = 0; j < fib.members.size(); ++j)
                g[i][j] = pair(config.neg_two[m], config.neg_two[fib.members[j]]);
        }
        if (sum != minus_k)
            throw ConfigError("fiber " + std::to_string(f) + " does not sum to -K; residual " +
                              format_label(sum - minus_k));
        out.push_back({static_cast<int>(f), affine_type(g), sum});
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
            throw ConfigError("curve " + format_label(config.neg_two[i]) + " is not in exactly one fiber");
    return out;
}

MordellWeilGroup mordell_weil(const SurfaceConfiguration& config)
{
    DivisorClass k = canonical_class();
    const DivisorClass& s0 = config.zero_section;
    if (classify(s0) != ClassKind::MinusOneCurveCandidate)
        throw ConfigError("zero section " + format_label(s0) + " is not a (-1)-class");
    // pairing functional rows in stored coordinates
    auto functional = [](const DivisorClass& u) {
        std::vector<int64_t> r = {u.coeff_l};
        for (int64_t x : u.b)
            r.push_back(-x);
        return r;
    };
    IntMatrix pairing = {functional(k), functional(s0)};
    IntMatrix basis = integer_kernel(pairing); // 10 x 8, columns span U-perp
    size_t rank = basis.empty() ? 0 : basis[0].size();

    std::vector<DivisorClass> gens;
    for (const DivisorClass& c : config.neg_two)
        if (pair(c, s0) == 0)
            gens.push_back(c);
    // express generators in the kernel basis: S = U2 * basis * V2 = diag(1..1)
    SmithResult sb = smith_normal_form(basis);
    for (size_t i = 0; i < rank; ++i)
        if (sb.D[i][i] != 1)
            throw ConfigError("kernel basis is not saturated");
    IntMatrix rel(rank, std::vector<int64_t>(gens.size(), 0));
    for (size_t g = 0; g < gens.size(); ++g) {
        std::vector<int64_t> c = coords(gens[g]);
        std::vector<int64_t> uc(10, 0);
        for (size_t i = 0; i < 10; ++i)
            for (size_t j = 0; j < 10; ++j)
                uc[i] = checked_add(uc[i], checked_mul(sb.U[i][j], c[j]));
        for (size_t i = rank; i < 10; ++i)
            if (uc[i] != 0)
                throw ConfigError("V is not contained in the orthogonal complement of <K, s0>");
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j)
                rel[i][g] = checked_add(rel[i][g], checked_mul(sb.V[i][j], uc[j]));
    }
    SmithResult sr = smith_normal_form(rel);
    MordellWeilGroup mw;
    for (size_t i = 0; i < rank; ++i) {
        int64_t d = (i < sr.D.size() && i < (gens.empty() ? 0 : sr.D[i].size())) ? sr.D[i][i] : 0;
        if (d == 0)
            throw ConfigError("Mordell-Weil group has positive rank: configuration is not extremal");
        if (d > 1) {
            mw.invariant_factors.push_back(d);
            mw.order = checked_mul(mw.order, d);
        }
    }
    return mw;
}

std::vector<DivisorClass> search_minus_one_curves(const SurfaceConfiguration& config, int degree_bound)
{
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
    std::vector<DivisorClass> out;
    for (int64_t d = 0; d <= degree_bound; ++d) {
        int64_t target_sum = 3 * d - 1, target_sq = d * d + 1;
        DivisorClass cur;
        cur.coeff_l = d;
        std::function<void(int, int64_t, int64_t)> rec = [&](int i, int64_t sum, int64_t sq) {
            int64_t rs = target_sum - sum, rq = target_sq - sq;
            int slots = 9 - i;
            if (rq < 0)
                return;
            if (slots == 0) {
                if (rs != 0 || rq != 0)
                    return;
                for (const DivisorClass& c : config.neg_two)
                    if (pair(cur, c) < 0)
                        return;
                out.push_back(cur);
                return;
            }
            if (rs * rs > static_cast<int64_t>(slots) * rq)
                return;
            int64_t lim = static_cast<int64_t>(std::sqrt(static_cast<double>(rq))) + 1;
            for (int64_t v = -lim; v <= lim; ++v) {
                if (v * v > rq)
                    continue;
                cur.b[i] = v;
                rec(i + 1, sum + v, sq + v * v);
            }
            cur.b[i] = 0;
        };
        rec(0, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivisorClass> enumerate_minus_one_curves(const SurfaceConfiguration& config, int degree_bound)
{
    if (degree_bound < 3)
        throw std::invalid_argument("degree bound must be at least 3");
    auto out = search_minus_one_curves(config, degree_bound);
    MordellWeilGroup mw = mordell_weil(config);
    if (static_cast<int64_t>(out.size()) != mw.order)
        throw ConfigError("found " + std::to_string(out.size()) + " sections but |MW| = " +
                          std::to_string(mw.order) + (static_cast<int64_t>(out.size()) < mw.order
                                                           ? " (incomplete search)"
                                                           : " (overcount: not extremal)"));
    return out;
}

} // namespace qe
