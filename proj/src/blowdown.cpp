#include "qe/blowdown.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace qe {

ContractionState initial_state(const IntersectionGraph& g)
{
    return {g.gram, {}, std::vector<bool>(g.size(), true)};
}

ContractionState contract(const ContractionState& s, int idx)
{
    size_t n = s.gram.size();
    if (idx < 0 || static_cast<size_t>(idx) >= n)
        throw BlowdownError("vertex index out of range");
    if (!s.live[idx])
        throw BlowdownError("vertex " + std::to_string(idx) + " was already contracted");
    if (s.gram[idx][idx] != -1)
        throw BlowdownError("vertex " + std::to_string(idx) + " has self-intersection " +
                            std::to_string(s.gram[idx][idx]) + ", not -1");
    ContractionState t = s;
    std::vector<int64_t> r(n);
    for (size_t i = 0; i < n; ++i)
        r[i] = s.gram[i][idx];
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            t.gram[i][j] = checked_add(s.gram[i][j], checked_mul(r[i], r[j]));
    t.contracted.push_back(idx);
    t.live[idx] = false;
    return t;
}

uint64_t BlowdownSequence::mask() const
{
    uint64_t m = 0;
    for (int v : order)
        m |= uint64_t{1} << v;
    return m;
}

namespace {

uint64_t permute_mask(uint64_t m, const Perm& p)
{
    uint64_t out = 0;
    for (size_t v = 0; v < p.size(); ++v)
        if (m >> v & 1)
            out |= uint64_t{1} << p[v];
    return out;
}

// Sum of l-coefficients of the total transforms, then sorted labels: the
// orbit member closest to the standard basis represents the class.
struct RepKey {
    int64_t degree_sum;
    std::vector<std::string> labels;
    bool operator<(const RepKey& o) const
    {
        return degree_sum != o.degree_sum ? degree_sum < o.degree_sum : labels < o.labels;
    }
};

} // namespace

BlowdownSearch search_blowdowns(const IntersectionGraph& g)
{
    size_t n = g.size();
    if (n > 64)
        throw BlowdownError("blow-down search supports at most 64 vertices");
    std::unordered_map<uint64_t, std::pair<std::vector<int>, IntMatrix>> valid;
    std::unordered_set<uint64_t> visited;
    std::function<void(const ContractionState&, uint64_t)> dfs = [&](const ContractionState& s, uint64_t m) {
        if (!visited.insert(m).second)
            return;
        if (s.contracted.size() == 9) {
            for (const auto& row : s.gram)
                for (int64_t x : row)
                    if (x < 0)
                        return;
            valid.emplace(m, std::make_pair(s.contracted, s.gram));
            return;
        }
        for (size_t v = 0; v < n; ++v)
            if (s.live[v] && s.gram[v][v] == -1)
                dfs(contract(s, static_cast<int>(v)), m | uint64_t{1} << v);
    };
    dfs(initial_state(g), 0);

    GraphAutomorphisms aut = automorphisms(g);
    BlowdownSearch out;
    out.valid_sets = valid.size();
    out.automorphism_order = aut.order;

    std::vector<uint64_t> masks;
    for (auto& kv : valid)
        masks.push_back(kv.first);
    std::sort(masks.begin(), masks.end());
    std::unordered_set<uint64_t> seen;
    std::vector<std::pair<RepKey, BlowdownSequence>> reps;
    for (uint64_t m : masks) {
        if (seen.count(m))
            continue;
        std::vector<uint64_t> orbit = {m};
        seen.insert(m);
        for (size_t i = 0; i < orbit.size(); ++i)
            for (const Perm& p : aut.generators) {
                uint64_t im = permute_mask(orbit[i], p);
                if (!valid.count(im))
                    throw BlowdownError("automorphism image of a valid blow-down set is not valid");
                if (seen.insert(im).second)
                    orbit.push_back(im);
            }
        bool have = false;
        RepKey best{0, {}};
        BlowdownSequence best_seq;
        for (uint64_t om : orbit) {
            BlowdownSequence seq{valid[om].first, valid[om].second, orbit.size()};
            RepKey key{0, {}};
            for (const DivisorClass& f : total_transforms(seq, g)) {
                key.degree_sum += f.coeff_l;
                key.labels.push_back(format_label(f));
            }
            std::sort(key.labels.begin(), key.labels.end());
            if (!have || key < best) {
                have = true;
                best = key;
                best_seq = seq;
            }
        }
        reps.push_back({best, best_seq});
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& r : reps)
        out.classes.push_back(r.second);
    return out;
}

std::vector<BlowdownSequence> enumerate_blowdowns(const IntersectionGraph& g)
{
    auto classes = search_blowdowns(g).classes;
    if (classes.empty())
        throw BlowdownError("no blow-down to the plane exists for this graph");
    return classes;
}

std::vector<DivisorClass> total_transforms(const BlowdownSequence& seq, const IntersectionGraph& g)
{
    std::vector<DivisorClass> f;
    for (int v : seq.order) {
        DivisorClass c = g.vertices.at(v).cls;
        DivisorClass t = c;
        for (const DivisorClass& prev : f)
            t = t + prev * pair(c, prev);
        f.push_back(t);
    }
    return f;
}

IntMatrix pairing_matrix()
{
    IntMatrix g = identity_matrix(10);
    for (int i = 1; i < 10; ++i)
        g[i][i] = -1;
    return g;
}

bool is_isometry_fixing_k(const IntMatrix& a)
{
    IntMatrix g = pairing_matrix();
    if (matmul(matmul(transpose(a), g), a) != g)
        return false;
    auto ks = canonical_class().to_signed();
    std::vector<int64_t> k(ks.begin(), ks.end());
    for (int i = 0; i < 10; ++i) {
        int64_t s = 0;
        for (int j = 0; j < 10; ++j)
            s = checked_add(s, checked_mul(a[i][j], k[j]));
        if (s != k[i])
            return false;
    }
    return true;
}

Presentation presentation_from_exceptional(std::vector<DivisorClass> f)
{
    if (f.size() != 9)
        throw BlowdownError("a presentation needs nine exceptional classes");
    std::sort(f.begin(), f.end());
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j)
            if (pair(f[i], f[j]) != (i == j ? -1 : 0))
                throw BlowdownError("lifted classes are not orthonormal");
    DivisorClass sum = -canonical_class();
    for (const DivisorClass& c : f)
        sum = sum + c;
    // 3 l' = -K + sum f
    Presentation p;
    if (sum.coeff_l % 3 != 0)
        throw BlowdownError("-K + sum f is not divisible by 3");
    p.line_class.coeff_l = sum.coeff_l / 3;
    for (int i = 0; i < 9; ++i) {
        if (sum.b[i] % 3 != 0)
            throw BlowdownError("-K + sum f is not divisible by 3");
        p.line_class.b[i] = sum.b[i] / 3;
    }
    if (pair(p.line_class, p.line_class) != 1)
        throw BlowdownError("line class does not have self-intersection 1");
    for (int i = 0; i < 9; ++i)
        p.exceptional[i] = f[i];
    p.basis_matrix.assign(10, std::vector<int64_t>(10));
    p.matrix_A.assign(10, std::vector<int64_t>(10));
    for (int col = 0; col < 10; ++col) {
        auto s = (col == 0 ? p.line_class : f[col - 1]).to_signed();
        for (int r = 0; r < 10; ++r)
            p.basis_matrix[r][col] = s[r];
    }
    IntMatrix g = pairing_matrix();
    p.matrix_A = matmul(matmul(g, transpose(p.basis_matrix)), g);
    if (matmul(p.matrix_A, p.basis_matrix) != identity_matrix(10))
        throw BlowdownError("presentation matrix is not invertible over the integers");
    return p;
}

Presentation presentation_of(const BlowdownSequence& seq, const IntersectionGraph& g)
{
    if (seq.order.size() != 9)
        throw BlowdownError("a blow-down sequence has exactly nine contractions");
    ContractionState s = initial_state(g);
    for (int v : seq.order)
        s = contract(s, v);
    return presentation_from_exceptional(total_transforms(seq, g));
}

DivisorClass to_new_basis(const Presentation& p, const DivisorClass& d)
{
    DivisorClass out;
    out.coeff_l = pair(d, p.line_class);
    for (int i = 0; i < 9; ++i)
        out.b[i] = pair(d, p.exceptional[i]);
    return out;
}

SurfaceConfiguration relabel_diagram(const SurfaceConfiguration& config, const Presentation& p)
{
    SurfaceConfiguration out = config;
    for (DivisorClass& c : out.neg_two)
        c = to_new_basis(p, c);
    out.zero_section = to_new_basis(p, config.zero_section);
    return out;
}

} // namespace qe
