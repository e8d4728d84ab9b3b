#include "qe/curves.hpp"
#include "qe/registry.hpp"

#include <doctest.h>

#include <cstdlib>
#include <functional>

using namespace qe;

namespace {

// |MW|^2 = product of discriminants of the fiber root lattices with the
// components meeting the zero section removed.
int64_t discriminant_oracle(const SurfaceConfiguration& c)
{
    int64_t d = 1;
    for (const Fiber& f : c.fibers) {
        std::vector<int> keep;
        for (int m : f.members)
            if (pair(c.neg_two[m], c.zero_section) == 0)
                keep.push_back(m);
        IntMatrix g(keep.size(), std::vector<int64_t>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j)
                g[i][j] = pair(c.neg_two[keep[i]], c.neg_two[keep[j]]);
        d *= std::llabs(determinant(g));
    }
    return d;
}

// Brute force over l-degree <= 3 and coefficients in [-1, 2].
size_t brute_force_sections(const SurfaceConfiguration& c)
{
    size_t n = 0;
    DivisorClass k = canonical_class();
    DivisorClass cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == 9) {
            if (pair(cur, cur) != -1 || pair(cur, k) != -1)
                return;
            for (const DivisorClass& r : c.neg_two)
                if (pair(cur, r) < 0)
                    return;
            ++n;
            return;
        }
        for (int64_t v = -1; v <= 2; ++v) {
            cur.b[i] = v;
            rec(i + 1);
        }
    };
    for (int64_t d = 0; d <= 3; ++d) {
        cur.coeff_l = d;
        rec(0);
    }
    return n;
}

} // namespace

TEST_CASE("every registered configuration passes the fiber check")
{
    for (const ConfigEntry& e : config_registry()) {
        auto fibers = check_fibers(e.config);
        CHECK(fibers.size() == e.config.fibers.size());
    }
}

TEST_CASE("affine types of the fibers")
{
    auto types = [](const std::string& n) {
        std::vector<std::string> t;
        for (const FiberReport& r : check_fibers(find_config(n).config))
            t.push_back(r.affine_type);
        return t;
    };
    CHECK(types("D8~") == std::vector<std::string>{"D8~"});
    CHECK(types("A1~+E7~") == std::vector<std::string>{"E7~", "A1~"});
    CHECK(types("E8~char3") == std::vector<std::string>{"E8~"});
}

TEST_CASE("Mordell-Weil order squared equals the discriminant oracle")
{
    for (const ConfigEntry& e : config_registry()) {
        MordellWeilGroup mw = mordell_weil(e.config);
        CAPTURE(e.config.name);
        CHECK(mw.order * mw.order == discriminant_oracle(e.config));
    }
}

TEST_CASE("section search agrees with a brute-force count")
{
    for (const char* n : {"A1~^8", "A1~^4+D4~", "D4~^2", "D8~", "E8~", "A2~^4", "A2~+E6~"}) {
        const SurfaceConfiguration& c = find_config(n).config;
        CAPTURE(n);
        size_t low = 0;
        for (const DivisorClass& d : search_minus_one_curves(c, 5))
            low += d.coeff_l <= 3;
        CHECK(low == brute_force_sections(c));
    }
}

TEST_CASE("malformed configurations are rejected")
{
    SurfaceConfiguration c = find_config("D8~").config;
    c.fibers[0].marks[0] = 2;
    CHECK_THROWS_AS(check_fibers(c), ConfigError);
    SurfaceConfiguration d = find_config("D8~").config;
    d.neg_two[0] = parse_label("l-12");
    CHECK_THROWS_AS(check_fibers(d), ConfigError);
    CHECK_THROWS_AS(enumerate_minus_one_curves(find_config("A1~^8").config, 1), std::invalid_argument);
}

TEST_CASE("smith normal form of a known matrix")
{
    IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 6);
    CHECK(s.D[2][2] == 12);
    CHECK(matmul(matmul(s.U, m), s.V) == s.D);
}
