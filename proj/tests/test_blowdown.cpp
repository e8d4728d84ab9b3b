#include "qe/blowdown.hpp"
#include "qe/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qe;

TEST_CASE("contracting a (-1)-curve raises its neighbour")
{
    IntersectionGraph g = graph_of_classes({parse_label("e1-e2"), parse_label("e2")});
    REQUIRE(g.gram[1][1] == -1);
    ContractionState s = contract(initial_state(g), 1);
    CHECK(s.gram[0][0] == -1);
    CHECK_FALSE(s.live[1]);
    CHECK(s.contracted == std::vector<int>{1});
}

TEST_CASE("pairing matrix and isometries")
{
    IntMatrix g = pairing_matrix();
    CHECK(g[0][0] == 1);
    CHECK(g[1][1] == -1);
    CHECK(is_isometry_fixing_k(identity_matrix(10)));
    IntMatrix swap = identity_matrix(10);
    std::swap(swap[1], swap[2]);
    CHECK(is_isometry_fixing_k(swap));
    IntMatrix bad = identity_matrix(10);
    bad[0][0] = -1;
    CHECK_FALSE(is_isometry_fixing_k(bad));
}

TEST_CASE("a Cremona presentation")
{
    // f1 = l-e2-e3, f2 = l-e1-e3, f3 = l-e1-e2
    std::vector<DivisorClass> f = {parse_label("l-23"), parse_label("l-13"), parse_label("l-12")};
    for (int i = 4; i <= 9; ++i)
        f.push_back(DivisorClass::exceptional(i));
    Presentation p = presentation_from_exceptional(f);
    CHECK(p.line_class == parse_label("2l-123"));
    CHECK(is_isometry_fixing_k(p.matrix_A));
    for (int i = 0; i < 9; ++i)
        CHECK(to_new_basis(p, p.exceptional[i]) == DivisorClass::exceptional(i + 1));
    CHECK(std::find(p.exceptional.begin(), p.exceptional.end(), parse_label("l-12")) != p.exceptional.end());
    CHECK(matmul(p.matrix_A, p.basis_matrix) == identity_matrix(10));
}

TEST_CASE("every blow-down class yields an orthonormal presentation")
{
    for (const char* n : {"A1~^8", "D8~", "A2~^4"}) {
        const ConfigAnalysis& a = analyze_config(n);
        CAPTURE(n);
        for (const BlowdownSequence& seq : a.search.classes) {
            Presentation p = presentation_of(seq, a.graph);
            CHECK(pair(p.line_class, p.line_class) == 1);
            for (int i = 0; i < 9; ++i) {
                CHECK(pair(p.line_class, p.exceptional[i]) == 0);
                for (int j = 0; j < 9; ++j)
                    CHECK(pair(p.exceptional[i], p.exceptional[j]) == (i == j ? -1 : 0));
            }
            CHECK(is_isometry_fixing_k(p.matrix_A));
            uint64_t sum = 0;
            for (const BlowdownSequence& s : a.search.classes)
                sum += s.orbit_size;
            CHECK(sum == a.search.valid_sets);
        }
    }
}

TEST_CASE("the relabeled diagram keeps the Gram matrix")
{
    const ConfigAnalysis& a = analyze_config("A1~^4+D4~");
    for (const BlowdownSequence& seq : a.search.classes) {
        SurfaceConfiguration rel = relabel_diagram(a.entry->config, presentation_of(seq, a.graph));
        REQUIRE(rel.neg_two.size() == a.entry->config.neg_two.size());
        for (size_t i = 0; i < rel.neg_two.size(); ++i)
            for (size_t j = 0; j < rel.neg_two.size(); ++j)
                CHECK(pair(rel.neg_two[i], rel.neg_two[j]) == pair(a.entry->config.neg_two[i], a.entry->config.neg_two[j]));
        CHECK_NOTHROW(check_fibers(rel));
    }
}
