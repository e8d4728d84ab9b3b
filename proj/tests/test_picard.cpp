#include "qe/picard.hpp"

#include <doctest.h>

using namespace qe;

TEST_CASE("label grammar")
{
    CHECK(parse_label("l-127") == DivisorClass::line() - DivisorClass::exceptional(1) - DivisorClass::exceptional(2) -
                                      DivisorClass::exceptional(7));
    CHECK(parse_label("2l-345689").coeff_l == 2);
    CHECK(parse_label("e8-e9") == DivisorClass::exceptional(8) - DivisorClass::exceptional(9));
    // -K - e1 + e2 = 3l - 2e1 - e3 - ... - e9
    CHECK(parse_label("-K-e1+e2") == parse_label("3l-2e1-e3-e4-e5-e6-e7-e8-e9"));
    CHECK(parse_label("3l-e1-e2-e3-e4-e5-e6-e7-2e8").b[7] == 2);
    CHECK_THROWS_AS(parse_label("l-12x"), LabelError);
    CHECK_THROWS_AS(parse_label("e10"), LabelError);
}

TEST_CASE("labels round trip")
{
    for (const char* s : {"e2", "l-13", "2l-12358", "e1-e2", "-K-e8+e9", "l-789", "3l-2e1-e3-e4-e5-e6-e7-e8-e9"}) {
        DivisorClass c = parse_label(s);
        CHECK(parse_label(format_label(c)) == c);
    }
}

TEST_CASE("pairing and classification")
{
    DivisorClass k = canonical_class();
    CHECK(pair(k, k) == 0);
    CHECK(pair(DivisorClass::line(), DivisorClass::line()) == 1);
    CHECK(pair(parse_label("l-12"), parse_label("l-12")) == -1);
    CHECK(classify(parse_label("l-12")) == ClassKind::MinusOneCurveCandidate);
    CHECK(classify(parse_label("l-123")) == ClassKind::MinusTwoCurveCandidate);
    CHECK(classify(parse_label("2l-12345")) == ClassKind::MinusOneCurveCandidate);
    CHECK(classify(parse_label("l")) == ClassKind::Other);
    CHECK(pair(parse_label("-K-e1+e2"), k) == 0);
}

TEST_CASE("checked arithmetic")
{
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK(checked_add(3, 4) == 7);
}
