#include "qe/field.hpp"

#include <doctest.h>

using namespace qe;

TEST_CASE("field sizes and characteristic")
{
    for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 1}, {3, 2}, {3, 3}}) {
        const Field& f = Field::get(p, n);
        uint32_t q = 1;
        for (int i = 0; i < n; ++i)
            q *= p;
        CHECK(f.size() == q);
        CHECK(f.elements().size() == q);
        FieldElement s = f.zero();
        for (int i = 0; i < p; ++i)
            s += f.one();
        CHECK(s.is_zero());
    }
}

TEST_CASE("every nonzero element satisfies a^(q-1) = 1 and has an inverse")
{
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const Field& f = Field::get(p, n);
        for (FieldElement a : f.elements()) {
            if (a.is_zero())
                continue;
            CHECK(a.pow(f.size() - 1).is_one());
            CHECK((a * a.inverse()).is_one());
            CHECK(a.frobenius() == a.pow(p));
        }
    }
}

TEST_CASE("GF(4) multiplication table")
{
    // elements 0, 1, w, w+1 with w^2 = w + 1
    const Field& f = Field::get(2, 2);
    FieldElement w = f.phi();
    CHECK(w * w == w + f.one());
    CHECK(w * (w + f.one()) == f.one());
    CHECK((w + f.one()) * (w + f.one()) == w);
}

TEST_CASE("field axioms on GF(9)")
{
    const Field& f = Field::get(3, 2);
    auto el = f.elements();
    for (FieldElement a : el)
        for (FieldElement b : el) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b + b == a);
            for (FieldElement c : el)
                CHECK(a * (b + c) == a * b + a * c);
        }
}

TEST_CASE("embedding respects arithmetic")
{
    const Field& small = Field::get(2, 2);
    const Field& big = Field::get(2, 6);
    for (FieldElement a : small.elements())
        for (FieldElement b : small.elements()) {
            CHECK(big.embed(a * b) == big.embed(a) * big.embed(b));
            CHECK(big.embed(a + b) == big.embed(a) + big.embed(b));
        }
    CHECK(big.embed(small.phi()) == big.phi());
    CHECK_THROWS_AS(Field::get(5, 1), AlgebraError);
}
