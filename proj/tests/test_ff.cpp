#include "doctest.h"
#include "goss/ff.hpp"

#include <set>

using namespace goss;

TEST_CASE("prime field construction and the non-prime rejection") {
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    CHECK(F2->q() == 2);
    CHECK(F2->modulus() == std::vector<uint32_t>{0, 1});  // modulus x
    CHECK_THROWS_AS(FieldSpec::get(4, 1), std::invalid_argument);
}

TEST_CASE("F_9 modulus is the lexicographically smallest irreducible quadratic") {
    // oracle: enumerate all 9 monic quadratics over F_3 and reject those with
    // a root; the first survivor in low-degree-first order is the modulus
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    std::vector<uint32_t> expected;
    for (uint32_t code = 0; code < 9 && expected.empty(); ++code) {
        Poly cand(F3, {code % 3, code / 3, 1});
        bool has_root = false;
        for (uint32_t a = 0; a < 3; ++a)
            if (cand.eval(a) == 0) has_root = true;
        if (!has_root) expected = {code % 3, code / 3, 1};
    }
    CHECK(expected == std::vector<uint32_t>{1, 0, 1});  // x^2 + 1
    const FieldSpec* F9 = FieldSpec::get(3, 2);
    CHECK(F9->modulus() == expected);
}

TEST_CASE("frobenius fixed points and the conjugate root") {
    const FieldSpec* F9 = FieldSpec::get(3, 2);
    for (uint32_t a = 0; a < 3; ++a) CHECK(frobenius_iter(FieldElem(F9, a), 1) == FieldElem(F9, a));
    for (uint32_t a = 0; a < 9; ++a) CHECK(frobenius_iter(FieldElem(F9, a), 2) == FieldElem(F9, a));

    // g = the generator "x" (index 3) has minimal polynomial x^2+1; its
    // conjugate is the other root of x^2+1, found by enumeration
    FieldElem g(F9, 3);
    std::vector<uint32_t> roots;
    for (uint32_t a = 0; a < 9; ++a) {
        FieldElem e(F9, a);
        if ((e * e + FieldElem(F9, 1)).is_zero()) roots.push_back(a);
    }
    REQUIRE(roots.size() == 2);
    FieldElem conj = frobenius_iter(g, 1);
    CHECK(conj != g);
    CHECK((conj.idx() == roots[0] || conj.idx() == roots[1]));
    CHECK((g.idx() == roots[0] || g.idx() == roots[1]));
}

TEST_CASE("monic enumeration counts") {
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    MonicRange mr(F2, 1);
    Poly a;
    std::set<std::vector<uint32_t>> seen;
    while (mr.next(a)) seen.insert(a.coeffs());
    CHECK(seen.size() == 2);  // theta, theta+1

    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec* F = (q == 4) ? FieldSpec::get(2, 2) : FieldSpec::get(q, 1);
        for (uint32_t d = 0; d <= 6; ++d) {
            MonicRange r(F, d);
            std::set<std::vector<uint32_t>> s;
            Poly t;
            uint64_t count = 0;
            while (r.next(t)) {
                s.insert(t.coeffs());
                CHECK(t.is_monic());
                CHECK(t.degree() == static_cast<long>(d));
                ++count;
            }
            uint64_t expect = 1;
            for (uint32_t i = 0; i < d; ++i) expect *= F->q();
            CHECK(count == expect);
            CHECK(s.size() == expect);
        }
    }
}

TEST_CASE("irreducible quadratics over F_3 match the necklace count") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    MonicRange mr(F3, 2);
    Poly a;
    long irr = 0;
    while (mr.next(a))
        if (is_irreducible(a)) ++irr;
    CHECK(irr == 3);  // (9-3)/2
}

TEST_CASE("frobenius orbits") {
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    CHECK(frobenius_orbit(FieldElem(F2, 1)).size() == 1);

    const FieldSpec* F4 = FieldSpec::get(2, 2);
    for (uint32_t a = 2; a < 4; ++a) CHECK(frobenius_orbit(FieldElem(F4, a)).size() == 2);

    const FieldSpec* F9 = FieldSpec::get(3, 2);
    // the two square roots of -1 form one orbit
    std::vector<uint32_t> roots;
    for (uint32_t a = 0; a < 9; ++a)
        if ((FieldElem(F9, a) * FieldElem(F9, a) + FieldElem(F9, 1)).is_zero()) roots.push_back(a);
    auto orbit = frobenius_orbit(FieldElem(F9, roots[0]));
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[1].idx() == roots[1]);

    // orbit lengths divide the extension degree
    const FieldSpec* F8 = FieldSpec::get(2, 3);
    for (uint32_t a = 0; a < 8; ++a) CHECK(3 % frobenius_orbit(FieldElem(F8, a)).size() == 0);
}

TEST_CASE("cross-field arithmetic is rejected, embeddings are explicit") {
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    const FieldSpec* F4 = FieldSpec::get(2, 2);
    CHECK_THROWS_AS(FieldElem(F2, 1) + FieldElem(F4, 1), FieldMismatchError);

    // embedding respects arithmetic
    const FieldSpec* F16 = FieldSpec::get(2, 4);
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            FieldElem x(F4, a), y(F4, b);
            CHECK(embed(x * y, F16) == embed(x, F16) * embed(y, F16));
            CHECK(embed(x + y, F16) == embed(x, F16) + embed(y, F16));
        }
    CHECK_THROWS_AS(embed(FieldElem(F4, 1), FieldSpec::get(2, 3)), std::invalid_argument);
}

TEST_CASE("field arithmetic basics") {
    const FieldSpec* F9 = FieldSpec::get(3, 2);
    for (uint32_t a = 1; a < 9; ++a) {
        CHECK(F9->mul(a, F9->inv(a)) == 1);
        CHECK(F9->pow(a, 8) == 1);
    }
    const FieldSpec* F5 = FieldSpec::get(5, 1);
    CHECK(F5->pow(2, 4) == 1);
    CHECK(F5->inv(3) == 2);
}
