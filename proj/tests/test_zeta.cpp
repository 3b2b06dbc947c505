#include "doctest.h"
#include "goss/zeta.hpp"

#include <random>

#include "goss/dwork.hpp"
#include "goss/errors.hpp"
#include "goss/minperm.hpp"

using namespace goss;

TEST_CASE("one_unit_of_monic reverses coefficients") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    uint32_t N = 8;
    // a = theta: <theta> = 1
    CHECK(one_unit_of_monic(Poly(F3, {0, 1}), N).series().is_one());
    // a = theta + c: 1 + c pi
    auto u = one_unit_of_monic(Poly(F3, {2, 1}), N).series();
    CHECK(u.coeff(0) == 1);
    CHECK(u.coeff(1) == 2);
    // a = theta^2 + b theta + c: 1 + b pi + c pi^2
    auto v = one_unit_of_monic(Poly(F3, {2, 1, 1}), N).series();
    CHECK(v.coeff(1) == 1);
    CHECK(v.coeff(2) == 2);
    CHECK_THROWS(one_unit_of_monic(Poly(F3, {1, 2}), N));
}

TEST_CASE("zeta_direct: y = 0 collapses to 1") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    auto z = zeta_direct(F3, PadicExponent::from_integer(3, 0), 3, 10);
    CHECK(z.S[0].is_one());
    for (size_t d = 1; d < z.S.size(); ++d) CHECK(z.S[d].is_zero());
}

TEST_CASE("zeta_direct q=3, y=-1: S_1 matches the geometric-series oracle") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    uint32_t N = 24;
    auto z = zeta_direct(F3, PadicExponent::from_integer(3, -1), 2, N);

    // oracle: S_1 = sum_c (1+c pi)^{-1} via plain series inversion
    TruncSeries expect(F3, N);
    for (uint32_t c = 0; c < 3; ++c) {
        TruncSeries t = TruncSeries::one(F3, N);
        t.set_coeff(1, c);
        expect = expect + t.inverse();
    }
    CHECK(z.S[1] == expect);
    CHECK(z.S[1].valuation() == 2);
}

TEST_CASE("zeta_direct polygon for q=3, y=-1 starts 2, 8") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    auto z = zeta_direct(F3, PadicExponent::from_integer(3, -1), 4, 64);
    auto np = z.polygon();
    REQUIRE(np.slopes.size() >= 2);
    CHECK(np.slopes[0] == NPSlope{2, 1, 1});
    CHECK(np.slopes[1] == NPSlope{8, 1, 1});
}

TEST_CASE("congruence stability: y mod p^k controls S_d mod pi^{p^k}") {
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    uint32_t N = 40;
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 4; ++rep) {
        long long base = static_cast<long long>(rng() % 1000) - 500;
        for (uint32_t k = 2; k <= 5; ++k) {
            long long shift = (1ll << k) * (1 + static_cast<long long>(rng() % 5));
            auto za = zeta_direct(F2, PadicExponent::from_integer(2, base), 3, N);
            auto zb = zeta_direct(F2, PadicExponent::from_integer(2, base + shift), 3, N);
            for (size_t d = 0; d < za.S.size(); ++d)
                for (uint32_t t = 0; t < (1u << k); ++t) CHECK(za.S[d].coeff(t) == zb.S[d].coeff(t));
        }
    }
}

TEST_CASE("three routes agree for q=3, y=-1") {
    auto y = PadicExponent::from_integer(3, -1);
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    uint32_t N = 64;

    auto direct = zeta_direct(F3, y, 4, N).polygon();
    auto fred = zeta_np_from_charseries(char_series_stabilized(y, 1, 4, N));
    CHECK(np_divergence(direct, fred) == std::nullopt);

    auto parts = predict_real_parts(y, 1, 0, 1, 3);
    REQUIRE(static_cast<size_t>(direct.slopes.size()) >= 2);
    CHECK(parts[0] == direct.slopes[0].num);
    CHECK(parts[1] == direct.slopes[1].num);
}

TEST_CASE("special value polynomial: q=3 pinned cases") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    // j = -2: P = 1 + 2x (sum_c (theta+c)^2 = 2, degree-2 sum vanishes)
    auto P2 = special_value_poly(F3, -2);
    REQUIRE(P2.coeff.size() == 2);
    CHECK(P2.coeff[0] == Poly::constant(F3, 1));
    CHECK(P2.coeff[1] == Poly::constant(F3, 2));
    // j = -1: P = 1
    auto P1 = special_value_poly(F3, -1);
    REQUIRE(P1.coeff.size() == 1);
    CHECK(P1.coeff[0] == Poly::constant(F3, 1));
}

TEST_CASE("trivial zero orders: parity dichotomy") {
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    auto even = trivial_zero_order(F3, -2);
    CHECK(even.even);
    CHECK(even.order == 1);
    auto odd = trivial_zero_order(F3, -1);
    CHECK_FALSE(odd.even);
    CHECK(odd.order == 0);

    // q=2: r-1 = 1, every j is even
    const FieldSpec* F2 = FieldSpec::get(2, 1);
    auto e2 = trivial_zero_order(F2, -1);
    CHECK(e2.even);
    CHECK(e2.order >= 1);
}

TEST_CASE("trivial zero orders on a random sample") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 10; ++rep) {
        uint32_t q = (rep % 2) ? 3u : 5u;
        const FieldSpec* F = FieldSpec::get(q, 1);
        long r1 = q - 1;
        long j_even = -r1 * (1 + static_cast<long>(rng() % 12));
        auto even = trivial_zero_order(F, j_even);
        CHECK(even.even);
        CHECK(even.order == 1);  // order exactly p^{v_p(d)} = 1 for d = 1
        long j_odd = j_even - 1 - static_cast<long>(rng() % (r1 - 1));
        auto odd = trivial_zero_order(F, j_odd);
        CHECK_FALSE(odd.even);
        CHECK(odd.order == 0);
    }
}
