#include "doctest.h"
#include "goss/minperm.hpp"

#include <random>

#include "goss/errors.hpp"

using namespace goss;

namespace {

PadicExponent random_qfull(uint32_t p, uint32_t b, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> digit(0, p - 1);
    std::uniform_int_distribution<uint32_t> nz(1, p - 1);
    size_t T = 6, L = static_cast<size_t>(b) * 4;
    BigInt pre = 0, pp = 1;
    for (size_t i = 0; i < T; ++i) { pre += BigInt(digit(rng)) * pp; pp *= p; }
    BigInt bv = 0, bp = 1;
    for (size_t i = 0; i < L; ++i) {
        uint32_t d = (i < b) ? nz(rng) : digit(rng);
        bv += BigInt(d) * bp;
        bp *= p;
    }
    BigInt den = 1 - bp;
    return PadicExponent::from_ratio(p, pre * den + pp * bv, den);
}

BCycle cyc(std::vector<long> m) { return BCycle{std::move(m)}; }

}  // namespace

TEST_CASE("R-values from the digit tables") {
    // b=1, identity on {1,2}, p=3, y=-1: y(2)+y(4) = 2+8
    auto y3 = PadicExponent::from_integer(3, -1);
    DigitProfile pr3 = DigitProfile::certified(y3, 1, 40);
    EnrichedPerm id2 = EnrichedPerm::from_bcycles({cyc({1}), cyc({2})});
    CHECK(*r_value_opt(pr3, id2) == 10);

    // a pair with |sigma(k)| >= p|k| contributes 0
    EnrichedPerm far;
    far.pairs.push_back({J1{0, 1}, J1{0, 5}});
    CHECK(*r_value_opt(pr3, far) == 0);

    // q=4 cycle (1,1): y_1(1)+y_2(1) = 1+2
    auto y2 = PadicExponent::from_integer(2, -1);
    DigitProfile pr4 = DigitProfile::certified(y2, 2, 40);
    CHECK(r_value(pr4, cyc({1, 1})) == 3);

    // spec-derived comparisons at q=4
    CHECK(r_value(pr4, cyc({2, 2})) == 15);
    CHECK(r_value(pr4, cyc({3, 2})) == 87);
    CHECK(r_value(pr4, cyc({2, 3})) == 171);
}

TEST_CASE("p-boundedness predicate") {
    CHECK(is_p_bounded(cyc({4}), 3));          // b=1: always
    CHECK(is_p_bounded(cyc({7, 7, 7}), 2));    // constant cycles
    CHECK_FALSE(is_p_bounded(cyc({5, 1}), 2)); // 5 <= 2*1 fails
    CHECK(is_p_bounded(cyc({2, 1}), 2));

    EnrichedPerm id1 = EnrichedPerm::from_bcycles({cyc({3})});
    CHECK(id1.p_bounded(3));
}

TEST_CASE("p-map on explicit cycles") {
    CHECK(p_bound_map(cyc({5, 1}), 2) == cyc({2, 1}));
    CHECK(p_bound_map(cyc({2, 1}), 2) == cyc({2, 1}));
    CHECK(p_bound_map(cyc({1, 1, 1}), 2) == cyc({1, 1, 1}));

    auto y2 = PadicExponent::from_integer(2, -1);
    DigitProfile pr = DigitProfile::certified(y2, 2, 40);
    CHECK(r_value(pr, cyc({2, 1})) <= r_value(pr, cyc({5, 1})));
}

TEST_CASE("p-map axioms on random cycles") {
    std::mt19937_64 rng(2024);
    for (auto [p, b] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        PadicExponent y = random_qfull(p, b, rng);
        DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(p) * 40 + 1);
        std::uniform_int_distribution<long> coord(1, 30);
        for (int rep = 0; rep < 400; ++rep) {
            BCycle s;
            for (uint32_t i = 0; i < b; ++i) s.m.push_back(coord(rng));
            BCycle ps = p_bound_map(s, p);
            CHECK(is_p_bounded(ps, p));
            CHECK(ps.leq(s));
            CHECK(p_bound_map(ps, p) == ps);  // idempotent
            BigInt rs = r_value(pr, s), rps = r_value(pr, ps);
            if (is_p_bounded(s, p)) {
                CHECK(ps == s);
                CHECK(rps == rs);
            } else {
                CHECK(rps < rs);  // strict decrease off the p-bounded locus
            }
            // monotonicity:拾 tau <= s componentwise
            BCycle t;
            for (uint32_t i = 0; i < b; ++i) t.m.push_back(1 + (rng() % s.m[i]));
            CHECK(p_bound_map(t, p).leq(ps));
            // disjointness: strict inequality everywhere is preserved
            BCycle u;
            bool strict = true;
            for (uint32_t i = 0; i < b; ++i) {
                long v = 1 + static_cast<long>(rng() % s.m[i]);
                if (v >= s.m[i]) v = s.m[i] - 1;
                if (v < 1) strict = false;
                u.m.push_back(std::max<long>(v, 1));
            }
            if (strict) {
                BCycle pu = p_bound_map(u, p);
                for (uint32_t i = 0; i < b; ++i) CHECK(pu.m[i] < ps.m[i]);
            }
        }
    }
}

TEST_CASE("sigma_star minimal cycles at small sizes") {
    // b=1: the minimal cycle of size floor n is (n)
    auto y3 = PadicExponent::from_integer(3, -1);
    DigitProfile pr3 = DigitProfile::certified(y3, 1, 200);
    for (long n = 1; n <= 5; ++n) {
        auto r = sigma_star(pr3, n, {20});
        REQUIRE(r.cycle.has_value());
        CHECK_FALSE(r.tie);
        CHECK(*r.cycle == cyc({n}));
    }

    auto y2 = PadicExponent::from_integer(2, -1);
    DigitProfile pr4 = DigitProfile::certified(y2, 2, 200);
    auto s1 = sigma_star(pr4, 1, {8, 8});
    CHECK(*s1.cycle == cyc({1, 1}));
    auto s2 = sigma_star(pr4, 2, {8, 8});
    CHECK(*s2.cycle == cyc({2, 2}));
}

TEST_CASE("sigma_chain and nu for the pinned cases") {
    // b=1: identity chain
    auto y3 = PadicExponent::from_integer(3, -1);
    auto chain3 = sigma_chain(y3, 1, 4);
    REQUIRE(chain3.cycles.size() == 4);
    for (long n = 1; n <= 4; ++n) CHECK(chain3.cycles[n - 1] == cyc({n}));

    auto nu3 = nu_sequence(y3, 1, 2);
    REQUIRE(nu3.nu.size() == 2);
    CHECK(nu3.nu[0] == 2);
    CHECK(nu3.nu[1] == 8);

    // q=4, y=-1
    auto y2 = PadicExponent::from_integer(2, -1);
    auto chain4 = sigma_chain(y2, 2, 2);
    REQUIRE(chain4.cycles.size() == 2);
    CHECK(chain4.cycles[0] == cyc({1, 1}));
    CHECK(chain4.cycles[1] == cyc({2, 2}));
    auto nu4 = nu_sequence(y2, 2, 2);
    CHECK(nu4.nu[0] == 3);
    CHECK(nu4.nu[1] == 15);
    CHECK(nu4.alpha[0] == 1);
    CHECK(nu4.alpha[1] == 5);

    // degenerate
    auto y0 = PadicExponent::from_integer(2, 0);
    CHECK(sigma_chain(y0, 2, 3).cycles.empty());
}

TEST_CASE("Wan closed form for b=1: nu_n = y(n(p-1))") {
    std::mt19937_64 rng(77);
    for (uint32_t p : {2u, 3u, 5u}) {
        std::vector<PadicExponent> ys;
        ys.push_back(PadicExponent::from_integer(p, -1));
        ys.push_back(random_qfull(p, 1, rng));
        for (const auto& y : ys) {
            auto nu = nu_sequence(y, 1, 12);
            DigitProfile pr = DigitProfile::certified(y, 1, 12 * (p - 1) + 2);
            REQUIRE(nu.nu.size() == 12);
            for (long n = 1; n <= 12; ++n) CHECK(nu.nu[n - 1] == pr.y_partial(0, n * (p - 1)));
        }
    }
}

TEST_CASE("predict_real_parts shapes") {
    auto y3 = PadicExponent::from_integer(3, -1);
    auto parts = predict_real_parts(y3, 1, 0, 1, 3);
    REQUIRE(parts.size() == 3);  // g-1+d = 0 zeros
    CHECK(parts[0] == 2);
    CHECK(parts[1] == 8);
    CHECK(parts[2] == 26);

    auto y5 = PadicExponent::from_integer(5, -1);
    auto parts5 = predict_real_parts(y5, 1, 1, 1, 2);
    REQUIRE(parts5.size() == 3);  // one zero then 4, 24
    CHECK(parts5[0] == 0);
    CHECK(parts5[1] == 4);
    CHECK(parts5[2] == 24);

    auto none = predict_real_parts(y5, 1, 1, 1, 0);
    REQUIRE(none.size() == 1);
    CHECK(none[0] == 0);
}

TEST_CASE("brute force minima on the pinned cases") {
    auto y3 = PadicExponent::from_integer(3, -1);
    DigitProfile pr3 = DigitProfile::certified(y3, 1, 60);
    auto r = brute_force_min(pr3, 2, 6);
    REQUIRE(r.any_finite);
    CHECK(r.rmin == 10);
    CHECK(r.count == 1);
    REQUIRE(r.minimizers.size() == 1);
    CHECK(r.minimizers[0] == EnrichedPerm::from_bcycles({cyc({1}), cyc({2})}));

    auto y2 = PadicExponent::from_integer(2, -1);
    DigitProfile pr4 = DigitProfile::certified(y2, 2, 60);
    auto r4 = brute_force_min(pr4, 1, 4);
    CHECK(r4.rmin == 3);
    CHECK(r4.count == 1);
    CHECK(r4.minimizers[0] == EnrichedPerm::from_bcycles({cyc({1, 1})}));

    auto r0 = brute_force_min(pr4, 0, 4);
    CHECK(r0.rmin == 0);
    CHECK(r0.count == 1);
    CHECK(r0.minimizers[0].pairs.empty());
}

TEST_CASE("brute force uniqueness agrees with the chain (small sample)") {
    std::mt19937_64 rng(4242);
    for (auto [p, b] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 1}}) {
        for (int rep = 0; rep < 3; ++rep) {
            PadicExponent y = random_qfull(p, b, rng);
            for (long n = 1; n <= 2; ++n) {
                long box = static_cast<long>(p) * (n + 2);
                DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(p) * box + 1);
                auto res = brute_force_min(pr, n, box);
                REQUIRE(res.any_finite);
                CHECK(res.count == 1);
                auto chain = sigma_chain(y, b, n);
                REQUIRE(static_cast<long>(chain.cycles.size()) == n);
                std::vector<BCycle> cycles(chain.cycles.begin(), chain.cycles.begin() + n);
                CHECK(res.minimizers[0] == EnrichedPerm::from_bcycles(cycles));
                // minimizer shape: lexicographical, decomposable, p-bounded
                CHECK(res.minimizers[0].lexicographical(b));
                CHECK(res.minimizers[0].p_bounded(p));
                CHECK(res.minimizers[0].decomposable());
            }
        }
    }
}

TEST_CASE("non-q-full exponents give finite chains") {
    // y = 5 over p=3: digit support ends, the slope list is finite
    auto y = PadicExponent::from_integer(3, 5);
    auto chain = sigma_chain(y, 1, 10);
    CHECK(chain.end == ChainEnd::SupportExhausted);
    CHECK(chain.cycles.size() < 10);
    auto nu = nu_sequence(y, 1, 10);
    CHECK(nu.nu.size() == chain.cycles.size());
    for (size_t i = 1; i < nu.nu.size(); ++i) CHECK(nu.nu[i] > nu.nu[i - 1]);
}

TEST_CASE("strict increase and divisibility hold to moderate depth for b > 1") {
    std::mt19937_64 rng(909);
    for (auto [p, b] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 2}, {2, 3}}) {
        BigInt rm1 = 1;
        for (uint32_t i = 0; i < b; ++i) rm1 *= p;
        rm1 -= 1;
        for (int rep = 0; rep < 3; ++rep) {
            PadicExponent y = random_qfull(p, b, rng);
            // nu_sequence throws TheoremViolation on any violation
            SlopeSequence seq = nu_sequence(y, b, 12);
            REQUIRE(seq.nu.size() == 12);
            for (size_t i = 0; i < seq.nu.size(); ++i) CHECK(seq.nu[i] == seq.alpha[i] * rm1);
        }
    }
}
