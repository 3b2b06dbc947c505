// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact equality; the runtime bounds are part of the
// criteria and are enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "goss/curve.hpp"
#include "goss/dwork.hpp"
#include "goss/errors.hpp"
#include "goss/minperm.hpp"
#include "goss/sampling.hpp"
#include "goss/vadic.hpp"
#include "goss/zeta.hpp"

using namespace goss;

namespace {

const std::vector<std::pair<uint32_t, uint32_t>> kAllQ = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}};
const std::vector<std::pair<uint32_t, uint32_t>> kUniq = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}};

uint64_t q_of(uint32_t p, uint32_t b) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < b; ++i) q *= p;
    return q;
}

bool criterion1(std::ostream& log) {
    bool ok = true;
    for (auto [p, b] : kAllQ) {
        std::mt19937_64 rng(1000 + p * 10 + b);
        BigInt q = q_of(p, b);
        for (int rep = 0; rep < 20 && ok; ++rep) {
            PadicExponent y = random_qfull_exponent(p, b, rng);
            DigitProfile pr = DigitProfile::certified(y, b, 200 + p);
            for (uint32_t i = 0; i < b && ok; ++i) {
                for (long n = 1; n <= 200; ++n) {
                    if (!(pr.d(i, n + p - 1) >= q * pr.d(i, n))) { ok = false; break; }
                    if (!(pr.y_partial(i, n + p - 1) > q * pr.y_partial(i, n))) { ok = false; break; }
                    if (b > 1) {
                        BigInt rhs = 0;
                        for (long k = 0; n - k * (p - 1) > 0; ++k) rhs += pr.y_partial(i, n - k * (p - 1));
                        if (!(BigInt(p) * pr.d(i, n) > rhs)) { ok = false; break; }
                    }
                }
            }
            if (!ok) log << "digit lemma failed at p=" << p << " b=" << b << " y=" << y.descriptor();
        }
    }
    return ok;
}

bool criterion2(std::ostream& log) {
    bool ok = true;
    const uint32_t N = 256;
    for (auto [p, b] : kAllQ) {
        std::mt19937_64 rng(1000 + p * 10 + b);  // the same sample as criterion 1
        for (int rep = 0; rep < 20 && ok; ++rep) {
            PadicExponent y = random_qfull_exponent(p, b, rng);
            DigitProfile pr = DigitProfile::certified(y, b, N + 2);
            for (uint32_t i = 0; i < b && ok; ++i) {
                BetaSeries beta = build_beta(pr, i, N);
                long top = std::min<long>(60, static_cast<long>(beta.a.size()) - 1);
                for (long n = 1; n <= top; ++n) {
                    auto v = beta.a[n].valuation();
                    if (!v || BigInt(*v) != pr.y_partial(i, n)) {
                        ok = false;
                        log << "valuation lemma failed at p=" << p << " b=" << b << " n=" << n;
                        break;
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion3(std::ostream& log) {
    bool ok = true;
    for (auto [p, b] : kUniq) {
        std::mt19937_64 rng(3000 + p * 10 + b);
        for (int rep = 0; rep < 20 && ok; ++rep) {
            PadicExponent y = random_qfull_exponent(p, b, rng);
            ChainResult chain = sigma_chain(y, b, 3);
            if (chain.family.size() < 3) {
                ok = false;
                log << "chain too short for a q-full exponent";
                break;
            }
            for (long n = 1; n <= 3; ++n) {
                long box = static_cast<long>(p) * (n + 2);
                DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(p) * box + 1);
                BruteResult br = brute_force_min(pr, n, box);
                if (!(br.any_finite && br.count == 1 &&
                      br.minimizers.at(0) == EnrichedPerm::from_bcycles(chain.family[n - 1]))) {
                    ok = false;
                    log << "uniqueness failed at p=" << p << " b=" << b << " n=" << n
                        << " y=" << y.descriptor() << " count=" << br.count.str();
                    break;
                }
            }
        }
    }
    return ok;
}

bool criterion4(std::ostream& log) {
    bool ok = true;
    for (auto [p, b] : kUniq) {
        std::mt19937_64 rng(4000 + p * 10 + b);
        PadicExponent y = random_qfull_exponent(p, b, rng);
        long coord_hi = 40;
        DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(p) * coord_hi + 1);
        std::uniform_int_distribution<long> coord(1, coord_hi);
        for (int rep = 0; rep < 10000 && ok; ++rep) {
            BCycle s;
            for (uint32_t i = 0; i < b; ++i) s.m.push_back(coord(rng));
            BCycle ps = p_bound_map(s, p);
            if (!is_p_bounded(ps, p) || !ps.leq(s) || !(p_bound_map(ps, p) == ps)) { ok = false; break; }
            BigInt rs = r_value(pr, s), rps = r_value(pr, ps);
            if (is_p_bounded(s, p) ? !(ps == s && rps == rs) : !(rps < rs)) { ok = false; break; }
            BCycle t;
            for (uint32_t i = 0; i < b; ++i) t.m.push_back(1 + static_cast<long>(rng() % s.m[i]));
            if (!p_bound_map(t, p).leq(ps)) { ok = false; break; }
            bool strict = true;
            BCycle u;
            for (uint32_t i = 0; i < b; ++i) {
                if (s.m[i] == 1) { strict = false; break; }
                u.m.push_back(1 + static_cast<long>(rng() % (s.m[i] - 1)));
            }
            if (strict) {
                BCycle pu = p_bound_map(u, p);
                for (uint32_t i = 0; i < b; ++i)
                    if (pu.m[i] >= ps.m[i]) { ok = false; break; }
            }
        }
        if (!ok) log << "p-map axiom failed at p=" << p << " b=" << b;
    }
    return ok;
}

bool criterion5(std::ostream& log) {
    bool ok = true;
    for (uint32_t p : {2u, 3u, 5u}) {
        std::mt19937_64 rng(5000 + p);
        for (int rep = 0; rep < 20 && ok; ++rep) {
            PadicExponent y = random_qfull_exponent(p, 1, rng);
            SlopeSequence nu = nu_sequence(y, 1, 30);
            DigitProfile pr = DigitProfile::certified(y, 1, 30 * (p - 1) + 2);
            if (nu.nu.size() != 30) { ok = false; break; }
            for (long n = 1; n <= 30; ++n)
                if (nu.nu[n - 1] != pr.y_partial(0, n * (p - 1))) { ok = false; break; }
        }
        if (!ok) log << "Wan closed form failed at p=" << p;
    }
    return ok;
}

bool criterion6(std::ostream& log) {
    bool ok = true;
    const uint32_t N = 200;
    for (auto [p, b] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        std::mt19937_64 rng(6000 + p * 10 + b);
        const FieldSpec* Fq = FieldSpec::get(p, b);
        BigInt r1 = q_of(p, b) - 1;
        for (int rep = 0; rep < 5 && ok; ++rep) {
            PadicExponent y = random_qfull_exponent(p, b, rng, /*leading_nonzero=*/true);
            // D: the first vertex past the precision window, capped at 10
            SlopeSequence seq = nu_sequence(y, b, 10);
            long D = 10;
            BigInt total = 0;
            for (size_t i = 0; i < seq.nu.size(); ++i) {
                total += seq.nu[i];
                if (total >= N) { D = std::min<long>(10, static_cast<long>(i) + 1); break; }
            }
            NewtonPolygon direct = zeta_direct(Fq, y, D, N).polygon();
            NewtonPolygon fred = zeta_np_from_charseries(char_series_stabilized(y, b, D, N));
            auto div = np_divergence(direct, fred, 4);
            if (div) {
                ok = false;
                log << "route divergence at q=" << q_of(p, b) << ": " << *div;
                break;
            }
            long cut = std::min(direct.certified_through, fred.certified_through);
            auto segs = np_restrict(direct, cut);
            if (segs.empty()) {
                ok = false;
                log << "no jointly certified slopes at q=" << q_of(p, b);
                break;
            }
            for (size_t i = 0; i < segs.size() && i < 4; ++i) {
                bool last = (i + 1 == segs.size());
                if (segs[i].den != 1 || (!last && segs[i].mult != 1) ||
                    static_cast<size_t>(i) >= seq.nu.size() || segs[i].num != seq.nu[i] ||
                    segs[i].num % r1 != 0) {
                    ok = false;
                    log << "slope " << i << " fails shape at q=" << q_of(p, b);
                    break;
                }
            }
        }
    }
    return ok;
}

bool criterion7(std::ostream& log) {
    bool ok = true;
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    auto P2 = special_value_poly(F3, -2);
    ok = ok && P2.coeff.size() == 2 && P2.coeff[0] == Poly::constant(F3, 1) &&
         P2.coeff[1] == Poly::constant(F3, 2);
    auto t2 = trivial_zero_order(F3, -2);
    ok = ok && t2.even && t2.order == 1;
    auto t1 = trivial_zero_order(F3, -1);
    ok = ok && !t1.even && t1.order == 0;
    if (!ok) {
        log << "pinned q=3 special values failed";
        return ok;
    }
    std::mt19937_64 rng(7007);
    const std::vector<std::pair<uint32_t, uint32_t>> fields = kAllQ;
    for (int rep = 0; rep < 30 && ok; ++rep) {
        auto [p, b] = fields[rep % fields.size()];
        const FieldSpec* F = FieldSpec::get(p, b);
        long r1 = static_cast<long>(q_of(p, b)) - 1;
        long je = -r1 * (1 + static_cast<long>(rng() % 40));
        auto even = trivial_zero_order(F, je);
        if (!even.even || even.order != 1) {
            ok = false;
            log << "even order failed at q=" << q_of(p, b) << " j=" << je;
        }
    }
    for (int rep = 0; rep < 30 && ok; ++rep) {
        auto [p, b] = fields[rep % fields.size()];
        long r1 = static_cast<long>(q_of(p, b)) - 1;
        if (r1 == 1) { ++rep; continue; }  // q=2 has no odd j
        const FieldSpec* F = FieldSpec::get(p, b);
        long j = -(1 + static_cast<long>(rng() % 200));
        if (j % r1 == 0) --j;
        auto odd = trivial_zero_order(F, j);
        if (odd.even || odd.order != 0) {
            ok = false;
            log << "odd nonvanishing failed at q=" << q_of(p, b) << " j=" << j;
        }
    }
    return ok;
}

bool criterion8(std::ostream& log) {
    bool ok = true;
    const FieldSpec* F3 = FieldSpec::get(3, 1);
    auto ym1 = PadicExponent::from_integer(3, -1);
    {
        LocalRing R(F3, Poly(F3, {0, 1}), 64);
        VadicZeta vz = zeta_vadic(R, ym1, 5);
        auto pred = vadic_predicted_slopes(F3, 1, ym1, 4);
        auto div = np_divergence(vz.np, pred);
        if (div || vz.np.certified_through < 4) {
            ok = false;
            log << "f=theta slopes failed" << (div ? ": " + *div : "");
        }
    }
    {
        LocalRing R(F3, Poly(F3, {1, 0, 1}), 96);
        VadicZeta vz = zeta_vadic(R, ym1, 6);
        auto pred = vadic_predicted_slopes(F3, 2, ym1, 2);
        auto div = np_divergence(vz.np, pred);
        if (div || vz.np.certified_through < 6) {
            ok = false;
            log << "f=theta^2+1 slopes failed" << (div ? ": " + *div : "");
        }
    }
    for (auto [q, c] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 0}, {3, 1}, {2, 1}}) {
        const FieldSpec* F = FieldSpec::get(q, 1);
        auto rep = comparison_check_dv1(F, c, PadicExponent::from_integer(q, -1), 4, 12);
        if (!rep.ok) {
            ok = false;
            log << "comparison identity failed at (q,c)=(" << q << "," << c << "): " << rep.mismatch;
        }
    }
    return ok;
}

bool criterion9(std::ostream& log) {
    bool ok = true;
    EllipticHost host = host_construct(5, 1, 1);
    ok = host.h == 9 && host.ordinary && host.trace == -3;
    auto y = PadicExponent::from_integer(5, -1);
    CurveZeta cz = zeta_curve(host, y, 4, 64);
    if (cz.np.slopes.size() < 3 || !(cz.np.slopes[0] == NPSlope{0, 1, 1}) ||
        !(cz.np.slopes[1] == NPSlope{4, 1, 1}) || !(cz.np.slopes[2] == NPSlope{24, 1, 1})) {
        ok = false;
        log << "curve polygon wrong: " << cz.np.str();
    }
    auto parts = predict_real_parts(y, 1, 1, 1, 2);
    if (!(parts.size() == 3 && parts[0] == 0 && parts[1] == 4 && parts[2] == 24)) {
        ok = false;
        log << "predictor mismatch for g=1,d=1";
    }
    if (cz.mod_p != cz.weil_mod_p) {
        ok = false;
        log << "mod-pi specialization differs from the Weil zeta";
    }
    return ok;
}

bool criterion10(std::ostream& log) {
    bool ok = true;
    // affine-line hosts: zeta(x, 0) = 1 exactly
    for (auto [p, b] : kAllQ) {
        const FieldSpec* Fq = FieldSpec::get(p, b);
        ZetaSeries z = zeta_direct(Fq, PadicExponent::from_integer(p, 0), 3, 12);
        if (!z.S[0].is_one()) ok = false;
        for (size_t d = 1; d < z.S.size(); ++d)
            if (!z.S[d].is_zero()) ok = false;
        // empty predictions
        auto parts = predict_real_parts(PadicExponent::from_integer(p, 0), b, 0, 1, 5);
        if (!parts.empty()) ok = false;
        CharSeries cs = char_series_stabilized(PadicExponent::from_integer(p, 0), b, 2, 12);
        for (size_t jj = 1; jj < cs.c.size(); ++jj)
            if (!cs.c[jj].is_zero()) ok = false;
    }
    if (!ok) {
        log << "affine degenerate case failed";
        return ok;
    }
    // curve host: the trivial character reduces the product to the Weil zeta
    // mod p (the module's own degenerate form); the slope prediction is empty
    EllipticHost host = host_construct(5, 1, 1);
    CurveZeta cz = zeta_curve(host, PadicExponent::from_integer(5, 0), 3, 8);
    if (cz.mod_p != cz.weil_mod_p) ok = false;
    for (const auto& s : cz.zeta.S)
        for (uint32_t t = 1; t < s.precision(); ++t)
            if (s.coeff(t) != 0) ok = false;
    auto parts = predict_real_parts(PadicExponent::from_integer(5, 0), 1, 1, 1, 5);
    if (!(parts.size() == 1 && parts[0] == 0)) ok = false;
    if (!ok) log << "curve degenerate case failed";
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    double budget_s;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "digit growth lemmas (6 fields x 20 exponents, n,m <= 200)", 5.0, criterion1},
        {2, "coefficient valuation lemma v(a_{i,n}) = y_i(n), n <= 60, N = 256", 10.0, criterion2},
        {3, "minimal-permutation uniqueness: brute force equals the chain", 120.0, criterion3},
        {4, "p-map axioms over 10^4 random cycles per field", 30.0, criterion4},
        {5, "Wan closed form nu_n = y(n(p-1)) for b = 1, n <= 30", 1.0, criterion5},
        {6, "three-route polygon agreement with multiplicity-one, (r-1)-divisible slopes", 300.0, criterion6},
        {7, "special values: parity dichotomy and simple trivial zeros", 30.0, criterion7},
        {8, "v-adic slopes and the d_v = 1 comparison identity", 120.0, criterion8},
        {9, "elliptic host route: slopes 0, 4, 24 and the Weil reduction", 180.0, criterion9},
        {10, "degenerate exponent: unit zeta and empty predictions", 10.0, criterion10},
    };

    bool all = true;
    for (auto& c : criteria) {
        std::ostringstream log;
        auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string err;
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            err = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_s;
        bool ok = pass && in_budget;
        all = all && ok;
        std::cout << "CRITERION " << c.id << ": " << (ok ? "PASS" : "FAIL") << " - " << c.label << " ["
                  << secs << "s / " << c.budget_s << "s]";
        if (!pass) {
            std::cout << " :: " << (err.empty() ? log.str() : err);
        } else if (!in_budget) {
            std::cout << " :: runtime budget exceeded";
        }
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
