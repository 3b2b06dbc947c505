#include "goss/curve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "goss/errors.hpp"

namespace goss {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

EllipticHost host_construct(uint32_t p, uint32_t a4, uint32_t a6) {
    if (!is_prime_u32(p) || p <= 3) throw std::invalid_argument("host needs a prime p > 3");
    a4 %= p;
    a6 %= p;
    const FieldSpec* F = FieldSpec::get(p, 1);
    // disc = -16(4 a4^3 + 27 a6^2)
    uint32_t disc = F->add(F->mul(4 % p, F->pow(a4, 3)), F->mul(27 % p, F->mul(a6, a6)));
    if (disc == 0) throw std::invalid_argument("singular curve: discriminant vanishes");

    long affine = 0;
    for (uint32_t x = 0; x < p; ++x) {
        uint32_t rhs = F->add(F->mul(x, F->mul(x, x)), F->add(F->mul(a4, x), a6));
        if (rhs == 0) { affine += 1; continue; }
        // rhs is a QR iff rhs^{(p-1)/2} = 1
        if (F->pow(rhs, (p - 1) / 2) == 1) affine += 2;
    }
    EllipticHost host;
    host.p = p;
    host.a4 = a4;
    host.a6 = a6;
    host.h = affine + 1;
    host.trace = static_cast<long>(p) + 1 - host.h;
    host.ordinary = (host.trace % static_cast<long>(p)) != 0;
    if (host.h % static_cast<long>(p) == 0)
        throw std::invalid_argument("p divides the class number: inseparable root required, unsupported host");
    return host;
}

long long curve_point_count(const EllipticHost& host, long k) {
    // t_k = alpha^k + beta^k with t_0 = 2, t_1 = trace
    long long t0 = 2, t1 = host.trace;
    if (k == 0) return 0;
    long long pk = 1;
    for (long i = 0; i < k; ++i) pk *= host.p;
    if (k == 1) return host.p + 1 - host.trace;
    for (long i = 2; i <= k; ++i) {
        long long t2 = host.trace * t1 - static_cast<long long>(host.p) * t0;
        t0 = t1;
        t1 = t2;
    }
    return pk + 1 - t1;
}

EPoint epoint_add(const EllipticHost& host, const EPoint& P, const EPoint& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const FieldSpec* F = P.x.field();
    if (F != Q.x.field()) throw FieldMismatchError("point addition across fields");
    FieldElem a4(F, F->prime_field() ? host.a4 : embed(FieldElem(FieldSpec::get(host.p, 1), host.a4), F).idx());

    if (P.x == Q.x) {
        if (!(P.y == Q.y) || P.y.is_zero()) return EPoint{};  // P + (-P) = O
        // tangent
        FieldElem three(F, 3 % host.p);
        FieldElem two(F, 2 % host.p);
        FieldElem lam = (three * P.x * P.x + a4) * (two * P.y).inverse();
        FieldElem x3 = lam * lam - P.x - Q.x;
        FieldElem y3 = lam * (P.x - x3) - P.y;
        return EPoint{false, x3, y3};
    }
    FieldElem lam = (Q.y - P.y) * (Q.x - P.x).inverse();
    FieldElem x3 = lam * lam - P.x - Q.x;
    FieldElem y3 = lam * (P.x - x3) - P.y;
    return EPoint{false, x3, y3};
}

namespace {

EPoint frob_point(const EPoint& P) {
    if (P.inf) return P;
    return EPoint{false, frobenius_iter(P.x, 1), frobenius_iter(P.y, 1)};
}

std::vector<EPoint> affine_points(const EllipticHost& host, const FieldSpec* F) {
    FieldElem a4 = embed(FieldElem(FieldSpec::get(host.p, 1), host.a4), F);
    FieldElem a6 = embed(FieldElem(FieldSpec::get(host.p, 1), host.a6), F);
    // roots of y^2 = s, indexed by s
    std::map<uint32_t, std::vector<uint32_t>> sqrt_of;
    for (uint32_t yv = 0; yv < F->q(); ++yv) sqrt_of[F->mul(yv, yv)].push_back(yv);
    std::vector<EPoint> out;
    for (uint32_t xv = 0; xv < F->q(); ++xv) {
        FieldElem x(F, xv);
        FieldElem rhs = x * x * x + a4 * x + a6;
        auto it = sqrt_of.find(rhs.idx());
        if (it == sqrt_of.end()) continue;
        for (uint32_t yv : it->second) out.push_back(EPoint{false, x, FieldElem(F, yv)});
    }
    return out;
}

}  // namespace

std::vector<ClosedPoint> closed_points_up_to(const EllipticHost& host, long D) {
    if (D < 1) throw std::invalid_argument("need D >= 1");
    std::vector<ClosedPoint> out;
    std::vector<long> closed_count(static_cast<size_t>(D) + 1, 0);
    for (long k = 1; k <= D; ++k) {
        const FieldSpec* F = FieldSpec::get(host.p, static_cast<uint32_t>(k));
        std::vector<EPoint> pts = affine_points(host, F);
        if (static_cast<long long>(pts.size()) + 1 != curve_point_count(host, k))
            throw TheoremViolation("point census disagrees with the trace recurrence at degree " +
                                   std::to_string(k));
        std::set<std::pair<uint32_t, uint32_t>> seen;
        for (const EPoint& P : pts) {
            if (seen.count({P.x.idx(), P.y.idx()})) continue;
            std::vector<EPoint> orbit;
            EPoint cur = P;
            do {
                orbit.push_back(cur);
                seen.insert({cur.x.idx(), cur.y.idx()});
                cur = frob_point(cur);
            } while (!(cur == P));
            if (static_cast<long>(orbit.size()) == k) {
                ClosedPoint cp;
                cp.k = k;
                cp.rep = orbit.front();
                cp.orbit = std::move(orbit);
                out.push_back(std::move(cp));
            } else if (k % static_cast<long>(orbit.size()) != 0) {
                throw TheoremViolation("orbit length does not divide the field degree");
            }
        }
        closed_count[k] = static_cast<long>(std::count_if(out.begin(), out.end(), [&](const ClosedPoint& c) {
            return c.k == k;
        }));
        // census: sum over d | k of d * #closed(d), plus infinity, equals #E(F_{p^k})
        long long lhs = 1;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) lhs += static_cast<long long>(d) * closed_count[d];
        if (lhs != curve_point_count(host, k))
            throw TheoremViolation("closed-point census fails at degree " + std::to_string(k));
    }
    return out;
}

// --- Laurent arithmetic at infinity ---

Laurent::Laurent(long ord, TruncSeries unit) : ord_(ord), u_(std::move(unit)) {
    if (u_.coeff(0) == 0) throw std::logic_error("Laurent unit part must have a nonzero lead");
}

Laurent Laurent::operator*(const Laurent& o) const { return Laurent(ord_ + o.ord_, u_ * o.u_); }

Laurent Laurent::inverse() const { return Laurent(-ord_, u_.inverse()); }

Laurent Laurent::pow(uint64_t e) const {
    Laurent r(0, TruncSeries::one(u_.field(), u_.precision()));
    Laurent b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

InfinityFrame infinity_expansion(const FieldSpec* F, uint32_t a4, uint32_t a6, uint32_t P) {
    InfinityFrame fr;
    fr.F = F;
    fr.P = P;
    const FieldSpec* Fp = FieldSpec::get(F->p(), 1);
    TruncSeries A4 = TruncSeries::pi_pow(F, P, 4, embed(FieldElem(Fp, a4 % F->p()), F).idx());
    TruncSeries A6 = TruncSeries::pi_pow(F, P, 6, embed(FieldElem(Fp, a6 % F->p()), F).idx());
    // u^3 - u^2 + A4 u + A6 = 0 with u = 1 + O(pi^4); Newton from u = 1,
    // F'(u) = 3u^2 - 2u + A4 has unit constant term 1
    TruncSeries u = TruncSeries::one(F, P);
    TruncSeries one = TruncSeries::one(F, P);
    for (uint32_t it = 0; it < 64; ++it) {  // Newton doubles the precision per step
        TruncSeries val = u * u * (u - one) + A4 * u + A6;
        if (val.is_zero()) break;
        TruncSeries der = u * (one + one + one) * u - (one + one) * u + A4;
        u = u - val * der.inverse();
    }
    TruncSeries resid = u * u * (u - one) + A4 * u + A6;
    if (!resid.is_zero()) throw std::logic_error("infinity expansion did not converge");
    fr.u = u;
    fr.x = Laurent(-2, u);
    TruncSeries mu = -u;
    fr.y = Laurent(-3, std::move(mu));
    return fr;
}

namespace {

// y - lambda x - mu, a series of exact order -3 at infinity
Laurent chord_line(const InfinityFrame& fr, const FieldElem& lam, const FieldElem& mu) {
    const FieldSpec* F = fr.F;
    TruncSeries s(F, fr.P);
    for (uint32_t t = 0; t < fr.P; ++t) {
        uint32_t v = F->neg(fr.u.coeff(t));                               // y part
        if (t >= 1) v = F->sub(v, F->mul(lam.idx(), fr.u.coeff(t - 1)));  // -lambda x
        if (t == 3) v = F->sub(v, mu.idx());
        s.set_coeff(t, v);
    }
    return Laurent(-3, std::move(s));
}

// x - x0, order -2
Laurent vertical_line(const InfinityFrame& fr, const FieldElem& x0) {
    const FieldSpec* F = fr.F;
    TruncSeries s(F, fr.P);
    for (uint32_t t = 0; t < fr.P; ++t) {
        uint32_t v = fr.u.coeff(t);
        if (t == 2) v = F->sub(v, x0.idx());
        s.set_coeff(t, v);
    }
    return Laurent(-2, std::move(s));
}

struct Accumulator {
    const EllipticHost* host;
    const InfinityFrame* fr;
    Laurent f;
    EPoint Q;

    // ([Q]-[inf]) + ([R]-[inf]) = [Q+R]-[inf] + div(chord/vertical)
    void add_class(const EPoint& R) {
        if (R.inf) return;
        if (Q.inf) { Q = R; return; }
        const FieldSpec* F = fr->F;
        if (Q.x == R.x && (!(Q.y == R.y) || Q.y.is_zero())) {
            // opposite points: the chord is the vertical through Q, sum is O
            f = f * vertical_line(*fr, Q.x);
            Q = EPoint{};
            return;
        }
        FieldElem lam(F, 0);
        if (Q.x == R.x) {
            FieldElem a4 = embed(FieldElem(FieldSpec::get(host->p, 1), host->a4), F);
            FieldElem three(F, 3 % host->p);
            FieldElem two(F, 2 % host->p);
            lam = (three * Q.x * Q.x + a4) * (two * Q.y).inverse();
        } else {
            lam = (R.y - Q.y) * (R.x - Q.x).inverse();
        }
        FieldElem mu = Q.y - lam * Q.x;
        EPoint S = epoint_add(*host, Q, R);
        if (S.inf) throw std::logic_error("non-vertical chord cannot pass through infinity");
        f = f * chord_line(*fr, lam, mu) * vertical_line(*fr, S.x).inverse();
        Q = S;
    }
};

}  // namespace

OneUnit prime_character_ordered(const EllipticHost& host, const ClosedPoint& pt, uint32_t N,
                                const std::vector<size_t>& order) {
    const FieldSpec* F = FieldSpec::get(host.p, static_cast<uint32_t>(pt.k));
    uint32_t P = N + 6;
    InfinityFrame fr = infinity_expansion(F, host.a4, host.a6, P);

    Accumulator acc{&host, &fr, Laurent(0, TruncSeries::one(F, P)), EPoint{}};
    for (size_t idx : order) acc.add_class(pt.orbit.at(idx));
    // now div(acc.f) = sum [P_i] - k[inf] - ([T]-[inf]) with T the trace point
    Laurent g = acc.f.pow(static_cast<uint64_t>(host.h));

    // h([T]-[inf]) is principal because h T = O; accumulate its function
    if (!acc.Q.inf) {
        EPoint T = acc.Q;
        Accumulator walk{&host, &fr, Laurent(0, TruncSeries::one(F, P)), EPoint{}};
        for (long i = 0; i < host.h; ++i) walk.add_class(T);
        if (!walk.Q.inf) throw TheoremViolation("h * trace point is not the identity");
        g = g * walk.f;
    }

    if (g.order() != -host.h * pt.k)
        throw TheoremViolation("accumulated function has wrong pole order at infinity");

    // 1-unit part: strip the leading coefficient; the divisor is F_p-rational
    // so the normalized coefficients must land in the prime subfield
    const TruncSeries& w = g.unit();
    TruncSeries norm = w.mul_scalar(F->inv(w.coeff(0)));
    const FieldSpec* Fp = FieldSpec::get(host.p, 1);
    TruncSeries down(Fp, N);
    for (uint32_t t = 0; t < N; ++t) {
        uint32_t c = norm.coeff(t);
        if (!F->in_prime_subfield(c))
            throw TheoremViolation("1-unit part has a coefficient outside F_p");
        down.set_coeff(t, c);
    }
    OneUnit base(std::move(down));
    PadicExponent hinv = PadicExponent::from_ratio(host.p, 1, host.h);
    return one_unit_pow(base, hinv);
}

OneUnit prime_character(const EllipticHost& host, const ClosedPoint& pt, uint32_t N) {
    std::vector<size_t> order(pt.orbit.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    return prime_character_ordered(host, pt, N, order);
}

namespace {

// Weil zeta of Spec A mod p from the trace-recurrence point counts alone:
// prod_k (1-x^k)^{-c_k} with c_k = (1/k) sum_{d|k} mu(k/d)(N_d - 1)
std::vector<uint32_t> weil_affine_mod_p(const EllipticHost& host, long D) {
    std::vector<long long> Nd(static_cast<size_t>(D) + 1, 0);
    for (long k = 1; k <= D; ++k) Nd[k] = curve_point_count(host, k);
    auto mobius = [](long n) {
        long m = 1;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0L;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    uint32_t p = host.p;
    std::vector<long long> ck(static_cast<size_t>(D) + 1, 0);
    for (long k = 1; k <= D; ++k) {
        long long s = 0;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) s += mobius(k / d) * (Nd[d] - 1);
        ck[k] = s / k;
    }
    // expand the product over F_p
    std::vector<uint32_t> z(static_cast<size_t>(D) + 1, 0);
    z[0] = 1;
    const FieldSpec* Fp = FieldSpec::get(p, 1);
    for (long k = 1; k <= D; ++k) {
        long long reps = ck[k];
        for (long long r = 0; r < reps; ++r) {
            // multiply by (1-x^k)^{-1} = sum x^{kj}
            std::vector<uint32_t> nz(z.size(), 0);
            for (size_t d = 0; d < z.size(); ++d) {
                if (!z[d]) continue;
                for (size_t j = d; j < z.size(); j += k) nz[j] = Fp->add(nz[j], z[d]);
            }
            z = std::move(nz);
        }
    }
    return z;
}

}  // namespace

CurveZeta zeta_curve(const EllipticHost& host, const PadicExponent& y, long D, uint32_t N) {
    if (!host.ordinary) throw std::invalid_argument("zeta run rejected: host is not ordinary");
    if (y.p() != host.p) throw std::invalid_argument("exponent characteristic differs from the host");
    const FieldSpec* Fp = FieldSpec::get(host.p, 1);

    std::vector<ClosedPoint> primes = closed_points_up_to(host, D);
    CurveZeta out;
    out.zeta.S.assign(static_cast<size_t>(D) + 1, TruncSeries(Fp, N));
    out.zeta.S[0] = TruncSeries::one(Fp, N);

    bool zero_y = y.is_zero();
    for (const ClosedPoint& pt : primes) {
        TruncSeries chy = TruncSeries::one(Fp, N);
        if (!zero_y) chy = one_unit_pow(prime_character(host, pt, N), y).series();
        // multiply by (1 - x^k chy)^{-1} = sum_j x^{kj} chy^j
        long k = pt.k;
        std::vector<TruncSeries> pw(static_cast<size_t>(D / k) + 1, TruncSeries::one(Fp, N));
        for (size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] * chy;
        std::vector<TruncSeries> nz(out.zeta.S.size(), TruncSeries(Fp, N));
        for (size_t d = 0; d < nz.size(); ++d) {
            TruncSeries s(Fp, N);
            for (long j = 0; static_cast<size_t>(j) * k <= d; ++j)
                s = s + out.zeta.S[d - static_cast<size_t>(j) * k] * pw[static_cast<size_t>(j)];
            nz[d] = std::move(s);
        }
        out.zeta.S = std::move(nz);
    }
    out.np = out.zeta.polygon();
    for (const auto& s : out.zeta.S) out.mod_p.push_back(s.coeff(0));
    out.weil_mod_p = weil_affine_mod_p(host, D);
    return out;
}

}  // namespace goss
