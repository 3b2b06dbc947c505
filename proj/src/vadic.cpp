#include "goss/vadic.hpp"

#include <map>
#include <sstream>

#include "goss/errors.hpp"
#include "goss/minperm.hpp"

namespace goss {

LocalRing::LocalRing(const FieldSpec* Fq, Poly f, uint32_t N) : Fq_(Fq), f_(std::move(f)), N_(N) {
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    if (f_.field() != Fq) throw FieldMismatchError("uniformizer defined over a different field");
    if (!f_.is_monic() || !is_irreducible(f_))
        throw std::invalid_argument("pi_v must be monic irreducible over F_q");
    fN_ = Poly::constant(Fq, 1);
    for (uint32_t i = 0; i < N; ++i) fN_ = fN_ * f_;
    rv_ = 1;
    for (long i = 0; i < f_.degree(); ++i) {
        rv_ *= Fq->q();
        if (rv_ > (1ull << 40)) throw std::invalid_argument("residue field beyond the desk-scale limit");
    }
}

LocalElem::LocalElem(const LocalRing* R, Poly rep) : R_(R), rep_(rep.mod(R->modulus())) {}

LocalElem LocalElem::one(const LocalRing* R) { return LocalElem(R, Poly::constant(R->base(), 1)); }

std::optional<long> LocalElem::valuation() const {
    if (rep_.is_zero()) return std::nullopt;
    Poly r = rep_;
    long v = 0;
    while (true) {
        auto [q, rem] = r.divmod(R_->f());
        if (!rem.is_zero()) return v;
        r = q;
        ++v;
        if (r.is_zero()) return std::nullopt;  // cannot happen for nonzero rep < f^N
    }
}

LocalElem LocalElem::operator+(const LocalElem& o) const { return LocalElem(R_, rep_ + o.rep_); }
LocalElem LocalElem::operator-(const LocalElem& o) const { return LocalElem(R_, rep_ - o.rep_); }
LocalElem LocalElem::operator*(const LocalElem& o) const { return LocalElem(R_, rep_ * o.rep_); }

LocalElem LocalElem::pow(uint64_t e) const {
    LocalElem r = LocalElem::one(R_);
    LocalElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

TeichDecomp teichmuller(const LocalRing& R, const Poly& a) {
    LocalElem x(&R, a);
    if (a.mod(R.f()).is_zero()) throw std::invalid_argument("teichmuller needs a unit (f does not divide a)");
    // x -> x^{r_v} multiplies the agreement precision by r_v each step
    uint32_t iters = 1;
    uint64_t reach = R.rv();
    while (reach < R.N()) { reach *= R.rv(); ++iters; }
    ++iters;
    LocalElem w = x;
    for (uint32_t i = 0; i < iters; ++i) {
        LocalElem nw = w.pow(R.rv());
        if (nw == w) break;
        w = nw;
    }
    if (!(w.pow(R.rv()) == w)) throw std::logic_error("Teichmuller iteration did not reach a fixed point");
    // omega is a unit with omega^{r_v - 1} = 1, so the inverse is omega^{r_v - 2}
    LocalElem winv = w.pow(R.rv() - 2);
    TeichDecomp td{w, x * winv};
    if (!(td.u.rep().mod(R.f()) == Poly::constant(R.base(), 1)))
        throw std::logic_error("1-unit part is not 1 mod f");
    return td;
}

LocalElem local_one_unit_pow(const LocalElem& u, const PadicExponent& y) {
    const LocalRing* R = u.ring();
    uint32_t p = y.p();
    if (R->base()->p() != p) throw std::invalid_argument("exponent characteristic differs from the ring");
    uint32_t K = 0;
    uint64_t pk = 1;
    while (pk < R->N()) { pk *= p; ++K; }
    std::vector<uint8_t> ds = y.digits(K);
    LocalElem acc = LocalElem::one(R);
    LocalElem v = u;
    for (uint32_t n = 0; n < K; ++n) {
        if (ds[n]) acc = acc * v.pow(ds[n]);
        v = v.pow(p);
    }
    return acc;
}

VadicZeta zeta_vadic(const LocalRing& R, const PadicExponent& y, long D, uint64_t budget) {
    const FieldSpec* Fq = R.base();
    uint64_t total = 0, power = 1;
    for (long d = 1; d <= D; ++d) {
        power *= Fq->q();
        total += power;
        if (total > budget) throw BudgetError("zeta_vadic: enumeration exceeds budget");
    }

    // Teichmuller inverse lifts per residue class mod f (unit classes only)
    long dv = R.dv();
    uint64_t residues = 1;
    for (long i = 0; i < dv; ++i) residues *= Fq->q();
    std::map<std::vector<uint32_t>, LocalElem> teich_inv;
    for (uint64_t t = 1; t < residues; ++t) {
        std::vector<uint32_t> c(static_cast<size_t>(dv), 0);
        uint64_t v = t;
        for (long i = 0; i < dv; ++i) { c[i] = static_cast<uint32_t>(v % Fq->q()); v /= Fq->q(); }
        Poly r(Fq, std::vector<uint32_t>(c));
        if (r.mod(R.f()).is_zero()) continue;
        TeichDecomp td = teichmuller(R, r);
        teich_inv.emplace(std::move(c), td.omega.pow(R.rv() - 2));
    }

    VadicZeta out;
    out.S.push_back(LocalElem::one(&R));
    for (long d = 1; d <= D; ++d) {
        LocalElem acc(&R, Poly(Fq));
        MonicRange mr(Fq, static_cast<uint32_t>(d));
        Poly a;
        while (mr.next(a)) {
            Poly res = a.mod(R.f());
            if (res.is_zero()) continue;  // primes over v are excluded
            std::vector<uint32_t> key(static_cast<size_t>(dv), 0);
            for (long i = 0; i < dv; ++i) key[i] = res.coeff(static_cast<size_t>(i));
            LocalElem u = LocalElem(&R, a) * teich_inv.at(key);
            acc = acc + local_one_unit_pow(u, y);
        }
        out.S.push_back(std::move(acc));
    }

    std::vector<std::optional<BigInt>> vals;
    for (const auto& s : out.S) {
        auto v = s.valuation();
        if (v) vals.push_back(BigInt(*v));
        else vals.push_back(std::nullopt);
    }
    out.np = newton_polygon(vals, BigInt(R.N()));
    return out;
}

NewtonPolygon vadic_predicted_slopes(const FieldSpec* Fq, long dv, const PadicExponent& y, long count) {
    uint32_t b0 = Fq->m();
    uint32_t bprime = static_cast<uint32_t>(b0 * dv);  // r_v = q^{d_v} = p^{b0 dv}
    NewtonPolygon np;
    if (dv >= 1) np.slopes.push_back({BigInt(0), BigInt(1), dv});
    np.certified_through = dv;
    if (count <= 0) return np;
    // slope values are the real parts nu_i = alpha_{r_v,i}(r_v - 1) divided by
    // d_v, each d_v times; this is the reading forced by the comparison
    // identity, which pins zeta_{A,v} to the zeta of X - v whose real parts
    // are the alpha_i (r_v - 1)
    SlopeSequence s = nu_sequence(y, bprime, count);
    for (const BigInt& nu : s.nu) {
        BigInt num = nu, den = dv;
        BigInt g = boost::multiprecision::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
        np.slopes.push_back({num, den, dv});
        np.certified_through += dv;
    }
    return np;
}

ComparisonReport comparison_check_dv1(const FieldSpec* Fq, uint32_t c, const PadicExponent& y, long D,
                                      uint32_t N) {
    ComparisonReport rep;
    Poly f(Fq, {Fq->neg(c % Fq->q()), 1});  // theta - c
    LocalRing R(Fq, f, N);

    VadicZeta lhs = zeta_vadic(R, y, D);
    ZetaSeries zd = zeta_direct(Fq, y, D, N);

    // map F_q[[pi]]/pi^N -> F_q[theta]/(f^N), pi -> theta - c, constants to
    // constants (the Teichmuller coefficient lifts)
    auto map_series = [&](const TruncSeries& s) {
        Poly acc(Fq);
        Poly fp = Poly::constant(Fq, 1);
        for (uint32_t k = 0; k < N; ++k) {
            if (s.coeff(k)) acc = acc + fp.mul_scalar(s.coeff(k));
            fp = fp * f;
        }
        return LocalElem(&R, acc);
    };

    for (long d = 0; d <= D; ++d) {
        LocalElem rhs = map_series(zd.S[static_cast<size_t>(d)]);
        if (d >= 1) rhs = rhs - map_series(zd.S[static_cast<size_t>(d - 1)]);
        if (!(lhs.S[static_cast<size_t>(d)] == rhs)) {
            std::ostringstream os;
            os << "x^" << d << ": v-adic sum disagrees with the affine-line route";
            rep.mismatch = os.str();
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace goss
