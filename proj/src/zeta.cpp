#include "goss/zeta.hpp"

#include <sstream>

#include "goss/errors.hpp"

namespace goss {

std::vector<std::optional<BigInt>> ZetaSeries::valuations() const {
    std::vector<std::optional<BigInt>> out;
    for (const auto& s : S) {
        auto v = s.valuation();
        if (v) out.push_back(BigInt(*v));
        else out.push_back(std::nullopt);
    }
    return out;
}

NewtonPolygon ZetaSeries::polygon() const {
    return newton_polygon(valuations(), BigInt(S.at(0).precision()));
}

OneUnit one_unit_of_monic(const Poly& a, uint32_t N) {
    if (!a.is_monic()) throw std::invalid_argument("one_unit_of_monic needs a monic polynomial");
    const FieldSpec* F = a.field();
    long n = a.degree();
    TruncSeries s(F, N);
    s.set_coeff(0, 1);
    for (long k = 1; k <= n && k < static_cast<long>(N); ++k)
        s.set_coeff(static_cast<uint32_t>(k), a.coeff(static_cast<size_t>(n - k)));
    return OneUnit(std::move(s));
}

ZetaSeries zeta_direct(const FieldSpec* Fq, const PadicExponent& y, long D, uint32_t N, uint64_t budget) {
    if (Fq->p() != y.p()) throw std::invalid_argument("exponent characteristic differs from the field");
    uint64_t total = 0, power = 1;
    for (long d = 1; d <= D; ++d) {
        power *= Fq->q();
        total += power;
        if (total > budget) throw BudgetError("zeta_direct: q^D enumeration exceeds budget");
    }
    ZetaSeries z;
    z.S.push_back(TruncSeries::one(Fq, N));
    for (long d = 1; d <= D; ++d) {
        TruncSeries acc(Fq, N);
        MonicRange mr(Fq, static_cast<uint32_t>(d));
        Poly a;
        while (mr.next(a)) acc = acc + one_unit_pow(one_unit_of_monic(a, N), y).series();
        z.S.push_back(std::move(acc));
    }
    return z;
}

namespace {

long q_digit_sum(uint64_t v, uint64_t q) {
    long s = 0;
    while (v) {
        s += static_cast<long>(v % q);
        v /= q;
    }
    return s;
}

// theta-degree of a multiplied by p: the Frobenius power a^p stays sparse
Poly poly_frobenius(const Poly& a) {
    const FieldSpec* F = a.field();
    if (a.is_zero()) return a;
    std::vector<uint32_t> c(static_cast<size_t>(a.degree()) * F->p() + 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i]) c[i * F->p()] = F->pow(a.coeffs()[i], F->p());
    return Poly(F, std::move(c));
}

// sum over monic a of degree n of a^k, in F_q[theta]; the exponent is split
// into base-p digits so every multiplication has one sparse factor
Poly power_sum(const FieldSpec* Fq, long n, uint64_t k) {
    Poly acc(Fq);
    MonicRange mr(Fq, static_cast<uint32_t>(n));
    Poly a;
    while (mr.next(a)) {
        Poly r = Poly::constant(Fq, 1);
        Poly base = a;
        uint64_t e = k;
        while (e) {
            uint32_t digit = static_cast<uint32_t>(e % Fq->p());
            for (uint32_t t = 0; t < digit; ++t) r = r * base;
            base = poly_frobenius(base);
            e /= Fq->p();
        }
        acc = acc + r;
    }
    return acc;
}

}  // namespace

SpecialPolynomial special_value_poly(const FieldSpec* Fq, long j) {
    if (j >= 0) throw std::invalid_argument("special_value_poly expects a negative integer j");
    uint64_t k = static_cast<uint64_t>(-j);
    SpecialPolynomial P;
    P.j = j;
    P.coeff.push_back(Poly::constant(Fq, 1));
    // the inner sums vanish once n exceeds digitsum_q(-j)/(q-1); stop there
    // and confirm with two further all-zero sums
    long stop = q_digit_sum(k, Fq->q()) / static_cast<long>(Fq->q() - 1) + 1;
    for (long n = 1; n <= stop; ++n) P.coeff.push_back(power_sum(Fq, n, k));
    for (long extra = 1; extra <= 2; ++extra)
        if (!power_sum(Fq, stop + extra, k).is_zero())
            throw TheoremViolation("inner power sum nonzero past the classical vanishing bound");
    while (!P.coeff.empty() && P.coeff.back().is_zero()) P.coeff.pop_back();
    return P;
}

Poly SpecialPolynomial::eval_at_one() const {
    Poly s(coeff.at(0).field());
    for (const Poly& c : coeff) s = s + c;
    return s;
}

std::string SpecialPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t n = 0; n < coeff.size(); ++n) {
        if (coeff[n].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff[n].str("t") << ")";
        if (n >= 1) {
            os << "x";
            if (n > 1) os << "^" << n;
        }
    }
    if (first) os << "0";
    return os.str();
}

TrivialZeroReport trivial_zero_order(const FieldSpec* Fq, long j) {
    if (j >= 0) throw std::invalid_argument("trivial_zero_order expects a negative integer j");
    TrivialZeroReport rep;
    long r1 = static_cast<long>(Fq->q()) - 1;
    long jm = ((j % r1) + r1) % r1;
    rep.even = (jm == 0);

    SpecialPolynomial P = special_value_poly(Fq, j);
    // multiplicity of x = 1: repeated synthetic division by (x - 1) over F_q[theta]
    std::vector<Poly> c = P.coeff;
    rep.order = 0;
    while (true) {
        Poly at1(Fq);
        for (const Poly& t : c) at1 = at1 + t;
        if (!at1.is_zero()) break;
        if (c.size() <= 1) break;  // the zero polynomial guard; P_j is never 0 (constant term 1)
        // divide sum c_n x^n by (x - 1): quotient q_n = sum_{m > n} c_m
        std::vector<Poly> q(c.size() - 1, Poly(Fq));
        Poly run(Fq);
        for (size_t n = c.size(); n-- > 1;) {
            run = run + c[n];
            q[n - 1] = run;
        }
        c = std::move(q);
        ++rep.order;
    }
    return rep;
}

}  // namespace goss
