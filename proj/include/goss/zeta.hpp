#ifndef GOSS_ZETA_HPP
#define GOSS_ZETA_HPP

#include <vector>

#include "goss/newton.hpp"
#include "goss/series.hpp"

namespace goss {

// x-expansion of a zeta function: S[d] is the coefficient of x^d, S[0] = 1.
struct ZetaSeries {
    std::vector<TruncSeries> S;

    std::vector<std::optional<BigInt>> valuations() const;
    NewtonPolygon polygon() const;
};

// <a>_pi for monic a of degree n and pi = 1/theta: the coefficient reversal
// 1 + a_{n-1} pi + ... + a_0 pi^n.
OneUnit one_unit_of_monic(const Poly& a, uint32_t N);

// S_d(y) = sum over monic a of degree d of <a>^y, for d <= D.
ZetaSeries zeta_direct(const FieldSpec* Fq, const PadicExponent& y, long D, uint32_t N,
                       uint64_t budget = 50000000);

// P_j(x) = sum_n x^n sum_{a monic, deg a = n} a^{-j} for j < 0; the inner
// sums vanish past the classical digit bound, making P_j a polynomial with
// coefficients in F_q[theta].
struct SpecialPolynomial {
    long j;
    std::vector<Poly> coeff;  // coeff[n] multiplies x^n

    Poly eval_at_one() const;
    std::string str() const;
};

SpecialPolynomial special_value_poly(const FieldSpec* Fq, long j);

struct TrivialZeroReport {
    bool even;   // (q-1) | j
    long order;  // multiplicity of the root x = 1 of P_j
};

TrivialZeroReport trivial_zero_order(const FieldSpec* Fq, long j);

}  // namespace goss

#endif
