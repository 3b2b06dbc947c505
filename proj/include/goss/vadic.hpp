#ifndef GOSS_VADIC_HPP
#define GOSS_VADIC_HPP

#include <vector>

#include "goss/newton.hpp"
#include "goss/series.hpp"
#include "goss/zeta.hpp"

namespace goss {

// O_v truncated at pi_v^N, realized as F_q[theta]/(f^N) for the monic
// irreducible f = pi_v of degree d_v. Valuations count f-divisibility of the
// canonical representative.
class LocalRing {
public:
    LocalRing(const FieldSpec* Fq, Poly f, uint32_t N);
    const FieldSpec* base() const { return Fq_; }
    const Poly& f() const { return f_; }
    const Poly& modulus() const { return fN_; }
    uint32_t N() const { return N_; }
    long dv() const { return f_.degree(); }
    uint64_t rv() const { return rv_; }  // q^{d_v}

private:
    const FieldSpec* Fq_;
    Poly f_;
    uint32_t N_;
    Poly fN_;
    uint64_t rv_;
};

class LocalElem {
public:
    LocalElem() : R_(nullptr) {}
    LocalElem(const LocalRing* R, Poly rep);
    static LocalElem one(const LocalRing* R);

    const LocalRing* ring() const { return R_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    std::optional<long> valuation() const;  // nullopt means >= N

    LocalElem operator+(const LocalElem& o) const;
    LocalElem operator-(const LocalElem& o) const;
    LocalElem operator*(const LocalElem& o) const;
    LocalElem pow(uint64_t e) const;
    bool operator==(const LocalElem& o) const { return R_ == o.R_ && rep_ == o.rep_; }

private:
    const LocalRing* R_;
    Poly rep_;
};

struct TeichDecomp {
    LocalElem omega;  // omega^{r_v} = omega
    LocalElem u;      // u = a omega^{-1} = 1 mod f
};

// a = omega_v(a) <a>_v for units a: omega by iterating a -> a^{r_v} to the
// fixed point mod f^N.
TeichDecomp teichmuller(const LocalRing& R, const Poly& a);

// u^y by base-p digit exponentiation of the 1-unit u
LocalElem local_one_unit_pow(const LocalElem& u, const PadicExponent& y);

struct VadicZeta {
    std::vector<LocalElem> S;  // x-coefficients
    NewtonPolygon np;          // pi_v-adic polygon
};

// zeta_{A,v} on the identity component: sum over monics coprime to f of
// x^{deg a} <a>_v^y with <a>_v = a omega_v(a)^{-1}.
VadicZeta zeta_vadic(const LocalRing& R, const PadicExponent& y, long D, uint64_t budget = 50000000);

// Predicted polygon shape: d_v zero slopes, then alpha_{r_v,i}/d_v with
// multiplicity d_v each, alpha from the slope predictor run at b' = b*d_v.
NewtonPolygon vadic_predicted_slopes(const FieldSpec* Fq, long dv, const PadicExponent& y, long count);

struct ComparisonReport {
    bool ok = false;
    std::string mismatch;  // first differing x-degree, empty when ok
};

// d_v = 1 comparison: zeta_{A,v}(x,y) = zeta_{B,pi_v}(x,y) (1 - x) with
// B = F_q[1/(theta-c)], eta = <theta-c>_{pi_v} = 1; both sides exact
// mod (x^{D+1}, pi_v^N).
ComparisonReport comparison_check_dv1(const FieldSpec* Fq, uint32_t c, const PadicExponent& y, long D,
                                      uint32_t N);

}  // namespace goss

#endif
