#ifndef GOSS_CURVE_HPP
#define GOSS_CURVE_HPP

#include <vector>

#include "goss/newton.hpp"
#include "goss/series.hpp"
#include "goss/zeta.hpp"

namespace goss {

// Ordinary elliptic host y^2 = x^3 + a4 x + a6 over F_p, infinity rational,
// uniformizer pi = -x/y. Class number h = #E(F_p); hosts with p | h would
// need inseparable roots and are rejected outright.
struct EllipticHost {
    uint32_t p;
    uint32_t a4, a6;  // residues in F_p
    long h;
    long trace;      // p + 1 - h
    bool ordinary;   // p does not divide the trace
};

EllipticHost host_construct(uint32_t p, uint32_t a4, uint32_t a6);

// #E(F_{p^k}) from the trace recurrence t_k = trace*t_{k-1} - p*t_{k-2}.
long long curve_point_count(const EllipticHost& host, long k);

struct EPoint {
    bool inf = true;
    FieldElem x, y;
    bool operator==(const EPoint& o) const {
        if (inf != o.inf) return false;
        return inf || (x == o.x && y == o.y);
    }
};

EPoint epoint_add(const EllipticHost& host, const EPoint& P, const EPoint& Q);

struct ClosedPoint {
    long k;  // degree
    EPoint rep;
    std::vector<EPoint> orbit;
};

// All affine closed points of degree <= D, each Frobenius orbit once; the
// census is checked against the trace-recurrence point counts.
std::vector<ClosedPoint> closed_points_up_to(const EllipticHost& host, long D);

// Laurent series pi^{ord} * (unit) at infinity; the unit part carries the
// full relative precision of the frame.
class Laurent {
public:
    Laurent() = default;
    Laurent(long ord, TruncSeries unit);
    long order() const { return ord_; }
    const TruncSeries& unit() const { return u_; }
    Laurent operator*(const Laurent& o) const;
    Laurent inverse() const;
    Laurent pow(uint64_t e) const;

private:
    long ord_ = 0;
    TruncSeries u_;
};

// x = pi^{-2}(1 + O(pi^4)), y = -pi^{-3}(1 + O(pi^4)) solved from the
// Weierstrass equation by Newton iteration on u = 1 + ...
struct InfinityFrame {
    const FieldSpec* F;
    uint32_t P;      // relative precision
    TruncSeries u;   // x = pi^{-2} u, y = -pi^{-3} u
    Laurent x, y;
};

InfinityFrame infinity_expansion(const FieldSpec* F, uint32_t a4, uint32_t a6, uint32_t P);

// <p_infty>^{1/1}: builds g with div(g) = h[pt] - h deg(pt) [infty] by
// chord/vertical accumulation over F_{p^k}, expands at infinity, takes the
// 1-unit part (whose coefficients provably land in F_p), and applies the
// exponent 1/h in Z_p.
OneUnit prime_character(const EllipticHost& host, const ClosedPoint& pt, uint32_t N);

// same with the orbit accumulated in a caller-chosen order (chain
// independence checks)
OneUnit prime_character_ordered(const EllipticHost& host, const ClosedPoint& pt, uint32_t N,
                                const std::vector<size_t>& order);

struct CurveZeta {
    ZetaSeries zeta;                    // coefficients over F_p[pi]/(pi^N)
    NewtonPolygon np;
    std::vector<uint32_t> mod_p;        // zeta mod pi, per x-degree
    std::vector<uint32_t> weil_mod_p;   // the Weil zeta of Spec A mod p from point counts
};

CurveZeta zeta_curve(const EllipticHost& host, const PadicExponent& y, long D, uint32_t N);

}  // namespace goss

#endif
