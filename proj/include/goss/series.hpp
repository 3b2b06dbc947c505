#ifndef GOSS_SERIES_HPP
#define GOSS_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goss/ff.hpp"
#include "goss/padic.hpp"

namespace goss {

// Element of F_r[pi]/(pi^N): exactly N stored coefficients. Operations never
// silently change the claimed precision; mixing precisions or fields throws.
class TruncSeries {
public:
    TruncSeries() : f_(nullptr), N_(0) {}
    TruncSeries(const FieldSpec* f, uint32_t N) : f_(f), N_(N), c_(N, 0) {}
    static TruncSeries one(const FieldSpec* f, uint32_t N);
    static TruncSeries pi_pow(const FieldSpec* f, uint32_t N, uint32_t k, uint32_t coeff = 1);
    static TruncSeries from_coeffs(const FieldSpec* f, uint32_t N, const std::vector<uint32_t>& coeffs);

    const FieldSpec* field() const { return f_; }
    uint32_t precision() const { return N_; }
    uint32_t coeff(uint32_t k) const { return k < N_ ? c_[k] : 0u; }
    void set_coeff(uint32_t k, uint32_t v);

    bool is_zero() const;
    bool is_one() const;
    // min index of a nonzero coefficient; nullopt means ">= N", which is kept
    // distinct from every finite valuation
    std::optional<uint32_t> valuation() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries inverse() const;  // requires c_0 != 0
    TruncSeries mul_scalar(uint32_t s) const;
    TruncSeries shift(uint32_t k) const;         // * pi^k
    TruncSeries frobenius() const;               // p-th power
    TruncSeries pow_small(uint32_t e) const;     // e < p uses repeated multiplication
    TruncSeries truncate(uint32_t N) const;      // explicit re-truncation, N <= precision

    bool operator==(const TruncSeries& o) const { return f_ == o.f_ && N_ == o.N_ && c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }
    std::string str() const;

private:
    void check(const TruncSeries& o) const;
    const FieldSpec* f_;
    uint32_t N_;
    std::vector<uint16_t> c_;
};

// 1-unit wrapper: constant coefficient 1.
class OneUnit {
public:
    explicit OneUnit(TruncSeries s);
    const TruncSeries& series() const { return s_; }
    uint32_t precision() const { return s_.precision(); }
    OneUnit operator*(const OneUnit& o) const { return OneUnit(s_ * o.s_); }
    OneUnit inverse() const { return OneUnit(s_.inverse()); }
    bool operator==(const OneUnit& o) const { return s_ == o.s_; }

private:
    TruncSeries s_;
};

// u^y by base-p digit exponentiation u^y = prod_n (u^{p^n})^{y_n}; the result
// depends only on y mod p^K with p^K >= N, so K certified digits suffice.
OneUnit one_unit_pow(const OneUnit& u, const PadicExponent& y);

}  // namespace goss

#endif
