#ifndef GOSS_PADIC_HPP
#define GOSS_PADIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goss/bigint.hpp"
#include "goss/errors.hpp"

namespace goss {

// A p-adic integer given either by an exact rational tag a/c with p not
// dividing c (integers included, c = 1), or by an explicit finite digit list.
// Tagged exponents can produce arbitrarily many digits; digit-list exponents
// fail loudly past their precision.
class PadicExponent {
public:
    static PadicExponent from_integer(uint32_t p, const BigInt& v);
    static PadicExponent from_ratio(uint32_t p, BigInt num, BigInt den);
    static PadicExponent from_digits(uint32_t p, std::vector<uint8_t> digits);
    // grammar shared with the CLI: integer literal | digits:p:d0,d1,... | ratio:a/c
    static PadicExponent parse(uint32_t p, const std::string& text);

    uint32_t p() const { return p_; }
    bool tagged() const { return tagged_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    BigRat value() const;  // tagged only

    size_t available_digits() const;
    uint8_t digit(size_t k) const;                 // throws PrecisionError past precision
    std::vector<uint8_t> digits(size_t count) const;

    // (preperiod, period) of the digit stream; tagged only
    std::pair<size_t, size_t> digit_periodicity() const;

    bool is_zero() const;
    std::string descriptor() const;

private:
    PadicExponent() = default;
    uint32_t p_ = 2;
    bool tagged_ = false;
    BigInt num_ = 0, den_ = 1;
    std::vector<uint8_t> digits_;
};

struct QFullReport {
    bool value;
    bool caveat;  // set when the verdict depends on digits beyond the stored precision
};

// The decomposition y = sum_{i=1}^{b} p^{i-1} y_i with q-adic digit arrays
// y_{i,j} (q = p^b), together with the digit partial-sum tables
//   d_i(n) = p^{i-1} q^w,  y_i(m) = sum_{n<=m} d_i(n),  y_i(m,k) = y_i(m+k)-y_i(m).
//
// Component indices are 0-based here: component i of this class is the
// 1-based convention y_{i+1}, so the d value is p^i q^w.
//
// Every query past the certified digit range fails loudly; for components
// that are provably non-negative integers (exact tag) the tables are finite
// and queries past the support report "digit sequence exhausted", with the
// _opt variants returning nullopt, meaning +infinity as a valuation.
class DigitProfile {
public:
    enum class ComponentKind { Unknown, Zero, PositiveInteger, Full };

    DigitProfile(PadicExponent y, uint32_t b, uint32_t J);
    // picks J so every non-exhausted component certifies d_i(n) for n <= n_need
    static DigitProfile certified(const PadicExponent& y, uint32_t b, long n_need);

    uint32_t p() const { return p_; }
    uint32_t b() const { return b_; }
    uint64_t q() const { return q_; }
    uint32_t precision_J() const { return J_; }
    const PadicExponent& exponent() const { return y_; }

    uint8_t digit(uint32_t i, uint32_t j) const { return comp_[i][j]; }
    ComponentKind kind(uint32_t i) const { return kind_[i]; }

    // exactly-zero component present (within precision for digit-list inputs)
    bool degenerate() const;
    QFullReport q_full() const;

    long certified_n(uint32_t i) const { return certified_[i]; }
    // finite digit support for provably-integer components
    std::optional<long> support_end(uint32_t i) const;

    BigInt d(uint32_t i, long n) const;
    std::optional<BigInt> d_opt(uint32_t i, long n) const;
    BigInt y_partial(uint32_t i, long m) const;
    std::optional<BigInt> y_partial_opt(uint32_t i, long m) const;
    BigInt y_window(uint32_t i, long m, long k) const;
    std::optional<BigInt> y_window_opt(uint32_t i, long m, long k) const;

    // sum_i p^i sum_j y_{i,j} q^j, for the reconstruction congruence mod p^{bJ}
    BigInt reconstruct() const;

    std::string descriptor() const { return y_.descriptor(); }

private:
    void check_component(uint32_t i) const;
    PadicExponent y_;
    uint32_t p_, b_, J_;
    uint64_t q_;
    std::vector<std::vector<uint8_t>> comp_;   // comp_[i][j] = y_{i+1,j}
    std::vector<ComponentKind> kind_;
    std::vector<long> certified_;              // digit partial sum per component
    std::vector<std::vector<BigInt>> prefix_d_;  // prefix_d_[i][n] = d_i(n), n >= 1
    std::vector<std::vector<BigInt>> prefix_y_;  // prefix_y_[i][m] = y_i(m)
};

}  // namespace goss

#endif
