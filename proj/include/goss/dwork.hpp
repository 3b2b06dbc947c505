#ifndef GOSS_DWORK_HPP
#define GOSS_DWORK_HPP

#include <vector>

#include "goss/minperm.hpp"
#include "goss/newton.hpp"
#include "goss/series.hpp"

namespace goss {

// theta-expansion of beta_i = prod_j (1 - pi^{q^j p^i} theta)^{y_{i,j}}
// (component index 0-based, so the pi-exponent is p^i q^j). Coefficients are
// exact mod pi^N; a[n] for n past n_max has valuation >= N and is dropped.
struct BetaSeries {
    uint32_t i;
    uint32_t N;
    std::vector<TruncSeries> a;  // a[n] = a_{i,n}, n <= n_max
    const TruncSeries& coeff(long n, const TruncSeries& zero) const {
        if (n < 0 || n >= static_cast<long>(a.size())) return zero;
        return a[static_cast<size_t>(n)];
    }
};

BetaSeries build_beta(const DigitProfile& pr, uint32_t i, uint32_t N);

// The J_1 x J_1 Dwork matrix: entry (k1,k2) = a_{i(k1), p|k1|-|k2|} when
// i(k2) = i(k1)-1 (block cyclic), else 0. Entries materialize lazily from the
// per-component beta expansions.
class PsiMatrix {
public:
    PsiMatrix(const DigitProfile& pr, uint32_t N);
    const DigitProfile& profile() const { return *pr_; }
    uint32_t precision() const { return N_; }
    TruncSeries entry(const J1& k1, const J1& k2) const;

private:
    const DigitProfile* pr_;
    uint32_t N_;
    std::vector<BetaSeries> betas_;
    TruncSeries zero_;
};

// Dense square matrix over a fixed TruncSeries ring.
struct SeriesMatrix {
    long n = 0;
    std::vector<TruncSeries> e;  // row-major

    SeriesMatrix() = default;
    SeriesMatrix(long dim, const TruncSeries& zero) : n(dim), e(static_cast<size_t>(dim) * dim, zero) {}
    TruncSeries& at(long r, long c) { return e[static_cast<size_t>(r) * n + c]; }
    const TruncSeries& at(long r, long c) const { return e[static_cast<size_t>(r) * n + c]; }
};

// Characteristic series coefficients c_0 = 1, c_1, ..., c_{x_max} of a
// Fredholm determinant; for block-cyclic sources c_j = 0 unless b | j.
struct CharSeries {
    uint32_t b = 1;
    std::vector<TruncSeries> c;
    long stabilized_M = 0;

    std::vector<std::optional<BigInt>> valuations() const;
};

// det(1 - xA) mod x^{x_max+1} by the division-free Samuelson-Berkowitz
// product: over a ring with zero divisors there is no fraction field, but the
// leading-principal-minor recurrence is a polynomial identity and stays exact.
std::vector<TruncSeries> fredholm_coeffs(const SeriesMatrix& A, long x_max);

// Leibniz-sum oracle over all |S|=n permutation terms; exponential, test use.
std::vector<TruncSeries> fredholm_leibniz(const SeriesMatrix& A, long x_max);

struct DworkOpts {
    long M0 = -1;  // default max(8, p*n_max)
    int max_doublings = 6;
};

// Truncates Psi to |k| <= M and collapses the block-cyclic structure to one
// M x M product block: det(1 - x Psi_M) = det(1 - x^b M_{b-1}...M_0).
CharSeries char_series_block_at(const PadicExponent& y, uint32_t b, long n_max, uint32_t N, long M);

// Doubles M until c_1..c_{b*n_max} are identical for two consecutive
// truncations; returns the stable coefficients with the final M recorded.
CharSeries char_series_stabilized(const PadicExponent& y, uint32_t b, long n_max, uint32_t N,
                                  const DworkOpts& opts = {});

// Same coefficients from the full bM x bM truncation; quadratic-size cross
// check for the block-product collapse.
CharSeries char_series_full_matrix(const PadicExponent& y, uint32_t b, long n_max, uint32_t N, long M);

// det(1-xPsi) has slopes nu_n/b with multiplicity b; the x -> x^b
// substitution turns them into the zeta slopes nu_n with multiplicity 1.
NewtonPolygon zeta_np_from_charseries(const CharSeries& cs);

}  // namespace goss

#endif
