#include "goss/dwork.hpp"

#include <algorithm>
#include <sstream>

#include "goss/errors.hpp"

namespace goss {

namespace {

const FieldSpec* profile_field(const DigitProfile& pr) {
    return FieldSpec::get(pr.p(), pr.b());
}

}  // namespace

BetaSeries build_beta(const DigitProfile& pr, uint32_t i, uint32_t N) {
    const FieldSpec* F = profile_field(pr);
    BetaSeries beta;
    beta.i = i;
    beta.N = N;

    // theta-degree cap: the smallest n with y_i(n) >= N ends the useful range;
    // a zero component has the empty product beta = 1
    long n_max = 0;
    bool zero_component = pr.kind(i) == DigitProfile::ComponentKind::Zero ||
                          (pr.kind(i) == DigitProfile::ComponentKind::Unknown && pr.certified_n(i) == 0);
    while (!zero_component) {
        std::optional<BigInt> v;
        try {
            v = pr.y_partial_opt(i, n_max + 1);
        } catch (const PrecisionError&) {
            throw PrecisionError("beta_" + std::to_string(i + 1) + ": digit range certifies less than pi^" +
                                     std::to_string(N) + "; deepen the profile or lower N",
                                 static_cast<long>(N));
        }
        if (!v || *v >= N) break;  // exhausted support also caps the degree
        ++n_max;
    }

    std::vector<TruncSeries> acc;
    acc.push_back(TruncSeries::one(F, N));
    // multiply the factors (1 - pi^{p^i q^j} theta)^{y_{i,j}} while the
    // pi-exponent stays below N
    BigInt e = boost::multiprecision::pow(BigInt(pr.p()), i);
    for (uint32_t j = 0; j < pr.precision_J() && e < N; ++j, e *= pr.q()) {
        uint32_t ei = e.convert_to<uint32_t>();
        for (uint8_t rep = 0; rep < pr.digit(i, j); ++rep) {
            size_t deg = std::min<size_t>(acc.size(), static_cast<size_t>(n_max));
            std::vector<TruncSeries> next(deg + 1, TruncSeries(F, N));
            for (size_t k = 0; k <= deg; ++k) {
                TruncSeries t = (k < acc.size()) ? acc[k] : TruncSeries(F, N);
                if (k >= 1) t = t - acc[k - 1].shift(ei);
                next[k] = std::move(t);
            }
            acc = std::move(next);
        }
    }
    acc.resize(static_cast<size_t>(n_max) + 1, TruncSeries(F, N));
    beta.a = std::move(acc);
    return beta;
}

PsiMatrix::PsiMatrix(const DigitProfile& pr, uint32_t N) : pr_(&pr), N_(N), zero_(profile_field(pr), N) {
    for (uint32_t i = 0; i < pr.b(); ++i) betas_.push_back(build_beta(pr, i, N));
}

TruncSeries PsiMatrix::entry(const J1& k1, const J1& k2) const {
    int b = static_cast<int>(pr_->b());
    if (((k1.i - 1) % b + b) % b != k2.i) return zero_;
    long n = static_cast<long>(pr_->p()) * k1.m - k2.m;
    return betas_[static_cast<size_t>(k1.i)].coeff(n, zero_);
}

std::vector<std::optional<BigInt>> CharSeries::valuations() const {
    std::vector<std::optional<BigInt>> out;
    for (const auto& s : c) {
        auto v = s.valuation();
        if (v) out.push_back(BigInt(*v));
        else out.push_back(std::nullopt);
    }
    return out;
}

std::vector<TruncSeries> fredholm_coeffs(const SeriesMatrix& A, long x_max) {
    if (A.n == 0) throw std::invalid_argument("fredholm_coeffs needs a nonempty matrix");
    const FieldSpec* F = A.e[0].field();
    uint32_t N = A.e[0].precision();
    long L = x_max;

    std::vector<TruncSeries> Q(1, TruncSeries::one(F, N));

    for (long i = 0; i < A.n; ++i) {
        // q_i(x) = 1 - a_ii x - sum_{k>=2} (R_i A_{i-1}^{k-2} S_i) x^k
        std::vector<TruncSeries> qi;
        qi.push_back(TruncSeries::one(F, N));
        if (L >= 1) qi.push_back(-A.at(i, i));
        if (L >= 2 && i > 0) {
            std::vector<TruncSeries> v(i, TruncSeries(F, N));
            for (long r = 0; r < i; ++r) v[r] = A.at(r, i);
            for (long k = 2; k <= L; ++k) {
                TruncSeries dot(F, N);
                for (long c = 0; c < i; ++c) dot = dot + A.at(i, c) * v[c];
                qi.push_back(-dot);
                if (k == L) break;
                std::vector<TruncSeries> nv(i, TruncSeries(F, N));
                for (long r = 0; r < i; ++r) {
                    TruncSeries s(F, N);
                    for (long c = 0; c < i; ++c) s = s + A.at(r, c) * v[c];
                    nv[r] = std::move(s);
                }
                v = std::move(nv);
            }
        }
        // Q *= q_i, truncated at degree L
        std::vector<TruncSeries> nq(std::min<size_t>(Q.size() + qi.size() - 1, L + 1), TruncSeries(F, N));
        for (size_t a = 0; a < Q.size(); ++a)
            for (size_t bq = 0; bq < qi.size() && a + bq < nq.size(); ++bq)
                nq[a + bq] = nq[a + bq] + Q[a] * qi[bq];
        Q = std::move(nq);
    }
    Q.resize(static_cast<size_t>(L) + 1, TruncSeries(F, N));
    return Q;
}

std::vector<TruncSeries> fredholm_leibniz(const SeriesMatrix& A, long x_max) {
    const FieldSpec* F = A.e.at(0).field();
    uint32_t N = A.e[0].precision();
    std::vector<TruncSeries> out(static_cast<size_t>(x_max) + 1, TruncSeries(F, N));
    out[0] = TruncSeries::one(F, N);

    std::vector<long> subset;
    std::function<void(long)> pick = [&](long start) {
        long n = static_cast<long>(subset.size());
        if (n >= 1 && n <= x_max) {
            // all permutations of the chosen principal subset
            std::vector<int> idx(n);
            for (long t = 0; t < n; ++t) idx[t] = static_cast<int>(t);
            do {
                TruncSeries prod = TruncSeries::one(F, N);
                int sign = 0;  // parity via cycle count
                std::vector<bool> seen(n, false);
                for (int t = 0; t < n; ++t) {
                    if (seen[t]) continue;
                    int len = 0;
                    for (int u = t; !seen[u]; u = idx[u]) { seen[u] = true; ++len; }
                    sign += len - 1;
                }
                for (int t = 0; t < n; ++t) prod = prod * A.at(subset[t], subset[idx[t]]);
                // (-1)^n sgn(sigma): track both signs together
                if ((n + sign) % 2 == 1) prod = -prod;
                out[n] = out[n] + prod;
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        if (n == x_max) return;
        for (long next = start; next < A.n; ++next) {
            subset.push_back(next);
            pick(next + 1);
            subset.pop_back();
        }
    };
    pick(0);
    return out;
}

namespace {

// single M x M block: the descending block product M_{b-1} ... M_0, where
// block i holds a_{i, p r - c} at (row r, col c), 1-based coordinates
SeriesMatrix block_product(const PsiMatrix& psi, uint32_t b, long M) {
    const FieldSpec* F = FieldSpec::get(psi.profile().p(), psi.profile().b());
    TruncSeries zero(F, psi.precision());
    auto block = [&](uint32_t i) {
        SeriesMatrix Bm(M, zero);
        for (long r = 1; r <= M; ++r)
            for (long c = 1; c <= M; ++c)
                Bm.at(r - 1, c - 1) =
                    psi.entry(J1{static_cast<int>(i), r}, J1{static_cast<int>((i + b - 1) % b), c});
        return Bm;
    };
    SeriesMatrix P = block(b - 1);
    for (int i = static_cast<int>(b) - 2; i >= 0; --i) {
        SeriesMatrix Bi = block(static_cast<uint32_t>(i));
        SeriesMatrix R(M, zero);
        for (long r = 0; r < M; ++r)
            for (long c = 0; c < M; ++c) {
                TruncSeries s = zero;
                for (long k = 0; k < M; ++k) s = s + P.at(r, k) * Bi.at(k, c);
                R.at(r, c) = std::move(s);
            }
        P = std::move(R);
    }
    return P;
}

CharSeries spread_block_coeffs(std::vector<TruncSeries> gamma, uint32_t b, long n_max, long M) {
    const FieldSpec* F = gamma.at(0).field();
    uint32_t N = gamma[0].precision();
    CharSeries cs;
    cs.b = b;
    cs.stabilized_M = M;
    cs.c.assign(static_cast<size_t>(b) * n_max + 1, TruncSeries(F, N));
    cs.c[0] = TruncSeries::one(F, N);
    for (long n = 1; n <= n_max; ++n)
        if (n < static_cast<long>(gamma.size())) cs.c[static_cast<size_t>(b) * n] = gamma[n];
    return cs;
}

}  // namespace

CharSeries char_series_block_at(const PadicExponent& y, uint32_t b, long n_max, uint32_t N, long M) {
    // psi entries need digit depth p*M, the beta caps need y_i(n) to reach N
    long depth = std::max<long>(static_cast<long>(y.p()) * M + 1, static_cast<long>(N) + 2);
    DigitProfile pr = DigitProfile::certified(y, b, depth);
    PsiMatrix psi(pr, N);
    SeriesMatrix P = block_product(psi, b, M);
    return spread_block_coeffs(fredholm_coeffs(P, n_max), b, n_max, M);
}

CharSeries char_series_stabilized(const PadicExponent& y, uint32_t b, long n_max, uint32_t N,
                                  const DworkOpts& opts) {
    uint32_t p = y.p();
    long M0 = opts.M0 > 0 ? opts.M0 : std::max<long>(8, static_cast<long>(p) * n_max);
    std::optional<CharSeries> prev;
    long M = M0;
    for (int attempt = 0; attempt <= opts.max_doublings; ++attempt, M *= 2) {
        CharSeries cur = char_series_block_at(y, b, n_max, N, M);
        if (prev && prev->c == cur.c) return cur;
        prev = std::move(cur);
    }
    std::ostringstream os;
    os << "characteristic series did not stabilize by M=" << (M / 2) << "; partial valuations:";
    for (const auto& v : prev->valuations()) {
        if (v) os << " " << *v;
        else os << " >=N";
    }
    throw BudgetError(os.str());
}

CharSeries char_series_full_matrix(const PadicExponent& y, uint32_t b, long n_max, uint32_t N, long M) {
    uint32_t p = y.p();
    long depth = std::max<long>(static_cast<long>(p) * M + 1, static_cast<long>(N) + 2);
    DigitProfile pr = DigitProfile::certified(y, b, depth);
    PsiMatrix psi(pr, N);
    const FieldSpec* F = FieldSpec::get(p, b);
    TruncSeries zero(F, N);
    long dim = static_cast<long>(b) * M;
    SeriesMatrix A(dim, zero);
    // index t = i*M + (m-1)
    for (long t1 = 0; t1 < dim; ++t1)
        for (long t2 = 0; t2 < dim; ++t2) {
            J1 k1{static_cast<int>(t1 / M), t1 % M + 1};
            J1 k2{static_cast<int>(t2 / M), t2 % M + 1};
            A.at(t1, t2) = psi.entry(k1, k2);
        }
    auto coeffs = fredholm_coeffs(A, b * n_max);
    CharSeries cs;
    cs.b = b;
    cs.stabilized_M = M;
    cs.c = std::move(coeffs);
    return cs;
}

NewtonPolygon zeta_np_from_charseries(const CharSeries& cs) {
    uint32_t N = cs.c.at(0).precision();
    for (size_t j = 0; j < cs.c.size(); ++j)
        if (j % cs.b != 0 && !cs.c[j].is_zero())
            throw TheoremViolation("characteristic series breaks the b-fold vanishing pattern at x^" +
                                   std::to_string(j));
    std::vector<std::optional<BigInt>> vals;
    for (size_t j = 0; j < cs.c.size(); j += cs.b) {
        auto v = cs.c[j].valuation();
        if (v) vals.push_back(BigInt(*v));
        else vals.push_back(std::nullopt);
    }
    return newton_polygon(vals, BigInt(N));
}

}  // namespace goss
