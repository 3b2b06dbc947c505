#ifndef GOSS_MINPERM_HPP
#define GOSS_MINPERM_HPP

#include <optional>
#include <string>
#include <vector>

#include "goss/bigint.hpp"
#include "goss/padic.hpp"

namespace goss {

// Rotational b-cycle as its coordinate tuple (m_1,...,m_b), stored 0-based:
// m[i] is the coordinate in block i, all >= 1. For b = 1 this is a single
// fixed point of J_1.
struct BCycle {
    std::vector<long> m;
    uint32_t b() const { return static_cast<uint32_t>(m.size()); }
    bool operator==(const BCycle& o) const { return m == o.m; }
    bool operator!=(const BCycle& o) const { return m != o.m; }
    // componentwise partial order
    bool leq(const BCycle& o) const;
    std::string str() const;
};

// Point of J_1 = Z/bZ x Z_{>0}; i is the 0-based block index.
struct J1 {
    int i;
    long m;
    bool operator==(const J1& o) const { return i == o.i && m == o.m; }
    bool operator<(const J1& o) const { return i != o.i ? i < o.i : m < o.m; }
};

// Finite permutation of J_1 given by its (source, image) pairs, sorted by
// source. Used both for brute-force search results and for the chain output.
struct EnrichedPerm {
    std::vector<std::pair<J1, J1>> pairs;

    void normalize();
    size_t support_size() const { return pairs.size(); }
    bool rotational(uint32_t b) const;
    bool p_bounded(uint32_t p) const;
    bool decomposable() const { return true; }  // single-copy index set (h = 1)
    // product of comparable disjoint rotational b-cycles
    bool lexicographical(uint32_t b) const;
    std::optional<std::vector<BCycle>> as_bcycles(uint32_t b) const;
    static EnrichedPerm from_bcycles(const std::vector<BCycle>& cycles);
    bool operator==(const EnrichedPerm& o) const { return pairs == o.pairs; }
    std::string str() const;
};

// R(k1,k2) = y_{i(k1)}(p|k1| - |k2|); nullopt means +infinity (a window past
// a provably finite digit support).
std::optional<BigInt> r_pair_opt(const DigitProfile& pr, const J1& k1, const J1& k2);
std::optional<BigInt> r_value_opt(const DigitProfile& pr, const BCycle& c);
std::optional<BigInt> r_value_opt(const DigitProfile& pr, const EnrichedPerm& s);
BigInt r_value(const DigitProfile& pr, const BCycle& c);  // throws when infinite

bool is_p_bounded(const BCycle& c, uint32_t p);

// The projection onto p-bounded cycles: p_bound_map(c) <= c, R never
// increases (strictly when c is not p-bounded), idempotent, monotone,
// disjointness-preserving. Recursion from the minimal coordinate with the
// index n_{c-j} = min{p n_{c-j+1}, m_{c-j}}; the last argument of the min is
// the one-character repair of the source formula that makes
// p_bound_map(c) <= c actually hold (flagged in verification reports).
BCycle p_bound_map(const BCycle& c, uint32_t p);

struct StabilizeOpts {
    long box0 = -1;          // initial coordinate bound; default p*(n+2)
    int max_doublings = 6;
    uint64_t budget = 200000000;  // enumeration guard
};

enum class ChainEnd { Complete, SupportExhausted, BoxEmpty, TieDetected };

// sigma_n^*(box): unique R-minimal b-cycle with (n,...,n) <= c <= box,
// searched over p-bounded candidates (complete by stability of the p-map).
struct SigmaStarResult {
    std::optional<BCycle> cycle;
    bool tie = false;  // distinct finite-R minimizers; impossible for q-full y
};
SigmaStarResult sigma_star(const DigitProfile& pr, long n, const std::vector<long>& box);

// The unique R-minimal permutations Sigma_n for n = 1..n_max via the
// recurrence Sigma_n^*(m) = Sigma_{n-1}^*(sigma_n^*(m) - 1) sigma_n^*(m).
// Boxes double until two consecutive runs agree; the profile is rebuilt deep
// enough internally. The per-size minima are usually nested but need not be:
// the recurrence prefix lives in the box sigma_n^* - 1, and the global
// Sigma_{n-1} can differ from it (observed in the wild), so the whole family
// is returned. `cycles` is Sigma_{n_max} in lexicographic order.
struct ChainResult {
    std::vector<std::vector<BCycle>> family;  // family[n-1] = cycles of Sigma_n
    std::vector<BCycle> cycles;               // = family.back() when nonempty
    ChainEnd end = ChainEnd::Complete;
    long box_used = 0;
};
ChainResult sigma_chain(const PadicExponent& y, uint32_t b, long n_max, const StabilizeOpts& opts = {});

// nu_n = R(Sigma_n) - R(Sigma_{n-1}), asserted strictly increasing and
// divisible by r-1 = p^b-1 (violations are fatal); alpha_n = nu_n/(r-1).
struct SlopeSequence {
    std::vector<BigInt> nu;
    std::vector<BigInt> alpha;
    ChainEnd end = ChainEnd::Complete;
};
SlopeSequence nu_sequence(const PadicExponent& y, uint32_t b, long n_max, const StabilizeOpts& opts = {});

// Real-part multiset for an ordinary host of genus g with infinity of degree
// d: g-1+d zeros, then each alpha_i (r-1) repeated d times. Degenerate
// profiles produce zeros only.
std::vector<BigInt> predict_real_parts(const PadicExponent& y, uint32_t b, long g, long d, long count,
                                       const StabilizeOpts& opts = {});

// Exhaustive minimization over ALL rotational enriched permutations of size n
// with coordinates in [1, box]: per-block supports and bijections enumerated
// via per-edge assignment tables, which covers exactly that search space
// (not only lexicographical or decomposable shapes).
struct BruteResult {
    bool any_finite = false;
    BigInt rmin;
    BigInt count = 0;                     // minimizers attaining rmin
    std::vector<EnrichedPerm> minimizers;  // up to a small cap
};
BruteResult brute_force_min(const DigitProfile& pr, long n, long box, uint64_t budget = 200000000);

}  // namespace goss

#endif
