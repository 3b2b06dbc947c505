#include "goss/minperm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "goss/errors.hpp"

namespace goss {

namespace {

std::optional<BigInt> opt_add(const std::optional<BigInt>& a, const std::optional<BigInt>& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

std::vector<std::vector<long>> combinations(long B, long n) {
    std::vector<std::vector<long>> out;
    if (n == 0) { out.push_back({}); return out; }
    if (n > B) return out;
    std::vector<long> cur(n);
    for (long i = 0; i < n; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        long i = n - 1;
        while (i >= 0 && cur[i] == B - (n - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (long j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(idx);
    while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

}  // namespace

bool BCycle::leq(const BCycle& o) const {
    if (m.size() != o.m.size()) return false;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > o.m[i]) return false;
    return true;
}

std::string BCycle::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    os << ")";
    return os.str();
}

void EnrichedPerm::normalize() {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool EnrichedPerm::rotational(uint32_t b) const {
    int bi = static_cast<int>(b);
    for (const auto& [k, s] : pairs) {
        int expect = ((k.i - 1) % bi + bi) % bi;
        if (expect != s.i) return false;
    }
    return true;
}

bool EnrichedPerm::p_bounded(uint32_t p) const {
    // |sigma(k)| <= p|k|: the direction under which p-boundedness is exactly
    // finiteness of the matrix term prod Psi_{k,sigma(k)}
    for (const auto& [k, s] : pairs)
        if (s.m > static_cast<long>(p) * k.m) return false;
    return true;
}

std::optional<std::vector<BCycle>> EnrichedPerm::as_bcycles(uint32_t b) const {
    if (!rotational(b)) return std::nullopt;
    std::map<J1, J1> img;
    for (const auto& [k, s] : pairs) img[k] = s;
    std::map<J1, bool> seen;
    std::vector<BCycle> out;
    for (const auto& [k, s] : pairs) {
        if (seen.count(k)) continue;
        // walk the cycle; must close after exactly b steps to be a b-cycle
        std::vector<J1> cyc;
        J1 cur = k;
        for (uint32_t step = 0; step < b; ++step) {
            cyc.push_back(cur);
            seen[cur] = true;
            auto it = img.find(cur);
            if (it == img.end()) return std::nullopt;
            cur = it->second;
        }
        if (!(cur == k)) return std::nullopt;
        BCycle c;
        c.m.assign(b, 0);
        for (const J1& pt : cyc) c.m[pt.i] = pt.m;
        out.push_back(c);
    }
    return out;
}

bool EnrichedPerm::lexicographical(uint32_t b) const {
    auto cycles = as_bcycles(b);
    if (!cycles) return false;
    std::sort(cycles->begin(), cycles->end(),
              [](const BCycle& a, const BCycle& c) { return a.m < c.m; });
    for (size_t i = 1; i < cycles->size(); ++i)
        if (!(*cycles)[i - 1].leq((*cycles)[i])) return false;
    return true;
}

EnrichedPerm EnrichedPerm::from_bcycles(const std::vector<BCycle>& cycles) {
    EnrichedPerm s;
    for (const BCycle& c : cycles) {
        uint32_t b = c.b();
        for (uint32_t i = 0; i < b; ++i) {
            J1 src{static_cast<int>(i), c.m[i]};
            uint32_t prev = (i + b - 1) % b;
            J1 dst{static_cast<int>(prev), c.m[prev]};
            s.pairs.push_back({src, dst});
        }
    }
    s.normalize();
    return s;
}

std::string EnrichedPerm::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t t = 0; t < pairs.size(); ++t) {
        if (t) os << ", ";
        os << "(" << pairs[t].first.i << "," << pairs[t].first.m << ")->(" << pairs[t].second.i << ","
           << pairs[t].second.m << ")";
    }
    os << "}";
    return os.str();
}

std::optional<BigInt> r_pair_opt(const DigitProfile& pr, const J1& k1, const J1& k2) {
    return pr.y_partial_opt(static_cast<uint32_t>(k1.i), static_cast<long>(pr.p()) * k1.m - k2.m);
}

std::optional<BigInt> r_value_opt(const DigitProfile& pr, const BCycle& c) {
    uint32_t b = c.b();
    std::optional<BigInt> total = BigInt(0);
    for (uint32_t i = 0; i < b && total; ++i) {
        long arg = static_cast<long>(pr.p()) * c.m[i] - c.m[(i + b - 1) % b];
        total = opt_add(total, pr.y_partial_opt(i, arg));
    }
    return total;
}

std::optional<BigInt> r_value_opt(const DigitProfile& pr, const EnrichedPerm& s) {
    std::optional<BigInt> total = BigInt(0);
    for (const auto& [k, img] : s.pairs) {
        total = opt_add(total, r_pair_opt(pr, k, img));
        if (!total) break;
    }
    return total;
}

BigInt r_value(const DigitProfile& pr, const BCycle& c) {
    auto v = r_value_opt(pr, c);
    if (!v) throw PrecisionError("R-value infinite: digit sequence exhausted inside the cycle " + c.str());
    return *v;
}

bool is_p_bounded(const BCycle& c, uint32_t p) {
    // the cycle sends k_i -> k_{i-1}, so the image bound reads
    // m_{i-1} <= p m_i for every i
    uint32_t b = c.b();
    for (uint32_t i = 0; i < b; ++i)
        if (c.m[(i + b - 1) % b] > static_cast<long>(p) * c.m[i]) return false;
    return true;
}

BCycle p_bound_map(const BCycle& c, uint32_t p) {
    uint32_t b = c.b();
    if (b == 1) return c;
    uint32_t cmin = 0;
    for (uint32_t i = 1; i < b; ++i)
        if (c.m[i] < c.m[cmin]) cmin = i;
    BCycle r;
    r.m.assign(b, 0);
    r.m[cmin] = c.m[cmin];
    for (uint32_t t = 1; t < b; ++t) {
        uint32_t idx = (cmin + b - t) % b;
        uint32_t next = (idx + 1) % b;
        r.m[idx] = std::min(static_cast<long>(p) * r.m[next], c.m[idx]);
    }
    return r;
}

SigmaStarResult sigma_star(const DigitProfile& pr, long n, const std::vector<long>& box) {
    uint32_t b = pr.b();
    uint32_t p = pr.p();
    if (box.size() != b) throw std::invalid_argument("box dimension mismatch");
    for (long bound : box)
        if (bound < n) throw std::invalid_argument("empty box: bound below the size floor n");

    SigmaStarResult res;
    std::optional<BigInt> best;
    std::vector<BCycle> best_cycles;
    BCycle cur;
    cur.m.assign(b, 0);

    // enumerate p-bounded candidates: m[j] <= p*m[j-1] along the chain with a
    // cyclic wrap check at the end
    auto consider = [&](const BCycle& cand) {
        auto r = r_value_opt(pr, cand);
        if (!r) return;
        if (!best || *r < *best) {
            best = r;
            best_cycles.assign(1, cand);
        } else if (*r == *best) {
            best_cycles.push_back(cand);
        }
    };

    // p-bounded chain: m[j] <= p m[j+1], so each next coordinate is bounded
    // below by ceil(m[j]/p); the wrap m[b-1] <= p m[0] is checked at the end
    std::vector<long> stack(b, 0);
    std::function<void(uint32_t)> rec = [&](uint32_t j) {
        if (j == b) {
            if (stack[b - 1] <= static_cast<long>(p) * stack[0]) {
                BCycle cand;
                cand.m = stack;
                consider(cand);
            }
            return;
        }
        long lo = n;
        if (j > 0) lo = std::max(lo, (stack[j - 1] + static_cast<long>(p) - 1) / static_cast<long>(p));
        for (long v = lo; v <= box[j]; ++v) {
            stack[j] = v;
            rec(j + 1);
        }
    };
    rec(0);

    if (!best) return res;  // support exhausted: every candidate infinite
    if (best_cycles.size() > 1) {
        res.tie = true;
        res.cycle = best_cycles.front();
        return res;
    }
    res.cycle = best_cycles.front();
    return res;
}

namespace {

struct ChainRec {
    const DigitProfile* pr;
    std::map<std::pair<long, std::vector<long>>, std::pair<std::vector<BCycle>, ChainEnd>> memo;

    std::pair<std::vector<BCycle>, ChainEnd> run(long n, const std::vector<long>& box) {
        if (n == 0) return {{}, ChainEnd::Complete};
        auto key = std::make_pair(n, box);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::pair<std::vector<BCycle>, ChainEnd> out;
        for (long bound : box)
            if (bound < n) { out.second = ChainEnd::BoxEmpty; memo[key] = out; return out; }
        SigmaStarResult s = sigma_star(*pr, n, box);
        if (s.tie) {
            out.second = ChainEnd::TieDetected;
        } else if (!s.cycle) {
            out.second = ChainEnd::SupportExhausted;
        } else {
            std::vector<long> inner(box.size());
            for (size_t i = 0; i < box.size(); ++i) inner[i] = s.cycle->m[i] - 1;
            auto prefix = run(n - 1, inner);
            out = prefix;
            if (prefix.second == ChainEnd::Complete) out.first.push_back(*s.cycle);
        }
        memo[key] = out;
        return out;
    }
};

}  // namespace

ChainResult sigma_chain(const PadicExponent& y, uint32_t b, long n_max, const StabilizeOpts& opts) {
    uint32_t p = y.p();
    ChainResult out;
    if (n_max <= 0) return out;

    {
        DigitProfile probe = DigitProfile::certified(y, b, 1);
        if (probe.degenerate()) return out;  // vacuous profile: empty chain
    }

    long B0 = opts.box0 > 0 ? opts.box0 : static_cast<long>(p) * (n_max + 2);
    std::optional<ChainResult> prev;
    for (int attempt = 0; attempt <= opts.max_doublings; ++attempt) {
        long B = B0 << attempt;
        uint64_t space = 1;
        for (uint32_t i = 0; i < b; ++i) {
            space *= static_cast<uint64_t>(B);
            if (space > opts.budget)
                throw BudgetError("sigma_chain enumeration space exceeds budget at box " + std::to_string(B));
        }
        DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(p) * B + 1);
        ChainRec rec{&pr, {}};
        ChainResult cur;
        cur.box_used = B;
        std::vector<long> box(b, B);
        for (long n = 1; n <= n_max; ++n) {
            auto [cycles, end] = rec.run(n, box);
            if (end != ChainEnd::Complete) {
                cur.end = end;
                break;
            }
            cur.family.push_back(cycles);
        }
        if (cur.end == ChainEnd::TieDetected || cur.end == ChainEnd::SupportExhausted) {
            // finite chains are only possible when some digit support is finite
            QFullReport qf = pr.q_full();
            if (qf.value && !qf.caveat)
                throw TheoremViolation("minimal permutation chain ended at size " +
                                       std::to_string(cur.family.size() + 1) +
                                       " for a provably q-full exponent");
        }
        if (!cur.family.empty()) cur.cycles = cur.family.back();
        if (prev && prev->family == cur.family && prev->end == cur.end) return cur;
        prev = std::move(cur);
    }
    throw BudgetError("sigma_chain did not stabilize within the doubling budget");
}

SlopeSequence nu_sequence(const PadicExponent& y, uint32_t b, long n_max, const StabilizeOpts& opts) {
    SlopeSequence out;
    ChainResult chain = sigma_chain(y, b, n_max, opts);
    out.end = chain.end;
    if (chain.family.empty()) return out;

    long maxcoord = 1;
    for (const auto& fam : chain.family)
        for (const auto& c : fam)
            for (long m : c.m) maxcoord = std::max(maxcoord, m);
    DigitProfile pr = DigitProfile::certified(y, b, static_cast<long>(y.p()) * maxcoord + 1);

    BigInt rm1 = boost::multiprecision::pow(BigInt(y.p()), b) - 1;
    BigInt prev_R = 0, prev_nu = -1;
    for (const auto& fam : chain.family) {
        BigInt R = 0;
        for (const BCycle& c : fam) R += r_value(pr, c);  // disjoint cycles: R is additive
        BigInt nu = R - prev_R;
        if (nu <= prev_nu)
            throw TheoremViolation("slope sequence not strictly increasing: nu=" + nu.str() +
                                   " after " + prev_nu.str());
        if (nu % rm1 != 0)
            throw TheoremViolation("slope " + nu.str() + " not divisible by r-1=" + rm1.str());
        out.nu.push_back(nu);
        out.alpha.push_back(nu / rm1);
        prev_R = R;
        prev_nu = nu;
    }
    return out;
}

std::vector<BigInt> predict_real_parts(const PadicExponent& y, uint32_t b, long g, long d, long count,
                                       const StabilizeOpts& opts) {
    if (g < 0 || d < 1) throw std::invalid_argument("need g >= 0 and d >= 1");
    std::vector<BigInt> out(static_cast<size_t>(std::max<long>(0, g - 1 + d)), BigInt(0));
    if (count <= 0) return out;
    SlopeSequence s = nu_sequence(y, b, count, opts);
    for (const BigInt& nu : s.nu)
        for (long rep = 0; rep < d; ++rep) out.push_back(nu);
    return out;
}

BruteResult brute_force_min(const DigitProfile& pr, long n, long box, uint64_t budget) {
    BruteResult res;
    uint32_t b = pr.b();
    uint32_t p = pr.p();
    if (n == 0) {
        res.any_finite = true;
        res.rmin = 0;
        res.count = 1;
        res.minimizers.push_back(EnrichedPerm{});
        return res;
    }
    if (n < 0 || box < n) return res;
    if (n > 6) throw BudgetError("brute force limited to size <= 6");

    auto sets = combinations(box, n);
    auto perms = permutations_of(static_cast<int>(n));
    double space = 1;
    for (uint32_t i = 0; i < b; ++i) space *= static_cast<double>(sets.size());
    if (space * perms.size() > static_cast<double>(budget))
        throw BudgetError("brute force enumeration exceeds budget");

    const size_t S = sets.size();
    // R-value lookups for every (block, source coordinate, target coordinate)
    // up front: the edge scan below touches them millions of times
    const size_t bx = static_cast<size_t>(box);
    std::vector<std::optional<BigInt>> rtab(b * bx * bx);
    for (uint32_t j = 0; j < b; ++j)
        for (long m1 = 1; m1 <= box; ++m1)
            for (long m2 = 1; m2 <= box; ++m2)
                rtab[(j * bx + (m1 - 1)) * bx + (m2 - 1)] =
                    pr.y_partial_opt(j, static_cast<long>(p) * m1 - m2);

    // edge_cost[j][src*S+dst]: minimum over bijections set[src] -> set[dst] of
    // sum y_j(p*src[t] - dst[pi(t)]), with minimizer count and witnesses.
    // For b = 1 only the diagonal src == dst is ever used.
    struct Edge {
        bool finite = false;
        BigInt cost;
        std::vector<uint8_t> argmins;  // permutation indices attaining the min
    };
    std::vector<std::vector<Edge>> edge(b, std::vector<Edge>(b == 1 ? S : S * S));
    BigInt c;
    for (uint32_t j = 0; j < b; ++j) {
        for (size_t s = 0; s < S; ++s)
            for (size_t t = (b == 1 ? s : 0); t < (b == 1 ? s + 1 : S); ++t) {
                Edge& e = edge[j][b == 1 ? s : s * S + t];
                for (size_t pi = 0; pi < perms.size(); ++pi) {
                    c = 0;
                    bool finite = true;
                    for (long idx = 0; idx < n; ++idx) {
                        const auto& v = rtab[(j * bx + (sets[s][idx] - 1)) * bx +
                                             (sets[t][perms[pi][idx]] - 1)];
                        if (!v) { finite = false; break; }
                        c += *v;
                    }
                    if (!finite) continue;
                    if (!e.finite || c < e.cost) {
                        e.finite = true;
                        e.cost = c;
                        e.argmins.assign(1, static_cast<uint8_t>(pi));
                    } else if (c == e.cost) {
                        e.argmins.push_back(static_cast<uint8_t>(pi));
                    }
                }
            }
    }

    auto edge_index = [&](uint32_t, size_t src, size_t dst) { return b == 1 ? src : src * S + dst; };

    // enumerate block support tuples (S_0,...,S_{b-1}); block j maps into block j-1
    std::vector<size_t> choice(b, 0);
    std::vector<std::vector<size_t>> tying_tuples;
    std::function<void(uint32_t)> rec = [&](uint32_t j) {
        if (j == b) {
            std::optional<BigInt> total = BigInt(0);
            for (uint32_t i = 0; i < b && total; ++i) {
                const Edge& e = edge[i][edge_index(i, choice[i], choice[(i + b - 1) % b])];
                if (!e.finite) total = std::nullopt;
                else total = *total + e.cost;
            }
            if (!total) return;
            if (!res.any_finite || *total < res.rmin) {
                res.any_finite = true;
                res.rmin = *total;
                tying_tuples.assign(1, choice);
            } else if (*total == res.rmin) {
                tying_tuples.push_back(choice);
            }
            return;
        }
        for (size_t s = 0; s < S; ++s) {
            choice[j] = s;
            rec(j + 1);
        }
    };
    rec(0);
    if (!res.any_finite) return res;

    // count and materialize minimizers: per tuple, all combinations of
    // per-edge minimizing bijections
    const size_t cap = 32;
    for (const auto& tup : tying_tuples) {
        BigInt combos = 1;
        for (uint32_t i = 0; i < b; ++i)
            combos *= static_cast<long>(edge[i][edge_index(i, tup[i], tup[(i + b - 1) % b])].argmins.size());
        res.count += combos;
        // cross product (capped)
        std::vector<size_t> pick(b, 0);
        std::function<void(uint32_t, EnrichedPerm)> emit = [&](uint32_t i, EnrichedPerm acc) {
            if (res.minimizers.size() >= cap) return;
            if (i == b) {
                acc.normalize();
                res.minimizers.push_back(std::move(acc));
                return;
            }
            const Edge& e = edge[i][edge_index(i, tup[i], tup[(i + b - 1) % b])];
            const auto& src = sets[tup[i]];
            const auto& dst = sets[tup[(i + b - 1) % b]];
            for (uint8_t pi : e.argmins) {
                EnrichedPerm next = acc;
                for (long idx = 0; idx < n; ++idx)
                    next.pairs.push_back({J1{static_cast<int>(i), src[idx]},
                                          J1{static_cast<int>((i + b - 1) % b), dst[perms[pi][idx]]}});
                emit(i + 1, std::move(next));
                if (res.minimizers.size() >= cap) return;
            }
        };
        emit(0, EnrichedPerm{});
    }
    return res;
}

}  // namespace goss
