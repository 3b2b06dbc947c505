#include "goss/newton.hpp"

#include <sstream>
#include <stdexcept>

namespace goss {

namespace {

struct Pt {
    long x;
    BigInt v;
};

// lower convex hull, x strictly increasing on input
std::vector<Pt> lower_hull(const std::vector<Pt>& pts) {
    std::vector<Pt> h;
    for (const Pt& p : pts) {
        while (h.size() >= 2) {
            const Pt& a = h[h.size() - 2];
            const Pt& b = h[h.size() - 1];
            // keep b only if slope(a,b) < slope(b,p); drop on >= so collinear
            // middle points collapse into one segment
            BigInt lhs = (b.v - a.v) * (p.x - b.x);
            BigInt rhs = (p.v - b.v) * (b.x - a.x);
            if (lhs >= rhs) h.pop_back();
            else break;
        }
        h.push_back(p);
    }
    return h;
}

std::vector<NPSlope> segments(const std::vector<Pt>& hull) {
    std::vector<NPSlope> out;
    for (size_t i = 1; i < hull.size(); ++i) {
        BigInt num = hull[i].v - hull[i - 1].v;
        BigInt den = hull[i].x - hull[i - 1].x;
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
        out.push_back({num, den, hull[i].x - hull[i - 1].x});
    }
    return out;
}

}  // namespace

long NewtonPolygon::total_multiplicity() const {
    long t = 0;
    for (const auto& s : slopes) t += s.mult;
    return t;
}

std::string NewtonPolygon::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (i) os << ", ";
        os << slopes[i].num;
        if (slopes[i].den != 1) os << "/" << slopes[i].den;
        os << " x" << slopes[i].mult;
    }
    os << "] certified<=" << certified_through;
    return os.str();
}

NewtonPolygon newton_polygon(const std::vector<std::optional<BigInt>>& valuations, const BigInt& N) {
    if (valuations.empty()) throw std::invalid_argument("newton_polygon: empty valuation list");
    if (!valuations[0] || *valuations[0] != 0)
        throw std::invalid_argument("newton_polygon: series must be normalized (degree 0 valuation 0)");

    std::vector<Pt> known, pess;
    for (size_t d = 0; d < valuations.size(); ++d) {
        if (valuations[d]) {
            if (*valuations[d] >= N && d > 0)
                throw std::invalid_argument("finite valuation >= N must be passed as unknown");
            known.push_back({static_cast<long>(d), *valuations[d]});
            pess.push_back({static_cast<long>(d), *valuations[d]});
        } else {
            pess.push_back({static_cast<long>(d), N});
        }
    }

    std::vector<Pt> ho = lower_hull(known);  // optimistic: unknowns absent
    std::vector<Pt> hp = lower_hull(pess);   // pessimistic: unknowns at N

    // certified prefix: longest common vertex run (the true hull is pinched
    // between the two, so where they coincide it is determined)
    size_t k = 0;
    while (k < ho.size() && k < hp.size() && ho[k].x == hp[k].x && ho[k].v == hp[k].v) ++k;
    std::vector<Pt> common(ho.begin(), ho.begin() + k);

    NewtonPolygon np;
    np.slopes = segments(common);
    np.certified_through = common.empty() ? 0 : common.back().x;
    return np;
}

std::vector<NPSlope> np_restrict(const NewtonPolygon& np, long cut) {
    std::vector<NPSlope> out;
    long x = 0;
    for (const auto& s : np.slopes) {
        if (x >= cut) break;
        NPSlope t = s;
        if (x + t.mult > cut) t.mult = cut - x;
        out.push_back(t);
        x += s.mult;
    }
    return out;
}

std::optional<std::string> np_divergence(const NewtonPolygon& a, const NewtonPolygon& b, long max_slopes) {
    long cut = std::min(a.certified_through, b.certified_through);
    auto sa = np_restrict(a, cut);
    auto sb = np_restrict(b, cut);
    if (max_slopes >= 0) {
        if (static_cast<long>(sa.size()) > max_slopes) sa.resize(max_slopes);
        if (static_cast<long>(sb.size()) > max_slopes) sb.resize(max_slopes);
    }
    if (sa.size() != sb.size()) {
        std::ostringstream os;
        os << "segment counts differ on joint range x<=" << cut << ": " << sa.size() << " vs " << sb.size();
        return os.str();
    }
    for (size_t i = 0; i < sa.size(); ++i) {
        if (!(sa[i] == sb[i])) {
            std::ostringstream os;
            os << "segment " << i << " differs: " << sa[i].num << "/" << sa[i].den << " x" << sa[i].mult
               << " vs " << sb[i].num << "/" << sb[i].den << " x" << sb[i].mult;
            return os.str();
        }
    }
    return std::nullopt;
}

}  // namespace goss
