#ifndef GOSS_NEWTON_HPP
#define GOSS_NEWTON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goss/bigint.hpp"

namespace goss {

struct NPSlope {
    BigInt num, den;  // reduced, den > 0
    long mult;
    bool operator==(const NPSlope& o) const { return num == o.num && den == o.den && mult == o.mult; }
};

// Lower convex hull of (x-degree, pi-adic valuation) points with strictly
// increasing slopes. certified_through is the largest x-degree whose hull
// membership cannot be altered by the coefficients only known to have
// valuation >= N; nothing is claimed past the last input degree.
struct NewtonPolygon {
    std::vector<NPSlope> slopes;
    long certified_through = 0;

    long total_multiplicity() const;
    std::string str() const;
};

// One input entry per x-degree 0..D: either an exact valuation or nullopt,
// meaning "valuation >= N". The list must start with (0, 0).
NewtonPolygon newton_polygon(const std::vector<std::optional<BigInt>>& valuations, const BigInt& N);

// The slope run restricted to x <= cut, truncating the final multiplicity.
std::vector<NPSlope> np_restrict(const NewtonPolygon& np, long cut);

// Exact agreement on the jointly certified range, optionally capped at the
// first max_slopes distinct slopes. Returns the first divergence description
// or nullopt when they agree.
std::optional<std::string> np_divergence(const NewtonPolygon& a, const NewtonPolygon& b,
                                         long max_slopes = -1);

}  // namespace goss

#endif
