#ifndef GOSS_SAMPLING_HPP
#define GOSS_SAMPLING_HPP

#include <random>

#include "goss/padic.hpp"

namespace goss {

// Seeded q-full exponent: a random preperiod followed by a periodic digit
// block with a forced nonzero digit in every residue class mod b, carried as
// an exact rational tag so every downstream query is certified. With
// leading_nonzero the first b digits are also forced nonzero, which keeps the
// first slope y_i(p-1) small enough to sit inside a fixed precision window.
PadicExponent random_qfull_exponent(uint32_t p, uint32_t b, std::mt19937_64& rng,
                                    bool leading_nonzero = false);

}  // namespace goss

#endif
