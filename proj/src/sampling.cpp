#include "goss/sampling.hpp"

namespace goss {

PadicExponent random_qfull_exponent(uint32_t p, uint32_t b, std::mt19937_64& rng, bool leading_nonzero) {
    std::uniform_int_distribution<uint32_t> digit(0, p - 1);
    std::uniform_int_distribution<uint32_t> nz(1, p - 1);
    size_t T = 6, L = static_cast<size_t>(b) * 4;
    BigInt pre = 0, pp = 1;
    for (size_t i = 0; i < T; ++i) {
        uint32_t d = (leading_nonzero && i < b) ? nz(rng) : digit(rng);
        pre += BigInt(d) * pp;
        pp *= p;
    }
    BigInt bv = 0, bp = 1;
    for (size_t i = 0; i < L; ++i) {
        uint32_t d = (i < b) ? nz(rng) : digit(rng);
        bv += BigInt(d) * bp;
        bp *= p;
    }
    BigInt den = 1 - bp;
    return PadicExponent::from_ratio(p, pre * den + pp * bv, den);
}

}  // namespace goss
