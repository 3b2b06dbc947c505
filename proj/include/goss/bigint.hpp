#ifndef GOSS_BIGINT_HPP
#define GOSS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace goss {

// Digit partial sums and R-values are sums of p-powers p^{i-1}q^w and blow
// past 64 bits already at moderate n, so all of that arithmetic is exact
// multiprecision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace goss

#endif
