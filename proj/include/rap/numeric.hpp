#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rap {

// Arbitrary-precision carriers.  Counts in the dimension cascades reach 21
// decimal digits, past int64, and every statistic in this library is exact:
// no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace rap
