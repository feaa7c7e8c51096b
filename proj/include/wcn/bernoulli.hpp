#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "wcn/arith.hpp"

namespace wcn {

using BigRational = boost::multiprecision::cpp_rational;

/// Index cap for the exact recurrence; only small indices are ever needed here.
inline constexpr unsigned kBernoulliCap = 64;

/// Exact B_i with B_1 = -1/2 (generating function x/(e^x - 1)). i <= 64.
BigRational bernoulli(unsigned i);

/// Denominator of B_{2n} as the product of all primes p with p-1 | 2n,
/// computed without touching any Bernoulli number. two_n must be even and >= 2.
BigInt bernoulli_denominator(u64 two_n);

}  // namespace wcn
