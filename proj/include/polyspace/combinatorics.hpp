#pragma once

#include <span>

#include "polyspace/rational.hpp"

namespace polyspace {

/// C(n, k), zero outside 0 <= k <= n. Exact multiplicative formula.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

/// k! / (k_1! ... k_m!) with k = sum of parts.
Integer multinomial(std::span<const int> parts);

}  // namespace polyspace
