#pragma once

#include <set>
#include <vector>

#include "ufe/rational.hpp"
#include "ufe/solution_array.hpp"

namespace ufe {

using Denominators = std::vector<BigInt>;

/// Elements 2^a k^b (a <= 2) of S(k) in [lo, hi], ascending and unique.
std::vector<BigInt> sk_elements_between(const Base& base, const BigInt& lo, const BigInt& hi);

/// Every nondecreasing list x_1 <= ... <= x_n of elements of S(k) with
/// sum 1/x_i = 1, by exhaustive search. Shares nothing with the move-based
/// enumerator; only practical for small n.
std::set<Denominators> brute_force(const Base& base, Count n);

}  // namespace ufe
