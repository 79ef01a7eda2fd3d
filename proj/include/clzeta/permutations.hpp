#pragma once

#include "clzeta/rational.hpp"

namespace clzeta {

/// Number of r-tuples of pairwise commuting permutations of n letters, summing
/// centralizer sizes recursively: count(r, S) = sum_{x in S} count(r - 1, S cap C(x)).
/// Throws BudgetExceededError for n > 7, or n > 6 when r >= 3.
BigInt commuting_perm_count(int n, int r);

} // namespace clzeta
