#include "clzeta/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "clzeta/errors.hpp"

namespace clzeta {

namespace {

using Perm = std::vector<int>;

BigInt count(int r, const std::vector<int>& candidates, const std::vector<std::vector<bool>>& commutes)
{
    if (r == 0)
        return 1;
    if (r == 1)
        return static_cast<unsigned long>(candidates.size());
    BigInt total = 0;
    std::vector<int> next;
    for (int x : candidates) {
        next.clear();
        for (int y : candidates)
            if (commutes[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])
                next.push_back(y);
        total += count(r - 1, next, commutes);
    }
    return total;
}

} // namespace

BigInt commuting_perm_count(int n, int r)
{
    if (n < 0 || r < 0)
        throw InvalidArgumentError("n and r must be non-negative");
    if (n > 7 || (r >= 3 && n > 6))
        throw BudgetExceededError("commuting permutation count is limited to n <= 7 (n <= 6 for r >= 3)");

    std::vector<Perm> perms;
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    if (r <= 1)
        return r == 0 ? BigInt(1) : BigInt(static_cast<unsigned long>(perms.size()));

    const std::size_t size = perms.size();
    std::vector<std::vector<bool>> commutes(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k)
                ok = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(k)])] ==
                     perms[j][static_cast<std::size_t>(perms[i][static_cast<std::size_t>(k)])];
            commutes[i][j] = commutes[j][i] = ok;
        }
    std::vector<int> all(size);
    std::iota(all.begin(), all.end(), 0);
    return count(r, all, commutes);
}

} // namespace clzeta
