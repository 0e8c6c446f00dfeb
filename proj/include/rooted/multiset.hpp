#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace rooted {

// C(n, k), saturating at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = k < n - k ? k : n - k;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step
    const std::size_t factor = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / factor) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

// Number of s-multisets drawn from q items.
inline std::size_t multiset_count(std::size_t q, std::size_t s) {
  if (q == 0) return s == 0 ? 1 : 0;
  return binomial(q + s - 1, s);
}

// Calls fn(indices) for every non-decreasing tuple 0 <= i_1 <= ... <= i_s < q,
// in lexicographic order.  indices is reused between calls.
template <class Fn>
void for_each_multiset(std::size_t q, std::size_t s, Fn&& fn) {
  if (q == 0 && s > 0) return;
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t t = s;
    while (t > 0 && idx[t - 1] == q - 1) --t;
    if (t == 0) return;
    const std::size_t next = idx[t - 1] + 1;
    for (std::size_t u = t - 1; u < s; ++u) idx[u] = next;
  }
}

}  // namespace rooted
