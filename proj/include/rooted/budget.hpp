#pragma once

#include <cstddef>

namespace rooted {

// Enumeration guards shared by every exponential routine.
struct Budget {
  // Upper bound on C(q+s-1, s), the number of s-multisets of q generators.
  std::size_t max_multisets = 1'000'000;
  // Largest vertex count accepted by brute-force cover enumeration.
  int max_cover_vertices = 24;
};

}  // namespace rooted
