#pragma once

// Kauffman bracket of a braid closure, computed from Temperley-Lieb
// smoothings of the braid word alone.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "tangle/laurent.hpp"

namespace oracle {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

/// Letters +-(i+1) for sigma_i^{+-1}. A positive crossing contributes A for
/// the vertical smoothing and A^-1 for the horizontal one; a negative crossing
/// the other way round. Normalized so that one loop is 1.
inline tangle::Laurent braid_bracket(int strands, const std::vector<int>& letters) {
  using tangle::Laurent;
  const Laurent delta = -Laurent::A(2) - Laurent::A(-2);
  const int n = static_cast<int>(letters.size());
  Laurent total;
  for (long state = 0; state < (1L << n); ++state) {
    // node (level, strand): the point of strand s just above letter `level`
    auto node = [&](int level, int s) { return level * strands + s; };
    std::vector<int> parent(static_cast<std::size_t>((n + 1) * strands));
    std::iota(parent.begin(), parent.end(), 0);
    auto join = [&](int x, int y) { parent[static_cast<std::size_t>(find_root(parent, x))] = find_root(parent, y); };
    int exponent = 0;
    for (int t = 0; t < n; ++t) {
      const int i = std::abs(letters[static_cast<std::size_t>(t)]) - 1;
      const bool positive = letters[static_cast<std::size_t>(t)] > 0;
      const bool vertical = ((state >> t) & 1) == 0;
      exponent += (vertical == positive) ? 1 : -1;
      for (int s = 0; s < strands; ++s)
        if (s != i && s != i + 1) join(node(t, s), node(t + 1, s));
      if (vertical) {
        join(node(t, i), node(t + 1, i));
        join(node(t, i + 1), node(t + 1, i + 1));
      } else {
        join(node(t, i), node(t, i + 1));
        join(node(t + 1, i), node(t + 1, i + 1));
      }
    }
    for (int s = 0; s < strands; ++s) join(node(0, s), node(n, s));  // closure
    int loops = 0;
    for (int x = 0; x < (n + 1) * strands; ++x)
      if (find_root(parent, x) == x) ++loops;
    total += Laurent::A(exponent) * delta.pow(loops - 1);
  }
  return total;
}

}  // namespace oracle
