#pragma once

// Independent reference computations for the tests and the acceptance run.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// C^phi for C = {i-1 < i} or C = {i}, read off the case table for phi : [b] -> [a]
/// given by its values. Returns [lo, hi].
inline std::pair<int, int> phi_edge(const std::vector<int>& phi, int a, int i) {
  const int b = static_cast<int>(phi.size()) - 1;
  if (i <= phi[0]) return {0, phi[0]};
  if (phi[static_cast<std::size_t>(b)] <= i - 1) return {phi[static_cast<std::size_t>(b)], a};
  for (int j = 1; j <= b; ++j)
    if (phi[static_cast<std::size_t>(j) - 1] <= i - 1 && i <= phi[static_cast<std::size_t>(j)])
      return {phi[static_cast<std::size_t>(j) - 1], phi[static_cast<std::size_t>(j)]};
  return {-1, -1};
}

inline std::pair<int, int> phi_vertex(const std::vector<int>& phi, int a, int i) {
  const int b = static_cast<int>(phi.size()) - 1;
  if (i < phi[0]) return {0, phi[0]};
  if (phi[static_cast<std::size_t>(b)] < i) return {phi[static_cast<std::size_t>(b)], a};
  for (int j = 0; j <= b; ++j)
    if (phi[static_cast<std::size_t>(j)] == i) return {i, i};
  for (int j = 1; j <= b; ++j)
    if (phi[static_cast<std::size_t>(j) - 1] < i && i < phi[static_cast<std::size_t>(j)])
      return {phi[static_cast<std::size_t>(j) - 1], phi[static_cast<std::size_t>(j)]};
  return {-1, -1};
}

/// The smallest interval containing [lo, hi] whose ends are 0 or a value of
/// phi (lower end) and a or a value of phi (upper end), by search.
inline std::pair<int, int> phi_search(const std::vector<int>& phi, int a, int lo, int hi) {
  auto lower_ok = [&](int x) {
    if (x == 0) return true;
    for (int v : phi)
      if (v == x) return true;
    return false;
  };
  auto upper_ok = [&](int y) {
    if (y == a) return true;
    for (int v : phi)
      if (v == y) return true;
    return false;
  };
  std::pair<int, int> best{0, a};
  for (int x = 0; x <= lo; ++x)
    for (int y = hi; y <= a; ++y)
      if (lower_ok(x) && upper_ok(y) && y - x < best.second - best.first) best = {x, y};
  return best;
}

/// Nondecreasing value tuples [b] -> [a].
inline std::vector<std::vector<int>> monotone_tuples(int b, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == b + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= a; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// 2x2 integer matrices modulo sign: a faithful copy of Z/2 * Z/3 = PSL(2, Z)
/// with generators S (order 2) and U = ST (order 3).
struct Mat2 {
  std::array<long long, 4> m;

  Mat2 operator*(const Mat2& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3], m[2] * o.m[0] + m[3] * o.m[2],
             m[2] * o.m[1] + m[3] * o.m[3]}};
  }
  /// Representative with the first nonzero entry positive.
  Mat2 projective() const {
    for (long long x : m) {
      if (x > 0) return *this;
      if (x < 0) return {{-m[0], -m[1], -m[2], -m[3]}};
    }
    return *this;
  }
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 psl_s() { return {{0, -1, 1, 0}}; }
inline Mat2 psl_u() { return {{0, -1, 1, 1}}; }

/// Affine maps x -> s x + t on Z: Z/2 * Z/2 acts faithfully by the two
/// reflections x -> -x and x -> 1 - x.
struct Affine {
  long long s;
  long long t;
  /// this o o
  Affine after(const Affine& o) const { return {s * o.s, s * o.t + t}; }
  friend auto operator<=>(const Affine&, const Affine&) = default;
};

/// Every monoid structure on {0, ..., n-1} with unit 0, as tables.
inline std::vector<std::vector<std::vector<int>>> all_monoids(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> t(N, std::vector<int>(N, 0));
  for (std::size_t i = 0; i < N; ++i) t[0][i] = t[i][0] = static_cast<int>(i);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t j = 1; j < N; ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t c = 0; c < N; ++c)
            if (t[static_cast<std::size_t>(t[a][b])][c] != t[a][static_cast<std::size_t>(t[b][c])]) return;
      out.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[cells[k].first][cells[k].second] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Tables up to relabeling of the non-unit elements.
inline std::vector<std::vector<std::vector<int>>> monoids_up_to_iso(int n) {
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& t : all_monoids(n)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> canon;
    bool first = true;
    do {
      std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] =
              perm[static_cast<std::size_t>(t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
      if (first || r < canon) canon = r;
      first = false;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    if (seen.insert(canon).second) out.push_back(canon);
  }
  return out;
}

/// Fewest alternating factors of w, over every set of cut points.
template <class Letter>
int min_alternating_factors(const std::vector<Letter>& w) {
  if (w.empty()) return 0;
  const std::size_t gaps = w.size() - 1;
  int best = static_cast<int>(w.size());
  for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << gaps); ++cuts) {
    bool ok = true;
    for (std::size_t g = 0; g < gaps && ok; ++g)
      if (!((cuts >> g) & 1) && w[g] == w[g + 1]) ok = false;
    if (ok) best = std::min(best, 1 + __builtin_popcount(cuts));
  }
  return best;
}

}  // namespace oracle
