#pragma once

// Finite simplicial sets truncated at a level K, stored as explicit face and
// degeneracy tables, and builders for nerves of small categories.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangle/simplex.hpp"

namespace tangle::segal {

/// X_0 ... X_K as sets {0, ..., |X_n| - 1}.
/// face(n, i) : X_n -> X_{n-1} for 1 <= n <= K, 0 <= i <= n.
/// degeneracy(n, i) : X_n -> X_{n+1} for n < K, 0 <= i <= n.
class SimplicialData {
 public:
  using Table = std::vector<int>;

  SimplicialData(std::vector<int> sizes, std::vector<std::vector<Table>> faces,
                 std::vector<std::vector<Table>> degeneracies, std::vector<std::vector<std::string>> names = {});

  int top() const noexcept { return static_cast<int>(sizes_.size()) - 1; }
  int size(int n) const;
  int face(int n, int i, int x) const;
  int degeneracy(int n, int i, int x) const;
  const std::string& name(int n, int x) const;

  /// X(theta) : X_n -> X_m for theta : [m] -> [n].
  int act(const simplex::MonotoneMap& theta, int x) const;

  /// Vertex k of an n-simplex.
  int vertex(int n, int x, int k) const;

  /// Whether an element of X_1 is s_0 of a vertex.
  bool is_degenerate_edge(int e) const;

  /// Throws Error naming the first simplicial identity that fails.
  void check_identities() const;

 private:
  void check_level(int n) const;

  std::vector<int> sizes_;
  std::vector<std::vector<Table>> faces_;
  std::vector<std::vector<Table>> degeneracies_;
  std::vector<std::vector<std::string>> names_;
};

/// A small category given by callbacks, used to build (truncated) nerves.
/// Arrows are integer ids; compose(f, g) is "f then g" and may be undefined.
struct SmallCategory {
  int objects = 1;
  std::vector<int> arrow_source;
  std::vector<int> arrow_target;
  std::vector<std::string> arrow_name;
  /// identity[x] is the id of the identity arrow at object x.
  std::vector<int> identity;
  std::function<std::optional<int>(int f, int g)> compose;
  /// Chains outside this predicate are left out of the nerve. Must be closed
  /// under faces and degeneracies; absent means every chain is kept.
  std::function<bool(const std::vector<int>& chain)> admit;
};

/// Levels 0..K of the nerve: X_n = admitted chains of n composable arrows.
SimplicialData nerve(const SmallCategory& c, int top_level);

/// One-object category of a finite monoid given by its table (0 is the unit).
SmallCategory monoid_category(const std::vector<std::vector<int>>& table, const std::string& name = "m");

/// The free monoid on one generator, truncated: arrows x^0..x^max_length.
/// Chains are kept while their composite has length <= max_length.
SmallCategory free_monoid_category(const std::string& generator, int max_length);

/// The wedge N(A) v N(B): both one-object categories glued at the object.
/// Chains must lie entirely in A or entirely in B, so the result is the
/// levelwise pushout of nerves over the point.
SmallCategory wedge(const SmallCategory& a, const SmallCategory& b);

/// The poset [n] as a category.
SmallCategory poset_category(int n);

/// A directed graph as simplicial data: vertices, edges, and only degenerate
/// higher simplices.
SimplicialData graph_simplicial(int vertices, const std::vector<std::pair<int, int>>& edges, int top_level,
                                const std::vector<std::string>& edge_names = {});

}  // namespace tangle::segal
