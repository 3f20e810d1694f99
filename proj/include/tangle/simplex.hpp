#pragma once

// Combinatorics of the simplex category: monotone maps between the finite
// ordinals [p] = {0 < 1 < ... < p}, convex subsets, the hull operator and
// the phi-hull C |-> C^phi, plus the interval-cover model that localizes onto
// the opposite simplex category.

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tangle/numeric.hpp"

namespace tangle::simplex {

/// The ordinal [p]. p >= 0.
class SimplexObject {
 public:
  explicit SimplexObject(int p);

  int p() const noexcept { return p_; }
  int size() const noexcept { return p_ + 1; }

  friend bool operator==(SimplexObject, SimplexObject) = default;

 private:
  int p_;
};

/// A nondecreasing map [source] -> [target].
class MonotoneMap {
 public:
  MonotoneMap(SimplexObject source, SimplexObject target, std::vector<int> values);
  /// Source is inferred from the number of values.
  MonotoneMap(std::vector<int> values, SimplexObject target);

  static MonotoneMap identity(SimplexObject x);
  static MonotoneMap constant(SimplexObject source, SimplexObject target, int value);
  /// delta^i : [n-1] -> [n], the injection skipping i.
  static MonotoneMap coface(int n, int i);
  /// sigma^i : [n+1] -> [n], the surjection hitting i twice.
  static MonotoneMap codegeneracy(int n, int i);

  SimplexObject source() const noexcept { return source_; }
  SimplexObject target() const noexcept { return target_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_injective() const;
  bool is_surjective() const;

  /// theta = injection o surjection.
  std::pair<MonotoneMap, MonotoneMap> epi_mono() const;

  std::string to_string() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
    if (auto c = a.source_.p() <=> b.source_.p(); c != 0) return c;
    if (auto c = a.target_.p() <=> b.target_.p(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  void validate() const;

  SimplexObject source_;
  SimplexObject target_;
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f);

/// Every monotone map [b] -> [a], in lexicographic order of value tuples.
std::vector<MonotoneMap> all_monotone(int b, int a);

/// A nonempty interval [lo, hi] inside an ambient [p].
class ConvexSubset {
 public:
  ConvexSubset(int lo, int hi, SimplexObject ambient);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  int length() const noexcept { return hi_ - lo_; }
  SimplexObject ambient() const noexcept { return ambient_; }
  bool contains(const ConvexSubset& other) const;
  bool contains(int i) const { return lo_ <= i && i <= hi_; }

  std::string to_string() const;

  friend bool operator==(const ConvexSubset&, const ConvexSubset&) = default;

 private:
  int lo_;
  int hi_;
  SimplexObject ambient_;
};

std::ostream& operator<<(std::ostream& os, const ConvexSubset& c);

/// g o f. Requires f.target == g.source.
MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g);

/// Convex hull of f(C): [f(C.lo), f(C.hi)].
ConvexSubset hull_image(const MonotoneMap& f, const ConvexSubset& c);

/// C^phi for phi : [b] -> A and C convex in A:
/// [ sup{phi(j) <= min C}, inf{phi(j) >= max C} ] with sup(empty) = 0 and
/// inf(empty) = max A.
ConvexSubset phi_hull(const MonotoneMap& phi, const ConvexSubset& c);

/// For a commuting square phi0 = f o phi1 o g, the restriction of f to
/// C1^{phi1} -> Hull(f C1)^{phi0}, written as a map between ordinals
/// [len C1^{phi1}] -> [len Hull(f C1)^{phi0}]. Both bounding inequalities
/// are checked; a violation throws InternalError.
MonotoneMap twisted_square_restriction(const MonotoneMap& f, const MonotoneMap& g,
                                       const MonotoneMap& phi0, const MonotoneMap& phi1,
                                       const ConvexSubset& c1);

/// One connected component of an open cover of [0,1]: the first is [0, hi),
/// the last (lo, 1], the others (lo, hi).
struct CoverInterval {
  Rational lo;
  Rational hi;
};

/// A finite open cover U of [0,1] by disjoint intervals, one containing 0 and
/// one containing 1. Endpoints are exact rationals.
class IntervalCover {
 public:
  explicit IntervalCover(std::vector<CoverInterval> components);

  const std::vector<CoverInterval>& components() const noexcept { return components_; }
  std::size_t gap_count() const noexcept { return components_.size() - 1; }

  /// Is every component of *this inside some component of other?
  bool is_contained_in(const IntervalCover& other) const;

 private:
  std::vector<CoverInterval> components_;
};

/// pi(U): [m] with m + 1 the number of components of [0,1] \ U.
SimplexObject localize_cover(const IntervalCover& u);

/// For U inside V: the map pi(V) -> pi(U) sending each complement component
/// of V to the complement component of U containing it.
MonotoneMap cover_inclusion_map(const IntervalCover& u, const IntervalCover& v);

}  // namespace tangle::simplex
