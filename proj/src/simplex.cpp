#include "tangle/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle::simplex {

SimplexObject::SimplexObject(int p) : p_(p) {
  if (p < 0) throw Error("simplex object [" + std::to_string(p) + "] has negative dimension");
}

MonotoneMap::MonotoneMap(SimplexObject source, SimplexObject target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  validate();
}

namespace {

SimplexObject source_for(const std::vector<int>& values) {
  if (values.empty()) throw Error("monotone map: no values");
  return SimplexObject(static_cast<int>(values.size()) - 1);
}

}  // namespace

MonotoneMap::MonotoneMap(std::vector<int> values, SimplexObject target)
    : source_(source_for(values)), target_(target), values_(std::move(values)) {
  validate();
}

void MonotoneMap::validate() const {
  if (static_cast<int>(values_.size()) != source_.size())
    throw Error("monotone map: expected " + std::to_string(source_.size()) + " values, got " +
                std::to_string(values_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_.p())
      throw Error("monotone map: value " + std::to_string(values_[i]) + " outside [0," +
                  std::to_string(target_.p()) + "]");
    if (i > 0 && values_[i - 1] > values_[i]) throw Error("monotone map: values decrease");
  }
}

MonotoneMap MonotoneMap::identity(SimplexObject x) {
  std::vector<int> v(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) v[static_cast<std::size_t>(i)] = i;
  return MonotoneMap(x, x, std::move(v));
}

MonotoneMap MonotoneMap::constant(SimplexObject source, SimplexObject target, int value) {
  return MonotoneMap(source, target, std::vector<int>(static_cast<std::size_t>(source.size()), value));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw Error("coface index out of range");
  std::vector<int> v;
  for (int j = 0; j <= n; ++j)
    if (j != i) v.push_back(j);
  return MonotoneMap(SimplexObject(n - 1), SimplexObject(n), std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw Error("codegeneracy index out of range");
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return MonotoneMap(SimplexObject(n + 1), SimplexObject(n), std::move(v));
}

bool MonotoneMap::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const {
  return values_.front() == 0 && values_.back() == target_.p() &&
         std::adjacent_find(values_.begin(), values_.end(),
                            [](int a, int b) { return b > a + 1; }) == values_.end();
}

std::pair<MonotoneMap, MonotoneMap> MonotoneMap::epi_mono() const {
  std::vector<int> image;
  std::vector<int> surj;
  for (int v : values_) {
    if (image.empty() || image.back() != v) image.push_back(v);
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  SimplexObject mid(static_cast<int>(image.size()) - 1);
  return {MonotoneMap(mid, target_, std::move(image)), MonotoneMap(source_, mid, std::move(surj))};
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "):[" << source_.p() << "]->[" << target_.p() << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f) { return os << f.to_string(); }

std::vector<MonotoneMap> all_monotone(int b, int a) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(b + 1), 0);
  while (true) {
    out.emplace_back(SimplexObject(b), SimplexObject(a), v);
    // next nondecreasing tuple in lexicographic order
    int i = b;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == a) --i;
    if (i < 0) break;
    int nv = v[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j <= b; ++j) v[static_cast<std::size_t>(j)] = nv;
  }
  return out;
}

ConvexSubset::ConvexSubset(int lo, int hi, SimplexObject ambient) : lo_(lo), hi_(hi), ambient_(ambient) {
  if (lo < 0 || lo > hi || hi > ambient.p())
    throw Error("convex subset [" + std::to_string(lo) + "," + std::to_string(hi) + "] not inside [" +
                std::to_string(ambient.p()) + "]");
}

bool ConvexSubset::contains(const ConvexSubset& other) const {
  return ambient_ == other.ambient_ && lo_ <= other.lo_ && other.hi_ <= hi_;
}

std::string ConvexSubset::to_string() const {
  if (lo_ == hi_) return "{" + std::to_string(lo_) + "}";
  return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

std::ostream& operator<<(std::ostream& os, const ConvexSubset& c) { return os << c.to_string(); }

MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.target() == g.source()))
    throw Error("compose_monotone: target [" + std::to_string(f.target().p()) + "] != source [" +
                std::to_string(g.source().p()) + "]");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(f.source(), g.target(), std::move(v));
}

ConvexSubset hull_image(const MonotoneMap& f, const ConvexSubset& c) {
  if (!(c.ambient() == f.source())) throw Error("hull_image: subset is not in the source of f");
  return ConvexSubset(f(c.lo()), f(c.hi()), f.target());
}

ConvexSubset phi_hull(const MonotoneMap& phi, const ConvexSubset& c) {
  if (!(c.ambient() == phi.target())) throw Error("phi_hull: subset is not in the target of phi");
  int lo = 0;
  int hi = c.ambient().p();
  bool have_lo = false;
  bool have_hi = false;
  for (int v : phi.values()) {
    if (v <= c.lo() && (!have_lo || v > lo)) {
      lo = v;
      have_lo = true;
    }
    if (v >= c.hi() && (!have_hi || v < hi)) {
      hi = v;
      have_hi = true;
    }
  }
  return ConvexSubset(lo, hi, c.ambient());
}

MonotoneMap twisted_square_restriction(const MonotoneMap& f, const MonotoneMap& g,
                                       const MonotoneMap& phi0, const MonotoneMap& phi1,
                                       const ConvexSubset& c1) {
  // f : A1 -> A0, g : B0 -> B1, phi1 : B1 -> A1, phi0 : B0 -> A0
  if (!(phi1.target() == f.source()) || !(g.target() == phi1.source()) ||
      !(phi0.source() == g.source()) || !(phi0.target() == f.target()))
    throw Error("twisted_square_restriction: maps do not form a square");
  if (compose_monotone(compose_monotone(g, phi1), f) != phi0)
    throw Error("twisted_square_restriction: square does not commute");
  if (!(c1.ambient() == phi1.target()))
    throw Error("twisted_square_restriction: subset is not in the target of phi1");

  const ConvexSubset from = phi_hull(phi1, c1);
  const ConvexSubset to = phi_hull(phi0, hull_image(f, c1));
  if (f(from.lo()) < to.lo() || f(from.hi()) > to.hi())
    throw InternalError("twisted_square_restriction: f does not restrict " + from.to_string() +
                        " into " + to.to_string() + " for f = " + f.to_string());

  std::vector<int> v;
  for (int i = from.lo(); i <= from.hi(); ++i) v.push_back(f(i) - to.lo());
  return MonotoneMap(SimplexObject(from.length()), SimplexObject(to.length()), std::move(v));
}

namespace {

struct Bound {
  Rational value;
  bool closed;
};

Bound lower(const IntervalCover& u, std::size_t i) { return {u.components()[i].lo, i == 0}; }

Bound upper(const IntervalCover& u, std::size_t i) {
  return {u.components()[i].hi, i + 1 == u.components().size()};
}

bool inside(const IntervalCover& u, std::size_t i, const IntervalCover& v, std::size_t j) {
  const Bound ul = lower(u, i), uh = upper(u, i), vl = lower(v, j), vh = upper(v, j);
  const bool lo_ok = vl.value < ul.value || (vl.value == ul.value && (vl.closed || !ul.closed));
  const bool hi_ok = uh.value < vh.value || (uh.value == vh.value && (vh.closed || !uh.closed));
  return lo_ok && hi_ok;
}

}  // namespace

IntervalCover::IntervalCover(std::vector<CoverInterval> components) : components_(std::move(components)) {
  if (components_.size() < 2)
    throw Error("interval cover needs at least two components so that its complement is nonempty");
  if (components_.front().lo != 0) throw Error("interval cover: first component must contain 0");
  if (components_.back().hi != 1) throw Error("interval cover: last component must contain 1");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.lo < 0 || c.hi > 1 || !(c.lo < c.hi))
      throw Error("interval cover: component " + std::to_string(i) + " is empty or leaves [0,1]");
    if (i > 0 && components_[i - 1].hi > c.lo)
      throw Error("interval cover: components " + std::to_string(i - 1) + " and " + std::to_string(i) +
                  " overlap or are unsorted");
  }
}

bool IntervalCover::is_contained_in(const IntervalCover& other) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < other.components_.size() && !found; ++j) found = inside(*this, i, other, j);
    if (!found) return false;
  }
  return true;
}

SimplexObject localize_cover(const IntervalCover& u) {
  return SimplexObject(static_cast<int>(u.gap_count()) - 1);
}

MonotoneMap cover_inclusion_map(const IntervalCover& u, const IntervalCover& v) {
  if (!u.is_contained_in(v)) throw Error("cover_inclusion_map: U is not contained in V");
  const auto& uc = u.components();
  const auto& vc = v.components();
  std::vector<int> values;
  for (std::size_t j = 0; j + 1 < vc.size(); ++j) {
    // complement component [vc[j].hi, vc[j+1].lo] of V
    int target = -1;
    for (std::size_t i = 0; i + 1 < uc.size(); ++i) {
      if (uc[i].hi <= vc[j].hi && vc[j + 1].lo <= uc[i + 1].lo) {
        target = static_cast<int>(i);
        break;
      }
    }
    if (target < 0) throw InternalError("cover_inclusion_map: complement component not found");
    values.push_back(target);
  }
  return MonotoneMap(localize_cover(v), localize_cover(u), std::move(values));
}

}  // namespace tangle::simplex
