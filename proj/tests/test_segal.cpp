#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/segal.hpp"

using namespace tangle::segal;
using tangle::simplex::MonotoneMap;
using tangle::simplex::SimplexObject;

namespace {

const std::vector<std::vector<int>> z2{{0, 1}, {1, 0}};
const std::vector<std::vector<int>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

// The arrow of the nerve's edge for element m.
int edge_of(const SimplicialData& x, const SegCompletion& c, int m) {
  for (int e = 0; e < x.size(1); ++e)
    if (x.name(1, e) == x.name(1, m)) return *c.class_of_edge(e);
  return -1;
}

}  // namespace

TEST_CASE("nerves satisfy the simplicial identities and the Segal condition") {
  for (const auto& table : {z2, z3}) {
    const auto x = nerve(monoid_category(table), 3);
    CHECK_NOTHROW(x.check_identities());
    CHECK(x.size(0) == 1);
    CHECK(x.size(1) == static_cast<int>(table.size()));
    CHECK(x.size(2) == static_cast<int>(table.size() * table.size()));
    CHECK(is_segal(x, 2));
    CHECK(is_segal(x, 3));
  }
  const auto p = nerve(poset_category(2), 3);
  CHECK(p.size(0) == 3);
  CHECK(p.size(1) == 6);
  CHECK(p.size(2) == 10);
  CHECK(is_segal(p, 3));
}

TEST_CASE("a graph is not Segal once it has a composable pair") {
  const auto g = graph_simplicial(3, {{0, 1}, {1, 2}}, 2);
  CHECK_NOTHROW(g.check_identities());
  CHECK_FALSE(is_segal(g, 2));
  const auto single = graph_simplicial(2, {{0, 1}}, 2);
  CHECK(is_segal(single, 2));
}

TEST_CASE("face maps act as monotone maps") {
  const auto x = nerve(poset_category(2), 2);
  for (int s = 0; s < x.size(2); ++s)
    for (int i = 0; i <= 2; ++i) CHECK(x.act(MonotoneMap::coface(2, i), s) == x.face(2, i, s));
}

TEST_CASE("completion of a monoid nerve returns the monoid") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& table : oracle::monoids_up_to_iso(n)) {
      const auto x = nerve(monoid_category(table), 3);
      const auto c = seg_complete(x, 4);
      REQUIRE(c.stabilized);
      CHECK(c.arrows.size() == static_cast<std::size_t>(n));
      CHECK(unit_is_isomorphism(x, c));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const auto ab = c.compose(edge_of(x, c, a), edge_of(x, c, b));
          REQUIRE(ab);
          // "a then b" in the nerve of a monoid is the product a.b
          CHECK(*ab == edge_of(x, c, table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
        }
    }
}

TEST_CASE("completion of a spine adds the composite") {
  const auto g = graph_simplicial(3, {{0, 1}, {1, 2}}, 2);
  const auto c = seg_complete(g, 3);
  CHECK(c.stabilized);
  CHECK(c.arrows.size() == 6);
  CHECK(c.hom(0, 2).size() == 1);
  CHECK(c.hom(2, 0).empty());
  CHECK_FALSE(unit_is_isomorphism(g, c));
}

TEST_CASE("the wedge of two Z/2 never stabilizes") {
  const auto x = nerve(wedge(monoid_category(z2, "g"), monoid_category(z2, "h")), 3);
  CHECK_NOTHROW(x.check_identities());
  for (std::size_t budget = 1; budget <= 6; ++budget) {
    const auto c = seg_complete(x, budget);
    CHECK(c.arrows.size() == 2 * budget + 1);
    CHECK_FALSE(c.stabilized);
  }
}

TEST_CASE("formula values are iterated fiber products") {
  const auto x = nerve(monoid_category(z3), 3);
  // phi : [0] -> [2] hitting 1 cuts [2] into two edges
  const auto v = seg_formula_value(x, MonotoneMap({1}, SimplexObject(2)));
  CHECK(v.cuts == std::vector<int>{0, 1, 2});
  CHECK(v.elements.size() == 9);
  // phi = id on [1]: one edge
  CHECK(seg_formula_value(x, MonotoneMap::identity(SimplexObject(1))).elements.size() == 3);
  // phi hitting both ends of [2]: one piece holding a 2-simplex
  CHECK(seg_formula_value(x, MonotoneMap({0, 2}, SimplexObject(2))).elements.size() == 9);
  const auto point = seg_formula_value(x, MonotoneMap({0}, SimplexObject(0)));
  CHECK(point.pieces() == 1);
  CHECK(point.elements.size() == 1);
}

TEST_CASE("truncated colimit of a Segal nerve is the nerve") {
  const auto x = nerve(monoid_category(z2), 3);
  const auto r = seg_colimit_truncated(x, 1, 2);
  CHECK(r.stabilized);
  CHECK(r.value.size() == 2);
  const auto unit = colimit_unit(x, r.value);
  CHECK(std::set<int>(unit.begin(), unit.end()).size() == 2);
}

TEST_CASE("truncated colimit composes a spine") {
  const auto g = graph_simplicial(3, {{0, 1}, {1, 2}}, 3);
  const auto r1 = seg_colimit_truncated(g, 1, 3);
  CHECK(r1.stabilized);
  CHECK(r1.value.size() == 6);
  const auto r2 = seg_colimit_truncated(g, 2, 3);
  CHECK(r2.stabilized);
  CHECK(r2.value.size() == 10);
}

TEST_CASE("bad simplicial data is rejected") {
  CHECK_THROWS_AS(graph_simplicial(2, {{0, 5}}, 2), tangle::Error);
  CHECK_THROWS_AS(SimplicialData({1, 1}, {{{0}, {1}}}, {{{0}}}), tangle::Error);
}
