#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/simplex.hpp"

using namespace tangle;
using namespace tangle::simplex;

TEST_CASE("monotone maps reject bad data") {
  CHECK_THROWS_AS(SimplexObject(-1), Error);
  CHECK_THROWS_AS(MonotoneMap({1, 0}, SimplexObject(2)), Error);
  CHECK_THROWS_AS(MonotoneMap({0, 3}, SimplexObject(2)), Error);
  CHECK_THROWS_AS(MonotoneMap(SimplexObject(2), SimplexObject(2), {0, 1}), Error);
  CHECK_NOTHROW(MonotoneMap({0, 0, 2}, SimplexObject(2)));
}

TEST_CASE("cofaces and codegeneracies") {
  CHECK(MonotoneMap::coface(2, 1).values() == std::vector<int>{0, 2});
  CHECK(MonotoneMap::codegeneracy(1, 0).values() == std::vector<int>{0, 0, 1});
  // sigma^j delta^i = id for i = j, j + 1
  for (int n = 0; n < 4; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i : {j, j + 1}) {
        const auto composite = compose_monotone(MonotoneMap::coface(n + 1, i), MonotoneMap::codegeneracy(n, j));
        CHECK(composite == MonotoneMap::identity(SimplexObject(n)));
      }
}

TEST_CASE("all_monotone matches a direct enumeration") {
  for (int b = 0; b <= 4; ++b)
    for (int a = 0; a <= 4; ++a) {
      const auto maps = all_monotone(b, a);
      const auto tuples = oracle::monotone_tuples(b, a);
      REQUIRE(maps.size() == tuples.size());
      for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i].values() == tuples[i]);
    }
}

TEST_CASE("epi-mono factorization recomposes") {
  for (int b = 0; b <= 3; ++b)
    for (int a = 0; a <= 3; ++a)
      for (const auto& f : all_monotone(b, a)) {
        const auto [inj, surj] = f.epi_mono();
        CHECK(surj.is_surjective());
        CHECK(inj.is_injective());
        CHECK(compose_monotone(surj, inj) == f);
      }
}

TEST_CASE("phi-hull agrees with the case table on edges and vertices") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& phi : all_monotone(b, a)) {
        for (int i = 1; i <= a; ++i) {
          const auto h = phi_hull(phi, ConvexSubset(i - 1, i, SimplexObject(a)));
          CHECK(std::pair{h.lo(), h.hi()} == oracle::phi_edge(phi.values(), a, i));
        }
        for (int i = 0; i <= a; ++i) {
          const auto h = phi_hull(phi, ConvexSubset(i, i, SimplexObject(a)));
          CHECK(std::pair{h.lo(), h.hi()} == oracle::phi_vertex(phi.values(), a, i));
        }
      }
}

TEST_CASE("phi-hull is the least interval with ends in the image") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& phi : all_monotone(b, a))
        for (int lo = 0; lo <= a; ++lo)
          for (int hi = lo; hi <= a; ++hi) {
            const ConvexSubset c(lo, hi, SimplexObject(a));
            const auto h = phi_hull(phi, c);
            CHECK(std::pair{h.lo(), h.hi()} == oracle::phi_search(phi.values(), a, lo, hi));
            CHECK(h.contains(c));
            // idempotent
            CHECK(phi_hull(phi, h) == h);
          }
}

TEST_CASE("twisted square restriction") {
  SUBCASE("identity square restricts to the identity") {
    for (const auto& phi : all_monotone(1, 3))
      for (int lo = 0; lo <= 3; ++lo)
        for (int hi = lo; hi <= 3; ++hi) {
          const auto id = MonotoneMap::identity(SimplexObject(3));
          const auto r = twisted_square_restriction(id, MonotoneMap::identity(SimplexObject(1)), phi, phi,
                                                    ConvexSubset(lo, hi, SimplexObject(3)));
          CHECK(r == MonotoneMap::identity(SimplexObject(r.source().p())));
        }
  }
  SUBCASE("an injective f restricts") {
    const MonotoneMap f({0, 1, 3}, SimplexObject(3));
    const MonotoneMap phi1({1, 2}, SimplexObject(2));
    const auto g = MonotoneMap::identity(SimplexObject(1));
    const auto phi0 = compose_monotone(phi1, f);
    CHECK(twisted_square_restriction(f, g, phi0, phi1, ConvexSubset(0, 0, SimplexObject(2))).values() ==
          std::vector<int>{0, 1});
    CHECK(twisted_square_restriction(f, g, phi0, phi1, ConvexSubset(0, 2, SimplexObject(2))).values() ==
          std::vector<int>{0, 1, 3});
    CHECK(twisted_square_restriction(f, g, phi0, phi1, ConvexSubset(2, 2, SimplexObject(2))).values() ==
          std::vector<int>{0});
  }
  SUBCASE("a collapsing f can break the bounds") {
    // phi1 = (0,2), f = (0,0,1), C1 = {1}: C1^phi1 = [0,2] but the target hull is {0}.
    const MonotoneMap f({0, 0, 1}, SimplexObject(2));
    const MonotoneMap phi1({0, 2}, SimplexObject(2));
    const auto phi0 = compose_monotone(phi1, f);
    CHECK_THROWS_AS(twisted_square_restriction(f, MonotoneMap::identity(SimplexObject(1)), phi0, phi1,
                                               ConvexSubset(1, 1, SimplexObject(2))),
                    InternalError);
  }
  SUBCASE("non-commuting squares are rejected") {
    const auto id = MonotoneMap::identity(SimplexObject(1));
    CHECK_THROWS_AS(twisted_square_restriction(id, id, MonotoneMap({0, 0}, SimplexObject(1)), id,
                                               ConvexSubset(0, 0, SimplexObject(1))),
                    Error);
  }
}

TEST_CASE("interval covers localize to ordinals") {
  const IntervalCover v({{0, Rational(2, 5)}, {Rational(3, 5), 1}});
  const IntervalCover u({{0, Rational(1, 10)}, {Rational(1, 5), Rational(3, 10)}, {Rational(7, 10), 1}});
  CHECK(localize_cover(v).p() == 0);
  CHECK(localize_cover(u).p() == 1);
  CHECK(u.is_contained_in(v));
  CHECK_FALSE(v.is_contained_in(u));
  CHECK(cover_inclusion_map(u, v).values() == std::vector<int>{1});
  CHECK_THROWS_AS(cover_inclusion_map(v, u), Error);
  CHECK_THROWS_AS(IntervalCover({{0, 1}}), Error);
  CHECK_THROWS_AS(IntervalCover({{0, Rational(1, 2)}, {Rational(1, 3), 1}}), Error);
}

TEST_CASE("cover inclusion is functorial") {
  const IntervalCover w({{0, Rational(1, 2)}, {Rational(3, 5), 1}});
  const IntervalCover v({{0, Rational(2, 5)}, {Rational(3, 5), Rational(4, 5)}, {Rational(9, 10), 1}});
  const IntervalCover u({{0, Rational(1, 10)}, {Rational(1, 5), Rational(3, 10)}, {Rational(7, 10), Rational(3, 4)},
                         {Rational(19, 20), 1}});
  REQUIRE(u.is_contained_in(v));
  REQUIRE(v.is_contained_in(w));
  CHECK(compose_monotone(cover_inclusion_map(v, w), cover_inclusion_map(u, v)) == cover_inclusion_map(u, w));
}
