#include <numeric>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "tangle/diagram.hpp"
#include "tangle/error.hpp"

using namespace tangle;

namespace {

// Cycles of the permutation a braid word induces on its strands.
int permutation_cycles(int strands, const std::vector<int>& letters) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) std::swap(perm[static_cast<std::size_t>(std::abs(l) - 1)], perm[static_cast<std::size_t>(std::abs(l))]);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

Diagram zigzag() {
  return from_events({0}, {{Event::cup(1, 0)}, {Event::cap(0, 0)}}, AmbientDim::Planar);
}

}  // namespace

TEST_CASE("ambient dimensions") {
  CHECK(dim_from_n(2) == AmbientDim::Planar);
  CHECK(dim_from_n(3) == AmbientDim::Braided);
  CHECK(dim_from_n(4) == AmbientDim::Symmetric);
  CHECK(dim_from_n(9) == AmbientDim::Symmetric);
  CHECK_THROWS_AS(dim_from_n(1), Error);
}

TEST_CASE("elementary diagrams") {
  const auto cup = elementary(Event::cup(0, 0), AmbientDim::Planar);
  CHECK(cup.source.empty());
  CHECK(cup.target == ObjectWord{1, 0});
  const auto cap = elementary(Event::cap(0, 0), AmbientDim::Planar);
  CHECK(cap.source == ObjectWord{0, 1});
  CHECK(cap.target.empty());
  CHECK_THROWS_AS(elementary(Event::cross(true, 0, 0, 0), AmbientDim::Planar), Error);
  CHECK_NOTHROW(elementary(Event::cross(true, 0, 0, 0), AmbientDim::Braided));
}

TEST_CASE("composition and tensor") {
  const auto z = zigzag();
  CHECK(z.source == ObjectWord{0});
  CHECK(z.target == ObjectWord{0});
  CHECK(validate(z, AmbientDim::Planar).ok());
  const auto cup = elementary(Event::cup(0, 0), AmbientDim::Planar);
  CHECK_THROWS_AS(compose(cup, elementary(Event::cap(0, 1), AmbientDim::Planar), AmbientDim::Planar), Error);
  // parity agrees, so the braided composite relabels and closes the loop
  const auto loop = compose(elementary(Event::cup(0, 0), AmbientDim::Braided),
                            elementary(Event::cap(0, 1), AmbientDim::Braided), AmbientDim::Braided);
  CHECK(loop.is_closed());
  CHECK(validate(loop, AmbientDim::Braided).ok());
  const auto t = tensor(cup, elementary(Event::cup(0, 2), AmbientDim::Planar));
  CHECK(t.target == ObjectWord{1, 0, 3, 2});
  CHECK(compose(identity({0, 1}), identity({0, 1}), AmbientDim::Planar).target == ObjectWord{0, 1});
}

TEST_CASE("no crossing-free closed loop is typeable in the plane") {
  // A cup emits (k+1, k) but caps need (k, k+1).
  for (int k = -3; k <= 3; ++k)
    for (int j = -3; j <= 3; ++j) {
      const Diagram d{{}, {}, {Slice{{}, {Event::cup(0, k)}}, Slice{{k + 1, k}, {Event::cap(0, j)}}}};
      CHECK_FALSE(validate(d, AmbientDim::Planar).ok());
    }
}

TEST_CASE("validation reports issues") {
  Diagram bad{{0}, {0}, {Slice{{0}, {Event::cap(0, 0)}}}};
  const auto r = validate(bad, AmbientDim::Planar);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.to_string().empty());
  CHECK_THROWS_AS(require_valid(bad, AmbientDim::Planar), Error);
  // window
  const auto z = zigzag();
  CHECK(validate(z, AmbientDim::Planar, LabelWindow{-1, 1}).ok());
  CHECK_FALSE(validate(z, AmbientDim::Planar, LabelWindow{0, 0}).ok());
}

TEST_CASE("degree") {
  CHECK(degree({}) == 0);
  CHECK(degree({1, 0}) == 0);
  CHECK(degree({0, 0, 1}) == 1);
  CHECK(degree({-1, 3}) == -2);
}

TEST_CASE("degree is conserved") {
  std::mt19937_64 rng(11);
  for (auto dim : {AmbientDim::Planar, AmbientDim::Braided, AmbientDim::Symmetric})
    for (int t = 0; t < 300; ++t) {
      const auto d = testgen::random_diagram(rng, dim, 8);
      REQUIRE(validate(d, dim).ok());
      CHECK(degree(d.source) == degree(d.target));
    }
}

TEST_CASE("components") {
  CHECK(trace_components(identity({0, 1, 2})).size() == 3);
  const auto z = trace_components(zigzag());
  REQUIRE(z.size() == 1);
  CHECK_FALSE(z[0].closed);
  CHECK(z[0].endpoints.size() == 2);
  const auto unknot = testgen::braid_closure(1, {});
  const auto u = trace_components(unknot);
  REQUIRE(u.size() == 1);
  CHECK(u[0].closed);
}

TEST_CASE("braid closures: components and writhe") {
  for (int strands = 1; strands <= 3; ++strands)
    for (const auto& word : testgen::braid_words(strands, 4)) {
      const auto d = testgen::braid_closure(strands, word);
      REQUIRE(validate(d, AmbientDim::Braided).ok());
      const auto comps = trace_components(d);
      CHECK(static_cast<int>(comps.size()) == permutation_cycles(strands, word));
      int signs = 0;
      for (int l : word) signs += l > 0 ? 1 : -1;
      CHECK(writhe(d).total == signs);
      int self = 0;
      for (int s : writhe(d).self) self += s;
      if (comps.size() == 1) CHECK(self == signs);
    }
}

TEST_CASE("crossing signs follow orientation") {
  CHECK(crossing_sign(Event::cross(true, 0, 0, 0)) == 1);
  CHECK(crossing_sign(Event::cross(false, 0, 0, 0)) == -1);
  CHECK(crossing_sign(Event::cross(true, 0, 0, 1)) == -1);
  CHECK(crossing_sign(Event::cross(true, 0, 1, 1)) == 1);
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(5);
  for (auto dim : {AmbientDim::Planar, AmbientDim::Braided})
    for (int t = 0; t < 200; ++t) {
      const auto d = testgen::random_diagram(rng, dim, 7);
      CHECK(parse_diagram(serialize(d)) == d);
    }
  CHECK_THROWS_AS(parse_diagram("tangle\nnonsense"), Error);
}

TEST_CASE("retype follows the new input") {
  const Slice s{{0, 1}, {Event::cross(true, 0, 0, 1)}};
  const auto r = retype(s, {2, -1});
  CHECK(r.events[0] == Event::cross(true, 0, 2, -1));
  CHECK(r.output() == ObjectWord{-1, 2});
}
