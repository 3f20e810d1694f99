#include <map>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/words.hpp"

using namespace tangle::words;

namespace {

Word<char> w(const std::string& s) { return {s.begin(), s.end()}; }

std::vector<std::string> strs(const std::vector<Word<char>>& ws) {
  std::vector<std::string> out;
  for (const auto& x : ws) out.emplace_back(x.begin(), x.end());
  return out;
}

// x^a y^b ... as a plain string.
std::string spell(const StarElement& u) {
  std::string s;
  for (const auto& l : u.letters()) s.append(static_cast<std::size_t>(l.value), l.side == Side::Left ? 'x' : 'y');
  return s;
}

StarElement from_spelling(const PointedMonoid& a, const PointedMonoid& b, const std::string& s) {
  StarElement u;
  for (char c : s) u = star_multiply(a, b, u, star_letter(a, b, c == 'x' ? Side::Left : Side::Right, 1));
  return u;
}

// Expected number of alternating words with n letters, counted by hand.
std::size_t words_with(std::size_t n, std::size_t na, std::size_t nb) {
  if (n == 0) return 1;
  std::size_t from_a = 1, from_b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    from_a *= i % 2 == 0 ? na : nb;
    from_b *= i % 2 == 0 ? nb : na;
  }
  return from_a + from_b;
}

}  // namespace

TEST_CASE("concat and is_alternating") {
  const std::vector<Word<char>> none;
  CHECK(concat<char>(none).empty());
  const std::vector<Word<char>> two{w("01"), w("10")};
  CHECK(concat<char>(two) == w("0110"));
  const std::vector<Word<char>> gap{w("0"), w(""), w("1")};
  CHECK(concat<char>(gap) == w("01"));
  CHECK(is_alternating(w("0101")));
  CHECK_FALSE(is_alternating(w("00")));
  CHECK(is_alternating(w("")));
}

TEST_CASE("alternating factorization examples") {
  CHECK(strs(alternating_factorization(w("0110"))) == std::vector<std::string>{"01", "10"});
  CHECK(strs(alternating_factorization(w("0101"))) == std::vector<std::string>{"0101"});
  CHECK(strs(alternating_factorization(w("000"))) == std::vector<std::string>{"0", "0", "0"});
  CHECK(alternating_factorization(w("")).empty());
}

TEST_CASE("alternating factorization is minimal on short binary words") {
  for (int n = 0; n <= 10; ++n)
    for (int bits = 0; bits < (1 << n); ++bits) {
      Word<int> word;
      for (int i = 0; i < n; ++i) word.push_back((bits >> i) & 1);
      const auto f = alternating_factorization(word);
      CHECK(concat<int>(f) == word);
      for (const auto& part : f) {
        CHECK_FALSE(part.empty());
        CHECK(is_alternating(part));
      }
      CHECK(static_cast<int>(f.size()) == oracle::min_alternating_factors(word));
    }
}

TEST_CASE("factorization recomposes on random words over three letters") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    Word<int> word(rng() % 20);
    for (int& x : word) x = static_cast<int>(rng() % 3);
    CHECK(concat<int>(alternating_factorization(word)) == word);
  }
}

TEST_CASE("pointed monoids are checked on construction") {
  CHECK_NOTHROW(PointedMonoid::from_table("M", {{0, 1}, {1, 1}}));
  // not associative: a.a = 1 but (a.b).b differs from a.(b.b)
  CHECK_THROWS_AS(PointedMonoid::from_table("bad", {{0, 1, 2}, {1, 0, 1}, {2, 2, 1}}), tangle::Error);
  // 0 is not a unit
  CHECK_THROWS_AS(PointedMonoid::from_table("bad", {{0, 0}, {0, 1}}), tangle::Error);
  CHECK_THROWS_AS(PointedMonoid::from_table("bad", {{0, 1}, {1}}), tangle::Error);
  CHECK_THROWS_AS(StarElement({{Side::Left, 1}, {Side::Left, 1}}), tangle::Error);
}

TEST_CASE("star multiplication merges and cancels") {
  const auto fx = PointedMonoid::free_on_one("x");
  const auto fy = PointedMonoid::free_on_one("y");
  const StarElement x2({{Side::Left, 2}});
  const StarElement xy({{Side::Left, 1}, {Side::Right, 1}});
  const StarElement yx({{Side::Right, 1}, {Side::Left, 1}});
  CHECK(spell(star_multiply(fx, fy, x2, xy)) == "xxxy");
  CHECK(spell(star_multiply(fx, fy, xy, yx)) == "xyyx");
  CHECK(star_multiply(fx, fy, xy, StarElement()) == xy);
  CHECK(star_multiply(fx, fy, StarElement(), xy) == xy);

  const auto z2 = PointedMonoid::cyclic(2);
  const StarElement gh({{Side::Left, 1}, {Side::Right, 1}});
  const StarElement hg({{Side::Right, 1}, {Side::Left, 1}});
  CHECK(star_multiply(z2, z2, gh, hg).is_unit());
  CHECK(star_letter(z2, z2, Side::Left, 0).is_unit());
  CHECK_THROWS_AS(validate(z2, z2, StarElement({{Side::Left, 0}})), tangle::Error);
}

TEST_CASE("star multiplication is associative and unital") {
  const auto a = PointedMonoid::cyclic(3);
  const auto b = PointedMonoid::from_table("M", {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  const auto all = star_enumerate(a, b, 3, 1).elements;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const auto& u = all[rng() % all.size()];
    const auto& v = all[rng() % all.size()];
    const auto& x = all[rng() % all.size()];
    CHECK(star_multiply(a, b, star_multiply(a, b, u, v), x) == star_multiply(a, b, u, star_multiply(a, b, v, x)));
    CHECK(star_multiply(a, b, u, StarElement()) == u);
  }
}

TEST_CASE("Z/2 * Z/2 counts") {
  const auto z2 = PointedMonoid::cyclic(2);
  const auto e = star_enumerate(z2, z2, 5, 1);
  CHECK(e.elements.size() == 11);
  const auto trivial = PointedMonoid::trivial();
  const auto z3 = PointedMonoid::cyclic(3);
  CHECK(star_enumerate(trivial, z3, 4, 1).elements.size() == 3);
}

TEST_CASE("stratum counts match a direct count") {
  const auto z2 = PointedMonoid::cyclic(2);
  const auto z3 = PointedMonoid::cyclic(3);
  const auto m = PointedMonoid::from_table("M", {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  for (const auto& [a, b] : {std::pair{&z2, &z3}, std::pair{&z2, &z2}, std::pair{&z3, &m}}) {
    const auto e = star_enumerate(*a, *b, 6, 1);
    const std::size_t na = a->nonunits(1).size(), nb = b->nonunits(1).size();
    std::size_t total = 0;
    for (std::size_t n = 0; n <= 6; ++n) total += words_with(n, na, nb);
    CHECK(e.elements.size() == total);
    CHECK(std::set<StarElement>(e.elements.begin(), e.elements.end()).size() == total);
    std::map<std::size_t, std::size_t> by_length;
    for (const auto& [s, c] : e.counts) {
      const std::size_t n = s.pattern == "1" ? 0 : s.pattern[0] == '(' ? 2 * s.k + 2 : 2 * s.k + 1;
      by_length[n] += c;
    }
    for (std::size_t n = 0; n <= 6; ++n) CHECK(by_length[n] == words_with(n, na, nb));
    CHECK(e.counts == star_stratum_formula(na, nb, 6));
  }
}

TEST_CASE("Z/2 * Z/3 acts faithfully on the upper half plane") {
  const auto z2 = PointedMonoid::cyclic(2);
  const auto z3 = PointedMonoid::cyclic(3);
  auto image = [](const StarElement& u) {
    oracle::Mat2 m{{1, 0, 0, 1}};
    for (const auto& l : u.letters())
      for (int i = 0; i < l.value; ++i) m = m * (l.side == Side::Left ? oracle::psl_s() : oracle::psl_u());
    return m.projective();
  };
  const auto e = star_enumerate(z2, z3, 6, 1);
  std::set<oracle::Mat2> seen;
  for (const auto& u : e.elements) seen.insert(image(u));
  CHECK(seen.size() == e.elements.size());
  for (std::size_t i = 0; i < e.elements.size(); i += 7)
    for (std::size_t j = 0; j < e.elements.size(); j += 5)
      CHECK(image(star_multiply(z2, z3, e.elements[i], e.elements[j])) ==
            (image(e.elements[i]) * image(e.elements[j])).projective());
}

TEST_CASE("Z/2 * Z/2 acts faithfully on the integers") {
  const auto z2 = PointedMonoid::cyclic(2);
  auto image = [](const StarElement& u) {
    oracle::Affine f{1, 0};
    for (const auto& l : u.letters()) f = f.after(l.side == Side::Left ? oracle::Affine{-1, 0} : oracle::Affine{-1, 1});
    return f;
  };
  const auto e = star_enumerate(z2, z2, 6, 1);
  std::set<oracle::Affine> seen;
  for (const auto& u : e.elements) seen.insert(image(u));
  CHECK(seen.size() == e.elements.size());
}

TEST_CASE("F(x) * F(y) is the free monoid on x and y") {
  const auto fx = PointedMonoid::free_on_one("x");
  const auto fy = PointedMonoid::free_on_one("y");
  const auto e = star_enumerate_by_length(fx, fy, 6);
  std::set<std::string> spelled;
  for (const auto& u : e.elements) spelled.insert(spell(u));
  std::set<std::string> all{""};
  std::vector<std::string> layer{""};
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> next;
    for (const auto& s : layer)
      for (char c : {'x', 'y'}) next.push_back(s + c);
    all.insert(next.begin(), next.end());
    layer = next;
  }
  CHECK(e.elements.size() == all.size());
  CHECK(spelled == all);
  for (const auto& s : all)
    for (const auto& t : {std::string("xy"), std::string("yyx"), std::string("")})
      if (s.size() + t.size() <= 6)
        CHECK(spell(star_multiply(fx, fy, from_spelling(fx, fy, s), from_spelling(fx, fy, t))) == s + t);
}
