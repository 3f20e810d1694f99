#pragma once

// Words over an alphabet, their minimal factorization into alternating words,
// and the coproduct of pointed monoids written as alternating words in the
// non-unit parts.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tangle::words {

template <class Letter>
using Word = std::vector<Letter>;

template <class Letter>
Word<Letter> concat(std::span<const Word<Letter>> parts) {
  Word<Letter> out;
  for (const auto& w : parts) out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// No two consecutive letters agree. The empty word is alternating.
template <class Letter>
bool is_alternating(const Word<Letter>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] == w[i]) return false;
  return true;
}

/// Cuts w exactly between equal neighbours. Every factor is nonempty and
/// alternating, and no factorization into alternating words is shorter.
template <class Letter>
std::vector<Word<Letter>> alternating_factorization(const Word<Letter>& w) {
  std::vector<Word<Letter>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i - 1] == w[i]) out.emplace_back();
    out.back().push_back(w[i]);
  }
  return out;
}

using Element = std::int64_t;

/// A monoid presented on an enumerable carrier of integer codes. The unit is
/// the only element for which is_unit holds; construction checks this along
/// with associativity and the unit laws on elements up to `check_bound`.
class PointedMonoid {
 public:
  struct Ops {
    std::string name;
    /// Every element of length <= bound, without repetition.
    std::function<std::vector<Element>(std::size_t bound)> enumerate;
    std::function<Element(Element, Element)> multiply;
    Element unit = 0;
    /// Defaults to equality with `unit`.
    std::function<bool(Element)> is_unit;
    /// Word length of an element; defaults to 0 for the unit and 1 otherwise.
    std::function<std::size_t(Element)> length;
    /// Printable form; defaults to the integer code.
    std::function<std::string(Element)> show;
  };

  explicit PointedMonoid(Ops ops, std::size_t check_bound = 3);

  const std::string& name() const noexcept { return ops_.name; }
  std::vector<Element> elements(std::size_t bound) const { return ops_.enumerate(bound); }
  std::vector<Element> nonunits(std::size_t bound) const;
  Element multiply(Element a, Element b) const { return ops_.multiply(a, b); }
  Element unit() const noexcept { return ops_.unit; }
  bool is_unit(Element a) const { return ops_.is_unit(a); }
  std::size_t length(Element a) const { return ops_.length(a); }
  std::string show(Element a) const { return ops_.show(a); }

  /// Z/n written additively, elements 0..n-1.
  static PointedMonoid cyclic(int n);
  /// The trivial monoid {1}.
  static PointedMonoid trivial();
  /// The free monoid on one generator; x^k is coded as k and has length k.
  static PointedMonoid free_on_one(const std::string& generator);
  /// A finite monoid from its multiplication table; element 0 is the unit.
  static PointedMonoid from_table(std::string name, std::vector<std::vector<int>> table);

 private:
  Ops ops_;
};

enum class Side : std::uint8_t { Left, Right };

struct Letter {
  Side side;
  Element value;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An element of A * B: an alternating word of tagged non-unit elements.
class StarElement {
 public:
  StarElement() = default;
  /// Checks that sides alternate; does not see the monoids, so unit letters
  /// are checked by star_multiply / validate.
  explicit StarElement(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t alternation_length() const noexcept { return letters_.size(); }
  bool is_unit() const noexcept { return letters_.empty(); }

  friend bool operator==(const StarElement&, const StarElement&) = default;
  friend auto operator<=>(const StarElement&, const StarElement&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Throws if a letter is a unit of its monoid.
void validate(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u);

/// Concatenate then merge equal-sided neighbours, dropping units, until the
/// word alternates. Each merge shortens the word, so this terminates.
StarElement star_multiply(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u,
                          const StarElement& v);

/// Single-letter element; the unit maps to the empty word.
StarElement star_letter(const PointedMonoid& a, const PointedMonoid& b, Side side, Element value);

std::string to_string(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u);

/// The four families of the alternating-word decomposition plus the unit.
/// `pattern` is "1", "A(BA)^k", "B(AB)^k", "(AB)^{k+1}" or "(BA)^{k+1}".
struct Stratum {
  std::string pattern;
  std::size_t k = 0;

  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

Stratum stratum_of(const StarElement& u);

struct StarEnumeration {
  std::vector<StarElement> elements;
  std::map<Stratum, std::size_t> counts;
};

/// All alternating words with at most `max_alternation` letters, each letter
/// drawn from the non-units of length <= element_bound.
StarEnumeration star_enumerate(const PointedMonoid& a, const PointedMonoid& b,
                               std::size_t max_alternation, std::size_t element_bound);

/// All elements of total letter length <= max_length.
StarEnumeration star_enumerate_by_length(const PointedMonoid& a, const PointedMonoid& b,
                                         std::size_t max_length);

/// Closed-form size of each stratum, |A-bar|^i |B-bar|^j, for strata whose
/// words have at most `max_alternation` letters.
std::map<Stratum, std::size_t> star_stratum_formula(std::size_t nonunits_a, std::size_t nonunits_b,
                                                    std::size_t max_alternation);

}  // namespace tangle::words
