#pragma once

// Laurent polynomials in one variable A with integer coefficients.

#include <map>
#include <string>

#include "tangle/numeric.hpp"

namespace tangle {

class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c);  // NOLINT: constants convert implicitly
  Laurent(const Integer& c);  // NOLINT

  /// c * A^e
  static Laurent monomial(int e, const Integer& c = 1);
  static Laurent A(int e = 1) { return monomial(e); }

  /// exponent -> coefficient, no zeros
  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest and lowest exponent; zero has neither.
  int max_degree() const;
  int min_degree() const;
  Integer coefficient(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Integer powers; negative powers only for monomials.
  Laurent pow(int k) const;
  /// A -> A^-1
  Laurent mirror() const;
  bool is_unit() const;

  /// Descending exponents, e.g. "-A^2-A^-2", "3A", "1", "0".
  std::string to_string() const;
  /// Inverse of to_string; throws ParseError.
  static Laurent parse(const std::string& text);

  /// Storage form "{exp:coeff,...}", descending exponents.
  std::string to_storage() const;
  static Laurent from_storage(const std::string& text);

 private:
  void add_term(int e, const Integer& c);

  std::map<int, Integer> terms_;
};

}  // namespace tangle
