#pragma once

// Dense matrices over an exact ring, plus the per-ring text conventions.

#include <cstddef>
#include <string>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/laurent.hpp"
#include "tangle/numeric.hpp"

namespace tangle::eval {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static constexpr const char* name = "integer";
  static std::string show(const Integer& x) { return x.str(); }
  static std::string store(const Integer& x) { return x.str(); }
  static Integer load(const std::string& s) {
    try {
      std::size_t i = (s.size() > 0 && s[0] == '-') ? 1 : 0;
      if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) throw std::invalid_argument(s);
      return Integer(s);
    } catch (const std::exception&) {
      throw Error("not an integer: '" + s + "'");
    }
  }
};

template <>
struct RingTraits<Rational> {
  static constexpr const char* name = "rational";
  static std::string show(const Rational& x) { return x.str(); }
  static std::string store(const Rational& x) { return x.str(); }
  static Rational load(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(RingTraits<Integer>::load(s));
    const Integer den = RingTraits<Integer>::load(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(RingTraits<Integer>::load(s.substr(0, slash)), den);
  }
};

template <>
struct RingTraits<Laurent> {
  static constexpr const char* name = "laurent";
  static std::string show(const Laurent& x) { return x.to_string(); }
  static std::string store(const Laurent& x) { return x.to_storage(); }
  static Laurent load(const std::string& s) { return Laurent::from_storage(s); }
};

template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    const R zero(0);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& x = a(i, k);
        if (x == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!(b(k, j) == zero)) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const R& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ' ';
        out += RingTraits<R>::show((*this)(i, j));
      }
      out += '\n';
    }
    return out;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix sum: dimensions differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <class R>
Matrix<R> kron(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace tangle::eval
