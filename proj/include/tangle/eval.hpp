#pragma once

// Evaluation of tangle diagrams in matrices.
//
// A strand with an even label is V, an odd label is V*. The datum gives
//   b  : 1 -> V (x) V*      (odd cup)      d  : V* (x) V -> 1   (odd cap)
//   b' : 1 -> V* (x) V      (even cup)     d' : V (x) V* -> 1   (even cap)
// and c : V (x) V -> V (x) V for x+ on two even strands, c^-1 for x-.
// Crossings involving V* are obtained from c by bending a strand around
// with the duality maps. Basis of a tensor product: left factor major.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tangle/diagram.hpp"
#include "tangle/laurent.hpp"
#include "tangle/matrix.hpp"

namespace tangle::eval {

template <class R>
struct RigidDatum {
  std::string name;
  int rank = 0;
  Matrix<R> b;   // n^2 x 1
  Matrix<R> bp;  // n^2 x 1
  Matrix<R> d;   // 1 x n^2
  Matrix<R> dp;  // 1 x n^2
  std::optional<Matrix<R>> c;  // n^2 x n^2; absent for planar-only data
  std::optional<Matrix<R>> c_inv;
  bool symmetric = false;

  bool braided() const { return c.has_value(); }
};

struct DatumReport {
  std::vector<std::string> passed;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string to_string() const;
};

/// Dimension checks only; throws Error.
template <class R>
void check_shape(const RigidDatum<R>& D);

/// Zig-zags always; for braided and symmetric dims also invertibility of c,
/// Yang-Baxter, Reidemeister II and the slide of a strand past cups and caps
/// for every parity pattern, and c^2 = id when symmetric.
template <class R>
DatumReport validate_datum(const RigidDatum<R>& D, AmbientDim dim);

/// The matrix of a single crossing on strands of the given parities
/// (0 = V, 1 = V*), as a map from left (x) right to right (x) left.
template <class R>
Matrix<R> crossing_matrix(const RigidDatum<R>& D, bool positive, int left_parity, int right_parity);

/// rank^|target| x rank^|source|. The diagram is validated in the braided
/// (parity) sense.
template <class R>
Matrix<R> evaluate(const Diagram& d, const RigidDatum<R>& D);

/// Rank 2 over Z[A, A^-1]: b = b' from U = [[0, A], [-A^-1, 0]],
/// d = d' from W = [[0, -A], [A^-1, 0]], c = A id + A^-1 (b o d).
/// Loop value -A^2 - A^-2; a positive curl is -A^3.
RigidDatum<Laurent> kauffman_datum();
/// Rank 1, every map 1; symmetric.
RigidDatum<Integer> trivial_datum();
/// Rank 2 over Q: b' = 2 id, d' = id/2, b = 3 id, d = id/3, c = swap.
RigidDatum<Rational> symmetric_test_datum();
/// Rank 2 over Q with random invertible duality pairings and c = q swap;
/// q = +-1 for Symmetric, no braiding for Planar.
RigidDatum<Rational> random_datum(AmbientDim dim, std::uint64_t seed);

/// The loop value d o b of the datum (as a 1x1 matrix entry).
template <class R>
R loop_value(const RigidDatum<R>& D);

/// Kauffman bracket of a closed diagram by summing over all smoothings,
/// normalized so that a single loop is 1. Throws on open diagrams and on the
/// empty diagram.
Laurent bracket_state_sum(const Diagram& d);
/// (-A^3)^-writhe times the bracket.
Laurent jones_normalized(const Diagram& d);

using AnyDatum = std::variant<RigidDatum<Integer>, RigidDatum<Rational>, RigidDatum<Laurent>>;

/// Text format:
///   datum <name>
///   ring integer|rational|laurent
///   rank <n>
///   symmetric 0|1
///   <matrix> <rows> <cols>      for b, b', d, d', then c and c^-1 if braided
///   <row entries...>
///   end
/// Laurent entries are written {exp:coeff,...} with descending exponents.
template <class R>
std::string serialize_datum(const RigidDatum<R>& D);
AnyDatum parse_datum(const std::string& text);

}  // namespace tangle::eval
