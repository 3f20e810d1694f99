#include "tangle/eval.hpp"

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "tangle/union_find.hpp"

namespace tangle::eval {

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }

template <class R>
Matrix<R> eye(int rank, int copies = 1) {
  std::size_t n = 1;
  for (int i = 0; i < copies; ++i) n *= static_cast<std::size_t>(rank);
  return Matrix<R>::identity(n);
}

/// Cache of the eight crossing matrices.
template <class R>
class Crossings {
 public:
  explicit Crossings(const RigidDatum<R>& D) : D_(D) {}

  const Matrix<R>& get(bool positive, int lp, int rp) {
    const auto key = std::tuple{positive, lp, rp};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Matrix<R> m = build(positive, lp, rp);
    return cache_.emplace(key, std::move(m)).first->second;
  }

 private:
  Matrix<R> build(bool positive, int lp, int rp) {
    if (!D_.braided()) throw Error("datum '" + D_.name + "' has no braiding but the diagram has crossings");
    const auto I = eye<R>(D_.rank);
    if (lp == 0 && rp == 0) return positive ? *D_.c : *D_.c_inv;
    if (lp == 0) {
      // V (x) V*: bend the V* strand around with b' and d'
      const Matrix<R>& inner = get(!positive, 0, 0);
      return kron(kron(I, I), D_.dp) * kron(kron(I, inner), I) * kron(kron(D_.bp, I), I);
    }
    // V* (x) X: bend the V* strand around with b and d
    const Matrix<R>& inner = get(!positive, rp, 0);
    return kron(kron(D_.d, I), I) * kron(kron(I, inner), I) * kron(kron(I, I), D_.b);
  }

  const RigidDatum<R>& D_;
  std::map<std::tuple<bool, int, int>, Matrix<R>> cache_;
};

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

/// state: rows indexed by the current word, columns by the source word.
/// Replaces the strands [p, p + in) by the local map L : in -> out.
template <class R>
Matrix<R> apply_local(const Matrix<R>& state, std::size_t rank, std::size_t word_len, std::size_t p,
                      const Matrix<R>& L, std::size_t in, std::size_t out) {
  const std::size_t pre = power(rank, p);
  const std::size_t post = power(rank, word_len - p - in);
  const std::size_t din = power(rank, in);
  const std::size_t dout = power(rank, out);
  Matrix<R> next(pre * dout * post, state.cols());
  const R zero(0);
  for (std::size_t a = 0; a < pre; ++a)
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t c = 0; c < post; ++c) {
        const std::size_t row = (a * din + i) * post + c;
        for (std::size_t s = 0; s < state.cols(); ++s) {
          const R& x = state(row, s);
          if (x == zero) continue;
          for (std::size_t o = 0; o < dout; ++o) {
            const R& l = L(o, i);
            if (!(l == zero)) next((a * dout + o) * post + c, s) += l * x;
          }
        }
      }
  return next;
}

template <class R>
Matrix<R> evaluate_with(const Diagram& d, const RigidDatum<R>& D, Crossings<R>& cross) {
  const std::size_t rank = static_cast<std::size_t>(D.rank);
  Matrix<R> state = Matrix<R>::identity(power(rank, d.source.size()));
  for (const Slice& s : d.slices) {
    std::size_t len = s.input.size();
    // right to left, so positions to the left stay valid
    for (auto it = s.events.rbegin(); it != s.events.rend(); ++it) {
      const Event& e = *it;
      const auto p = static_cast<std::size_t>(e.position);
      const Matrix<R>* L = nullptr;
      switch (e.kind) {
        case EventKind::Id: continue;
        case EventKind::Cup: L = parity(e.a) == 0 ? &D.bp : &D.b; break;
        case EventKind::Cap: L = parity(e.a) == 0 ? &D.dp : &D.d; break;
        case EventKind::CrossPos:
        case EventKind::CrossNeg:
          L = &cross.get(e.kind == EventKind::CrossPos, parity(s.input[p]), parity(s.input[p + 1]));
          break;
      }
      const auto in = static_cast<std::size_t>(e.inputs());
      const auto out = static_cast<std::size_t>(e.outputs());
      state = apply_local(state, rank, len, p, *L, in, out);
      len = len - in + out;
    }
  }
  return state;
}

template <class R>
void check_equal(DatumReport& r, const std::string& name, const Matrix<R>& lhs, const Matrix<R>& rhs) {
  (lhs == rhs ? r.passed : r.failures).push_back(name);
}

const char* parity_name(int p) { return p == 0 ? "V" : "V*"; }

}  // namespace

std::string DatumReport::to_string() const {
  std::string out;
  for (const auto& f : failures) out += "FAIL " + f + "\n";
  out += std::to_string(passed.size()) + " identities hold, " + std::to_string(failures.size()) + " fail\n";
  return out;
}

template <class R>
void check_shape(const RigidDatum<R>& D) {
  if (D.rank < 1) throw Error("datum rank must be positive");
  const auto n2 = static_cast<std::size_t>(D.rank) * static_cast<std::size_t>(D.rank);
  auto need = [&](const Matrix<R>& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c)
      throw Error(std::string("datum matrix ") + what + " is " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
  };
  need(D.b, n2, 1, "b");
  need(D.bp, n2, 1, "b'");
  need(D.d, 1, n2, "d");
  need(D.dp, 1, n2, "d'");
  if (D.c.has_value() != D.c_inv.has_value()) throw Error("datum has only one of c and c^-1");
  if (D.c) {
    need(*D.c, n2, n2, "c");
    need(*D.c_inv, n2, n2, "c^-1");
  }
}

template <class R>
Matrix<R> crossing_matrix(const RigidDatum<R>& D, bool positive, int left_parity, int right_parity) {
  check_shape(D);
  Crossings<R> cross(D);
  return cross.get(positive, parity(left_parity), parity(right_parity));
}

template <class R>
Matrix<R> evaluate(const Diagram& d, const RigidDatum<R>& D) {
  check_shape(D);
  require_valid(d, AmbientDim::Braided);
  if (d.crossing_count() > 0 && !D.braided())
    throw Error("datum '" + D.name + "' is planar only but the diagram has crossings");
  Crossings<R> cross(D);
  return evaluate_with(d, D, cross);
}

template <class R>
R loop_value(const RigidDatum<R>& D) {
  check_shape(D);
  return (D.d * D.bp)(0, 0);
}

template <class R>
DatumReport validate_datum(const RigidDatum<R>& D, AmbientDim dim) {
  DatumReport r;
  try {
    check_shape(D);
  } catch (const Error& e) {
    r.failures.push_back(std::string("shape: ") + e.what());
    return r;
  }
  const auto B = AmbientDim::Braided;
  auto ev = [&](const ObjectWord& source, const std::vector<std::vector<Event>>& slices) {
    return evaluate(from_events(source, slices, B), D);
  };
  const auto I1 = eye<R>(D.rank);

  check_equal(r, "zig-zag on V: (d' x 1)(1 x b') = 1", ev({0}, {{Event::cup(1, 0)}, {Event::cap(0, 0)}}), I1);
  check_equal(r, "zig-zag on V*: (d x 1)(1 x b) = 1", ev({1}, {{Event::cup(1, 1)}, {Event::cap(0, 1)}}), I1);
  check_equal(r, "zig-zag on V: (1 x d)(b x 1) = 1", ev({0}, {{Event::cup(0, -1)}, {Event::cap(1, -1)}}), I1);
  check_equal(r, "zig-zag on V*: (1 x d')(b' x 1) = 1", ev({1}, {{Event::cup(0, 0)}, {Event::cap(1, 0)}}), I1);
  if (dim == AmbientDim::Planar) return r;

  if (!D.braided()) {
    r.failures.push_back("braiding: the datum has no c");
    return r;
  }
  const auto I2 = eye<R>(D.rank, 2);
  check_equal(r, "c c^-1 = 1", *D.c * *D.c_inv, I2);
  check_equal(r, "c^-1 c = 1", *D.c_inv * *D.c, I2);

  // Reidemeister II for every parity pair
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (bool pos : {true, false}) {
        const std::string name = std::string("R2 ") + (pos ? "x+ x-" : "x- x+") + " on " + parity_name(a) + " " +
                                 parity_name(b);
        check_equal(r, name, ev({a, b}, {{Event::cross(pos, 0, a, b)}, {Event::cross(!pos, 0, b, a)}}),
                    eye<R>(D.rank, 2));
      }

  // Yang-Baxter: s1 s2 s3 on (0,1),(1,2),(0,1) equals s3 s2 s1 on (1,2),(0,1),(1,2)
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
              if (s1 == s3 && s1 != s2) continue;
              const std::string name = "Yang-Baxter (" + std::to_string(s1) + "," + std::to_string(s2) + "," +
                                       std::to_string(s3) + ") on " + parity_name(a) + " " + parity_name(b) + " " +
                                       parity_name(c);
              auto x = [](int s, int p) { return std::vector<Event>{Event::cross(s > 0, p, 0, 0)}; };
              check_equal(r, name, ev({a, b, c}, {x(s1, 0), x(s2, 1), x(s3, 0)}),
                          ev({a, b, c}, {x(s3, 1), x(s2, 0), x(s1, 1)}));
            }

  // a strand slides past a cup or a cap, over or under, from either side
  for (int x = 0; x < 2; ++x)
    for (int k = 0; k < 2; ++k)
      for (bool pos : {true, false}) {
        const std::string tail = std::string(" (") + (pos ? "x+" : "x-") + ") strand " + parity_name(x) + " level " +
                                 std::to_string(k);
        auto X = [&](int p) { return std::vector<Event>{Event::cross(pos, p, 0, 0)}; };
        check_equal(r, "slide cup left-to-right" + tail, ev({x}, {{Event::cup(1, k)}, X(0), X(1)}),
                    ev({x}, {{Event::cup(0, k)}}));
        check_equal(r, "slide cup right-to-left" + tail, ev({x}, {{Event::cup(0, k)}, X(1), X(0)}),
                    ev({x}, {{Event::cup(1, k)}}));
        check_equal(r, "slide cap left-to-right" + tail, ev({x, k, k + 1}, {X(0), X(1), {Event::cap(0, k)}}),
                    ev({x, k, k + 1}, {{Event::cap(1, k)}}));
        check_equal(r, "slide cap right-to-left" + tail, ev({k, k + 1, x}, {X(1), X(0), {Event::cap(1, k)}}),
                    ev({k, k + 1, x}, {{Event::cap(0, k)}}));
      }

  if (D.symmetric || dim == AmbientDim::Symmetric) {
    check_equal(r, "symmetric: c c = 1", *D.c * *D.c, I2);
    if (!D.symmetric) r.failures.push_back("symmetric: the datum is not flagged symmetric");
  }
  return r;
}

RigidDatum<Laurent> kauffman_datum() {
  RigidDatum<Laurent> D;
  D.name = "kauffman";
  D.rank = 2;
  const Laurent A = Laurent::A(1);
  const Laurent Ai = Laurent::A(-1);
  // index (i, j) -> 2i + j
  Matrix<Laurent> u(4, 1);
  u(1, 0) = A;
  u(2, 0) = -Ai;
  Matrix<Laurent> w(1, 4);
  w(0, 1) = -A;
  w(0, 2) = Ai;
  D.b = D.bp = u;
  D.d = D.dp = w;
  const auto I = Matrix<Laurent>::identity(4);
  const Matrix<Laurent> uw = u * w;
  D.c = A * I + Ai * uw;
  D.c_inv = Ai * I + A * uw;
  return D;
}

RigidDatum<Integer> trivial_datum() {
  RigidDatum<Integer> D;
  D.name = "trivial";
  D.rank = 1;
  Matrix<Integer> one = Matrix<Integer>::identity(1);
  D.b = D.bp = D.d = D.dp = one;
  D.c = D.c_inv = one;
  D.symmetric = true;
  return D;
}

namespace {

Matrix<Rational> column(const Matrix<Rational>& m) {
  Matrix<Rational> out(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i * m.cols() + j, 0) = m(i, j);
  return out;
}

Matrix<Rational> row(const Matrix<Rational>& m) {
  Matrix<Rational> out(1, m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(0, i * m.cols() + j) = m(i, j);
  return out;
}

Matrix<Rational> swap_matrix(int n) {
  const auto N = static_cast<std::size_t>(n);
  Matrix<Rational> s(N * N, N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s(j * N + i, i * N + j) = 1;
  return s;
}

Matrix<Rational> inverse2(const Matrix<Rational>& m) {
  const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == 0) throw InternalError("inverse2: singular matrix");
  Matrix<Rational> out(2, 2);
  out(0, 0) = m(1, 1) / det;
  out(0, 1) = -m(0, 1) / det;
  out(1, 0) = -m(1, 0) / det;
  out(1, 1) = m(0, 0) / det;
  return out;
}

}  // namespace

RigidDatum<Rational> symmetric_test_datum() {
  RigidDatum<Rational> D;
  D.name = "symmetric";
  D.rank = 2;
  const auto I = Matrix<Rational>::identity(2);
  D.bp = column(Rational(2) * I);
  D.dp = row(Rational(1, 2) * I);
  D.b = column(Rational(3) * I);
  D.d = row(Rational(1, 3) * I);
  D.c = D.c_inv = swap_matrix(2);
  D.symmetric = true;
  return D;
}

RigidDatum<Rational> random_datum(AmbientDim dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> small(1, 5);
  auto invertible = [&] {
    for (;;) {
      Matrix<Rational> m(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = entry(rng);
      if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) != 0) return m;
    }
  };
  // d' = (b')^-1 and d = b^-1 as 2x2 matrices make the zig-zags hold
  RigidDatum<Rational> D;
  D.name = "random-" + std::to_string(seed);
  D.rank = 2;
  const auto Bp = invertible();
  const auto Bm = invertible();
  D.bp = column(Bp);
  D.dp = row(inverse2(Bp));
  D.b = column(Bm);
  D.d = row(inverse2(Bm));
  if (dim == AmbientDim::Planar) return D;
  Rational q;
  if (dim == AmbientDim::Symmetric) {
    q = (rng() & 1) ? 1 : -1;
    D.symmetric = true;
  } else {
    q = Rational(small(rng), small(rng));
    if (rng() & 1) q = -q;
  }
  const auto s = swap_matrix(2);
  D.c = q * s;
  D.c_inv = Rational(Rational(1) / q) * s;
  return D;
}

namespace {

/// Loops of the diagram with every crossing smoothed as given.
std::size_t count_loops(const Diagram& d, const std::vector<bool>& vertical) {
  // node ids: one per strand between consecutive heights
  std::vector<std::size_t> base;
  std::size_t total = 0;
  for (const Slice& s : d.slices) {
    base.push_back(total);
    total += s.input.size();
  }
  base.push_back(total);
  total += d.target.size();
  UnionFind uf(total);
  std::size_t crossing = 0;
  for (std::size_t h = 0; h < d.slices.size(); ++h) {
    const Slice& s = d.slices[h];
    const std::size_t lo = base[h];
    const std::size_t hi = base[h + 1];
    std::size_t in = 0;
    std::size_t out = 0;
    auto through = [&](std::size_t count) {
      for (std::size_t k = 0; k < count; ++k) uf.unite(lo + in + k, hi + out + k);
      in += count;
      out += count;
    };
    for (const Event& e : s.events) {
      through(static_cast<std::size_t>(e.position) - in);
      switch (e.kind) {
        case EventKind::Id: through(1); break;
        case EventKind::Cup:
          uf.unite(hi + out, hi + out + 1);
          out += 2;
          break;
        case EventKind::Cap:
          uf.unite(lo + in, lo + in + 1);
          in += 2;
          break;
        case EventKind::CrossPos:
        case EventKind::CrossNeg:
          if (vertical[crossing++]) {
            through(2);
          } else {
            uf.unite(lo + in, lo + in + 1);
            uf.unite(hi + out, hi + out + 1);
            in += 2;
            out += 2;
          }
          break;
      }
    }
    through(s.input.size() - in);
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < total; ++i) roots.insert(uf.find(i));
  return roots.size();
}

}  // namespace

Laurent bracket_state_sum(const Diagram& d) {
  require_valid(d, AmbientDim::Braided);
  if (!d.is_closed()) throw Error("bracket: the diagram has open components");
  if (d.event_count() == 0) throw Error("bracket: the empty diagram has no loops to normalize by");
  std::vector<int> signs;
  for (const Slice& s : d.slices)
    for (const Event& e : s.events)
      if (e.is_crossing()) signs.push_back(e.sign());
  if (signs.size() > 24) throw Error("bracket: too many crossings for a state sum");
  const Laurent delta = -Laurent::A(2) - Laurent::A(-2);
  Laurent sum;
  const std::size_t n = signs.size();
  std::vector<bool> vertical(n);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    // bit set: A-smoothing. For x+ that is the vertical one, for x- the horizontal one.
    int a_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool a = (state >> i) & 1;
      a_count += a;
      vertical[i] = a == (signs[i] > 0);
    }
    const std::size_t loops = count_loops(d, vertical);
    const int b_count = static_cast<int>(n) - a_count;
    sum += Laurent::A(a_count - b_count) * delta.pow(static_cast<int>(loops) - 1);
  }
  return sum;
}

Laurent jones_normalized(const Diagram& d) {
  const Laurent bracket = bracket_state_sum(d);
  const int w = writhe(d).total;
  return (-Laurent::A(3)).pow(-w) * bracket;
}

template void check_shape(const RigidDatum<Integer>&);
template void check_shape(const RigidDatum<Rational>&);
template void check_shape(const RigidDatum<Laurent>&);
template DatumReport validate_datum(const RigidDatum<Integer>&, AmbientDim);
template DatumReport validate_datum(const RigidDatum<Rational>&, AmbientDim);
template DatumReport validate_datum(const RigidDatum<Laurent>&, AmbientDim);
template Matrix<Integer> crossing_matrix(const RigidDatum<Integer>&, bool, int, int);
template Matrix<Rational> crossing_matrix(const RigidDatum<Rational>&, bool, int, int);
template Matrix<Laurent> crossing_matrix(const RigidDatum<Laurent>&, bool, int, int);
template Matrix<Integer> evaluate(const Diagram&, const RigidDatum<Integer>&);
template Matrix<Rational> evaluate(const Diagram&, const RigidDatum<Rational>&);
template Matrix<Laurent> evaluate(const Diagram&, const RigidDatum<Laurent>&);
template Integer loop_value(const RigidDatum<Integer>&);
template Rational loop_value(const RigidDatum<Rational>&);
template Laurent loop_value(const RigidDatum<Laurent>&);

}  // namespace tangle::eval
