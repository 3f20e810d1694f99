#include <sstream>

#include "tangle/eval.hpp"

namespace tangle::eval {

namespace {

template <class R>
void write_matrix(std::string& out, const std::string& name, const Matrix<R>& m) {
  out += name + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += RingTraits<R>::store(m(i, j));
    }
    out += '\n';
  }
}

class Lines {
 public:
  explicit Lines(const std::string& text) : in_(text) {}

  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      std::vector<std::string> out;
      std::string w;
      while (words >> w) out.push_back(w);
      if (!out.empty()) return out;
    }
    fail("unexpected end of text");
  }

  /// "key value" line
  std::string field(const std::string& key) {
    const auto w = next();
    if (w.size() != 2 || w[0] != key) fail("expected '" + key + " <value>'");
    return w[1];
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("datum text, line " + std::to_string(number_) + ": " + msg);
  }

 private:
  std::istringstream in_;
  int number_ = 0;
};

std::size_t to_size(const std::string& s, const Lines& lines) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size() || v < 0 || v > 4096) throw std::out_of_range(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    lines.fail("bad size '" + s + "'");
  }
}

template <class R>
Matrix<R> read_matrix(Lines& lines, const std::vector<std::string>& header) {
  if (header.size() != 3) lines.fail("expected '<name> <rows> <cols>'");
  const std::size_t rows = to_size(header[1], lines);
  const std::size_t cols = to_size(header[2], lines);
  Matrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto w = lines.next();
    if (w.size() != cols) lines.fail("matrix " + header[0] + ": row " + std::to_string(i) + " has " +
                                     std::to_string(w.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        m(i, j) = RingTraits<R>::load(w[j]);
      } catch (const Error& e) {
        lines.fail(e.what());
      }
    }
  }
  return m;
}

template <class R>
RigidDatum<R> read_rest(Lines& lines, const std::string& name, int rank, bool symmetric) {
  RigidDatum<R> D;
  D.name = name;
  D.rank = rank;
  D.symmetric = symmetric;
  auto expect = [&](const std::string& key) {
    const auto header = lines.next();
    if (header.empty() || header[0] != key) lines.fail("expected matrix '" + key + "'");
    return read_matrix<R>(lines, header);
  };
  D.b = expect("b");
  D.bp = expect("b'");
  D.d = expect("d");
  D.dp = expect("d'");
  auto w = lines.next();
  if (w.size() == 3 && w[0] == "c") {
    D.c = read_matrix<R>(lines, w);
    D.c_inv = expect("c^-1");
    w = lines.next();
  }
  if (w.size() != 1 || w[0] != "end") lines.fail("expected 'end'");
  try {
    check_shape(D);
  } catch (const Error& e) {
    lines.fail(e.what());
  }
  return D;
}

}  // namespace

template <class R>
std::string serialize_datum(const RigidDatum<R>& D) {
  std::string out = "datum " + D.name + "\n";
  out += std::string("ring ") + RingTraits<R>::name + "\n";
  out += "rank " + std::to_string(D.rank) + "\n";
  out += std::string("symmetric ") + (D.symmetric ? "1" : "0") + "\n";
  write_matrix(out, "b", D.b);
  write_matrix(out, "b'", D.bp);
  write_matrix(out, "d", D.d);
  write_matrix(out, "d'", D.dp);
  if (D.c) {
    write_matrix(out, "c", *D.c);
    write_matrix(out, "c^-1", *D.c_inv);
  }
  return out + "end\n";
}

AnyDatum parse_datum(const std::string& text) {
  Lines lines(text);
  const std::string name = lines.field("datum");
  const std::string ring = lines.field("ring");
  const std::size_t rank = to_size(lines.field("rank"), lines);
  if (rank == 0 || rank > 16) lines.fail("rank must be between 1 and 16");
  const std::string sym = lines.field("symmetric");
  if (sym != "0" && sym != "1") lines.fail("symmetric must be 0 or 1");
  const int n = static_cast<int>(rank);
  const bool s = sym == "1";
  if (ring == "integer") return read_rest<Integer>(lines, name, n, s);
  if (ring == "rational") return read_rest<Rational>(lines, name, n, s);
  if (ring == "laurent") return read_rest<Laurent>(lines, name, n, s);
  lines.fail("unknown ring '" + ring + "'");
}

template std::string serialize_datum(const RigidDatum<Integer>&);
template std::string serialize_datum(const RigidDatum<Rational>&);
template std::string serialize_datum(const RigidDatum<Laurent>&);

}  // namespace tangle::eval
