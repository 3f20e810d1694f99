#include "tangle/laurent.hpp"

#include <cctype>

#include "tangle/error.hpp"

namespace tangle {

Laurent::Laurent(long long c) { add_term(0, c); }
Laurent::Laurent(const Integer& c) { add_term(0, c); }

Laurent Laurent::monomial(int e, const Integer& c) {
  Laurent out;
  out.add_term(e, c);
  return out;
}

void Laurent::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int Laurent::max_degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int Laurent::min_degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  return terms_.begin()->first;
}

Integer Laurent::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool Laurent::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

Laurent Laurent::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) throw Error("negative power of a non-unit Laurent polynomial " + to_string());
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, c).pow(-k);
  }
  Laurent out(1);
  Laurent base = *this;
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

Laurent Laurent::mirror() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += 'A';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  bool take(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::size_t pos() const { return i_; }
  std::string digits() {
    std::string d;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[i_++];
    return d;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

int parse_int(Cursor& cur) {
  const bool neg = cur.take('-');
  const std::string d = cur.digits();
  if (d.empty()) cur.fail("expected an exponent");
  if (d.size() > 9) cur.fail("exponent out of range");
  return neg ? -std::stoi(d) : std::stoi(d);
}

}  // namespace

Laurent Laurent::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  Cursor cur(s);
  if (s.empty()) cur.fail("empty polynomial");
  Laurent out;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.take('-')) {
      neg = true;
    } else if (!cur.take('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    const std::string d = cur.digits();
    Integer c = d.empty() ? Integer(1) : Integer(d);
    int e = 0;
    if (cur.take('A')) {
      e = 1;
      if (cur.take('^')) e = parse_int(cur);
    } else if (d.empty()) {
      cur.fail("expected a coefficient or 'A'");
    }
    out.add_term(e, neg ? Integer(-c) : c);
  }
  return out;
}

std::string Laurent::to_storage() const {
  std::string out = "{";
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (out.size() > 1) out += ',';
    out += std::to_string(it->first) + ':' + it->second.str();
  }
  return out + "}";
}

Laurent Laurent::from_storage(const std::string& text) {
  Cursor cur(text);
  if (!cur.take('{')) cur.fail("expected '{'");
  Laurent out;
  int last = 0;
  bool any = false;
  if (!cur.take('}')) {
    for (;;) {
      const int e = parse_int(cur);
      if (!cur.take(':')) cur.fail("expected ':'");
      const bool neg = cur.take('-');
      const std::string d = cur.digits();
      if (d.empty()) cur.fail("expected a coefficient");
      const Integer c(d);
      if (c == 0) cur.fail("zero coefficient");
      if (any && e >= last) cur.fail("exponents must be strictly descending");
      out.add_term(e, neg ? Integer(-c) : c);
      last = e;
      any = true;
      if (cur.take('}')) break;
      if (!cur.take(',')) cur.fail("expected ',' or '}'");
    }
  }
  if (!cur.done()) cur.fail("text after '}'");
  return out;
}

}  // namespace tangle
