#include "tangle/expr.hpp"

#include <cctype>
#include <map>

#include "tangle/error.hpp"

namespace tangle::cli {

Expr Expr::gen(std::string op, std::vector<int> args) { return {Kind::Gen, std::move(op), std::move(args), {}}; }
Expr Expr::seq(Expr lower, Expr upper) { return {Kind::Seq, "", {}, {std::move(lower), std::move(upper)}}; }
Expr Expr::par(Expr left, Expr right) { return {Kind::Par, "", {}, {std::move(left), std::move(right)}}; }
Expr Expr::id_word(std::vector<int> labels) { return {Kind::IdWord, "", std::move(labels), {}}; }
Expr Expr::named(std::string name) { return {Kind::Named, std::move(name), {}, {}}; }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    while (take(';')) e = Expr::seq(std::move(e), term());
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (take('|')) e = Expr::par(std::move(e), factor());
    return e;
  }

  Expr factor() {
    skip();
    if (take('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    const std::size_t start = i_;
    std::string word;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) word += s_[i_++];
    if (word.empty()) fail(i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of input");
    if (word == "x") {
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) fail("expected '+' or '-' after 'x'");
      word += s_[i_++];
      expect_here('(');
      const int a = integer();
      expect(',');
      const int b = integer();
      expect(')');
      return Expr::gen(word, {a, b});
    }
    if (word == "cup" || word == "cap") {
      expect_here('(');
      const int k = integer();
      expect(')');
      return Expr::gen(word, {k});
    }
    if (word == "id") {
      expect_here('[');
      std::vector<int> labels;
      if (!take(']')) {
        labels.push_back(integer());
        while (take(',')) labels.push_back(integer());
        expect(']');
      }
      return Expr::id_word(std::move(labels));
    }
    for (const auto& name : builtin_names())
      if (word == name) return Expr::named(word);
    i_ = start;
    fail("unknown generator '" + word + "'");
  }

  int integer() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected an integer");
    if (i_ - digits > 6) {
      i_ = start;
      fail("integer out of range");
    }
    return std::stoi(s_.substr(start, i_ - start));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool take(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }

  /// No whitespace allowed before c.
  void expect_here(char c) {
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string where = i_ < s_.size() ? " at '" + std::string(1, s_[i_]) + "'" : " at end of input";
    throw ParseError(i_, msg + where);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

Expr build_closure(int twists) {
  // two upward strands braided, closed off to the right
  Expr e = Expr::seq(Expr::gen("cup", {-1}),
                     Expr::par(Expr::par(Expr::id_word({0}), Expr::gen("cup", {-1})), Expr::id_word({-1})));
  for (int i = 0; i < twists; ++i) e = Expr::seq(std::move(e), Expr::par(Expr::gen("x+", {0, 0}), Expr::id_word({-1, -1})));
  e = Expr::seq(std::move(e), Expr::par(Expr::par(Expr::id_word({0}), Expr::gen("cap", {0})), Expr::id_word({-1})));
  e = Expr::seq(std::move(e), Expr::gen("cap", {0}));
  return e;
}

struct Builtins {
  std::map<std::string, Diagram> diagrams;

  Builtins() {
    add("unknot", Expr::seq(Expr::gen("cup", {0}), Expr::gen("cap", {1})), 1, 0);
    add("hopf", build_closure(2), 2, 2);
    add("trefoil", build_closure(3), 1, 3);
  }

  void add(const std::string& name, const Expr& e, std::size_t components, std::size_t crossings) {
    Diagram d = build(e, AmbientDim::Braided);
    const auto comps = trace_components(d);
    if (!d.is_closed() || comps.size() != components || d.crossing_count() != crossings)
      throw InternalError("builtin '" + name + "' does not have the expected shape");
    diagrams.emplace(name, std::move(d));
  }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Gen: return e.op + "(" + join(e.args) + ")";
    case Expr::Kind::IdWord: return "id[" + join(e.args) + "]";
    case Expr::Kind::Named: return e.op;
    case Expr::Kind::Par: {
      auto side = [](const Expr& c, bool right) {
        const bool wrap = c.kind == Expr::Kind::Seq || (right && c.kind == Expr::Kind::Par);
        return wrap ? "(" + print_expr(c) + ")" : print_expr(c);
      };
      return side(e.children[0], false) + " | " + side(e.children[1], true);
    }
    case Expr::Kind::Seq: {
      const Expr& up = e.children[1];
      const std::string rhs = up.kind == Expr::Kind::Seq ? "(" + print_expr(up) + ")" : print_expr(up);
      return print_expr(e.children[0]) + " ; " + rhs;
    }
  }
  throw InternalError("print_expr: unknown kind");
}

Diagram build(const Expr& e, AmbientDim dim) {
  switch (e.kind) {
    case Expr::Kind::Gen: {
      const std::size_t arity = (e.op == "cup" || e.op == "cap") ? 1 : 2;
      if (e.args.size() != arity) throw Error(e.op + " takes " + std::to_string(arity) + " argument(s)");
      if (e.op == "cup") return elementary(Event::cup(0, e.args[0]), dim);
      if (e.op == "cap") return elementary(Event::cap(0, e.args[0]), dim);
      if (e.op == "x+" || e.op == "x-") return elementary(Event::cross(e.op == "x+", 0, e.args[0], e.args[1]), dim);
      throw Error("unknown generator '" + e.op + "'");
    }
    case Expr::Kind::IdWord: return identity(e.args);
    case Expr::Kind::Named:
      if (dim == AmbientDim::Planar) throw Error("builtin '" + e.op + "' has crossings; not available in the planar case");
      return builtin(e.op);
    case Expr::Kind::Seq: {
      Diagram d = compose(build(e.children[0], dim), build(e.children[1], dim), dim);
      require_valid(d, dim);
      return d;
    }
    case Expr::Kind::Par: {
      Diagram d = tensor(build(e.children[0], dim), build(e.children[1], dim));
      require_valid(d, dim);
      return d;
    }
  }
  throw InternalError("build: unknown kind");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"trefoil", "hopf", "unknot"};
  return names;
}

const Diagram& builtin(const std::string& name) {
  static const Builtins table;
  auto it = table.diagrams.find(name);
  if (it == table.diagrams.end()) throw Error("unknown builtin '" + name + "'");
  return it->second;
}

Diagram read_diagram(const std::string& text, AmbientDim dim) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text.compare(start, 6, "tangle") == 0) {
    Diagram d = parse_diagram(text);
    require_valid(d, dim);
    return d;
  }
  return build(parse_expr(text), dim);
}

}  // namespace tangle::cli
