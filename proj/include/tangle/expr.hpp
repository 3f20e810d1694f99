#pragma once

// A small expression language for tangles.
//
//   expr   := term (";" term)*          vertical composition, bottom to top
//   term   := factor ("|" factor)*      tensor, binds tighter than ";"
//   factor := cup(k) | cap(k) | x+(a,b) | x-(a,b) | id[k,...]
//           | trefoil | hopf | unknot | "(" expr ")"

#include <string>
#include <vector>

#include "tangle/diagram.hpp"

namespace tangle::cli {

struct Expr {
  enum class Kind { Gen, Seq, Par, IdWord, Named };

  Kind kind = Kind::IdWord;
  std::string op;             // Gen: "cup", "cap", "x+", "x-"; Named: builtin name
  std::vector<int> args;      // Gen arguments, IdWord labels
  std::vector<Expr> children; // Seq, Par: exactly two

  static Expr gen(std::string op, std::vector<int> args);
  static Expr seq(Expr lower, Expr upper);
  static Expr par(Expr left, Expr right);
  static Expr id_word(std::vector<int> labels);
  static Expr named(std::string name);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws ParseError with the offset of the offending character.
Expr parse_expr(const std::string& text);
/// Inverse of parse_expr: parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// Builds and validates the diagram. Builtins need crossings, so they are
/// rejected in the planar case.
Diagram build(const Expr& e, AmbientDim dim);

/// "unknot", "hopf", "trefoil" as braided diagrams; built from generators and
/// checked the first time they are requested.
const Diagram& builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Reads either the diagram text format (first line "tangle") or an expression.
Diagram read_diagram(const std::string& text, AmbientDim dim);

}  // namespace tangle::cli
