#include <random>

#include "doctest.h"
#include "tangle/error.hpp"
#include "tangle/eval.hpp"
#include "tangle/expr.hpp"

using namespace tangle;
using namespace tangle::cli;

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
  const int roll = static_cast<int>(rng() % (depth > 0 ? 7 : 4));
  const int k = static_cast<int>(rng() % 7) - 3;
  switch (roll) {
    case 0: return Expr::gen("cup", {k});
    case 1: return Expr::gen(rng() % 2 ? "x+" : "x-", {k, static_cast<int>(rng() % 3)});
    case 2: return Expr::id_word({k, k + 1});
    case 3: return Expr::named("hopf");
    case 4:
    case 5: return Expr::seq(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::par(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing builds the expected tree") {
  CHECK(parse_expr("cup(0)") == Expr::gen("cup", {0}));
  CHECK(parse_expr(" cap( -1 ) ") == Expr::gen("cap", {-1}));
  CHECK(parse_expr("x+(0,1)") == Expr::gen("x+", {0, 1}));
  CHECK(parse_expr("id[]") == Expr::id_word({}));
  CHECK(parse_expr("id[0,1]") == Expr::id_word({0, 1}));
  CHECK(parse_expr("trefoil") == Expr::named("trefoil"));
  // | binds tighter than ;
  CHECK(parse_expr("cup(0);id[1]|cap(0)") ==
        Expr::seq(Expr::gen("cup", {0}), Expr::par(Expr::id_word({1}), Expr::gen("cap", {0}))));
  CHECK(parse_expr("cup(0);cap(1);id[]") ==
        Expr::seq(Expr::seq(Expr::gen("cup", {0}), Expr::gen("cap", {1})), Expr::id_word({})));
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const std::string& text) {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("cup(0") == 5);
  CHECK(offset_of("cup(0);") == 7);
  CHECK(offset_of("cop(0)") == 0);
  CHECK(offset_of("cup(0) cap(1)") == 7);
  CHECK(offset_of("x*(0,0)") >= 0);
  CHECK(offset_of("cup(0)") == -1);
}

TEST_CASE("printing is the inverse of parsing") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const Expr e = random_expr(rng, 3);
    CHECK(parse_expr(print_expr(e)) == e);
  }
}

TEST_CASE("building diagrams") {
  const auto zz = build(parse_expr("id[0]|cup(0);cap(0)|id[0]"), AmbientDim::Planar);
  CHECK(zz.source == ObjectWord{0});
  CHECK(zz.target == ObjectWord{0});
  CHECK_THROWS_AS(build(parse_expr("cup(0);cap(0)"), AmbientDim::Planar), Error);
  CHECK_THROWS_AS(build(parse_expr("hopf"), AmbientDim::Planar), Error);
  CHECK_THROWS_AS(build(parse_expr("x+(0,0)"), AmbientDim::Planar), Error);
  CHECK_NOTHROW(build(parse_expr("cup(0);cap(1)"), AmbientDim::Braided));
  CHECK_THROWS_AS(build(parse_expr("cup(0,1)"), AmbientDim::Braided), Error);
}

TEST_CASE("builtins") {
  CHECK(builtin_names().size() == 3);
  const auto k = eval::kauffman_datum();
  const Laurent delta = -Laurent::A(2) - Laurent::A(-2);
  CHECK(eval::evaluate(builtin("unknot"), k)(0, 0) == delta);
  CHECK(eval::bracket_state_sum(builtin("hopf")) == Laurent::parse("-A^4-A^-4"));
  CHECK(eval::jones_normalized(builtin("trefoil")) == Laurent::parse("A^-4+A^-12-A^-16"));
  CHECK(trace_components(builtin("hopf")).size() == 2);
  CHECK(builtin("trefoil").crossing_count() == 3);
  CHECK_THROWS_AS(builtin("figure8"), Error);
}

TEST_CASE("reading either format") {
  const auto d = build(parse_expr("cup(0);cap(1)"), AmbientDim::Braided);
  CHECK(read_diagram(serialize(d), AmbientDim::Braided) == d);
  CHECK(read_diagram("cup(0);cap(1)", AmbientDim::Braided) == d);
  CHECK_THROWS_AS(read_diagram("tangle\nsource: 0\n", AmbientDim::Braided), Error);
}
