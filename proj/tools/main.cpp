// tangle: command line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tangle/commands.hpp"

namespace {

using tangle::cli::CommandConfig;

void diagram_inputs(CLI::App* sub, CommandConfig& c) {
  sub->add_option("-e,--expr", c.exprs, "diagram as an expression or diagram text (repeatable)");
  sub->add_option("files", c.files, "diagram files; '-' or nothing reads stdin");
  sub->add_option("--dim", c.dim, "ambient dimension: 2 planar, 3 braided, 4+ symmetric")->check(CLI::Range(2, 64));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed tangle diagrams: rewriting, evaluation and supporting combinatorics"};
  app.require_subcommand(1);
  CommandConfig c;
  std::string output;
  app.add_option("-o,--output", output, "write results to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "check a diagram and print a summary");
  diagram_inputs(validate, c);

  auto* normalize = app.add_subcommand("normalize", "planar normal form, or the simplified diagram");
  diagram_inputs(normalize, c);

  auto* eval = app.add_subcommand("eval", "evaluate a diagram against a datum");
  diagram_inputs(eval, c);
  eval->add_option("--datum", c.datum, "kauffman, trivial, symmetric, random[:n[:seed]] or a datum file");

  auto* invariant = app.add_subcommand("invariant", "bracket, normalized bracket and writhe of a closed diagram");
  diagram_inputs(invariant, c);

  auto* equal = app.add_subcommand("equal", "decide whether two diagrams are isotopic");
  diagram_inputs(equal, c);
  equal->add_option("--budget", c.budget, "search depth per side");
  equal->add_option("--seed", c.seed, "seed of the random datum used to separate");

  auto* datum = app.add_subcommand("datum", "print and validate a datum");
  datum->add_option("name", c.datum, "kauffman, trivial, symmetric, random[:n[:seed]] or a datum file")->required();
  datum->add_option("--dim", c.dim, "ambient dimension to validate for")->check(CLI::Range(2, 64));

  auto* words = app.add_subcommand("words", "words and monoid coproducts");
  words->require_subcommand(1);
  auto* factor = words->add_subcommand("factor", "minimal factorization into alternating words");
  factor->add_option("word", c.word, "a word, one letter per character")->required();

  auto* star = app.add_subcommand("star", "coproducts of pointed monoids");
  star->require_subcommand(1);
  auto* star_enum = star->add_subcommand("enum", "enumerate alternating words by stratum");
  star_enum->add_option("--a", c.monoid_a, "left monoid: Z<n>, 1 or free:<name>");
  star_enum->add_option("--b", c.monoid_b, "right monoid");
  star_enum->add_option("--alternation", c.alternation, "maximal number of letters");
  star_enum->add_option("--bound", c.element_bound, "maximal length of a letter");
  star_enum->add_flag("--list", c.list, "print every element");

  auto* seg = app.add_subcommand("seg", "Segal completion");
  seg->require_subcommand(1);
  auto* seg_complete = seg->add_subcommand("complete", "present the category generated by a nerve");
  seg_complete->add_option("--category", c.category, "Z<n>, free:<L>, poset:<n> or A+B");
  seg_complete->add_option("--budget", c.budget, "maximal word length");
  seg_complete->add_option("--colimit", c.colimit_level, "also compute the colimit formula at level 1, this truncation");

  auto* simplex = app.add_subcommand("simplex", "simplex category operators");
  simplex->require_subcommand(1);
  auto* phi = simplex->add_subcommand("phi", "the phi-hull of convex subsets");
  phi->add_option("--phi", c.phi, "values of phi")->required()->delimiter(',');
  phi->add_option("--target", c.phi_target, "a, for phi : [b] -> [a]; defaults to max(phi)");
  phi->add_option("--lo", c.lo, "lower end of C");
  phi->add_option("--hi", c.hi, "upper end of C");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (validate->parsed()) c.command = "validate";
  if (normalize->parsed()) c.command = "normalize";
  if (eval->parsed()) c.command = "eval";
  if (invariant->parsed()) c.command = "invariant";
  if (equal->parsed()) c.command = "equal";
  if (datum->parsed()) c.command = "datum";
  if (factor->parsed()) c.command = "words-factor";
  if (star_enum->parsed()) c.command = "star-enum";
  if (seg_complete->parsed()) c.command = "seg-complete";
  if (phi->parsed()) c.command = "simplex-phi";

  if (output.empty()) return tangle::cli::run_command(c, std::cin, std::cout, std::cerr);
  std::ostringstream buffer;
  const int status = tangle::cli::run_command(c, std::cin, buffer, std::cerr);
  std::ofstream file(output);
  if (!file) {
    std::cerr << "error: cannot write '" << output << "'\n";
    return 1;
  }
  file << buffer.str();
  return status;
}
