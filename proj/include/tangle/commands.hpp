#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tangle::cli {

struct CommandConfig {
  /// validate, normalize, eval, invariant, equal, datum, words-factor,
  /// star-enum, seg-complete, simplex-phi
  std::string command;
  int dim = 3;  // 2 planar, 3 braided, >= 4 symmetric
  /// kauffman, trivial, symmetric, random[:seed], or a datum file
  std::string datum = "kauffman";
  /// Diagram sources: an expression or diagram text given inline, else a
  /// file path, else stdin ("-" or empty).
  std::vector<std::string> exprs;
  std::vector<std::string> files;
  std::size_t budget = 4;
  unsigned long long seed = 1;
  // words / star
  std::string word;
  std::string monoid_a = "Z2";
  std::string monoid_b = "Z3";
  std::size_t alternation = 4;
  std::size_t element_bound = 2;
  bool list = false;
  // seg
  std::string category = "Z2";
  int colimit_level = -1;
  // simplex
  std::vector<int> phi;
  int phi_target = -1;
  int lo = 0;
  int hi = 0;
};

/// Runs one subcommand. Returns 0 on success, 1 on a user error, 2 on a
/// broken internal invariant; diagnostics go to err.
int run_command(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tangle::cli
