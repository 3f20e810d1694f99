#include "tangle/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "tangle/error.hpp"
#include "tangle/eval.hpp"
#include "tangle/expr.hpp"
#include "tangle/rewrite.hpp"
#include "tangle/segal.hpp"
#include "tangle/simplex.hpp"
#include "tangle/simplicial.hpp"
#include "tangle/words.hpp"

namespace tangle::cli {

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_all(f);
}

/// The i-th diagram source: inline expressions first, then files, then stdin.
std::string source_text(const CommandConfig& c, std::size_t i, std::istream& in) {
  if (i < c.exprs.size()) return c.exprs[i];
  const std::size_t j = i - c.exprs.size();
  if (j < c.files.size()) return c.files[j] == "-" ? read_all(in) : read_file(c.files[j]);
  if (j == c.files.size()) return read_all(in);
  throw Error("missing input diagram #" + std::to_string(i + 1));
}

Diagram input_diagram(const CommandConfig& c, std::size_t i, std::istream& in, AmbientDim dim) {
  return read_diagram(source_text(c, i, in), dim);
}

eval::AnyDatum load_datum(const std::string& spec) {
  if (spec == "kauffman") return eval::kauffman_datum();
  if (spec == "trivial") return eval::trivial_datum();
  if (spec == "symmetric") return eval::symmetric_test_datum();
  if (spec.rfind("random", 0) == 0) {
    // random:<dim n>:<seed>
    int n = 3;
    unsigned long long seed = 1;
    if (spec.size() > 6) {
      if (spec[6] != ':') throw Error("datum spec 'random[:n[:seed]]'");
      std::istringstream rest(spec.substr(7));
      char colon = 0;
      if (!(rest >> n) || ((rest >> colon) && (colon != ':' || !(rest >> seed))))
        throw Error("datum spec 'random[:n[:seed]]'");
    }
    return eval::random_datum(dim_from_n(n), seed);
  }
  return eval::parse_datum(read_file(spec));
}

words::PointedMonoid parse_monoid(const std::string& spec) {
  if (spec == "1") return words::PointedMonoid::trivial();
  if (spec.size() > 1 && spec[0] == 'Z') {
    try {
      return words::PointedMonoid::cyclic(std::stoi(spec.substr(1)));
    } catch (const std::invalid_argument&) {
    }
  }
  if (spec.rfind("free:", 0) == 0 && spec.size() > 5) return words::PointedMonoid::free_on_one(spec.substr(5));
  throw Error("monoid spec must be Z<n>, 1 or free:<name>, got '" + spec + "'");
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return t;
}

int spec_number(const std::string& spec, std::size_t from) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(spec.substr(from), &used);
    if (used != spec.size() - from || v < 0 || v > 64) throw std::out_of_range(spec);
    return v;
  } catch (const std::exception&) {
    throw Error("bad number in category spec '" + spec + "'");
  }
}

/// `letter` names the generator; the two sides of a wedge get g and h.
segal::SmallCategory parse_category(const std::string& spec, const std::string& letter = "g") {
  const auto plus = spec.find('+');
  if (plus != std::string::npos)
    return segal::wedge(parse_category(spec.substr(0, plus), "g"), parse_category(spec.substr(plus + 1), "h"));
  if (spec.size() > 1 && spec[0] == 'Z') {
    const int n = spec_number(spec, 1);
    if (n < 1) throw Error("Z<n> needs n >= 1");
    return segal::monoid_category(cyclic_table(n), letter + "^");
  }
  if (spec.rfind("free:", 0) == 0)
    return segal::free_monoid_category(letter == "g" ? "x" : "y", spec_number(spec, 5));
  if (spec.rfind("poset:", 0) == 0) return segal::poset_category(spec_number(spec, 6));
  throw Error("category spec must be Z<n>, free:<L>, poset:<n> or A+B, got '" + spec + "'");
}

template <class R>
void print_value(std::ostream& out, const eval::Matrix<R>& m) {
  if (m.rows() == 1 && m.cols() == 1) {
    out << eval::RingTraits<R>::show(m(0, 0)) << "\n";
    return;
  }
  out << m.rows() << "x" << m.cols() << "\n" << m.to_string();
}

int cmd_validate(const CommandConfig& c, std::istream& in, std::ostream& out, AmbientDim dim) {
  // parse without the builder's validation so that the report is printed
  const std::string text = source_text(c, 0, in);
  const auto start = text.find_first_not_of(" \t\r\n");
  const bool raw = start != std::string::npos && text.compare(start, 6, "tangle") == 0;
  const Diagram d = raw ? parse_diagram(text) : build(parse_expr(text), dim);
  const auto report = validate(d, dim);
  if (!report.ok()) {
    out << "invalid\n" << report.to_string();
    return 1;
  }
  const auto comps = trace_components(d);
  std::size_t closed = 0;
  for (const auto& k : comps) closed += k.closed;
  out << "valid (" << to_string(dim) << ")\n";
  out << "source: " << to_string(d.source) << "\n";
  out << "target: " << to_string(d.target) << "\n";
  out << "events: " << d.event_count() << "\n";
  out << "crossings: " << d.crossing_count() << "\n";
  out << "components: " << comps.size() << " (" << closed << " closed)\n";
  out << "degree: " << degree(d.source) << "\n";
  return 0;
}

int cmd_normalize(const CommandConfig& c, std::istream& in, std::ostream& out, AmbientDim dim) {
  const Diagram d = input_diagram(c, 0, in, dim);
  if (dim == AmbientDim::Planar) {
    out << rewrite::normalize_planar(d).to_string();
    return 0;
  }
  const Diagram s = rewrite::simplify(d, dim);
  out << serialize(s);
  out << "canonical: " << rewrite::canonical_key(s, dim) << "\n";
  return 0;
}

int cmd_eval(const CommandConfig& c, std::istream& in, std::ostream& out, AmbientDim dim) {
  const Diagram d = input_diagram(c, 0, in, dim);
  std::visit([&](const auto& D) { print_value(out, eval::evaluate(d, D)); }, load_datum(c.datum));
  return 0;
}

int cmd_invariant(const CommandConfig& c, std::istream& in, std::ostream& out, AmbientDim dim) {
  const Diagram d = input_diagram(c, 0, in, dim);
  const auto w = writhe(d);
  out << "bracket: " << eval::bracket_state_sum(d).to_string() << "\n";
  out << "normalized: " << eval::jones_normalized(d).to_string() << "\n";
  out << "writhe: " << w.total << "\n";
  for (std::size_t i = 0; i < w.self.size(); ++i) out << "component " << i << " self-writhe: " << w.self[i] << "\n";
  return 0;
}

int cmd_equal(const CommandConfig& c, std::istream& in, std::ostream& out, AmbientDim dim) {
  const Diagram a = input_diagram(c, 0, in, dim);
  const Diagram b = input_diagram(c, 1, in, dim);
  rewrite::EqualityOptions opts;
  opts.budget = static_cast<int>(c.budget);
  opts.seed = c.seed;
  out << rewrite::to_string(rewrite::equal(a, b, dim, opts)) << "\n";
  return 0;
}

int cmd_datum(const CommandConfig& c, std::ostream& out, AmbientDim dim) {
  int status = 0;
  std::visit(
      [&](const auto& D) {
        out << eval::serialize_datum(D);
        const auto report = eval::validate_datum(D, dim);
        std::istringstream lines("validation (" + to_string(dim) + "): " + report.to_string());
        for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
        if (!report.ok()) status = 1;
      },
      load_datum(c.datum));
  return status;
}

int cmd_words_factor(const CommandConfig& c, std::ostream& out) {
  const words::Word<char> w(c.word.begin(), c.word.end());
  const auto parts = words::alternating_factorization(w);
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " | " : "") << std::string(parts[i].begin(), parts[i].end());
  out << "\nfactors: " << parts.size() << "\n";
  return 0;
}

int cmd_star_enum(const CommandConfig& c, std::ostream& out) {
  const auto a = parse_monoid(c.monoid_a);
  const auto b = parse_monoid(c.monoid_b);
  const auto e = words::star_enumerate(a, b, c.alternation, c.element_bound);
  const auto formula = words::star_stratum_formula(a.nonunits(c.element_bound).size(),
                                                    b.nonunits(c.element_bound).size(), c.alternation);
  out << a.name() << " * " << b.name() << ", alternation <= " << c.alternation << "\n";
  // strata in order of word length, then pattern
  auto letters = [](const words::Stratum& st) {
    if (st.pattern == "1") return std::size_t{0};
    return st.pattern[0] == '(' ? 2 * st.k + 2 : 2 * st.k + 1;
  };
  std::set<words::Stratum> strata;
  for (const auto& kv : e.counts) strata.insert(kv.first);
  for (const auto& kv : formula) strata.insert(kv.first);
  std::vector<words::Stratum> ordered(strata.begin(), strata.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const words::Stratum& x, const words::Stratum& y) { return letters(x) < letters(y); });
  bool agree = true;
  for (const auto& stratum : ordered) {
    const auto got = e.counts.find(stratum);
    const auto want = formula.find(stratum);
    const std::size_t count = got == e.counts.end() ? 0 : got->second;
    const std::size_t expected = want == formula.end() ? 0 : want->second;
    agree = agree && expected == count;
    out << stratum.pattern << " k=" << stratum.k << ": " << count << " (formula " << expected << ")\n";
  }
  out << "total: " << e.elements.size() << "\n";
  if (c.list)
    for (const auto& u : e.elements) out << words::to_string(a, b, u) << "\n";
  if (!agree) throw InternalError("star enumeration disagrees with the stratum formula");
  return 0;
}

int cmd_seg_complete(const CommandConfig& c, std::ostream& out) {
  const auto cat = parse_category(c.category);
  const auto x = segal::nerve(cat, 3);
  const auto s = segal::seg_complete(x, c.budget);
  out << "category: " << c.category << "\n";
  out << "objects: " << s.presentation.objects << "\n";
  out << "generators: " << s.presentation.generators.size() << "\n";
  out << "relations: " << s.presentation.relations.size() << "\n";
  out << "arrows (budget " << c.budget << "): " << s.arrows.size() << "\n";
  out << "stabilized: " << (s.stabilized ? "yes" : "no") << "\n";
  if (s.stabilized) out << "unit is an isomorphism: " << (segal::unit_is_isomorphism(x, s) ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < s.arrows.size(); ++i) out << "  " << s.describe(static_cast<int>(i)) << "\n";
  if (c.colimit_level >= 0) {
    const auto r = segal::seg_colimit_truncated(x, 1, c.colimit_level);
    out << "colimit at level 1, truncation " << c.colimit_level << ": " << r.value.size() << " (previous "
        << r.size_below << ", " << (r.stabilized ? "stable" : "not stable") << ")\n";
  }
  return 0;
}

int cmd_simplex_phi(const CommandConfig& c, std::ostream& out) {
  if (c.phi.empty()) throw Error("--phi needs at least one value");
  int a = c.phi_target;
  if (a < 0)
    for (int v : c.phi) a = std::max(a, v);
  const simplex::MonotoneMap phi(c.phi, simplex::SimplexObject(a));
  out << "phi: " << phi.to_string() << "\n";
  if (c.lo != 0 || c.hi != 0) {
    const simplex::ConvexSubset C(c.lo, c.hi, simplex::SimplexObject(a));
    out << C.to_string() << " -> " << simplex::phi_hull(phi, C).to_string() << "\n";
    return 0;
  }
  for (int lo = 0; lo <= a; ++lo)
    for (int hi = lo; hi <= a; ++hi) {
      const simplex::ConvexSubset C(lo, hi, simplex::SimplexObject(a));
      out << C.to_string() << " -> " << simplex::phi_hull(phi, C).to_string() << "\n";
    }
  return 0;
}

int dispatch(const CommandConfig& c, std::istream& in, std::ostream& out) {
  const AmbientDim dim = dim_from_n(c.dim);
  const std::string& cmd = c.command;
  if (cmd == "validate") return cmd_validate(c, in, out, dim);
  if (cmd == "normalize") return cmd_normalize(c, in, out, dim);
  if (cmd == "eval") return cmd_eval(c, in, out, dim);
  if (cmd == "invariant") return cmd_invariant(c, in, out, dim);
  if (cmd == "equal") return cmd_equal(c, in, out, dim);
  if (cmd == "datum") return cmd_datum(c, out, dim);
  if (cmd == "words-factor") return cmd_words_factor(c, out);
  if (cmd == "star-enum") return cmd_star_enum(c, out);
  if (cmd == "seg-complete") return cmd_seg_complete(c, out);
  if (cmd == "simplex-phi") return cmd_simplex_phi(c, out);
  throw Error("unknown command '" + cmd + "'");
}

}  // namespace

int run_command(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, in, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tangle::cli
