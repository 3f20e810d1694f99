#pragma once

// Set-level Segal machinery: the Segal condition, completion of a simplicial
// set to a category by generators and relations, the fiber-product value of
// the Seg formula at a twisted arrow, and a truncated version of the colimit
// that defines Seg.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tangle/simplex.hpp"
#include "tangle/simplicial.hpp"

namespace tangle::segal {

/// X_p -> X_1 x_{X_0} ... x_{X_0} X_1 is a bijection.
bool is_segal(const SimplicialData& x, int p);

/// A word is a composable sequence of generator ids, read left to right
/// ("first, then").
using ArrowWord = std::vector<int>;

struct CategoryPresentation {
  struct Generator {
    int source;
    int target;
    int simplex;  // the element of X_1 it comes from
    std::string name;
  };
  struct Relation {
    int source;
    int target;
    ArrowWord lhs;
    ArrowWord rhs;
  };

  int objects = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

struct ArrowClass {
  int source;
  int target;
  /// Shortest, then lexicographically least, word in the class.
  ArrowWord representative;
};

class SegCompletion {
 public:
  CategoryPresentation presentation;
  std::size_t budget = 0;
  /// Every class meeting a word of length <= budget, identities included.
  std::vector<ArrowClass> arrows;
  /// Every word of length budget is equal to a shorter one.
  bool stabilized = false;

  std::optional<int> class_of(int source, const ArrowWord& w) const;
  /// Arrow of an element of X_1; degenerate edges give identities.
  std::optional<int> class_of_edge(int edge) const;
  /// Arrow of a path of X_1 elements starting at `source`.
  std::optional<int> class_of_path(int source, const std::vector<int>& edges) const;
  /// "f then g", if the concatenated representatives are within budget.
  std::optional<int> compose(int f, int g) const;
  std::vector<int> hom(int source, int target) const;
  int identity(int object) const;
  std::string describe(int arrow) const;

  std::map<std::pair<int, ArrowWord>, int> lookup;
  std::vector<int> generator_of_edge;  // -1 for degenerate edges
  std::vector<int> edge_source;
};

/// Generators: nondegenerate X_1. Relations: word(d_2 s) word(d_0 s) = word(d_1 s)
/// for s in X_2, with degenerate edges read as empty words.
SegCompletion seg_complete(const SimplicialData& x, std::size_t budget);

/// Whether the nerve of the completion reproduces X at every stored level:
/// for each n the spine map X_n -> (composable n-tuples of arrows) is a
/// bijection. Requires a stabilized completion.
bool unit_is_isomorphism(const SimplicialData& x, const SegCompletion& c);

/// The finite set C([0,phi(0)]) x_{C(phi(0))} ... x C([phi(b),a]). Cut points
/// are the sorted distinct values of {0, a} and the image of phi. Each element
/// lists one simplex per piece between consecutive cuts; when a = 0 there is
/// a single piece holding a vertex.
struct FormulaValue {
  std::vector<int> cuts;
  std::vector<std::vector<int>> elements;

  std::size_t pieces() const noexcept { return cuts.size() == 1 ? 1 : cuts.size() - 1; }
  int piece_length(std::size_t i) const { return cuts.size() == 1 ? 0 : cuts[i + 1] - cuts[i]; }
  std::optional<std::size_t> find(const std::vector<int>& element) const;

  std::map<std::vector<int>, std::size_t> index;
};

FormulaValue seg_formula_value(const SimplicialData& c, const simplex::MonotoneMap& phi);

/// The vertex of an element of a formula value at a cut point.
int formula_vertex(const SimplicialData& c, const FormulaValue& v, std::size_t element, int point);

/// The path of X_1 elements an element traces over [from, to] in [a].
std::vector<int> formula_path(const SimplicialData& c, const FormulaValue& v, std::size_t element, int from,
                              int to);

/// Image of an element of F(phi0) under the morphism (f, g) : phi0 -> phi1 of
/// twisted arrows, where phi0 = f o phi1 o g.
std::vector<int> formula_pushforward(const SimplicialData& c, const simplex::MonotoneMap& f,
                                     const simplex::MonotoneMap& g, const simplex::MonotoneMap& phi0,
                                     const simplex::MonotoneMap& phi1, const FormulaValue& v0,
                                     std::size_t element, const FormulaValue& v1);

struct TwistedObject {
  simplex::MonotoneMap phi;  // [b] -> [a]
  simplex::MonotoneMap u;    // [p] -> [a]
};

/// Colimit of the formula over twisted arrows phi : [b] -> [a] under [p]
/// with a, b <= n.
struct TruncatedColimit {
  int p = 0;
  int n = 0;
  std::vector<TwistedObject> objects;
  /// Formula values, one per distinct phi; value_of[object] indexes them.
  std::vector<FormulaValue> values;
  std::vector<std::size_t> value_of;
  /// A representative (object, element) per class.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  /// class_index[object][element]
  std::vector<std::vector<int>> class_index;

  std::size_t size() const noexcept { return classes.size(); }
  std::optional<std::size_t> find_object(const simplex::MonotoneMap& phi, const simplex::MonotoneMap& u) const;

  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, std::size_t> object_index;
};

TruncatedColimit truncated_colimit(const SimplicialData& c, int p, int n);

struct ColimitReport {
  TruncatedColimit value;
  std::size_t size_below = 0;  // size at n - 1
  /// The comparison map from truncation n - 1 to truncation n is a bijection.
  bool stabilized = false;
};

ColimitReport seg_colimit_truncated(const SimplicialData& c, int p, int n);

/// The unit C[p] -> colimit, through the object (const 0 : [0] -> [p], id).
std::vector<int> colimit_unit(const SimplicialData& c, const TruncatedColimit& colim);

}  // namespace tangle::segal
