#include "tangle/segal.hpp"

#include <algorithm>
#include <set>

#include "tangle/error.hpp"
#include "tangle/union_find.hpp"

namespace tangle::segal {

using simplex::ConvexSubset;
using simplex::MonotoneMap;
using simplex::SimplexObject;

namespace {

int edge_source(const SimplicialData& x, int e) { return x.face(1, 1, e); }
int edge_target(const SimplicialData& x, int e) { return x.face(1, 0, e); }

std::vector<int> spine(const SimplicialData& x, int n, int s) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) out.push_back(x.act(MonotoneMap({j, j + 1}, SimplexObject(n)), s));
  return out;
}

}  // namespace

bool is_segal(const SimplicialData& x, int p) {
  if (p < 0 || p > x.top())
    throw Error("is_segal: level " + std::to_string(p) + " outside stored range 0.." + std::to_string(x.top()));
  if (p <= 1) return true;
  std::set<std::vector<int>> images;
  for (int s = 0; s < x.size(p); ++s)
    if (!images.insert(spine(x, p, s)).second) return false;
  // size of the iterated fiber product, by paths ending at each vertex
  std::vector<std::size_t> ending(static_cast<std::size_t>(x.size(0)), 1);
  for (int step = 0; step < p; ++step) {
    std::vector<std::size_t> next(ending.size(), 0);
    for (int e = 0; e < x.size(1); ++e)
      next[static_cast<std::size_t>(edge_target(x, e))] += ending[static_cast<std::size_t>(edge_source(x, e))];
    ending = std::move(next);
  }
  std::size_t total = 0;
  for (auto k : ending) total += k;
  return total == images.size();
}

std::optional<int> SegCompletion::class_of(int source, const ArrowWord& w) const {
  auto it = lookup.find({source, w});
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SegCompletion::class_of_edge(int edge) const {
  const int g = generator_of_edge.at(static_cast<std::size_t>(edge));
  const int v = edge_source.at(static_cast<std::size_t>(edge));
  return g >= 0 ? class_of(v, {g}) : class_of(v, {});
}

std::optional<int> SegCompletion::class_of_path(int source, const std::vector<int>& edges) const {
  ArrowWord w;
  for (int e : edges) {
    const int g = generator_of_edge.at(static_cast<std::size_t>(e));
    if (g >= 0) w.push_back(g);
  }
  return class_of(source, w);
}

std::optional<int> SegCompletion::compose(int f, int g) const {
  const auto& a = arrows.at(static_cast<std::size_t>(f));
  const auto& b = arrows.at(static_cast<std::size_t>(g));
  if (a.target != b.source) throw Error("compose: arrows are not composable");
  ArrowWord w = a.representative;
  w.insert(w.end(), b.representative.begin(), b.representative.end());
  return class_of(a.source, w);
}

std::vector<int> SegCompletion::hom(int source, int target) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    if (arrows[i].source == source && arrows[i].target == target) out.push_back(i);
  return out;
}

int SegCompletion::identity(int object) const {
  auto c = class_of(object, {});
  if (!c) throw Error("no object " + std::to_string(object));
  return *c;
}

std::string SegCompletion::describe(int arrow) const {
  const auto& a = arrows.at(static_cast<std::size_t>(arrow));
  if (a.representative.empty()) return "id" + std::to_string(a.source);
  std::string out;
  for (std::size_t i = 0; i < a.representative.size(); ++i) {
    if (i) out += '*';
    out += presentation.generators[static_cast<std::size_t>(a.representative[i])].name;
  }
  return out;
}

SegCompletion seg_complete(const SimplicialData& x, std::size_t budget) {
  if (x.top() < 2) throw Error("seg_complete needs simplicial data stored to level 2");
  SegCompletion out;
  out.budget = budget;
  auto& pres = out.presentation;
  pres.objects = x.size(0);
  out.generator_of_edge.assign(static_cast<std::size_t>(x.size(1)), -1);
  for (int e = 0; e < x.size(1); ++e) {
    out.edge_source.push_back(edge_source(x, e));
    if (x.is_degenerate_edge(e)) continue;
    out.generator_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(pres.generators.size());
    pres.generators.push_back({edge_source(x, e), edge_target(x, e), e, x.name(1, e)});
  }
  auto word = [&](int e) {
    const int g = out.generator_of_edge[static_cast<std::size_t>(e)];
    return g < 0 ? ArrowWord{} : ArrowWord{g};
  };

  std::set<std::tuple<int, ArrowWord, ArrowWord>> seen;
  std::map<ArrowWord, std::vector<ArrowWord>> rewrites;
  for (int s = 0; s < x.size(2); ++s) {
    ArrowWord lhs = word(x.face(2, 2, s));
    const ArrowWord second = word(x.face(2, 0, s));
    lhs.insert(lhs.end(), second.begin(), second.end());
    const ArrowWord rhs = word(x.face(2, 1, s));
    if (lhs == rhs) continue;
    const int src = x.vertex(2, s, 0);
    if (!seen.insert({src, lhs, rhs}).second) continue;
    pres.relations.push_back({src, x.vertex(2, s, 2), lhs, rhs});
    if (!lhs.empty()) rewrites[lhs].push_back(rhs);
    if (!rhs.empty()) rewrites[rhs].push_back(lhs);
  }

  // every composable word of length <= budget
  struct Path {
    int source;
    int target;
    ArrowWord word;
  };
  std::vector<Path> paths;
  for (int v = 0; v < pres.objects; ++v) paths.push_back({v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= budget; ++len) {
    const std::size_t layer_end = paths.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 0; g < static_cast<int>(pres.generators.size()); ++g) {
        if (pres.generators[static_cast<std::size_t>(g)].source != paths[i].target) continue;
        Path p = paths[i];
        p.word.push_back(g);
        p.target = pres.generators[static_cast<std::size_t>(g)].target;
        paths.push_back(std::move(p));
      }
    }
    layer_begin = layer_end;
  }
  std::map<std::pair<int, ArrowWord>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].word}] = i;

  UnionFind uf(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& w = paths[i].word;
    for (std::size_t at = 0; at < w.size(); ++at) {
      for (std::size_t len = 1; len <= 2 && at + len <= w.size(); ++len) {
        auto it = rewrites.find(ArrowWord(w.begin() + static_cast<long>(at), w.begin() + static_cast<long>(at + len)));
        if (it == rewrites.end()) continue;
        for (const auto& alt : it->second) {
          if (w.size() - len + alt.size() > budget) continue;
          ArrowWord v(w.begin(), w.begin() + static_cast<long>(at));
          v.insert(v.end(), alt.begin(), alt.end());
          v.insert(v.end(), w.begin() + static_cast<long>(at + len), w.end());
          auto j = index.find({paths[i].source, v});
          if (j == index.end()) throw InternalError("seg_complete: rewritten word is not a path");
          uf.unite(i, j->second);
        }
      }
    }
  }

  std::map<std::size_t, std::size_t> best;  // root -> best path
  auto better = [&](std::size_t a, std::size_t b) {
    const auto& wa = paths[a].word;
    const auto& wb = paths[b].word;
    return wa.size() != wb.size() ? wa.size() < wb.size() : wa < wb;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [it, fresh] = best.try_emplace(uf.find(i), i);
    if (!fresh && better(i, it->second)) it->second = i;
  }
  std::vector<std::size_t> reps;
  for (auto [root, i] : best) reps.push_back(i);
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = paths[a];
    const auto& pb = paths[b];
    if (pa.source != pb.source) return pa.source < pb.source;
    if (pa.target != pb.target) return pa.target < pb.target;
    return better(a, b);
  });
  std::map<std::size_t, int> class_of_root;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& p = paths[reps[k]];
    out.arrows.push_back({p.source, p.target, p.word});
    class_of_root[uf.find(reps[k])] = static_cast<int>(k);
  }
  out.stabilized = true;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int k = class_of_root.at(uf.find(i));
    out.lookup[{paths[i].source, paths[i].word}] = k;
    if (paths[i].word.size() == budget && out.arrows[static_cast<std::size_t>(k)].representative.size() >= budget)
      out.stabilized = false;
  }
  return out;
}

bool unit_is_isomorphism(const SimplicialData& x, const SegCompletion& c) {
  if (!c.stabilized) return false;
  if (x.size(0) != c.presentation.objects) return false;
  for (int n = 1; n <= x.top(); ++n) {
    std::set<std::vector<int>> images;
    for (int s = 0; s < x.size(n); ++s) {
      std::vector<int> tuple;
      for (int e : spine(x, n, s)) {
        const auto a = c.class_of_path(edge_source(x, e), {e});
        if (!a) return false;
        tuple.push_back(*a);
      }
      if (!images.insert(std::move(tuple)).second) return false;
    }
    // composable n-tuples of arrows, by paths ending at each object
    std::vector<std::size_t> ending(static_cast<std::size_t>(c.presentation.objects), 1);
    for (int step = 0; step < n; ++step) {
      std::vector<std::size_t> next(ending.size(), 0);
      for (const auto& a : c.arrows) next[static_cast<std::size_t>(a.target)] += ending[static_cast<std::size_t>(a.source)];
      ending = std::move(next);
    }
    std::size_t total = 0;
    for (auto k : ending) total += k;
    if (total != images.size()) return false;
  }
  return true;
}

std::optional<std::size_t> FormulaValue::find(const std::vector<int>& element) const {
  auto it = index.find(element);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FormulaValue seg_formula_value(const SimplicialData& c, const MonotoneMap& phi) {
  const int a = phi.target().p();
  FormulaValue out;
  std::set<int> cuts{0, a};
  cuts.insert(phi.values().begin(), phi.values().end());
  out.cuts.assign(cuts.begin(), cuts.end());
  const std::size_t pieces = out.pieces();
  for (std::size_t i = 0; i < pieces; ++i)
    if (out.piece_length(i) > c.top())
      throw Error("seg_formula_value: piece of length " + std::to_string(out.piece_length(i)) +
                  " exceeds stored level " + std::to_string(c.top()));

  // simplices of each piece grouped by first vertex
  std::vector<std::map<int, std::vector<std::pair<int, int>>>> by_first(pieces);  // first -> (simplex, last)
  for (std::size_t i = 0; i < pieces; ++i) {
    const int len = out.piece_length(i);
    for (int s = 0; s < c.size(len); ++s)
      by_first[i][c.vertex(len, s, 0)].push_back({s, c.vertex(len, s, len)});
  }
  std::vector<int> current;
  auto extend = [&](auto&& self, std::size_t i, std::optional<int> need) -> void {
    if (i == pieces) {
      out.index[current] = out.elements.size();
      out.elements.push_back(current);
      return;
    }
    for (const auto& [first, list] : by_first[i]) {
      if (need && first != *need) continue;
      for (const auto& [s, last] : list) {
        current.push_back(s);
        self(self, i + 1, last);
        current.pop_back();
      }
    }
  };
  extend(extend, 0, std::nullopt);
  return out;
}

int formula_vertex(const SimplicialData& c, const FormulaValue& v, std::size_t element, int point) {
  const auto& e = v.elements.at(element);
  if (v.cuts.size() == 1) {
    if (point != v.cuts[0]) throw Error("formula_vertex: point is not a cut");
    return e[0];
  }
  auto it = std::find(v.cuts.begin(), v.cuts.end(), point);
  if (it == v.cuts.end()) throw Error("formula_vertex: point is not a cut");
  auto i = static_cast<std::size_t>(it - v.cuts.begin());
  if (i + 1 < v.cuts.size()) return c.vertex(v.piece_length(i), e[i], 0);
  return c.vertex(v.piece_length(i - 1), e[i - 1], v.piece_length(i - 1));
}

std::vector<int> formula_path(const SimplicialData& c, const FormulaValue& v, std::size_t element, int from,
                              int to) {
  const auto& e = v.elements.at(element);
  std::vector<int> out;
  for (int j = from; j < to; ++j) {
    std::size_t i = 0;
    while (!(v.cuts[i] <= j && j < v.cuts[i + 1])) ++i;
    const int len = v.piece_length(i);
    out.push_back(c.act(MonotoneMap({j - v.cuts[i], j + 1 - v.cuts[i]}, SimplexObject(len)), e[i]));
  }
  return out;
}

std::vector<int> formula_pushforward(const SimplicialData& c, const MonotoneMap& f, const MonotoneMap& g,
                                     const MonotoneMap& phi0, const MonotoneMap& phi1, const FormulaValue& v0,
                                     std::size_t element, const FormulaValue& v1) {
  const SimplexObject a0 = f.target();
  const SimplexObject a1 = f.source();
  const auto& e0 = v0.elements.at(element);
  std::vector<int> out;
  for (std::size_t i = 0; i < v1.pieces(); ++i) {
    const int lo = v1.cuts[i];
    const ConvexSubset piece(lo, lo + v1.piece_length(i), a1);
    const MonotoneMap r = simplex::twisted_square_restriction(f, g, phi0, phi1, piece);
    const ConvexSubset to = simplex::phi_hull(phi0, simplex::hull_image(f, piece));
    int source;
    if (to.length() == 0) {
      source = formula_vertex(c, v0, element, to.lo());
    } else {
      auto it = std::find(v0.cuts.begin(), v0.cuts.end(), to.lo());
      const auto k = static_cast<std::size_t>(it - v0.cuts.begin());
      if (it == v0.cuts.end() || k + 1 >= v0.cuts.size() || v0.cuts[k + 1] != to.hi())
        throw InternalError("formula_pushforward: " + to.to_string() + " is not a piece of [" +
                            std::to_string(a0.p()) + "]");
      source = e0[k];
    }
    out.push_back(c.act(r, source));
  }
  return out;
}

std::optional<std::size_t> TruncatedColimit::find_object(const MonotoneMap& phi, const MonotoneMap& u) const {
  auto it = object_index.find({phi.target().p(), phi.values(), u.values()});
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

TruncatedColimit truncated_colimit(const SimplicialData& c, int p, int n) {
  if (p < 0 || n < 0) throw Error("truncated colimit: negative level");
  if (n > c.top()) throw Error("truncated colimit: truncation exceeds stored level " + std::to_string(c.top()));
  TruncatedColimit out;
  out.p = p;
  out.n = n;
  std::map<std::pair<int, std::vector<int>>, std::size_t> value_index;
  std::vector<MonotoneMap> phis;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (int a = 0; a <= n; ++a) {
    const auto us = simplex::all_monotone(p, a);
    for (int b = 0; b <= n; ++b) {
      for (const auto& phi : simplex::all_monotone(b, a)) {
        const std::size_t vi = out.values.size();
        value_index[{a, phi.values()}] = vi;
        out.values.push_back(seg_formula_value(c, phi));
        phis.push_back(phi);
        for (const auto& u : us) {
          out.object_index[{a, phi.values(), u.values()}] = out.objects.size();
          out.objects.push_back({phi, u});
          out.value_of.push_back(vi);
          offset.push_back(total);
          total += out.values[vi].elements.size();
        }
      }
    }
  }

  UnionFind uf(total);
  auto connect = [&](const MonotoneMap& f, const MonotoneMap& g, const MonotoneMap& phi0, std::size_t vi1) {
    const MonotoneMap& phi1 = phis[vi1];
    auto src = value_index.find({phi0.target().p(), phi0.values()});
    if (src == value_index.end()) return;
    const FormulaValue& v0 = out.values[src->second];
    const FormulaValue& v1 = out.values[vi1];
    std::vector<std::size_t> image(v0.elements.size());
    for (std::size_t x = 0; x < v0.elements.size(); ++x) {
      auto y = v1.find(formula_pushforward(c, f, g, phi0, phi1, v0, x, v1));
      if (!y) throw InternalError("truncated colimit: pushforward leaves the formula value");
      image[x] = *y;
    }
    for (const auto& u1 : simplex::all_monotone(p, phi1.target().p())) {
      const MonotoneMap u0 = simplex::compose_monotone(u1, f);
      const auto o0 = out.find_object(phi0, u0);
      const auto o1 = out.find_object(phi1, u1);
      if (!o0 || !o1) continue;
      for (std::size_t x = 0; x < image.size(); ++x) uf.unite(offset[*o0] + x, offset[*o1] + image[x]);
    }
  };

  for (std::size_t vi = 0; vi < phis.size(); ++vi) {
    const MonotoneMap& phi1 = phis[vi];
    const int a1 = phi1.target().p();
    const int b1 = phi1.source().p();
    const auto id_a = MonotoneMap::identity(SimplexObject(a1));
    const auto id_b = MonotoneMap::identity(SimplexObject(b1));
    // (f, id) with f : [a1] -> [a0] elementary
    if (a1 + 1 <= n)
      for (int i = 0; i <= a1 + 1; ++i) {
        const auto f = MonotoneMap::coface(a1 + 1, i);
        connect(f, id_b, simplex::compose_monotone(phi1, f), vi);
      }
    if (a1 >= 1)
      for (int i = 0; i < a1; ++i) {
        const auto f = MonotoneMap::codegeneracy(a1 - 1, i);
        connect(f, id_b, simplex::compose_monotone(phi1, f), vi);
      }
    // (id, g) with g : [b0] -> [b1] elementary
    if (b1 >= 1)
      for (int i = 0; i <= b1; ++i) {
        const auto g = MonotoneMap::coface(b1, i);
        connect(id_a, g, simplex::compose_monotone(g, phi1), vi);
      }
    if (b1 + 1 <= n)
      for (int i = 0; i <= b1; ++i) {
        const auto g = MonotoneMap::codegeneracy(b1, i);
        connect(id_a, g, simplex::compose_monotone(g, phi1), vi);
      }
  }

  std::map<std::size_t, int> class_of_root;
  out.class_index.resize(out.objects.size());
  for (std::size_t o = 0; o < out.objects.size(); ++o) {
    const auto count = out.values[out.value_of[o]].elements.size();
    for (std::size_t x = 0; x < count; ++x) {
      auto [it, fresh] = class_of_root.try_emplace(uf.find(offset[o] + x), static_cast<int>(out.classes.size()));
      if (fresh) out.classes.push_back({o, x});
      out.class_index[o].push_back(it->second);
    }
  }
  return out;
}

ColimitReport seg_colimit_truncated(const SimplicialData& c, int p, int n) {
  ColimitReport report;
  report.value = truncated_colimit(c, p, n);
  if (n == 0) return report;
  const TruncatedColimit below = truncated_colimit(c, p, n - 1);
  report.size_below = below.size();
  std::set<int> hit;
  for (const auto& [o, x] : below.classes) {
    const auto& obj = below.objects[o];
    const auto there = report.value.find_object(obj.phi, obj.u);
    if (!there) throw InternalError("seg_colimit_truncated: object missing from the larger truncation");
    hit.insert(report.value.class_index[*there][x]);
  }
  // below's morphisms are among ours, so the comparison is determined by representatives
  const bool injective = hit.size() == below.size();
  report.stabilized = injective && hit.size() == report.value.size();
  return report;
}

std::vector<int> colimit_unit(const SimplicialData& c, const TruncatedColimit& colim) {
  const int p = colim.p;
  const auto phi = MonotoneMap::constant(SimplexObject(0), SimplexObject(p), 0);
  const auto id = MonotoneMap::identity(SimplexObject(p));
  const auto o = colim.find_object(phi, id);
  if (!o) throw Error("colimit_unit: truncation below the level");
  const auto& v = colim.values[colim.value_of[*o]];
  std::vector<int> out;
  for (int s = 0; s < c.size(p); ++s) {
    const auto x = v.find({s});
    if (!x) throw InternalError("colimit_unit: simplex missing from its formula value");
    out.push_back(colim.class_index[*o][*x]);
  }
  return out;
}

}  // namespace tangle::segal
