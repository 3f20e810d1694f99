#include "tangle/simplicial.hpp"

#include <map>

#include "tangle/error.hpp"

namespace tangle::segal {

SimplicialData::SimplicialData(std::vector<int> sizes, std::vector<std::vector<Table>> faces,
                               std::vector<std::vector<Table>> degeneracies,
                               std::vector<std::vector<std::string>> names)
    : sizes_(std::move(sizes)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      names_(std::move(names)) {
  const int k = top();
  if (k < 0) throw Error("simplicial data needs at least level 0");
  if (static_cast<int>(faces_.size()) != k + 1 || static_cast<int>(degeneracies_.size()) != k + 1)
    throw Error("simplicial data: expected face and degeneracy tables for levels 0.." + std::to_string(k));
  for (int n = 0; n <= k; ++n) {
    if (sizes_[n] < 0) throw Error("simplicial data: negative level size");
    const auto nf = static_cast<std::size_t>(n == 0 ? 0 : n + 1);
    const auto nd = static_cast<std::size_t>(n == k ? 0 : n + 1);
    if (faces_[n].size() != nf || degeneracies_[n].size() != nd)
      throw Error("simplicial data: wrong number of maps at level " + std::to_string(n));
    for (const auto& t : faces_[n]) {
      if (static_cast<int>(t.size()) != sizes_[n]) throw Error("simplicial data: face table has wrong length");
      for (int y : t)
        if (y < 0 || y >= sizes_[n - 1]) throw Error("simplicial data: face value out of range");
    }
    for (const auto& t : degeneracies_[n]) {
      if (static_cast<int>(t.size()) != sizes_[n]) throw Error("simplicial data: degeneracy table has wrong length");
      for (int y : t)
        if (y < 0 || y >= sizes_[n + 1]) throw Error("simplicial data: degeneracy value out of range");
    }
  }
  names_.resize(static_cast<std::size_t>(k + 1));
  for (int n = 0; n <= k; ++n) {
    auto& level = names_[n];
    for (int x = static_cast<int>(level.size()); x < sizes_[n]; ++x) level.push_back(std::to_string(x));
  }
}

void SimplicialData::check_level(int n) const {
  if (n < 0 || n > top())
    throw Error("level " + std::to_string(n) + " outside stored range 0.." + std::to_string(top()));
}

int SimplicialData::size(int n) const {
  check_level(n);
  return sizes_[n];
}

int SimplicialData::face(int n, int i, int x) const {
  check_level(n);
  if (n == 0 || i < 0 || i > n) throw Error("face d_" + std::to_string(i) + " undefined on level " + std::to_string(n));
  return faces_[n][i].at(static_cast<std::size_t>(x));
}

int SimplicialData::degeneracy(int n, int i, int x) const {
  check_level(n);
  if (n >= top() || i < 0 || i > n)
    throw Error("degeneracy s_" + std::to_string(i) + " undefined on level " + std::to_string(n));
  return degeneracies_[n][i].at(static_cast<std::size_t>(x));
}

const std::string& SimplicialData::name(int n, int x) const {
  check_level(n);
  return names_[n].at(static_cast<std::size_t>(x));
}

int SimplicialData::act(const simplex::MonotoneMap& theta, int x) const {
  const int n = theta.target().p();
  check_level(n);
  check_level(theta.source().p());
  const auto [inj, surj] = theta.epi_mono();
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : inj.values()) hit[static_cast<std::size_t>(v)] = true;
  int level = n;
  for (int j = n; j >= 0; --j) {
    if (hit[static_cast<std::size_t>(j)]) continue;
    x = face(level, j, x);
    --level;
  }
  const auto& s = surj.values();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != s[i + 1]) continue;
    x = degeneracy(level, static_cast<int>(i), x);
    ++level;
  }
  return x;
}

int SimplicialData::vertex(int n, int x, int k) const {
  return act(simplex::MonotoneMap::constant(simplex::SimplexObject(0), simplex::SimplexObject(n), k), x);
}

bool SimplicialData::is_degenerate_edge(int e) const {
  if (top() < 1) return false;
  for (int v = 0; v < sizes_[0]; ++v)
    if (degeneracies_[0][0][static_cast<std::size_t>(v)] == e) return true;
  return false;
}

void SimplicialData::check_identities() const {
  const int k = top();
  auto fail = [](const std::string& what, int n, int x) {
    throw Error("simplicial identity " + what + " fails at level " + std::to_string(n) + ", element " +
                std::to_string(x));
  };
  for (int n = 0; n <= k; ++n) {
    for (int x = 0; x < sizes_[n]; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x))) fail("d_i d_j", n, x);
      if (n < k) {
        for (int j = 0; j <= n; ++j) {
          const int y = degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            const int lhs = face(n + 1, i, y);
            int rhs;
            if (i == j || i == j + 1) {
              rhs = x;
            } else if (n == 0) {
              continue;
            } else if (i < j) {
              rhs = degeneracy(n - 1, j - 1, face(n, i, x));
            } else {
              rhs = degeneracy(n - 1, j, face(n, i - 1, x));
            }
            if (lhs != rhs) fail("d_i s_j", n, x);
          }
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= k)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (degeneracy(n + 1, i, degeneracy(n, j, x)) != degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
              fail("s_i s_j", n, x);
    }
  }
}

namespace {

struct Chain {
  int start;
  std::vector<int> arrows;
  auto operator<=>(const Chain&) const = default;
};

}  // namespace

SimplicialData nerve(const SmallCategory& c, int top_level) {
  if (top_level < 0) throw Error("nerve: negative top level");
  if (static_cast<int>(c.identity.size()) != c.objects) throw Error("nerve: one identity per object required");
  const auto arrows = static_cast<int>(c.arrow_source.size());
  auto admitted = [&](const std::vector<int>& ch) { return !c.admit || c.admit(ch); };
  auto end_of = [&](const Chain& ch) {
    return ch.arrows.empty() ? ch.start : c.arrow_target[static_cast<std::size_t>(ch.arrows.back())];
  };

  std::vector<std::vector<Chain>> levels(static_cast<std::size_t>(top_level + 1));
  std::vector<std::map<Chain, int>> index(static_cast<std::size_t>(top_level + 1));
  for (int x = 0; x < c.objects; ++x) levels[0].push_back({x, {}});
  for (int n = 1; n <= top_level; ++n) {
    for (const auto& prev : levels[n - 1]) {
      const int e = end_of(prev);
      for (int f = 0; f < arrows; ++f) {
        if (c.arrow_source[static_cast<std::size_t>(f)] != e) continue;
        Chain next = prev;
        next.arrows.push_back(f);
        if (admitted(next.arrows)) levels[n].push_back(std::move(next));
      }
    }
  }
  std::vector<int> sizes;
  for (int n = 0; n <= top_level; ++n) {
    for (int i = 0; i < static_cast<int>(levels[n].size()); ++i) index[n][levels[n][i]] = i;
    sizes.push_back(static_cast<int>(levels[n].size()));
  }
  auto lookup = [&](int n, const Chain& ch) {
    auto it = index[n].find(ch);
    if (it == index[n].end()) throw InternalError("nerve: admitted chains are not closed under faces/degeneracies");
    return it->second;
  };

  std::vector<std::vector<SimplicialData::Table>> faces(static_cast<std::size_t>(top_level + 1));
  std::vector<std::vector<SimplicialData::Table>> degens(static_cast<std::size_t>(top_level + 1));
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top_level + 1));
  for (int n = 0; n <= top_level; ++n) {
    for (const auto& ch : levels[n]) {
      std::string nm;
      if (n == 0) {
        nm = c.objects == 1 ? "*" : "o" + std::to_string(ch.start);
      } else {
        for (std::size_t i = 0; i < ch.arrows.size(); ++i) {
          const auto f = static_cast<std::size_t>(ch.arrows[i]);
          nm += (i ? "," : "") + (f < c.arrow_name.size() ? c.arrow_name[f] : std::to_string(f));
        }
      }
      names[n].push_back(nm);
    }
    if (n >= 1) {
      faces[n].assign(static_cast<std::size_t>(n + 1), SimplicialData::Table(levels[n].size()));
      for (std::size_t x = 0; x < levels[n].size(); ++x) {
        const Chain& ch = levels[n][x];
        for (int i = 0; i <= n; ++i) {
          Chain out;
          if (n == 1) {
            const auto f = static_cast<std::size_t>(ch.arrows[0]);
            out.start = i == 0 ? c.arrow_target[f] : c.arrow_source[f];
          } else if (i == 0) {
            out.arrows.assign(ch.arrows.begin() + 1, ch.arrows.end());
            out.start = c.arrow_source[static_cast<std::size_t>(out.arrows[0])];
          } else if (i == n) {
            out.arrows.assign(ch.arrows.begin(), ch.arrows.end() - 1);
            out.start = ch.start;
          } else {
            out = ch;
            const auto composite = c.compose(ch.arrows[i - 1], ch.arrows[i]);
            if (!composite) throw InternalError("nerve: inner face needs an undefined composite");
            out.arrows[i - 1] = *composite;
            out.arrows.erase(out.arrows.begin() + i);
          }
          faces[n][i][x] = lookup(n - 1, out);
        }
      }
    }
    if (n < top_level) {
      degens[n].assign(static_cast<std::size_t>(n + 1), SimplicialData::Table(levels[n].size()));
      for (std::size_t x = 0; x < levels[n].size(); ++x) {
        const Chain& ch = levels[n][x];
        for (int i = 0; i <= n; ++i) {
          // vertex i of the chain
          const int v = i == 0 ? ch.start : c.arrow_target[static_cast<std::size_t>(ch.arrows[i - 1])];
          Chain out = ch;
          out.arrows.insert(out.arrows.begin() + i, c.identity[static_cast<std::size_t>(v)]);
          degens[n][i][x] = lookup(n + 1, out);
        }
      }
    }
  }
  return SimplicialData(std::move(sizes), std::move(faces), std::move(degens), std::move(names));
}

SmallCategory monoid_category(const std::vector<std::vector<int>>& table, const std::string& name) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw Error("monoid table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw Error("monoid table is not square");
  SmallCategory c;
  c.objects = 1;
  c.identity = {0};
  for (int i = 0; i < n; ++i) {
    c.arrow_source.push_back(0);
    c.arrow_target.push_back(0);
    c.arrow_name.push_back(i == 0 ? "1" : name + std::to_string(i));
  }
  c.compose = [table](int f, int g) -> std::optional<int> {
    return table[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
  };
  return c;
}

SmallCategory free_monoid_category(const std::string& generator, int max_length) {
  if (max_length < 0) throw Error("free monoid truncation must be nonnegative");
  SmallCategory c;
  c.objects = 1;
  c.identity = {0};
  for (int k = 0; k <= max_length; ++k) {
    c.arrow_source.push_back(0);
    c.arrow_target.push_back(0);
    c.arrow_name.push_back(k == 0 ? "1" : k == 1 ? generator : generator + "^" + std::to_string(k));
  }
  c.compose = [max_length](int f, int g) -> std::optional<int> {
    if (f + g > max_length) return std::nullopt;
    return f + g;
  };
  c.admit = [max_length](const std::vector<int>& ch) {
    int total = 0;
    for (int f : ch) total += f;
    return total <= max_length;
  };
  return c;
}

SmallCategory wedge(const SmallCategory& a, const SmallCategory& b) {
  if (a.objects != 1 || b.objects != 1) throw Error("wedge: both categories must have one object");
  struct Origin {
    int side;  // -1 identity, 0 = a, 1 = b
    int id;
  };
  std::vector<Origin> origin{{-1, 0}};
  std::vector<int> from_a(a.arrow_source.size(), 0);
  std::vector<int> from_b(b.arrow_source.size(), 0);
  SmallCategory c;
  c.objects = 1;
  c.identity = {0};
  c.arrow_source = {0};
  c.arrow_target = {0};
  c.arrow_name = {"1"};
  auto add = [&](const SmallCategory& side, int s, std::vector<int>& map) {
    for (int f = 0; f < static_cast<int>(side.arrow_source.size()); ++f) {
      if (f == side.identity[0]) continue;
      map[static_cast<std::size_t>(f)] = static_cast<int>(origin.size());
      origin.push_back({s, f});
      c.arrow_source.push_back(0);
      c.arrow_target.push_back(0);
      c.arrow_name.push_back(static_cast<std::size_t>(f) < side.arrow_name.size() ? side.arrow_name[f]
                                                                                  : std::to_string(f));
    }
  };
  add(a, 0, from_a);
  add(b, 1, from_b);

  auto side_of = [origin](const std::vector<int>& ch) {
    int side = -1;
    for (int f : ch) {
      const int s = origin[static_cast<std::size_t>(f)].side;
      if (s < 0) continue;
      if (side >= 0 && side != s) return -2;
      side = s;
    }
    return side;
  };
  c.compose = [a, b, origin, from_a, from_b](int f, int g) -> std::optional<int> {
    const Origin of = origin[static_cast<std::size_t>(f)];
    const Origin og = origin[static_cast<std::size_t>(g)];
    if (of.side < 0) return g;
    if (og.side < 0) return f;
    if (of.side != og.side) return std::nullopt;
    const SmallCategory& s = of.side == 0 ? a : b;
    const auto& map = of.side == 0 ? from_a : from_b;
    const auto r = s.compose(of.id, og.id);
    if (!r) return std::nullopt;
    return *r == s.identity[0] ? 0 : map[static_cast<std::size_t>(*r)];
  };
  c.admit = [a, b, origin, side_of](const std::vector<int>& ch) {
    const int side = side_of(ch);
    if (side == -2) return false;
    if (side == -1) return true;
    const SmallCategory& s = side == 0 ? a : b;
    if (!s.admit) return true;
    std::vector<int> local;
    for (int f : ch) {
      const Origin o = origin[static_cast<std::size_t>(f)];
      local.push_back(o.side < 0 ? s.identity[0] : o.id);
    }
    return s.admit(local);
  };
  return c;
}

SmallCategory poset_category(int n) {
  if (n < 0) throw Error("poset [n] needs n >= 0");
  SmallCategory c;
  c.objects = n + 1;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id[{i, j}] = static_cast<int>(c.arrow_source.size());
      c.arrow_source.push_back(i);
      c.arrow_target.push_back(j);
      c.arrow_name.push_back(std::to_string(i) + "<=" + std::to_string(j));
    }
  for (int i = 0; i <= n; ++i) c.identity.push_back(id[{i, i}]);
  c.compose = [src = c.arrow_source, tgt = c.arrow_target, id](int f, int g) -> std::optional<int> {
    if (tgt[static_cast<std::size_t>(f)] != src[static_cast<std::size_t>(g)]) return std::nullopt;
    return id.at({src[static_cast<std::size_t>(f)], tgt[static_cast<std::size_t>(g)]});
  };
  return c;
}

SimplicialData graph_simplicial(int vertices, const std::vector<std::pair<int, int>>& edges, int top_level,
                                const std::vector<std::string>& edge_names) {
  SmallCategory c;
  c.objects = vertices;
  for (int v = 0; v < vertices; ++v) {
    c.identity.push_back(static_cast<int>(c.arrow_source.size()));
    c.arrow_source.push_back(v);
    c.arrow_target.push_back(v);
    c.arrow_name.push_back("id" + std::to_string(v));
  }
  const int first_edge = vertices;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [s, t] = edges[e];
    if (s < 0 || s >= vertices || t < 0 || t >= vertices) throw Error("graph edge endpoint out of range");
    c.arrow_source.push_back(s);
    c.arrow_target.push_back(t);
    c.arrow_name.push_back(e < edge_names.size() ? edge_names[e] : "e" + std::to_string(e));
  }
  // only identities compose; chains carry at most one edge
  c.compose = [first_edge](int f, int g) -> std::optional<int> {
    if (f < first_edge) return g;
    if (g < first_edge) return f;
    return std::nullopt;
  };
  c.admit = [first_edge](const std::vector<int>& ch) {
    int real = 0;
    for (int f : ch) real += f >= first_edge;
    return real <= 1;
  };
  return nerve(c, top_level);
}

}  // namespace tangle::segal
