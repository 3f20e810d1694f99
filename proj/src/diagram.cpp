#include "tangle/diagram.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "tangle/error.hpp"
#include "tangle/union_find.hpp"

namespace tangle {

AmbientDim dim_from_n(int n) {
  if (n < 2) throw Error("ambient dimension must be at least 2, got " + std::to_string(n));
  if (n == 2) return AmbientDim::Planar;
  if (n == 3) return AmbientDim::Braided;
  return AmbientDim::Symmetric;
}

std::string to_string(AmbientDim dim) {
  switch (dim) {
    case AmbientDim::Planar: return "planar";
    case AmbientDim::Braided: return "braided";
    case AmbientDim::Symmetric: return "symmetric";
  }
  return "?";
}

bool exact_labels(AmbientDim dim) { return dim == AmbientDim::Planar; }

std::string to_string(const ObjectWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

int degree(const ObjectWord& w) {
  int d = 0;
  for (int x : w) d += (x % 2 == 0) ? 1 : -1;
  return d;
}

int Event::inputs() const noexcept {
  switch (kind) {
    case EventKind::Id: return 1;
    case EventKind::Cup: return 0;
    default: return 2;
  }
}

int Event::outputs() const noexcept {
  switch (kind) {
    case EventKind::Id: return 1;
    case EventKind::Cap: return 0;
    default: return 2;
  }
}

ObjectWord Event::declared_input() const {
  switch (kind) {
    case EventKind::Id: return {a};
    case EventKind::Cup: return {};
    case EventKind::Cap: return {a, a + 1};
    default: return {a, b};
  }
}

std::string to_string(const Event& e) {
  const std::string at = "@" + std::to_string(e.position);
  switch (e.kind) {
    case EventKind::Id: return "id" + at + "(" + std::to_string(e.a) + ")";
    case EventKind::Cup: return "cup" + at + "(" + std::to_string(e.a) + ")";
    case EventKind::Cap: return "cap" + at + "(" + std::to_string(e.a) + ")";
    case EventKind::CrossPos: return "x+" + at + "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case EventKind::CrossNeg: return "x-" + at + "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
  }
  return "?";
}

namespace {

/// Positions in range, sorted, disjoint. Returns an error message or "".
std::string check_supports(const Slice& s, std::size_t* bad_event = nullptr) {
  int cursor = 0;
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const Event& e = s.events[i];
    if (bad_event) *bad_event = i;
    if (e.position < cursor)
      return "event " + to_string(e) + " overlaps or precedes the previous event";
    if (e.position + e.inputs() > static_cast<int>(s.input.size()))
      return "event " + to_string(e) + " reaches past the input word " + to_string(s.input);
    cursor = e.position + e.inputs();
  }
  return "";
}

}  // namespace

ObjectWord Slice::output() const {
  if (auto msg = check_supports(*this); !msg.empty()) throw Error(msg);
  ObjectWord out;
  int cursor = 0;
  for (const Event& e : events) {
    out.insert(out.end(), input.begin() + cursor, input.begin() + e.position);
    const auto p = static_cast<std::size_t>(e.position);
    switch (e.kind) {
      case EventKind::Id: out.push_back(e.a); break;
      case EventKind::Cup:
        out.push_back(e.a + 1);
        out.push_back(e.a);
        break;
      case EventKind::Cap: break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        out.push_back(input[p + 1]);
        out.push_back(input[p]);
        break;
    }
    cursor = e.position + e.inputs();
  }
  out.insert(out.end(), input.begin() + cursor, input.end());
  return out;
}

std::size_t Diagram::event_count() const {
  std::size_t n = 0;
  for (const auto& s : slices)
    for (const auto& e : s.events) n += e.kind != EventKind::Id;
  return n;
}

std::size_t Diagram::crossing_count() const {
  std::size_t n = 0;
  for (const auto& s : slices)
    for (const auto& e : s.events) n += e.is_crossing();
  return n;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    const auto& is = issues[i];
    if (i) os << '\n';
    if (is.slice < 0)
      os << "diagram: ";
    else
      os << "slice " << is.slice << ", position " << is.position << ": ";
    os << is.message;
  }
  return os.str();
}

ValidationReport validate(const Diagram& d, AmbientDim dim, std::optional<LabelWindow> window) {
  ValidationReport r;
  const bool exact = exact_labels(dim);
  auto check_window = [&](const ObjectWord& w, int slice, const std::string& what) {
    if (!window) return;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] < window->lo || w[i] > window->hi)
        r.issues.push_back({slice, static_cast<int>(i),
                            what + " label " + std::to_string(w[i]) + " outside [" + std::to_string(window->lo) +
                                "," + std::to_string(window->hi) + "]"});
  };
  check_window(d.source, -1, "source");

  ObjectWord current = d.source;
  bool chained = true;
  for (std::size_t si = 0; si < d.slices.size(); ++si) {
    const Slice& s = d.slices[si];
    const int sl = static_cast<int>(si);
    if (s.input != current) {
      r.issues.push_back({sl, 0, "input " + to_string(s.input) + " does not continue " + to_string(current)});
      chained = false;
    }
    std::size_t bad = 0;
    if (auto msg = check_supports(s, &bad); !msg.empty()) {
      r.issues.push_back({sl, s.events[bad].position, msg});
      chained = false;
      break;
    }
    for (const Event& e : s.events) {
      const ObjectWord want = e.declared_input();
      const ObjectWord got(s.input.begin() + e.position, s.input.begin() + e.position + e.inputs());
      if (e.is_crossing()) {
        if (dim == AmbientDim::Planar)
          r.issues.push_back({sl, e.position, "crossing " + to_string(e) + " is not allowed in the planar case"});
        if (got != want)
          r.issues.push_back({sl, e.position, "crossing " + to_string(e) + " consumes " + to_string(got)});
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < want.size(); ++i)
        ok = ok && (exact ? want[i] == got[i] : same_parity(want[i], got[i]));
      if (!ok)
        r.issues.push_back({sl, e.position,
                            to_string(e) + " expects " + to_string(want) + " but consumes " + to_string(got) +
                                (exact ? "" : " (parity)")});
    }
    current = s.output();
    check_window(current, sl, "output");
  }
  if (chained && current != d.target)
    r.issues.push_back({-1, 0, "target " + to_string(d.target) + " differs from the last output " + to_string(current)});

  if (r.ok() && dim == AmbientDim::Planar) {
    for (const auto& c : trace_components(d))
      if (c.closed) r.issues.push_back({-1, 0, "closed component in a planar diagram"});
  }
  return r;
}

void require_valid(const Diagram& d, AmbientDim dim) {
  const auto r = validate(d, dim);
  if (!r.ok()) throw Error("invalid " + to_string(dim) + " diagram:\n" + r.to_string());
}

Diagram identity(const ObjectWord& w) { return {w, w, {}}; }

Diagram single_slice(const ObjectWord& input, std::vector<Event> events, AmbientDim dim) {
  Slice s{input, std::move(events)};
  if (!exact_labels(dim)) s = retype(s, input);
  Diagram d{input, s.output(), {s}};
  require_valid(d, dim);
  return d;
}

Diagram elementary(const Event& e, AmbientDim dim) {
  if (e.is_crossing() && dim == AmbientDim::Planar) throw Error("crossings are not allowed in the planar case");
  Event at = e;
  at.position = 0;
  return single_slice(at.declared_input(), {at}, dim);
}

Diagram from_events(const ObjectWord& source, const std::vector<std::vector<Event>>& slices, AmbientDim dim) {
  Diagram d{source, source, {}};
  ObjectWord current = source;
  for (const auto& events : slices) {
    Slice s{current, events};
    if (!exact_labels(dim)) s = retype(s, current);
    current = s.output();
    d.slices.push_back(std::move(s));
  }
  d.target = current;
  require_valid(d, dim);
  return d;
}

Slice retype(const Slice& s, const ObjectWord& input) {
  Slice out{input, s.events};
  for (Event& e : out.events) {
    const auto p = static_cast<std::size_t>(e.position);
    if (p + static_cast<std::size_t>(e.inputs()) > input.size()) throw Error("retype: event outside the word");
    if (e.is_crossing()) {
      e.a = input[p];
      e.b = input[p + 1];
    } else if (e.kind == EventKind::Cap) {
      e.a = input[p];
    }
  }
  return out;
}

Diagram compose(const Diagram& d1, const Diagram& d2, AmbientDim dim) {
  const bool exact = exact_labels(dim);
  bool match = d1.target.size() == d2.source.size();
  for (std::size_t i = 0; match && i < d1.target.size(); ++i)
    match = exact ? d1.target[i] == d2.source[i] : same_parity(d1.target[i], d2.source[i]);
  if (!match)
    throw Error("cannot compose: target " + to_string(d1.target) + " does not match source " + to_string(d2.source) +
                (exact ? "" : " in parity"));
  Diagram out{d1.source, d1.target, d1.slices};
  ObjectWord current = d1.target;
  for (const Slice& s : d2.slices) {
    Slice t = exact ? s : retype(s, current);
    current = t.output();
    out.slices.push_back(std::move(t));
  }
  out.target = current;
  return out;
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
  const std::size_t n = std::max(d1.slices.size(), d2.slices.size());
  Diagram out;
  out.source = d1.source;
  out.source.insert(out.source.end(), d2.source.begin(), d2.source.end());
  out.target = d1.target;
  out.target.insert(out.target.end(), d2.target.begin(), d2.target.end());
  for (std::size_t i = 0; i < n; ++i) {
    const Slice left = i < d1.slices.size() ? d1.slices[i] : Slice{d1.target, {}};
    const Slice right = i < d2.slices.size() ? d2.slices[i] : Slice{d2.target, {}};
    Slice s{left.input, left.events};
    s.input.insert(s.input.end(), right.input.begin(), right.input.end());
    const int shift = static_cast<int>(left.input.size());
    for (Event e : right.events) {
      e.position += shift;
      s.events.push_back(e);
    }
    out.slices.push_back(std::move(s));
  }
  return out;
}

std::vector<Component> trace_components(const Diagram& d) {
  const std::size_t heights = d.slices.size() + 1;
  std::vector<std::size_t> offset(heights + 1, 0);
  auto word_at = [&](std::size_t h) -> const ObjectWord& {
    return h < d.slices.size() ? d.slices[h].input : d.target;
  };
  for (std::size_t h = 0; h < heights; ++h) offset[h + 1] = offset[h] + word_at(h).size();
  UnionFind uf(offset[heights]);
  auto wire = [&](std::size_t h, int i) { return offset[h] + static_cast<std::size_t>(i); };

  struct Cross {
    int slice;
    int event;
    std::size_t bottom_left;
    std::size_t bottom_right;
    bool positive;
  };
  std::vector<Cross> crosses;
  for (std::size_t h = 0; h < d.slices.size(); ++h) {
    const Slice& s = d.slices[h];
    int in = 0;
    int out = 0;
    auto pass_until = [&](int stop) {
      for (; in < stop; ++in, ++out) uf.unite(wire(h, in), wire(h + 1, out));
    };
    for (std::size_t k = 0; k < s.events.size(); ++k) {
      const Event& e = s.events[k];
      pass_until(e.position);
      switch (e.kind) {
        case EventKind::Id: uf.unite(wire(h, in), wire(h + 1, out)); break;
        case EventKind::Cup: uf.unite(wire(h + 1, out), wire(h + 1, out + 1)); break;
        case EventKind::Cap: uf.unite(wire(h, in), wire(h, in + 1)); break;
        case EventKind::CrossPos:
        case EventKind::CrossNeg:
          uf.unite(wire(h, in), wire(h + 1, out + 1));
          uf.unite(wire(h, in + 1), wire(h + 1, out));
          crosses.push_back({static_cast<int>(h), static_cast<int>(k), wire(h, in), wire(h, in + 1),
                             e.kind == EventKind::CrossPos});
          break;
      }
      in += e.inputs();
      out += e.outputs();
    }
    pass_until(static_cast<int>(s.input.size()));
  }

  std::map<std::size_t, std::size_t> index;  // root -> component
  std::vector<Component> comps;
  for (std::size_t w = 0; w < offset[heights]; ++w) {
    auto [it, fresh] = index.try_emplace(uf.find(w), comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].segments++;
  }
  for (std::size_t i = 0; i < d.source.size(); ++i)
    comps[index[uf.find(wire(0, static_cast<int>(i)))]].endpoints.push_back({false, static_cast<int>(i)});
  for (std::size_t i = 0; i < d.target.size(); ++i)
    comps[index[uf.find(wire(heights - 1, static_cast<int>(i)))]].endpoints.push_back({true, static_cast<int>(i)});
  for (const auto& c : crosses) {
    comps[index[uf.find(c.bottom_left)]].crossings.push_back({c.slice, c.event, c.positive});
    comps[index[uf.find(c.bottom_right)]].crossings.push_back({c.slice, c.event, !c.positive});
  }
  for (auto& c : comps) c.closed = c.endpoints.empty();
  return comps;
}

int crossing_sign(const Event& e) {
  if (!e.is_crossing()) return 0;
  return same_parity(e.a, e.b) ? e.sign() : -e.sign();
}

Writhe writhe(const Diagram& d) {
  const auto comps = trace_components(d);
  Writhe w;
  w.self.assign(comps.size(), 0);
  std::map<std::pair<int, int>, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].closed) throw Error("writhe: the diagram has open components");
    for (const auto& v : comps[i].crossings) owners[{v.slice, v.event}].push_back(i);
  }
  for (const auto& [site, who] : owners) {
    const Event& e = d.slices[static_cast<std::size_t>(site.first)].events[static_cast<std::size_t>(site.second)];
    const int s = crossing_sign(e);
    w.total += s;
    if (who.size() == 2 && who[0] == who[1]) w.self[who[0]] += s;
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) { return os << serialize(d); }

}  // namespace tangle
