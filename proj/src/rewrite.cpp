#include "tangle/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "tangle/error.hpp"
#include "tangle/eval.hpp"

namespace tangle::rewrite {

namespace {

bool is_exact(AmbientDim dim) { return exact_labels(dim); }

/// Applies e to w, first re-reading e's labels from w outside the planar case.
ObjectWord step(const ObjectWord& w, Event& e, bool exact) {
  Slice s{w, {e}};
  if (!exact) {
    s = retype(s, w);
    e = s.events[0];
  }
  return s.output();
}

void relabel(Sequential& s, bool exact) {
  ObjectWord w = s.source;
  for (Event& e : s.events) w = step(w, e, exact);
}

int parity(int x) { return ((x % 2) + 2) % 2; }

/// Position of a strand at index `pos` of w_{from} after the events
/// [from, to). Returns the consuming event and the input slot instead if the
/// strand is consumed on the way.
struct Track {
  bool consumed;
  int event;  // consuming event
  int slot;   // which input of it
  int position;
};

Track track(const Sequential& s, int from, int pos) {
  for (int t = from; t < static_cast<int>(s.events.size()); ++t) {
    const Event& e = s.events[static_cast<std::size_t>(t)];
    const int q = e.position;
    const int m = e.inputs();
    if (pos >= q && pos < q + m) return {true, t, pos - q, pos};
    if (pos >= q + m) pos += e.outputs() - m;
  }
  return {false, -1, -1, pos};
}

/// Bubbles the event at index i one step left or right. Fails if the two
/// events meet.
bool swap_at(std::vector<Event>& ev, std::size_t i) {
  auto r = interchange(ev[i], ev[i + 1]);
  if (!r) return false;
  ev[i] = r->first;
  ev[i + 1] = r->second;
  return true;
}

struct Gathered {
  Sequential seq;
  int start;
};

/// Reorders events (by interchange only) so that the events at `idx`
/// (ascending) become consecutive, keeping their relative order.
std::optional<Gathered> gather(const Sequential& s, const std::vector<int>& idx) {
  std::vector<Event> ev = s.events;
  std::vector<int> tag(ev.size(), -1);
  for (std::size_t k = 0; k < idx.size(); ++k) tag[static_cast<std::size_t>(idx[k])] = static_cast<int>(k);
  auto index_of = [&](int k) {
    return static_cast<std::size_t>(std::find(tag.begin(), tag.end(), k) - tag.begin());
  };
  const int last_tag = static_cast<int>(idx.size()) - 1;

  // move every foreign event between the first and last gathered one as far
  // down as it goes, past the first gathered event if possible
  for (std::size_t i = index_of(0) + 1; i < index_of(last_tag); ++i) {
    if (tag[i] != -1) continue;
    std::vector<Event> trial = ev;
    std::vector<int> trial_tag = tag;
    std::size_t j = i;
    bool ok = true;
    const std::size_t floor = index_of(0);
    while (j > floor) {
      if (!swap_at(trial, j - 1)) {
        ok = false;
        break;
      }
      std::swap(trial_tag[j - 1], trial_tag[j]);
      --j;
    }
    if (ok) {
      ev = std::move(trial);
      tag = std::move(trial_tag);
    }
  }
  // the rest must move up past the last gathered event
  for (;;) {
    const std::size_t first = index_of(0);
    const std::size_t last = index_of(last_tag);
    std::size_t stuck = ev.size();
    for (std::size_t i = last; i-- > first + 1;)
      if (tag[i] == -1) {
        stuck = i;
        break;
      }
    if (stuck == ev.size()) break;
    std::size_t j = stuck;
    while (j < last) {
      if (!swap_at(ev, j)) return std::nullopt;
      std::swap(tag[j], tag[j + 1]);
      ++j;
    }
  }
  Gathered g{{s.source, std::move(ev)}, static_cast<int>(index_of(0))};
  return g;
}

bool is_cup(const Event& e) { return e.kind == EventKind::Cup; }
bool is_cap(const Event& e) { return e.kind == EventKind::Cap; }

struct Curl {
  bool right;  // cup to the right of the strand
};

/// Three consecutive events cup, crossing, cap that put a curl on the strand
/// at position s of the word before them.
std::optional<std::pair<Curl, int>> curl_at(const Sequential& q, std::size_t t) {
  if (t + 2 >= q.events.size()) return std::nullopt;
  const Event& a = q.events[t];
  const Event& x = q.events[t + 1];
  const Event& c = q.events[t + 2];
  if (!is_cup(a) || !x.is_crossing() || !is_cap(c)) return std::nullopt;
  // right curl: cup@s+1, cross@s, cap@s+1
  if (x.position == a.position - 1 && c.position == a.position) return std::pair{Curl{true}, x.position};
  // left curl: cup@s, cross@s+1, cap@s
  if (x.position == a.position + 1 && c.position == a.position) return std::pair{Curl{false}, a.position};
  return std::nullopt;
}

std::vector<Move> zigzag_moves(const Sequential& s) {
  std::vector<Move> out;
  for (int i = 0; i < static_cast<int>(s.events.size()); ++i) {
    const Event& c = s.events[static_cast<std::size_t>(i)];
    if (!is_cup(c)) continue;
    const Track left = track(s, i + 1, c.position);
    const Track right = track(s, i + 1, c.position + 1);
    if (left.consumed && is_cap(s.events[static_cast<std::size_t>(left.event)]) && left.slot == 1) {
      Move m{MoveKind::ZigZagL, {i, left.event}};
      m.level = c.a;
      if (gather(s, m.events)) out.push_back(m);
    }
    if (right.consumed && is_cap(s.events[static_cast<std::size_t>(right.event)]) && right.slot == 0) {
      Move m{MoveKind::ZigZagR, {i, right.event}};
      m.level = c.a;
      if (gather(s, m.events)) out.push_back(m);
    }
  }
  return out;
}

std::vector<Move> r2_moves(const Sequential& s) {
  std::vector<Move> out;
  for (int i = 0; i < static_cast<int>(s.events.size()); ++i) {
    const Event& x = s.events[static_cast<std::size_t>(i)];
    if (!x.is_crossing()) continue;
    const Track l = track(s, i + 1, x.position);
    const Track r = track(s, i + 1, x.position + 1);
    if (!l.consumed || !r.consumed || l.event != r.event || l.slot != 0 || r.slot != 1) continue;
    const Event& y = s.events[static_cast<std::size_t>(l.event)];
    if (!y.is_crossing() || y.sign() == x.sign()) continue;
    Move m{MoveKind::R2, {i, l.event}};
    if (gather(s, m.events)) out.push_back(m);
  }
  return out;
}

bool r3_signs_ok(int s1, int s2, int s3) { return !(s1 == s3 && s1 != s2); }

std::vector<Move> r3_moves(const Sequential& s) {
  std::vector<Move> out;
  const int n = static_cast<int>(s.events.size());
  for (int i = 0; i < n; ++i) {
    const Event& x = s.events[static_cast<std::size_t>(i)];
    if (!x.is_crossing()) continue;
    // X at p, Y at p+1 consuming X's right output, Z at p consuming X's left
    // output and Y's left output (or the mirror image)
    for (int side = 0; side < 2; ++side) {
      const int out_pos = x.position + (side == 0 ? 1 : 0);
      const Track ty = track(s, i + 1, out_pos);
      if (!ty.consumed) continue;
      const Event& y = s.events[static_cast<std::size_t>(ty.event)];
      if (!y.is_crossing() || ty.slot != (side == 0 ? 0 : 1)) continue;
      const Track tz_x = track(s, i + 1, x.position + (side == 0 ? 0 : 1));
      const Event& yy = y;
      // Y's output that meets Z: for side 0 its left output, for side 1 its right
      const int y_out = yy.position + (side == 0 ? 0 : 1);
      const Track tz_y = track(s, ty.event + 1, y_out);
      if (!tz_x.consumed || !tz_y.consumed || tz_x.event != tz_y.event) continue;
      const Event& z = s.events[static_cast<std::size_t>(tz_x.event)];
      if (!z.is_crossing()) continue;
      if (side == 0 && (tz_x.slot != 0 || tz_y.slot != 1)) continue;
      if (side == 1 && (tz_y.slot != 0 || tz_x.slot != 1)) continue;
      if (tz_x.event < ty.event) continue;
      if (!r3_signs_ok(x.sign(), y.sign(), z.sign())) continue;
      Move m{MoveKind::R3, {i, ty.event, tz_x.event}};
      if (gather(s, m.events)) out.push_back(m);
    }
  }
  return out;
}

std::vector<Move> kink2_moves(const Sequential& s) {
  std::vector<Move> out;
  for (std::size_t t = 0; t + 5 < s.events.size(); ++t) {
    const auto c1 = curl_at(s, t);
    const auto c2 = curl_at(s, t + 3);
    if (c1 && c2 && c1->first.right == c2->first.right && c1->second == c2->second)
      out.push_back({MoveKind::Kink2, {static_cast<int>(t)}});
  }
  return out;
}

Sequential erase_consecutive(Sequential s, int start, int count) {
  s.events.erase(s.events.begin() + start, s.events.begin() + start + count);
  return s;
}

[[noreturn]] void not_applicable(const Move& m, const std::string& why) {
  throw Error("move " + m.to_string() + " does not apply: " + why);
}

Sequential apply_sequential(const Sequential& s, const Move& m, AmbientDim dim) {
  const int n = static_cast<int>(s.events.size());
  for (int i : m.events)
    if (i < 0 || (i >= n && !(m.kind == MoveKind::R2 && !m.forward && i == n))) not_applicable(m, "no such event");
  const bool planar = dim == AmbientDim::Planar;
  switch (m.kind) {
    case MoveKind::Interchange: {
      if (m.events.size() != 2 || m.events[1] != m.events[0] + 1) not_applicable(m, "needs two adjacent events");
      Sequential out = s;
      const auto i = static_cast<std::size_t>(m.events[0]);
      const auto all = interchanges(out.events[i], out.events[i + 1]);
      if (all.empty()) not_applicable(m, "the events meet");
      if (m.variant < 0 || m.variant >= static_cast<int>(all.size())) not_applicable(m, "no such placement");
      std::tie(out.events[i], out.events[i + 1]) = all[static_cast<std::size_t>(m.variant)];
      return out;
    }
    case MoveKind::ZigZagL:
    case MoveKind::ZigZagR: {
      if (m.events.size() != 2) not_applicable(m, "needs a cup and a cap");
      const auto found = zigzag_moves(s);
      if (std::none_of(found.begin(), found.end(), [&](const Move& f) { return f.kind == m.kind && f.events == m.events; }))
        not_applicable(m, "no zig-zag at this site");
      auto g = gather(s, m.events);
      return erase_consecutive(g->seq, g->start, 2);
    }
    case MoveKind::R2: {
      if (planar) not_applicable(m, "no crossings in the planar case");
      if (!m.forward) {
        if (m.events.size() != 1) not_applicable(m, "insertion needs one index");
        Sequential out = s;
        const auto w = words(s, dim)[static_cast<std::size_t>(m.events[0])];
        if (m.position < 0 || m.position + 2 > static_cast<int>(w.size())) not_applicable(m, "position outside the word");
        const Event lo = Event::cross(m.positive_first, m.position, w[m.position], w[m.position + 1]);
        const Event hi = Event::cross(!m.positive_first, m.position, w[m.position + 1], w[m.position]);
        out.events.insert(out.events.begin() + m.events[0], {lo, hi});
        return out;
      }
      const auto found = r2_moves(s);
      if (std::none_of(found.begin(), found.end(), [&](const Move& f) { return f.events == m.events; }))
        not_applicable(m, "no cancelling crossing pair at this site");
      auto g = gather(s, m.events);
      return erase_consecutive(g->seq, g->start, 2);
    }
    case MoveKind::R3: {
      if (planar) not_applicable(m, "no crossings in the planar case");
      const auto found = r3_moves(s);
      if (std::none_of(found.begin(), found.end(), [&](const Move& f) { return f.events == m.events; }))
        not_applicable(m, "no braid triangle at this site");
      auto g = gather(s, m.events);
      Sequential out = g->seq;
      auto* e = &out.events[static_cast<std::size_t>(g->start)];
      const int p = e[0].position;
      const int q = e[1].position;  // p + 1 or p - 1
      const int s1 = e[0].sign(), s2 = e[1].sign(), s3 = e[2].sign();
      if (e[2].position != p || std::abs(q - p) != 1) throw InternalError("R3: gathered events are not a braid triangle");
      e[0] = Event::cross(s3 > 0, q, 0, 0);
      e[1] = Event::cross(s2 > 0, p, 0, 0);
      e[2] = Event::cross(s1 > 0, q, 0, 0);
      if (planar) throw InternalError("R3 in the planar case");
      return out;
    }
    case MoveKind::SymCollapse: {
      if (dim != AmbientDim::Symmetric) not_applicable(m, "only in the symmetric case");
      if (m.events.size() != 1) not_applicable(m, "needs one crossing");
      Sequential out = s;
      Event& e = out.events[static_cast<std::size_t>(m.events[0])];
      if (!e.is_crossing()) not_applicable(m, "not a crossing");
      e.kind = e.kind == EventKind::CrossPos ? EventKind::CrossNeg : EventKind::CrossPos;
      return out;
    }
    case MoveKind::Kink2: {
      if (dim != AmbientDim::Symmetric) not_applicable(m, "only in the symmetric case");
      const auto found = kink2_moves(s);
      if (m.events.size() != 1 ||
          std::none_of(found.begin(), found.end(), [&](const Move& f) { return f.events == m.events; }))
        not_applicable(m, "no double curl at this site");
      return erase_consecutive(s, m.events[0], 6);
    }
  }
  throw InternalError("unknown move kind");
}

}  // namespace

Sequential sequential(const Diagram& d, AmbientDim dim) {
  Sequential s{d.source, {}};
  for (const Slice& slice : d.slices) {
    int shift = 0;
    for (Event e : slice.events) {
      const int delta = e.outputs() - e.inputs();
      e.position += shift;
      shift += delta;
      if (e.kind != EventKind::Id) s.events.push_back(e);
    }
  }
  relabel(s, is_exact(dim));
  return s;
}

std::vector<ObjectWord> words(const Sequential& s, AmbientDim dim) {
  std::vector<ObjectWord> out{s.source};
  const bool exact = is_exact(dim);
  for (Event e : s.events) out.push_back(step(out.back(), e, exact));
  return out;
}

Diagram to_diagram(const Sequential& s, const ObjectWord& target, AmbientDim dim) {
  const bool exact = is_exact(dim);
  Diagram d{s.source, target, {}};
  ObjectWord w = s.source;
  for (Event e : s.events) {
    Slice slice{w, {}};
    w = step(w, e, exact);
    slice.events.push_back(e);
    d.slices.push_back(std::move(slice));
  }
  if (w != target) {
    if (exact || w.size() != target.size())
      throw InternalError("rewrite changed the target word " + tangle::to_string(target) + " into " + tangle::to_string(w));
    Slice fix{w, {}};
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!same_parity(w[i], target[i]))
        throw InternalError("rewrite changed the parity of target word " + tangle::to_string(target));
      if (w[i] != target[i]) fix.events.push_back(Event::id(static_cast<int>(i), target[i]));
    }
    d.slices.push_back(std::move(fix));
  }
  return d;
}

std::vector<std::pair<Event, Event>> interchanges(const Event& first, const Event& second) {
  const int p = first.position;
  const int o1 = first.outputs();
  const int i1 = first.inputs();
  const int q = second.position;
  const int m = second.inputs();
  const int o2 = second.outputs();
  std::vector<std::pair<Event, Event>> out;
  if (q + m <= p) {
    Event b = first;
    b.position = p + o2 - m;
    out.emplace_back(second, b);
  }
  if (q >= p + o1) {
    Event a = second;
    a.position = q - o1 + i1;
    out.emplace_back(a, first);
  }
  return out;
}

std::optional<std::pair<Event, Event>> interchange(const Event& first, const Event& second) {
  auto all = interchanges(first, second);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::ZigZagL: return "ZigZagL";
    case MoveKind::ZigZagR: return "ZigZagR";
    case MoveKind::Interchange: return "Interchange";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::SymCollapse: return "SymCollapse";
    case MoveKind::Kink2: return "Kink2";
  }
  return "?";
}

std::string Move::to_string() const {
  std::string out = rewrite::to_string(kind);
  if (kind == MoveKind::ZigZagL || kind == MoveKind::ZigZagR) out += "(" + std::to_string(level) + ")";
  out += forward ? "" : "^-1";
  out += " at";
  for (int i : events) out += " " + std::to_string(i);
  if (!forward) out += " position " + std::to_string(position) + (positive_first ? " +-" : " -+");
  if (kind == MoveKind::Interchange && variant == 1) out += " (cup right)";
  return out;
}

std::vector<Move> applicable_moves(const Diagram& d, AmbientDim dim) {
  require_valid(d, dim);
  const Sequential s = sequential(d, dim);
  std::vector<Move> out = zigzag_moves(s);
  for (int i = 0; i + 1 < static_cast<int>(s.events.size()); ++i)
    for (std::size_t v = 0;
         v < interchanges(s.events[static_cast<std::size_t>(i)], s.events[static_cast<std::size_t>(i) + 1]).size(); ++v) {
      Move m{MoveKind::Interchange, {i, i + 1}};
      m.variant = static_cast<int>(v);
      out.push_back(m);
    }
  if (dim == AmbientDim::Planar) return out;
  for (auto& m : r2_moves(s)) out.push_back(m);
  for (auto& m : r3_moves(s)) out.push_back(m);
  if (dim == AmbientDim::Symmetric) {
    for (int i = 0; i < static_cast<int>(s.events.size()); ++i)
      if (s.events[static_cast<std::size_t>(i)].is_crossing()) out.push_back({MoveKind::SymCollapse, {i}});
    for (auto& m : kink2_moves(s)) out.push_back(m);
  }
  return out;
}

std::vector<Move> insertion_moves(const Diagram& d, AmbientDim dim) {
  std::vector<Move> out;
  if (dim == AmbientDim::Planar) return out;
  const Sequential s = sequential(d, dim);
  const auto ws = words(s, dim);
  for (int t = 0; t < static_cast<int>(ws.size()); ++t)
    for (int p = 0; p + 1 < static_cast<int>(ws[static_cast<std::size_t>(t)].size()); ++p)
      for (bool pos : {true, false}) {
        Move m{MoveKind::R2, {t}};
        m.forward = false;
        m.position = p;
        m.positive_first = pos;
        out.push_back(m);
      }
  return out;
}

Diagram apply_move(const Diagram& d, const Move& m, AmbientDim dim) {
  require_valid(d, dim);
  Sequential s = apply_sequential(sequential(d, dim), m, dim);
  relabel(s, is_exact(dim));
  Diagram out = to_diagram(s, d.target, dim);
  const auto report = validate(out, dim);
  if (!report.ok()) throw InternalError("move " + m.to_string() + " produced an invalid diagram:\n" + report.to_string());
  return out;
}

namespace {

struct EventsHash {
  std::size_t operator()(const std::vector<Event>& v) const noexcept {
    std::size_t h = v.size();
    for (const Event& e : v)
      for (int x : {static_cast<int>(e.kind), e.position, e.a, e.b})
        h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

constexpr std::size_t kMaxClass = 2'000'000;

}  // namespace

Sequential canonical_order(const Sequential& s, AmbientDim dim) {
  const bool exact = is_exact(dim);
  auto key = [&](const Event& e) {
    return std::tuple{e.position, e.kind, exact ? e.a : parity(e.a), exact ? e.b : parity(e.b)};
  };
  auto less = [&](const std::vector<Event>& x, const std::vector<Event>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [&](const Event& a, const Event& b) { return key(a) < key(b); });
  };
  // The whole interchange class, searched for its least member. A cup can
  // reach a gap only through a chain of swaps with caps, so no local rule
  // finds every event that may come first.
  std::unordered_set<std::vector<Event>, EventsHash> seen{s.events};
  std::vector<std::vector<Event>> queue{s.events};
  std::vector<Event> best = s.events;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Event> cur = queue[head];
    if (less(cur, best)) best = cur;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      for (const auto& [a, b] : interchanges(cur[i], cur[i + 1])) {
        auto next = cur;
        next[i] = a;
        next[i + 1] = b;
        if (seen.insert(next).second) {
          if (seen.size() > kMaxClass) throw Error("canonical_order: interchange class too large");
          queue.push_back(std::move(next));
        }
      }
  }
  Sequential out{s.source, best};
  relabel(out, exact);
  return out;
}

std::string canonical_key(const Diagram& d, AmbientDim dim) {
  const bool exact = is_exact(dim);
  const Sequential s = canonical_order(sequential(d, dim), dim);
  auto lab = [&](int x) { return exact ? x : parity(x); };
  std::ostringstream os;
  os << (exact ? "" : "p") << "[";
  for (int x : s.source) os << lab(x) << ' ';
  os << "]";
  for (const Event& e : s.events) {
    Event r = e;
    r.a = lab(r.a);
    r.b = lab(r.b);
    os << ' ' << tangle::to_string(r);
  }
  os << " [";
  for (int x : d.target) os << lab(x) << ' ';
  os << "]";
  return os.str();
}

Diagram simplify(const Diagram& d, AmbientDim dim) {
  Diagram cur = d;
  for (;;) {
    const auto moves = applicable_moves(cur, dim);
    auto it = std::find_if(moves.begin(), moves.end(), [](const Move& m) {
      return m.kind == MoveKind::ZigZagL || m.kind == MoveKind::ZigZagR || m.kind == MoveKind::R2 ||
             m.kind == MoveKind::Kink2;
    });
    if (it == moves.end()) return cur;
    cur = apply_move(cur, *it, dim);
  }
}

std::size_t PlanarNormalForm::through_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [](const Arc& a) { return a.from.at_target != a.to.at_target; }));
}

std::string PlanarNormalForm::to_string() const {
  auto end = [](const Endpoint& e) { return std::string(e.at_target ? "t" : "s") + std::to_string(e.index); };
  std::string out = "source:";
  for (int x : source) out += " " + std::to_string(x);
  out += "\ntarget:";
  for (int x : target) out += " " + std::to_string(x);
  out += "\n";
  for (const Arc& a : arcs) {
    const char* kind = a.from.at_target == a.to.at_target ? (a.from.at_target ? "cup " : "cap ") : "thru";
    out += std::string(kind) + " " + end(a.from) + "-" + end(a.to) + " (" + std::to_string(a.from_label) + "," +
           std::to_string(a.to_label) + ")\n";
  }
  return out;
}

PlanarNormalForm normalize_planar(const Diagram& d) {
  require_valid(d, AmbientDim::Planar);
  PlanarNormalForm nf{d.source, d.target, {}};
  auto label = [&](const Endpoint& e) { return e.at_target ? d.target[e.index] : d.source[e.index]; };
  auto before = [](const Endpoint& a, const Endpoint& b) {
    return a.at_target != b.at_target ? !a.at_target : a.index < b.index;
  };
  for (const auto& c : trace_components(d)) {
    if (c.endpoints.size() != 2) throw InternalError("normalize_planar: component without two endpoints");
    Endpoint a = c.endpoints[0];
    Endpoint b = c.endpoints[1];
    if (before(b, a)) std::swap(a, b);
    nf.arcs.push_back({a, b, label(a), label(b)});
  }
  std::sort(nf.arcs.begin(), nf.arcs.end(), [&](const Arc& x, const Arc& y) { return before(x.from, y.from); });
  check_normal_form(nf);
  return nf;
}

void check_normal_form(const PlanarNormalForm& nf) {
  const int ns = static_cast<int>(nf.source.size());
  const int nt = static_cast<int>(nf.target.size());
  auto ring = [&](const Endpoint& e) { return e.at_target ? ns + (nt - 1 - e.index) : e.index; };
  std::vector<int> seen(static_cast<std::size_t>(ns + nt), 0);
  for (const Arc& a : nf.arcs) {
    seen[static_cast<std::size_t>(ring(a.from))]++;
    seen[static_cast<std::size_t>(ring(a.to))]++;
    if (a.from.at_target != a.to.at_target) {
      if (a.from_label != a.to_label) throw InternalError("normal form: through arc changes its label");
    } else if (!a.from.at_target) {
      if (a.to_label != a.from_label + 1) throw InternalError("normal form: source turnback is not (k,k+1)");
    } else if (a.from_label != a.to_label + 1) {
      throw InternalError("normal form: target turnback is not (k+1,k)");
    }
  }
  for (int c : seen)
    if (c != 1) throw InternalError("normal form: not a perfect matching");
  for (std::size_t i = 0; i < nf.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < nf.arcs.size(); ++j) {
      int a = ring(nf.arcs[i].from), b = ring(nf.arcs[i].to);
      int c = ring(nf.arcs[j].from), e = ring(nf.arcs[j].to);
      if (a > b) std::swap(a, b);
      if (c > e) std::swap(c, e);
      const bool c_in = a < c && c < b;
      const bool e_in = a < e && e < b;
      if (c_in != e_in) throw InternalError("normal form: arcs cross");
    }
}

Diagram realize(const PlanarNormalForm& nf) {
  check_normal_form(nf);
  std::map<std::pair<bool, int>, std::pair<bool, int>> partner;
  for (const Arc& a : nf.arcs) {
    partner[{a.from.at_target, a.from.index}] = {a.to.at_target, a.to.index};
    partner[{a.to.at_target, a.to.index}] = {a.from.at_target, a.from.index};
  }
  std::vector<std::vector<Event>> slices;
  // caps, innermost first
  std::vector<int> bottom;
  for (int i = 0; i < static_cast<int>(nf.source.size()); ++i) bottom.push_back(i);
  for (bool again = true; again;) {
    again = false;
    for (std::size_t p = 0; p + 1 < bottom.size(); ++p) {
      if (partner[{false, bottom[p]}] == std::pair{false, bottom[p + 1]}) {
        slices.push_back({Event::cap(static_cast<int>(p), nf.source[static_cast<std::size_t>(bottom[p])])});
        bottom.erase(bottom.begin() + static_cast<long>(p), bottom.begin() + static_cast<long>(p) + 2);
        again = true;
        break;
      }
    }
  }
  // cups: peel target turnbacks innermost first, then replay in reverse
  std::vector<int> top;
  for (int i = 0; i < static_cast<int>(nf.target.size()); ++i) top.push_back(i);
  std::vector<Event> cups;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t p = 0; p + 1 < top.size(); ++p) {
      if (partner[{true, top[p]}] == std::pair{true, top[p + 1]}) {
        cups.push_back(Event::cup(static_cast<int>(p), nf.target[static_cast<std::size_t>(top[p + 1])]));
        top.erase(top.begin() + static_cast<long>(p), top.begin() + static_cast<long>(p) + 2);
        again = true;
        break;
      }
    }
  }
  if (bottom.size() != top.size()) throw InternalError("realize: through strands do not match");
  for (auto it = cups.rbegin(); it != cups.rend(); ++it) slices.push_back({*it});
  return from_events(nf.source, slices, AmbientDim::Planar);
}

std::string to_string(Equality e) {
  switch (e) {
    case Equality::Equal: return "equal";
    case Equality::Distinct: return "distinct";
    case Equality::Unknown: return "unknown";
  }
  return "?";
}

namespace {

/// Breadth-first search from one side; returns the keys reached per depth.
class Search {
 public:
  Search(const Diagram& d, AmbientDim dim) : dim_(dim) {
    const auto k = canonical_key(d, dim);
    seen_.emplace(k, 0);
    frontier_.push_back(d);
  }

  const std::unordered_map<std::string, int>& seen() const { return seen_; }

  /// Expands one layer; stops early once `limit` states are known.
  void expand(std::size_t limit) {
    std::vector<Diagram> next;
    for (const Diagram& d : frontier_) {
      std::vector<Move> moves = applicable_moves(d, dim_);
      for (const Move& m : insertion_moves(d, dim_)) moves.push_back(m);
      for (const Move& m : moves) {
        if (m.kind == MoveKind::Interchange) continue;
        if (seen_.size() >= limit) break;
        Diagram e = apply_move(d, m, dim_);
        auto [it, fresh] = seen_.emplace(canonical_key(e, dim_), depth_ + 1);
        if (fresh) next.push_back(std::move(e));
      }
    }
    frontier_ = std::move(next);
    ++depth_;
  }

  bool meets(const Search& other) const {
    for (const auto& [k, _] : other.seen_)
      if (seen_.count(k)) return true;
    return false;
  }

 private:
  AmbientDim dim_;
  std::unordered_map<std::string, int> seen_;
  std::vector<Diagram> frontier_;
  int depth_ = 0;
};

}  // namespace

Equality equal(const Diagram& d1, const Diagram& d2, AmbientDim dim, const EqualityOptions& opts) {
  require_valid(d1, dim);
  require_valid(d2, dim);
  auto same = [&](const ObjectWord& a, const ObjectWord& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (is_exact(dim) ? a[i] != b[i] : !same_parity(a[i], b[i])) return false;
    return true;
  };
  if (!same(d1.source, d2.source) || !same(d1.target, d2.target))
    throw Error("equal: boundary words differ: " + tangle::to_string(d1.source) + "->" + tangle::to_string(d1.target) + " vs " +
                tangle::to_string(d2.source) + "->" + tangle::to_string(d2.target));
  if (dim == AmbientDim::Planar) return normalize_planar(d1) == normalize_planar(d2) ? Equality::Equal : Equality::Distinct;

  Search a(d1, dim);
  Search b(d2, dim);
  if (a.meets(b)) return Equality::Equal;
  for (int depth = 0; depth < opts.budget; ++depth) {
    if (a.seen().size() + b.seen().size() >= opts.max_states) break;
    a.expand(opts.max_states / 2);
    if (a.meets(b)) return Equality::Equal;
    b.expand(opts.max_states / 2);
    if (a.meets(b)) return Equality::Equal;
  }

  // separate by invariants
  if (dim == AmbientDim::Braided) {
    const auto k = eval::kauffman_datum();
    if (eval::evaluate(d1, k) != eval::evaluate(d2, k)) return Equality::Distinct;
  }
  const auto r = eval::random_datum(dim, opts.seed);
  if (eval::evaluate(d1, r) != eval::evaluate(d2, r)) return Equality::Distinct;
  return Equality::Unknown;
}

}  // namespace tangle::rewrite
