#pragma once

// Random and exhaustive diagram generators shared by the tests.

#include <random>
#include <string>
#include <vector>

#include "tangle/diagram.hpp"
#include "tangle/rewrite.hpp"

namespace testgen {

using tangle::AmbientDim;
using tangle::Diagram;
using tangle::Event;
using tangle::ObjectWord;

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool odd(int x) { return (x % 2 + 2) % 2 == 1; }

/// Packs a run of events into slices: an event joins the previous slice when
/// it lies to the right of everything already there.
inline std::vector<std::vector<Event>> pack(const std::vector<Event>& seq, std::mt19937_64& rng) {
  std::vector<std::vector<Event>> slices;
  int right_edge = -1;  // first free output position of the current slice, in output coordinates
  int shift = 0;        // outputs minus inputs of the current slice
  for (const Event& e : seq) {
    if (!slices.empty() && e.position >= right_edge && pick(rng, 0, 2) == 0) {
      Event moved = e;
      moved.position -= shift;
      slices.back().push_back(moved);
      right_edge = e.position + e.outputs();
      shift += e.outputs() - e.inputs();
      continue;
    }
    slices.push_back({e});
    right_edge = e.position + e.outputs();
    shift = e.outputs() - e.inputs();
  }
  return slices;
}

/// One random event that fits w, or nothing.
inline bool random_event(std::mt19937_64& rng, const ObjectWord& w, AmbientDim dim, int max_width, int label_bound,
                         Event& out) {
  const bool planar = dim == AmbientDim::Planar;
  std::vector<Event> options;
  const int n = static_cast<int>(w.size());
  if (n + 2 <= max_width)
    for (int p = 0; p <= n; ++p)
      for (int k = -label_bound; k < label_bound; ++k) options.push_back(Event::cup(p, k));
  for (int p = 0; p + 1 < n; ++p) {
    const int a = w[static_cast<std::size_t>(p)];
    const int b = w[static_cast<std::size_t>(p) + 1];
    if (planar ? b == a + 1 : odd(a) != odd(b)) options.push_back(Event::cap(p, a));
    if (!planar) {
      options.push_back(Event::cross(true, p, a, b));
      options.push_back(Event::cross(false, p, a, b));
    }
  }
  if (options.empty()) return false;
  out = options[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(options.size()) - 1))];
  return true;
}

inline ObjectWord random_word(std::mt19937_64& rng, int max_len, int label_bound) {
  ObjectWord w(static_cast<std::size_t>(pick(rng, 0, max_len)));
  for (int& x : w) x = pick(rng, -label_bound, label_bound);
  return w;
}

/// A valid diagram on `source` with up to `events` events.
inline Diagram random_diagram_on(std::mt19937_64& rng, const ObjectWord& source, AmbientDim dim, int events,
                                 int max_width = 6, int label_bound = 2) {
  std::vector<Event> seq;
  ObjectWord w = source;
  for (int i = 0; i < events; ++i) {
    Event e = Event::cup(0, 0);
    if (!random_event(rng, w, dim, max_width, label_bound, e)) break;
    tangle::Slice s{w, {e}};
    w = s.output();
    seq.push_back(e);
  }
  return tangle::from_events(source, pack(seq, rng), dim);
}

inline Diagram random_diagram(std::mt19937_64& rng, AmbientDim dim, int events, int max_width = 6,
                              int label_bound = 2) {
  ObjectWord source = random_word(rng, 3, label_bound);
  return random_diagram_on(rng, source, dim, events, max_width, label_bound);
}

/// A closed braided diagram with at most max_crossings crossings.
inline Diagram random_closed(std::mt19937_64& rng, int max_crossings, int steps = 10) {
  std::vector<Event> seq;
  ObjectWord w;
  int crossings = 0;
  for (int i = 0; i < steps; ++i) {
    const int n = static_cast<int>(w.size());
    const int roll = pick(rng, 0, 2);
    if ((roll == 0 || n == 0) && n < 6) {
      seq.push_back(Event::cup(pick(rng, 0, n), pick(rng, -1, 0)));
    } else if (roll == 1 && crossings < max_crossings && n >= 2) {
      const int p = pick(rng, 0, n - 2);
      seq.push_back(Event::cross(pick(rng, 0, 1) == 1, p, w[static_cast<std::size_t>(p)], w[static_cast<std::size_t>(p) + 1]));
      ++crossings;
    } else {
      std::vector<int> spots;
      for (int p = 0; p + 1 < n; ++p)
        if (odd(w[static_cast<std::size_t>(p)]) != odd(w[static_cast<std::size_t>(p) + 1])) spots.push_back(p);
      if (spots.empty()) continue;
      const int p = spots[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(spots.size()) - 1))];
      seq.push_back(Event::cap(p, w[static_cast<std::size_t>(p)]));
    }
    tangle::Slice s{w, {seq.back()}};
    s = tangle::retype(s, w);
    seq.back() = s.events[0];
    w = s.output();
  }
  while (!w.empty()) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (odd(w[p]) != odd(w[p + 1])) {
        seq.push_back(Event::cap(static_cast<int>(p), w[p]));
        tangle::Slice s{w, {seq.back()}};
        w = s.output();
        break;
      }
  }
  if (seq.empty()) seq = {Event::cup(0, 0), Event::cap(0, 1)};
  return tangle::from_events({}, pack(seq, rng), AmbientDim::Braided);
}

/// The closure of a braid on `strands` upward strands; letters are +-(i+1)
/// for sigma_i^{+-1}, i counted from 0.
inline Diagram braid_closure(int strands, const std::vector<int>& letters, AmbientDim dim = AmbientDim::Braided) {
  std::vector<std::vector<Event>> slices;
  for (int i = 0; i < strands; ++i) slices.push_back({Event::cup(i, -1)});
  for (int l : letters) slices.push_back({Event::cross(l > 0, std::abs(l) - 1, 0, 0)});
  for (int i = strands - 1; i >= 0; --i) slices.push_back({Event::cap(i, 0)});
  return tangle::from_events({}, slices, dim);
}

/// Every braid word of length <= max_len on `strands` strands.
inline std::vector<std::vector<int>> braid_words(int strands, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int g = 1; g < strands; ++g)
        for (int s : {1, -1}) {
          auto v = w;
          v.push_back(s * g);
          next.push_back(v);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace testgen
