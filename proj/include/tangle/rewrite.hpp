#pragma once

// Local moves on tangle diagrams. Moves act on the sequential form of a
// diagram (one event per slice, in the order the slices list them) and are
// addressed by event indices in that form.
//
// In the braided and symmetric cases labels only matter up to parity; a move
// may shift labels above it by an even amount, and the result ends with a
// slice of Id events that restores the original target word.

#include <optional>
#include <string>
#include <vector>

#include "tangle/diagram.hpp"

namespace tangle::rewrite {

/// One event per slice. Id events are dropped.
struct Sequential {
  ObjectWord source;
  std::vector<Event> events;
};

Sequential sequential(const Diagram& d, AmbientDim dim);
/// One event per slice, plus an Id slice if the labels drifted from `target`.
Diagram to_diagram(const Sequential& s, const ObjectWord& target, AmbientDim dim);
/// The words between events: w_0 = source, ..., w_n.
std::vector<ObjectWord> words(const Sequential& s, AmbientDim dim);

/// Swap two adjacent events whose supports do not meet. `first` acts on the
/// word before both. Returns the new (first, second) pair, or nothing.
/// A cap followed by a cup in the gap it leaves can be swapped two ways; this
/// puts the cup on the left.
std::optional<std::pair<Event, Event>> interchange(const Event& first, const Event& second);
/// Every way to swap the pair: none, one, or two (cup left, cup right).
std::vector<std::pair<Event, Event>> interchanges(const Event& first, const Event& second);

enum class MoveKind { ZigZagL, ZigZagR, Interchange, R2, R3, SymCollapse, Kink2 };

std::string to_string(MoveKind k);

struct Move {
  MoveKind kind;
  /// Event indices in the sequential form: (cup, cap) for ZigZag, the pair
  /// for R2 and Interchange, three crossings for R3, one crossing for
  /// SymCollapse, the first of six events for Kink2.
  std::vector<int> events;
  /// Backward R2 inserts a crossing pair; the other kinds are forward.
  bool forward = true;
  int position = 0;  // backward R2: strand position in the word before `events[0]`
  bool positive_first = true;  // backward R2: sign of the lower inserted crossing
  int level = 0;  // ZigZag: k of the cup
  int variant = 0;  // Interchange: index into interchanges()

  std::string to_string() const;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Every redex of the rules legal in `dim`. Planar: ZigZag and Interchange.
/// Braided adds R2 and R3; Symmetric adds SymCollapse and Kink2.
std::vector<Move> applicable_moves(const Diagram& d, AmbientDim dim);

/// All backward R2 insertions into the sequential form.
std::vector<Move> insertion_moves(const Diagram& d, AmbientDim dim);

/// Throws Error if the move does not apply.
Diagram apply_move(const Diagram& d, const Move& m, AmbientDim dim);

/// Order-independent key of a diagram modulo interchange of far-apart events
/// (labels reduced to parity outside the planar case).
std::string canonical_key(const Diagram& d, AmbientDim dim);
/// The canonical representative of the interchange class.
Sequential canonical_order(const Sequential& s, AmbientDim dim);

/// Applies forward ZigZag (and R2, Kink2 where legal) until none applies.
Diagram simplify(const Diagram& d, AmbientDim dim);

struct Arc {
  Endpoint from;
  Endpoint to;
  int from_label;
  int to_label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Non-crossing perfect matching on source + target positions.
struct PlanarNormalForm {
  ObjectWord source;
  ObjectWord target;
  std::vector<Arc> arcs;  // sorted by `from`; source endpoints precede target endpoints

  std::size_t through_count() const;
  std::string to_string() const;
  friend bool operator==(const PlanarNormalForm&, const PlanarNormalForm&) = default;
};

PlanarNormalForm normalize_planar(const Diagram& d);
/// Checks the label and planarity constraints; throws InternalError.
void check_normal_form(const PlanarNormalForm& nf);
/// A reduced diagram with the given matching: caps, then cups.
Diagram realize(const PlanarNormalForm& nf);

enum class Equality { Equal, Distinct, Unknown };
std::string to_string(Equality e);

struct EqualityOptions {
  int budget = 4;  // search depth per side
  std::size_t max_states = 20000;
  unsigned long long seed = 1;
};

Equality equal(const Diagram& d1, const Diagram& d2, AmbientDim dim, const EqualityOptions& opts = {});

}  // namespace tangle::rewrite
