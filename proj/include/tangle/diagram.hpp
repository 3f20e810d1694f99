#pragma once

// Framed tangle diagrams encoded slice by slice, read bottom to top.
//
// Strands carry integer dual levels. Cup(k) : () -> (k+1, k) and
// Cap(k) : (k, k+1) -> (); crossings swap two strands. In the planar case
// labels are matched exactly. In the braided and symmetric cases only the
// parity of a label is invariant, so an event accepts any labels of the
// right parity and crossings carry the labels they actually consume.
//
// Orientation: an even label runs upward, an odd label downward. For x+ the
// strand entering at the bottom left passes over.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tangle {

enum class AmbientDim { Planar, Braided, Symmetric };

/// n = 2 is Planar, n = 3 Braided, n >= 4 Symmetric.
AmbientDim dim_from_n(int n);
std::string to_string(AmbientDim dim);
bool exact_labels(AmbientDim dim);

using ObjectWord = std::vector<int>;

std::string to_string(const ObjectWord& w);

/// Sum of (-1)^label.
int degree(const ObjectWord& w);

inline bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

enum class EventKind { Id, Cup, Cap, CrossPos, CrossNeg };

struct Event {
  EventKind kind;
  int position;  // index into the slice input
  int a = 0;     // j for Id, k for Cup/Cap, left label for crossings
  int b = 0;     // right label for crossings

  static Event id(int position, int j) { return {EventKind::Id, position, j, 0}; }
  static Event cup(int position, int k) { return {EventKind::Cup, position, k, 0}; }
  static Event cap(int position, int k) { return {EventKind::Cap, position, k, 0}; }
  static Event cross(bool positive, int position, int a, int b) {
    return {positive ? EventKind::CrossPos : EventKind::CrossNeg, position, a, b};
  }

  int inputs() const noexcept;
  int outputs() const noexcept;
  bool is_crossing() const noexcept { return kind == EventKind::CrossPos || kind == EventKind::CrossNeg; }
  int sign() const noexcept { return kind == EventKind::CrossPos ? 1 : kind == EventKind::CrossNeg ? -1 : 0; }
  /// The labels the event expects to consume.
  ObjectWord declared_input() const;

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

std::string to_string(const Event& e);

struct Slice {
  ObjectWord input;
  std::vector<Event> events;  // sorted, disjoint supports

  /// Untyped: copies untouched strands, emits (k+1,k) for cups, the swapped
  /// consumed labels for crossings and j for Id(j). Throws on bad positions.
  ObjectWord output() const;

  friend bool operator==(const Slice&, const Slice&) = default;
};

struct Diagram {
  ObjectWord source;
  ObjectWord target;
  std::vector<Slice> slices;

  std::size_t event_count() const;
  std::size_t crossing_count() const;
  bool is_closed() const { return source.empty() && target.empty(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct ValidationIssue {
  int slice;  // -1 for diagram-level issues
  int position;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  std::string to_string() const;
};

/// Label window: reject labels outside [lo, hi].
struct LabelWindow {
  int lo;
  int hi;
};

ValidationReport validate(const Diagram& d, AmbientDim dim, std::optional<LabelWindow> window = std::nullopt);
/// Throws Error with the report if d is not valid.
void require_valid(const Diagram& d, AmbientDim dim);

Diagram identity(const ObjectWord& w);
/// One event on an otherwise empty word.
Diagram elementary(const Event& e, AmbientDim dim);
/// One slice; the target is computed. Validated against dim.
Diagram single_slice(const ObjectWord& input, std::vector<Event> events, AmbientDim dim);
/// Builds a diagram from a source and event lists, one list per slice.
Diagram from_events(const ObjectWord& source, const std::vector<std::vector<Event>>& slices, AmbientDim dim);

/// d1 then d2. Planar requires d1.target == d2.source exactly; otherwise the
/// words must agree in parity, and d2 is relabeled along d1.target.
Diagram compose(const Diagram& d1, const Diagram& d2, AmbientDim dim);
/// Side by side; the shorter diagram is padded with identity slices.
Diagram tensor(const Diagram& d1, const Diagram& d2);

/// Re-reads a slice on a new input word (of matching parity): crossings and
/// caps take the labels they now consume.
Slice retype(const Slice& s, const ObjectWord& input);

/// A point on the boundary of a diagram.
struct Endpoint {
  bool at_target;  // false: source
  int index;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct CrossingVisit {
  int slice;
  int event;  // index into the slice's events
  bool over;
};

struct Component {
  bool closed = false;
  std::vector<Endpoint> endpoints;  // two for an open component
  std::vector<CrossingVisit> crossings;
  int segments = 0;  // strand pieces between heights
};

std::vector<Component> trace_components(const Diagram& d);

/// Writhe of a closed diagram: total counts every crossing, self[i] only
/// crossings of component i with itself.
struct Writhe {
  int total = 0;
  std::vector<int> self;
};

/// Sign of the crossing as an oriented crossing.
int crossing_sign(const Event& e);
Writhe writhe(const Diagram& d);

/// Canonical text form, one slice per line.
std::string serialize(const Diagram& d);
Diagram parse_diagram(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Diagram& d);

}  // namespace tangle
