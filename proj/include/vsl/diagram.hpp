// Oriented virtual singular link diagrams as abstract 4-valent structures:
// crossings of four kinds wired by directed arcs, plus a count of
// crossing-free loops. No planar embedding is stored.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vsl {

enum class CrossingKind : std::uint8_t {
  PositiveClassical,
  NegativeClassical,
  Singular,
  Virtual,
};

char kind_letter(CrossingKind k);
bool is_classical(CrossingKind k);
// Classical or singular, i.e. receives a resolution.
bool is_resolvable(CrossingKind k);

// Port slots of a crossing. Strand 1 enters at S1In and exits at S1Out;
// likewise strand 2. The s1/s2 split is arbitrary (resolutions are
// strand-swap symmetric).
enum PortSlot : int { S1In = 0, S1Out = 1, S2In = 2, S2Out = 3 };

inline bool is_in_slot(int slot) { return slot == S1In || slot == S2In; }

// Crossing line as written in a diagram file: four arc tokens in slot order
// (s1_in, s1_out, s2_in, s2_out).
struct CrossingSpec {
  int id;
  CrossingKind kind;
  std::array<std::string, 4> arcs;
};

struct Crossing {
  int id;
  CrossingKind kind;
  std::array<int, 4> arc;  // arc index per slot
};

// Directed arc from an out-port to an in-port.
struct Arc {
  std::string token;
  int tail_crossing;  // index into crossings()
  int tail_slot;      // S1Out or S2Out
  int head_crossing;
  int head_slot;  // S1In or S2In
};

struct Counts {
  int classical = 0;
  int singular = 0;
  int virt = 0;
  int writhe = 0;
};

class Diagram {
public:
  // Builds and validates. Throws Error on duplicate ids, duplicate port use
  // or dangling arcs. Arcs are indexed in lexicographic token order.
  static Diagram from_crossings(std::vector<CrossingSpec> specs, int free_loops);

  static Diagram empty() { return from_crossings({}, 0); }
  static Diagram unknots(int n) { return from_crossings({}, n); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int free_loops() const { return free_loops_; }

  // Indices (into crossings()) of classical and singular crossings, in id
  // order; the state bitmask is read in this order, least significant bit
  // first.
  const std::vector<int>& resolvable() const { return resolvable_; }

  std::optional<int> crossing_index_by_id(int id) const;
  std::optional<int> arc_index(const std::string& token) const;

  Counts counts() const;

  // Closed curves of the underlying immersion: pass straight through every
  // crossing of every kind, then add free loops.
  int link_components() const;

  Diagram disjoint_union(const Diagram& other) const;

  // Same diagram with one crossing's kind replaced.
  Diagram with_kind(int crossing_id, CrossingKind kind) const;

  std::string serialize() const;

  // Re-checks the wiring invariants (construction already enforces them).
  void validate() const;

  bool has_arc_token(const std::string& token) const;

private:
  std::vector<Crossing> crossings_;  // sorted by id
  std::vector<Arc> arcs_;            // sorted by token
  std::vector<int> resolvable_;
  std::unordered_map<std::string, int> arc_by_token_;
  int free_loops_ = 0;
};

// Parses the line-based text format:
//   crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>
//   loops <count>
// '#' starts a comment. Throws Error with a line number on bad syntax.
Diagram parse_diagram(const std::string& text);
Diagram parse_diagram_file(const std::string& path);

}  // namespace vsl
