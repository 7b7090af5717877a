#include "vsl/moves.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "vsl/braid.hpp"
#include "vsl/error.hpp"

namespace vsl {

namespace {

// A chain port: (index into specs, in slot, out slot) of a new crossing the
// spliced strand passes through.
struct ChainStop {
  int spec_index;
  int in_slot;
  int out_slot;
};

struct Surgeon {
  std::vector<CrossingSpec> specs;
  int free_loops;
  int original_free_loops;
  std::set<std::string> tokens;
  std::string fresh_prefix = "m";
  int next_id = 0;
  int fresh_counter = 0;

  explicit Surgeon(const Diagram& d)
      : free_loops(d.free_loops()), original_free_loops(d.free_loops()) {
    for (const Crossing& c : d.crossings()) {
      CrossingSpec s;
      s.id = c.id;
      s.kind = c.kind;
      for (int slot = 0; slot < 4; ++slot) {
        s.arcs[slot] = d.arcs()[c.arc[slot]].token;
        tokens.insert(s.arcs[slot]);
      }
      specs.push_back(std::move(s));
      next_id = std::max(next_id, c.id + 1);
    }
    // Fresh tokens must sort after every existing token: the canonical
    // weight-map anchor is the smallest arc of a component, and invariance
    // of the enhanced polynomial under these surgeries needs that anchor to
    // stay on the original arcs (the spliced segments shift vertex positions
    // but never carry virtual passages).
    for (const std::string& t : tokens)
      if (!(t < fresh_prefix)) fresh_prefix = t;
    fresh_prefix += "+";
  }

  std::string fresh() {
    return *tokens.insert(fresh_prefix + std::to_string(fresh_counter++)).first;
  }

  int add_crossing(CrossingKind kind) {
    CrossingSpec s;
    s.id = next_id++;
    s.kind = kind;
    specs.push_back(std::move(s));
    return static_cast<int>(specs.size()) - 1;
  }

  void splice(const Site& site, const std::vector<ChainStop>& chain) {
    if (site.is_arc()) {
      // The arc keeps its token up to the first stop; a fresh tail arc takes
      // over at the in-slot that used to receive it.
      int head_spec = -1, head_slot = -1;
      for (std::size_t i = 0; i < specs.size(); ++i) {
        for (int slot : {S1In, S2In}) {
          if (specs[i].arcs[slot] == site.token) {
            head_spec = static_cast<int>(i);
            head_slot = slot;
          }
        }
      }
      if (head_spec < 0)
        throw Error(ErrorCode::UnknownArc, "unknown arc '" + site.token + "'");
      std::string carry = site.token;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        specs[chain[i].spec_index].arcs[chain[i].in_slot] = carry;
        carry = fresh();
        specs[chain[i].spec_index].arcs[chain[i].out_slot] = carry;
      }
      specs[head_spec].arcs[head_slot] = carry;
    } else {
      // indices refer to the loops of the input diagram; distinctness of the
      // sites is checked by the caller
      if (site.loop_index < 0 || site.loop_index >= original_free_loops)
        throw Error(ErrorCode::UnknownArc,
                    "no free loop with index " + std::to_string(site.loop_index));
      --free_loops;
      const std::string closing = fresh();
      std::string carry = closing;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        specs[chain[i].spec_index].arcs[chain[i].in_slot] = carry;
        carry = i + 1 == chain.size() ? closing : fresh();
        specs[chain[i].spec_index].arcs[chain[i].out_slot] = carry;
      }
    }
  }

  Diagram build() { return Diagram::from_crossings(std::move(specs), free_loops); }
};

void require_distinct(const Diagram& d, const Site& a, const Site& b) {
  if (a.is_arc() && !d.has_arc_token(a.token))
    throw Error(ErrorCode::UnknownArc, "unknown arc '" + a.token + "'");
  if (b.is_arc() && !d.has_arc_token(b.token))
    throw Error(ErrorCode::UnknownArc, "unknown arc '" + b.token + "'");
  if (a == b) throw Error(ErrorCode::SameArc, "both sites name the same strand");
}

}  // namespace

Diagram insert_r1(const Diagram& d, const Site& site, bool positive) {
  Surgeon s(d);
  const int x = s.add_crossing(positive ? CrossingKind::PositiveClassical
                                        : CrossingKind::NegativeClassical);
  s.splice(site, {{x, S1In, S1Out}, {x, S2In, S2Out}});
  return s.build();
}

Diagram insert_v1(const Diagram& d, const Site& site) {
  Surgeon s(d);
  const int x = s.add_crossing(CrossingKind::Virtual);
  s.splice(site, {{x, S1In, S1Out}, {x, S2In, S2Out}});
  return s.build();
}

Diagram insert_r2(const Diagram& d, const Site& a, const Site& b, R2Variant variant) {
  require_distinct(d, a, b);
  Surgeon s(d);
  const int x = s.add_crossing(CrossingKind::PositiveClassical);
  const int y = s.add_crossing(CrossingKind::NegativeClassical);
  s.splice(a, {{x, S1In, S1Out}, {y, S1In, S1Out}});
  if (variant == R2Variant::Parallel)
    s.splice(b, {{x, S2In, S2Out}, {y, S2In, S2Out}});
  else
    s.splice(b, {{y, S2In, S2Out}, {x, S2In, S2Out}});
  return s.build();
}

Diagram insert_v2(const Diagram& d, const Site& a, const Site& b) {
  require_distinct(d, a, b);
  Surgeon s(d);
  const int x = s.add_crossing(CrossingKind::Virtual);
  const int y = s.add_crossing(CrossingKind::Virtual);
  s.splice(a, {{x, S1In, S1Out}, {y, S1In, S1Out}});
  s.splice(b, {{x, S2In, S2Out}, {y, S2In, S2Out}});
  return s.build();
}

namespace {

constexpr CrossingKind P = CrossingKind::PositiveClassical;
constexpr CrossingKind N = CrossingKind::NegativeClassical;
constexpr CrossingKind Sg = CrossingKind::Singular;
constexpr CrossingKind V = CrossingKind::Virtual;

std::vector<MovePair> make_builtin_pairs() {
  std::vector<MovePair> out;
  auto add = [&](std::string name, Diagram before, Diagram after) {
    out.push_back({std::move(name), std::move(before), std::move(after)});
  };

  add("R1", braid_closure(2, {{0, P}}), Diagram::unknots(1));
  add("R1", braid_closure(2, {{0, N}}), Diagram::unknots(1));
  add("V1", braid_closure(2, {{0, V}}), Diagram::unknots(1));
  add("R2", braid_closure(2, {{0, P}, {0, N}}), Diagram::unknots(2));
  add("V2", braid_closure(2, {{0, V}, {0, V}}), Diagram::unknots(2));

  // Braid-relation pairs; words read bottom to top.
  add("R3", braid_closure(3, {{0, P}, {1, P}, {0, P}}),
      braid_closure(3, {{1, P}, {0, P}, {1, P}}));
  add("R3", braid_closure(3, {{0, N}, {1, N}, {0, N}}),
      braid_closure(3, {{1, N}, {0, N}, {1, N}}));
  add("RS1", braid_closure(3, {{0, Sg}, {1, P}, {0, P}}),
      braid_closure(3, {{1, P}, {0, P}, {1, Sg}}));
  add("RS2", braid_closure(3, {{0, P}, {0, Sg}, {1, P}}),
      braid_closure(3, {{0, Sg}, {0, P}, {1, P}}));
  add("RS2", braid_closure(3, {{0, N}, {0, Sg}, {1, P}}),
      braid_closure(3, {{0, Sg}, {0, N}, {1, P}}));
  add("V3v", braid_closure(3, {{0, V}, {1, V}, {0, V}}),
      braid_closure(3, {{1, V}, {0, V}, {1, V}}));
  add("V3c", braid_closure(3, {{0, P}, {1, V}, {0, V}}),
      braid_closure(3, {{1, V}, {0, V}, {1, P}}));
  add("V3c", braid_closure(3, {{0, N}, {1, V}, {0, V}}),
      braid_closure(3, {{1, V}, {0, V}, {1, N}}));
  add("V3s", braid_closure(3, {{0, Sg}, {1, V}, {0, V}}),
      braid_closure(3, {{1, V}, {0, V}, {1, Sg}}));
  return out;
}

}  // namespace

const std::vector<MovePair>& builtin_fixture_pairs() {
  static const std::vector<MovePair> pairs = make_builtin_pairs();
  return pairs;
}

const std::vector<std::string>& move_names() {
  static const std::vector<std::string> names = {"R1", "R2",  "R3",  "RS1", "RS2",
                                                 "V1", "V2",  "V3v", "V3c", "V3s"};
  return names;
}

}  // namespace vsl
