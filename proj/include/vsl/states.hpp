// Resolution assignments for the classical and singular crossings of a
// diagram, and the purely virtual magnetic graphs they produce.
//
// A resolved diagram decomposes into closed curves: the oriented resolution
// rewires a crossing without a vertex, the disoriented one inserts a sink
// (both strands inward) and a source (both outward), and virtual crossings
// pass straight through and are recorded as edge incidences.

#pragma once

#include <cstdint>
#include <vector>

#include "vsl/diagram.hpp"

namespace vsl {

enum class Resolution : std::uint8_t { Oriented, Disoriented };

// Total assignment over the diagram's resolvable crossings, packed as a
// bitmask read in Diagram::resolvable() order (bit set = disoriented).
struct State {
  std::uint64_t mask = 0;

  Resolution at(int resolvable_pos) const {
    return (mask >> resolvable_pos) & 1u ? Resolution::Disoriented : Resolution::Oriented;
  }
};

// 2^(c+s) states in binary-counter order.
class StateSpace {
public:
  explicit StateSpace(const Diagram& d);
  std::uint64_t size() const { return size_; }
  State operator[](std::uint64_t i) const { return State{i}; }

private:
  std::uint64_t size_;
};

enum class VertexTag : std::uint8_t { Sink, Source };

struct GraphComponent {
  // Edges in cyclic order; vertices[i] precedes edges[i] along the walk.
  // A vertexless component (free loop or fully smoothed curve) has exactly
  // one edge and no vertices.
  std::vector<int> edges;
  std::vector<VertexTag> vertices;
};

struct VirtualIncidence {
  int crossing_id;
  int edge_a;  // edge carrying the strand-1 passage
  int edge_b;  // edge carrying the strand-2 passage (may equal edge_a)
};

struct MagneticGraph {
  std::vector<GraphComponent> components;
  std::vector<VirtualIncidence> incidences;
  std::vector<int> arc_edge;       // arc index -> edge id (-1 if impossible)
  std::vector<int> edge_component; // edge id -> component index
  // Smallest arc index on the edge; free-loop edges get a sentinel above
  // every real arc index.
  std::vector<int> edge_min_arc;

  int edge_count() const { return static_cast<int>(edge_component.size()); }
  int component_count() const { return static_cast<int>(components.size()); }
  int vertex_count() const;
};

struct StateStats {
  int a = 0;      // negative-classical minus positive-classical, oriented-resolved
  int b = 0;      // same difference among disoriented-resolved
  int alpha = 0;  // singular crossings resolved oriented
  int beta = 0;   // singular crossings resolved disoriented
  int n_components = 0;
  int parity = 1;  // +1 or -1
};

// Reusable resolver; keeps scratch buffers so that sweeping all states of a
// diagram does not reallocate.
class Resolver {
public:
  explicit Resolver(const Diagram& d);
  const MagneticGraph& resolve(const State& st);
  const Diagram& diagram() const { return *d_; }

private:
  const Diagram* d_;
  MagneticGraph g_;
  std::vector<int> pair_;     // port -> paired port
  std::vector<char> vertex_;  // port -> pairing is a bivalent vertex
  std::vector<char> seen_;
  std::vector<int> cycle_arcs_;
  std::vector<int> cycle_vertex_at_;  // positions in cycle_arcs_ where a vertex precedes
  std::vector<VertexTag> cycle_tags_;
};

MagneticGraph resolve(const Diagram& d, const State& st);

StateStats stats(const Diagram& d, const State& st, const MagneticGraph& g, int parity);

}  // namespace vsl
