#include "vsl/states.hpp"

#include <cassert>
#include <limits>

#include "vsl/error.hpp"

namespace vsl {

namespace {

constexpr int kNoArc = std::numeric_limits<int>::max();

inline int port(int crossing_index, int slot) { return 4 * crossing_index + slot; }

}  // namespace

StateSpace::StateSpace(const Diagram& d) {
  std::size_t n = d.resolvable().size();
  if (n >= 64)
    throw Error(ErrorCode::StateBudgetExceeded,
                "diagram has " + std::to_string(n) + " resolvable crossings");
  size_ = std::uint64_t{1} << n;
}

int MagneticGraph::vertex_count() const {
  int n = 0;
  for (const GraphComponent& c : components) n += static_cast<int>(c.vertices.size());
  return n;
}

Resolver::Resolver(const Diagram& d) : d_(&d) {
  std::size_t ports = 4 * d.crossings().size();
  pair_.resize(ports);
  vertex_.resize(ports);
  seen_.resize(ports);
  g_.arc_edge.resize(d.arcs().size());
}

const MagneticGraph& Resolver::resolve(const State& st) {
  const Diagram& d = *d_;
  const auto& crossings = d.crossings();

  g_.components.clear();
  g_.incidences.clear();
  g_.edge_component.clear();
  g_.edge_min_arc.clear();
  std::fill(seen_.begin(), seen_.end(), 0);

  // Within-crossing port pairings for this state.
  int res_pos = 0;
  for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
    const int base = 4 * static_cast<int>(ci);
    bool disoriented = false;
    if (is_resolvable(crossings[ci].kind)) {
      disoriented = st.at(res_pos) == Resolution::Disoriented;
      ++res_pos;
    }
    if (crossings[ci].kind == CrossingKind::Virtual) {
      pair_[base + S1In] = base + S1Out;
      pair_[base + S1Out] = base + S1In;
      pair_[base + S2In] = base + S2Out;
      pair_[base + S2Out] = base + S2In;
      vertex_[base + 0] = vertex_[base + 1] = vertex_[base + 2] = vertex_[base + 3] = 0;
    } else if (!disoriented) {
      pair_[base + S1In] = base + S2Out;
      pair_[base + S2Out] = base + S1In;
      pair_[base + S2In] = base + S1Out;
      pair_[base + S1Out] = base + S2In;
      vertex_[base + 0] = vertex_[base + 1] = vertex_[base + 2] = vertex_[base + 3] = 0;
    } else {
      pair_[base + S1In] = base + S2In;
      pair_[base + S2In] = base + S1In;
      pair_[base + S1Out] = base + S2Out;
      pair_[base + S2Out] = base + S1Out;
      vertex_[base + 0] = vertex_[base + 1] = vertex_[base + 2] = vertex_[base + 3] = 1;
    }
  }

  const auto& arcs = d.arcs();
  auto arc_at = [&](int p) { return crossings[p / 4].arc[p % 4]; };
  auto arc_other = [&](int p) {
    const Arc& a = arcs[arc_at(p)];
    return is_in_slot(p % 4) ? port(a.tail_crossing, a.tail_slot)
                             : port(a.head_crossing, a.head_slot);
  };

  for (int start = 0; start < static_cast<int>(pair_.size()); ++start) {
    if (seen_[start]) continue;

    // Walk the component cycle, alternating pairings and arc hops. Record
    // the arcs in order and which hops are preceded by a bivalent vertex.
    cycle_arcs_.clear();
    cycle_vertex_at_.clear();
    cycle_tags_.clear();
    int p = start;
    do {
      int q = pair_[p];
      if (vertex_[p]) {
        cycle_vertex_at_.push_back(static_cast<int>(cycle_arcs_.size()));
        cycle_tags_.push_back(is_in_slot(p % 4) ? VertexTag::Sink : VertexTag::Source);
      }
      seen_[p] = seen_[q] = 1;
      cycle_arcs_.push_back(arc_at(q));
      p = arc_other(q);
    } while (p != start);

    const int comp_index = static_cast<int>(g_.components.size());
    GraphComponent comp;
    if (cycle_vertex_at_.empty()) {
      const int e = g_.edge_count();
      int min_arc = kNoArc;
      for (int a : cycle_arcs_) {
        g_.arc_edge[a] = e;
        min_arc = std::min(min_arc, a);
      }
      g_.edge_component.push_back(comp_index);
      g_.edge_min_arc.push_back(min_arc);
      comp.edges.push_back(e);
    } else {
      const int n_arcs = static_cast<int>(cycle_arcs_.size());
      const int n_vert = static_cast<int>(cycle_vertex_at_.size());
      for (int vi = 0; vi < n_vert; ++vi) {
        const int e = g_.edge_count();
        const int from = cycle_vertex_at_[vi];
        const int to = vi + 1 < n_vert ? cycle_vertex_at_[vi + 1]
                                       : cycle_vertex_at_[0] + n_arcs;
        int min_arc = kNoArc;
        for (int k = from; k < to; ++k) {
          const int a = cycle_arcs_[k % n_arcs];
          g_.arc_edge[a] = e;
          min_arc = std::min(min_arc, a);
        }
        g_.edge_component.push_back(comp_index);
        g_.edge_min_arc.push_back(min_arc);
        comp.edges.push_back(e);
        comp.vertices.push_back(cycle_tags_[vi]);
      }
    }
    g_.components.push_back(std::move(comp));
  }

  for (int i = 0; i < d.free_loops(); ++i) {
    const int comp_index = static_cast<int>(g_.components.size());
    const int e = g_.edge_count();
    g_.edge_component.push_back(comp_index);
    g_.edge_min_arc.push_back(kNoArc);
    GraphComponent comp;
    comp.edges.push_back(e);
    g_.components.push_back(std::move(comp));
  }

  for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
    if (crossings[ci].kind != CrossingKind::Virtual) continue;
    g_.incidences.push_back({crossings[ci].id,
                             g_.arc_edge[crossings[ci].arc[S1In]],
                             g_.arc_edge[crossings[ci].arc[S2In]]});
  }
  return g_;
}

MagneticGraph resolve(const Diagram& d, const State& st) {
  Resolver r(d);
  return r.resolve(st);
}

StateStats stats(const Diagram& d, const State& st, const MagneticGraph& g, int parity) {
  StateStats out;
  const auto& crossings = d.crossings();
  const auto& res = d.resolvable();
  for (std::size_t pos = 0; pos < res.size(); ++pos) {
    const CrossingKind kind = crossings[res[pos]].kind;
    const bool dis = st.at(static_cast<int>(pos)) == Resolution::Disoriented;
    switch (kind) {
      case CrossingKind::NegativeClassical:
        (dis ? out.b : out.a) += 1;
        break;
      case CrossingKind::PositiveClassical:
        (dis ? out.b : out.a) -= 1;
        break;
      case CrossingKind::Singular:
        (dis ? out.beta : out.alpha) += 1;
        break;
      case CrossingKind::Virtual:
        break;
    }
  }
  out.n_components = g.component_count();
  out.parity = parity;
  return out;
}

}  // namespace vsl
