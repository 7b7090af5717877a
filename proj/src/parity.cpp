#include "vsl/parity.hpp"

#include <random>

namespace vsl {

namespace {

void fill_component(const GraphComponent& comp, const MagneticGraph& g,
                    std::int8_t base, WeightMap& out) {
  if (comp.vertices.empty()) {
    out.weight[comp.edges[0]] = base;
    return;
  }
  // Anchor the base weight on the edge holding the smallest arc, then
  // alternate along the cyclic edge order.
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < comp.edges.size(); ++i)
    if (g.edge_min_arc[comp.edges[i]] < g.edge_min_arc[comp.edges[anchor]]) anchor = i;
  for (std::size_t i = 0; i < comp.edges.size(); ++i) {
    const bool flip = ((i + comp.edges.size() - anchor) % comp.edges.size()) % 2 == 1;
    out.weight[comp.edges[i]] = flip ? static_cast<std::int8_t>(-base) : base;
  }
}

}  // namespace

WeightMap canonical_weight_map(const MagneticGraph& g) {
  WeightMap out;
  out.weight.assign(g.edge_count(), 1);
  for (const GraphComponent& comp : g.components) fill_component(comp, g, 1, out);
  return out;
}

WeightMap random_weight_map(const MagneticGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WeightMap out;
  out.weight.assign(g.edge_count(), 1);
  for (const GraphComponent& comp : g.components) {
    const std::int8_t base = (rng() & 1u) ? std::int8_t{-1} : std::int8_t{1};
    fill_component(comp, g, base, out);
  }
  return out;
}

int parity(const MagneticGraph& g, const WeightMap& w) {
  int p = 1;
  for (const VirtualIncidence& v : g.incidences) p *= w.weight[v.edge_a] * w.weight[v.edge_b];
  return p;
}

}  // namespace vsl
