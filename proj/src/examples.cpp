#include "vsl/examples.hpp"

#include <functional>
#include <utility>

#include "vsl/braid.hpp"
#include "vsl/error.hpp"

namespace vsl {

namespace {

constexpr CrossingKind P = CrossingKind::PositiveClassical;
constexpr CrossingKind N = CrossingKind::NegativeClassical;
constexpr CrossingKind Sg = CrossingKind::Singular;
constexpr CrossingKind V = CrossingKind::Virtual;

// One-component diagram with one negative classical, one singular and two
// virtual crossings whose four states carry stats (a,b,alpha,beta,||S||,i) =
// (1,0,1,0,1,+1), (0,1,1,0,1,-1), (1,0,0,1,1,-1), (0,1,0,1,2,-1). Frozen as
// the first such wiring in the codec's enumeration order (out-ports in
// crossing/slot order against lexicographically enumerated in-port
// assignments); see the fixture-search test, which re-derives it.
Diagram example1() {
  return Diagram::from_crossings(
      {
          {0, N, {"a7", "a0", "a4", "a1"}},
          {1, Sg, {"a0", "a2", "a1", "a3"}},
          {2, V, {"a2", "a4", "a3", "a5"}},
          {3, V, {"a5", "a6", "a6", "a7"}},
      },
      0);
}

const std::vector<std::pair<std::string, std::function<Diagram()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Diagram()>>> reg = {
      {"unknot", [] { return Diagram::unknots(1); }},
      {"unknot-kink-pos", [] { return braid_closure(2, {{0, P}}); }},
      {"unknot-kink-neg", [] { return braid_closure(2, {{0, N}}); }},
      {"unknot-kink-virtual", [] { return braid_closure(2, {{0, V}}); }},
      {"hopf", [] { return braid_closure(2, {{0, P}, {0, P}}); }},
      {"trefoil", [] { return braid_closure(2, {{0, P}, {0, P}, {0, P}}); }},
      {"singular-hopf", [] { return braid_closure(2, {{0, P}, {0, Sg}}); }},
      {"example1", example1},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, make] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Diagram example_diagram(const std::string& name) {
  for (const auto& [n, make] : registry())
    if (n == name) return make();
  throw Error(ErrorCode::SyntaxError, "unknown example '" + name + "'");
}

std::string example_text(const std::string& name) {
  return "# " + name + "\n" + example_diagram(name).serialize();
}

}  // namespace vsl
