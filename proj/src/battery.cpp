#include "vsl/battery.hpp"

#include <map>

#include "vsl/error.hpp"
#include "vsl/evaluator.hpp"
#include "vsl/examples.hpp"
#include "vsl/moves.hpp"
#include "vsl/parity.hpp"
#include "vsl/random_diagram.hpp"
#include "vsl/skein.hpp"

namespace vsl {

namespace {

struct Comparer {
  BatteryRow* row;

  void compare(const Diagram& before, const Diagram& after) {
    ++row->checks;
    const HLaurent rb = r_poly(before);
    const HLaurent ra = r_poly(after);
    const bool ok = rb == ra && rb.eval_h1() == ra.eval_h1() &&
                    rb.odd_part() == ra.odd_part() && rb.even_part() == ra.even_part() &&
                    before.link_components() == after.link_components();
    if (!ok) ++row->failures;
  }
};

std::vector<Site> all_sites(const Diagram& d) {
  std::vector<Site> sites;
  for (const Arc& a : d.arcs()) sites.push_back(Site::arc(a.token));
  for (int i = 0; i < d.free_loops(); ++i) sites.push_back(Site::loop(i));
  return sites;
}

}  // namespace

std::vector<BatteryRow> run_invariance_battery(const std::string& scope) {
  std::map<std::string, BatteryRow> rows;
  for (const std::string& name : move_names())
    if (scope == "all" || scope == name) rows[name] = BatteryRow{name};
  if (rows.empty()) throw Error(ErrorCode::SyntaxError, "unknown move '" + scope + "'");

  auto wants = [&](const std::string& name) { return rows.count(name) > 0; };

  for (const std::string& fixture : example_names()) {
    const Diagram d = example_diagram(fixture);
    const std::vector<Site> sites = all_sites(d);
    if (wants("R1")) {
      Comparer c{&rows["R1"]};
      for (const Site& s : sites) {
        c.compare(d, insert_r1(d, s, true));
        c.compare(d, insert_r1(d, s, false));
      }
    }
    if (wants("V1")) {
      Comparer c{&rows["V1"]};
      for (const Site& s : sites) c.compare(d, insert_v1(d, s));
    }
    if (wants("R2")) {
      Comparer c{&rows["R2"]};
      for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
          c.compare(d, insert_r2(d, sites[i], sites[j], R2Variant::Parallel));
          c.compare(d, insert_r2(d, sites[i], sites[j], R2Variant::Antiparallel));
        }
    }
    if (wants("V2")) {
      Comparer c{&rows["V2"]};
      for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j)
          c.compare(d, insert_v2(d, sites[i], sites[j]));
    }
  }

  for (const MovePair& pair : builtin_fixture_pairs()) {
    if (!wants(pair.name)) continue;
    Comparer c{&rows[pair.name]};
    c.compare(pair.before, pair.after);
  }

  std::vector<BatteryRow> out;
  for (auto& [name, row] : rows) out.push_back(std::move(row));
  return out;
}

std::vector<BatteryRow> run_randomized_checks(std::uint64_t seed, int n_diagrams) {
  BatteryRow oracle{"state-sum-vs-skein"};
  BatteryRow stability{"parity-weight-map-independence"};
  BatteryRow bands{"split-exponent-bands"};
  BatteryRow singular{"singular-crossing-identity"};

  for (int i = 0; i < n_diagrams; ++i) {
    const Diagram d = random_diagram(seed + static_cast<std::uint64_t>(i));
    const InvariantResult r = evaluate(d);

    ++oracle.checks;
    if (r.bracket != bracket_skein(d)) ++oracle.failures;

    ++bands.checks;
    const int phi_band = ((2 * (r.k - 1)) % 4 + 4) % 4;
    const int psi_band = ((2 * r.k) % 4 + 4) % 4;
    for (int res : r.phi.exponent_residues())
      if (res != phi_band) ++bands.failures;
    for (int res : r.psi.exponent_residues())
      if (res != psi_band) ++bands.failures;

    Resolver resolver(d);
    StateSpace space(d);
    bool stable = true;
    for (std::uint64_t m = 0; m < space.size(); ++m) {
      const MagneticGraph& g = resolver.resolve(space[m]);
      const int base = parity(g, canonical_weight_map(g));
      for (std::uint64_t s = 0; s < 20; ++s)
        if (parity(g, random_weight_map(g, seed ^ (m * 20 + s))) != base) stable = false;
    }
    ++stability.checks;
    if (!stable) ++stability.failures;

    for (const Crossing& c : d.crossings()) {
      if (c.kind != CrossingKind::Singular) continue;
      ++singular.checks;
      if (!check_singular_identity(d, c.id)) ++singular.failures;
    }
  }
  return {oracle, stability, bands, singular};
}

}  // namespace vsl
