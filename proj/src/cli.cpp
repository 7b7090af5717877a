#include "vsl/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsl/battery.hpp"
#include "vsl/error.hpp"
#include "vsl/examples.hpp"
#include "vsl/parity.hpp"
#include "vsl/states.hpp"

namespace vsl::cli {

namespace {

using nlohmann::json;

json records_json(const std::vector<TermRecord>& records) {
  json out = json::array();
  for (const TermRecord& t : records) out.push_back({t.a_exp, t.h_exp, t.coef});
  return out;
}

void require_budget(const Diagram& d, std::uint64_t max_states) {
  const std::size_t n = d.resolvable().size();
  if (n >= 64 || (std::uint64_t{1} << n) > max_states)
    throw Error(ErrorCode::StateBudgetExceeded,
                "diagram has 2^" + std::to_string(n) + " states, over the budget of " +
                    std::to_string(max_states) + " (raise with --max-states)");
}

struct StateRow {
  std::string mask;
  StateStats stats;
  HLaurent contribution;
};

std::vector<StateRow> state_rows(const Diagram& d) {
  std::vector<StateRow> rows;
  Resolver resolver(d);
  StateSpace space(d);
  const std::size_t n = d.resolvable().size();
  for (std::uint64_t m = 0; m < space.size(); ++m) {
    const State st = space[m];
    const MagneticGraph& g = resolver.resolve(st);
    const int i = parity(g, canonical_weight_map(g));
    StateRow row;
    row.stats = stats(d, st, g, i);
    row.contribution = state_contribution(row.stats);
    for (std::size_t j = 0; j < n; ++j) row.mask += (m >> j) & 1u ? '1' : '0';
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string eval_text(const InvariantResult& r) {
  std::ostringstream os;
  os << "k = " << r.k << "\n";
  os << "c = " << r.counts.classical << "  s = " << r.counts.singular
     << "  v = " << r.counts.virt << "  w = " << r.counts.writhe << "\n";
  os << "states = " << r.state_count << "\n";
  os << "bracket = " << r.bracket.str() << "\n";
  os << "R = " << r.r.str() << "\n";
  os << "phi = " << r.phi.str() << "\n";
  os << "psi = " << r.psi.str() << "\n";
  return os.str();
}

std::string eval_json(const InvariantResult& r) {
  json out;
  out["k"] = r.k;
  out["c"] = r.counts.classical;
  out["s"] = r.counts.singular;
  out["v"] = r.counts.virt;
  out["writhe"] = r.counts.writhe;
  out["states"] = r.state_count;
  out["bracket"] = records_json(r.bracket.records());
  out["r"] = records_json(r.r.records());
  out["phi"] = records_json(r.phi.records());
  out["psi"] = records_json(r.psi.records());
  return out.dump();
}

std::string states_table(const Diagram& d) {
  std::ostringstream os;
  os << "# state a b alpha beta comps parity contribution\n";
  for (const StateRow& row : state_rows(d)) {
    const StateStats& s = row.stats;
    os << (row.mask.empty() ? "-" : row.mask) << ' ' << s.a << ' ' << s.b << ' ' << s.alpha
       << ' ' << s.beta << ' ' << s.n_components << ' ' << (s.parity > 0 ? "+1" : "-1") << ' '
       << row.contribution.str() << "\n";
  }
  return os.str();
}

std::string states_json(const Diagram& d) {
  json rows = json::array();
  for (const StateRow& row : state_rows(d)) {
    const StateStats& s = row.stats;
    rows.push_back({{"state", row.mask},
                    {"a", s.a},
                    {"b", s.b},
                    {"alpha", s.alpha},
                    {"beta", s.beta},
                    {"comps", s.n_components},
                    {"parity", s.parity},
                    {"contribution", records_json(row.contribution.records())}});
  }
  return json{{"rows", rows}}.dump();
}

namespace {

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants of oriented virtual singular link diagrams"};
  app.require_subcommand(1);

  std::string path;
  std::string output = "text";
  std::string scope = "all";
  std::string name;
  std::uint64_t max_states = kDefaultStateBudget;
  std::uint64_t seed = 1;

  CLI::App* eval_cmd = app.add_subcommand("eval", "compute bracket, R, phi, psi for a diagram");
  eval_cmd->add_option("file", path, "diagram file")->required();
  eval_cmd->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("--max-states", max_states, "state budget");

  CLI::App* states_cmd = app.add_subcommand("states", "dump the per-state table");
  states_cmd->add_option("file", path, "diagram file")->required();
  states_cmd->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  states_cmd->add_option("--max-states", max_states, "state budget");

  CLI::App* check_cmd = app.add_subcommand("check", "run the move-invariance battery");
  check_cmd->add_option("scope", scope, "all or a move name");
  check_cmd->add_option("--seed", seed, "seed for the randomized property runs");

  CLI::App* examples_cmd = app.add_subcommand("examples", "list or emit built-in diagrams");
  examples_cmd->add_option("name", name, "example to print");

  CLI::App* validate_cmd = app.add_subcommand("validate", "parse and validate a diagram file");
  validate_cmd->add_option("file", path, "diagram file")->required();

  try {
    // CLI11 consumes the argument list back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int code = app.exit(e, out, sink);
    if (code == 0) return 0;
    err << sink.str();
    return 2;
  }

  if (eval_cmd->parsed()) {
    const Diagram d = parse_diagram_file(path);
    const InvariantResult r = evaluate(d, 0, max_states);
    out << (output == "json" ? eval_json(r) + "\n" : eval_text(r));
    return 0;
  }

  if (states_cmd->parsed()) {
    const Diagram d = parse_diagram_file(path);
    require_budget(d, max_states);
    out << (output == "json" ? states_json(d) + "\n" : states_table(d));
    return 0;
  }

  if (check_cmd->parsed()) {
    int failures = 0;
    auto report = [&](const std::vector<BatteryRow>& rows) {
      for (const BatteryRow& row : rows) {
        failures += row.failures;
        if (row.failures == 0)
          out << "PASS " << row.name << " (" << row.checks << " checks)\n";
        else
          out << "FAIL " << row.name << " (" << row.failures << "/" << row.checks
              << " checks failed)\n";
      }
    };
    report(run_invariance_battery(scope));
    if (scope == "all") report(run_randomized_checks(seed, 25));
    return failures == 0 ? 0 : 1;
  }

  if (examples_cmd->parsed()) {
    if (name.empty()) {
      for (const std::string& n : example_names()) out << n << "\n";
    } else {
      out << example_text(name);
    }
    return 0;
  }

  if (validate_cmd->parsed()) {
    const Diagram d = parse_diagram_file(path);
    const Counts c = d.counts();
    out << "ok: " << c.classical << " classical, " << c.singular << " singular, " << c.virt
        << " virtual, " << d.free_loops() << " free loops, " << d.link_components()
        << " components\n";
    return 0;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vsl::cli
