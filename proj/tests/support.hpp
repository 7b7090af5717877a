// Shared helpers for the test suites: small polynomial builders, seeded
// generators, and independent oracles kept free of the code paths they
// check.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "vsl/diagram.hpp"
#include "vsl/laurent.hpp"

namespace vsl::testing {

// p = sum of c_i A^(e_i).
inline LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

inline LaurentPoly loop_poly() { return poly({{2, -1}, {-2, -1}}); }

inline LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 6);
  std::uniform_int_distribution<std::int64_t> exp(-6, 6);
  std::uniform_int_distribution<int> coef(-9, 9);
  LaurentPoly p;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) p.add_term(exp(rng), coef(rng));
  return p;
}

inline HLaurent random_hlaurent(std::mt19937_64& rng) {
  LaurentPoly even = random_poly(rng);
  LaurentPoly odd = random_poly(rng);
  return HLaurent{std::move(even), std::move(odd)};
}

// Independent expansion of (-A^2 - A^-2)^n via Pascal's triangle:
// (-1)^n sum_j C(n,j) A^(2n-4j).
inline LaurentPoly loop_power_oracle(int n) {
  std::vector<std::vector<std::int64_t>> pascal(n + 1);
  for (int i = 0; i <= n; ++i) {
    pascal[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  LaurentPoly out;
  const int sign = n % 2 == 0 ? 1 : -1;
  for (int j = 0; j <= n; ++j) out.add_term(2 * n - 4 * j, sign * pascal[n][j]);
  return out;
}

// Independent trace-through component count: follows tokens through
// crossings straight ahead without touching Diagram internals beyond the
// public crossing list.
inline int trace_components_oracle(const std::vector<CrossingSpec>& specs, int free_loops) {
  // token -> (crossing position, in slot)
  std::map<std::string, std::pair<int, int>> head;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    head[specs[i].arcs[S1In]] = {static_cast<int>(i), S1In};
    head[specs[i].arcs[S2In]] = {static_cast<int>(i), S2In};
  }
  std::set<std::string> visited;
  int components = free_loops;
  for (const CrossingSpec& s : specs) {
    for (int slot : {S1Out, S2Out}) {
      std::string tok = s.arcs[slot];
      if (visited.count(tok)) continue;
      ++components;
      while (!visited.count(tok)) {
        visited.insert(tok);
        auto [ci, in_slot] = head.at(tok);
        tok = specs[ci].arcs[in_slot == S1In ? S1Out : S2Out];
      }
    }
  }
  return components;
}

inline std::vector<CrossingSpec> specs_of(const Diagram& d) {
  std::vector<CrossingSpec> out;
  for (const Crossing& c : d.crossings()) {
    CrossingSpec s;
    s.id = c.id;
    s.kind = c.kind;
    for (int slot = 0; slot < 4; ++slot) s.arcs[slot] = d.arcs()[c.arc[slot]].token;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace vsl::testing
