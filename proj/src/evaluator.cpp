#include "vsl/evaluator.hpp"

#include <cassert>
#include <thread>
#include <vector>

#include "vsl/error.hpp"
#include "vsl/parity.hpp"

namespace vsl {

const LaurentPoly& loop_value() {
  static const LaurentPoly v = LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
  return v;
}

const LaurentPoly& singular_disoriented_value() {
  static const LaurentPoly v = LaurentPoly::term(-1, 4) + LaurentPoly::term(-1, -4);
  return v;
}

HLaurent state_contribution(const StateStats& st) {
  LaurentPoly p = loop_value().pow(st.alpha + st.n_components) *
                  singular_disoriented_value().pow(st.beta);
  p = p.shifted(2 * st.a + 4 * st.b);
  return HLaurent::graded(std::move(p), st.parity == 1 ? 0 : 1);
}

std::int64_t max_A(const StateStats& st) {
  return 2 * st.a + 4 * st.b + 2 * (st.alpha + st.n_components) + 4 * st.beta;
}

namespace {

// loop^l * sing^b for every l, b that can occur; filled once per evaluation
// so the per-state work is one shifted addition.
struct ContributionTable {
  std::vector<std::vector<LaurentPoly>> grid;  // grid[b][l]

  ContributionTable(int max_l, int max_b) {
    grid.resize(max_b + 1);
    LaurentPoly sing_pow = LaurentPoly::one();
    for (int b = 0; b <= max_b; ++b) {
      grid[b].resize(max_l + 1);
      grid[b][0] = sing_pow;
      for (int l = 1; l <= max_l; ++l) grid[b][l] = grid[b][l - 1] * loop_value();
      if (b < max_b) sing_pow *= singular_disoriented_value();
    }
  }
};

struct Accum {
  LaurentPoly even, odd;
};

void sum_range(const Diagram& d, const ContributionTable& table, std::uint64_t lo,
               std::uint64_t hi, Accum& acc) {
  Resolver resolver(d);
  for (std::uint64_t m = lo; m < hi; ++m) {
    const State st{m};
    const MagneticGraph& g = resolver.resolve(st);
    const WeightMap w = canonical_weight_map(g);
    const int i = parity(g, w);
    const StateStats s = stats(d, st, g, i);
    const LaurentPoly& base = table.grid[s.beta][s.alpha + s.n_components];
    LaurentPoly& part = i == 1 ? acc.even : acc.odd;
    part.add_shifted(base, 2 * s.a + 4 * s.b);
  }
}

}  // namespace

HLaurent r_poly(const Diagram& d, unsigned threads) {
  const Counts counts = d.counts();
  StateSpace space(d);
  const std::uint64_t total = space.size();

  // ||S|| never exceeds the number of port cycles plus free loops; every
  // cycle uses at least two of the 4*(#crossings) ports.
  const int max_components = 2 * static_cast<int>(d.crossings().size()) + d.free_loops();
  const ContributionTable table(counts.singular + max_components, counts.singular);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t min_chunk = 1u << 10;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / min_chunk)));

  std::vector<Accum> parts(workers);
  if (workers <= 1) {
    sum_range(d, table, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t lo = total * t / workers;
      const std::uint64_t hi = total * (t + 1) / workers;
      pool.emplace_back(
          [&, lo, hi, t] { sum_range(d, table, lo, hi, parts[t]); });
    }
    for (std::thread& th : pool) th.join();
  }

  Accum sum;
  for (Accum& p : parts) {
    sum.even += p.even;
    sum.odd += p.odd;
  }
  HLaurent result{std::move(sum.even), std::move(sum.odd)};
  if (counts.classical % 2 != 0) result = -result;
  return result;
}

LaurentPoly bracket(const Diagram& d, unsigned threads) {
  return r_poly(d, threads).eval_h1();
}

std::pair<LaurentPoly, LaurentPoly> split(const Diagram& d, unsigned threads) {
  HLaurent r = r_poly(d, threads);
  return {r.odd_part(), r.even_part()};
}

bool check_singular_identity(const Diagram& d, int singular_crossing_id) {
  auto idx = d.crossing_index_by_id(singular_crossing_id);
  if (!idx)
    throw Error(ErrorCode::UnknownCrossing,
                "no crossing with id " + std::to_string(singular_crossing_id));
  if (d.crossings()[*idx].kind != CrossingKind::Singular)
    throw Error(ErrorCode::NotSingular,
                "crossing " + std::to_string(singular_crossing_id) + " is not singular");
  const HLaurent whole = r_poly(d);
  const HLaurent pos = r_poly(d.with_kind(singular_crossing_id, CrossingKind::PositiveClassical));
  const HLaurent neg = r_poly(d.with_kind(singular_crossing_id, CrossingKind::NegativeClassical));
  return whole == pos + neg && whole.eval_h1() == pos.eval_h1() + neg.eval_h1();
}

InvariantResult evaluate(const Diagram& d, unsigned threads, std::uint64_t max_states) {
  InvariantResult out;
  out.counts = d.counts();
  const std::size_t n = d.resolvable().size();
  if (n >= 64 || (std::uint64_t{1} << n) > max_states)
    throw Error(ErrorCode::StateBudgetExceeded,
                "diagram has 2^" + std::to_string(n) + " states, over the budget of " +
                    std::to_string(max_states));
  out.state_count = std::uint64_t{1} << n;
  out.k = d.link_components();
  out.r = r_poly(d, threads);
  out.bracket = out.r.eval_h1();
  out.phi = out.r.odd_part();
  out.psi = out.r.even_part();
  assert(out.bracket.all_exponents_even());
  return out;
}

}  // namespace vsl
