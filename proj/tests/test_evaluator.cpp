#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vsl/braid.hpp"
#include "vsl/error.hpp"
#include "vsl/evaluator.hpp"
#include "vsl/examples.hpp"
#include "vsl/parity.hpp"
#include "vsl/random_diagram.hpp"
#include "vsl/skein.hpp"

using namespace vsl;
using vsl::testing::loop_poly;
using vsl::testing::poly;

namespace {

const LaurentPoly kExampleBracket =
    poly({{12, 1}, {6, -1}, {4, -1}, {2, -2}, {-2, -1}});
const HLaurent kExampleR{poly({{6, -1}, {2, -2}, {-2, -1}}), poly({{12, 1}, {4, -1}})};

// Derived with the recursion oracle and checked against the h = 1 identity:
// the (2,3) torus knot with three positive crossings.
const LaurentPoly kTrefoilBracket =
    poly({{-2, -1}, {-6, -1}, {-10, -1}, {-18, 1}});
// Two positively linked circles.
const LaurentPoly kHopfBracket = poly({{0, 1}, {-4, 1}, {-8, 1}, {-12, 1}});

}  // namespace

TEST_CASE("per-state contributions of the reference example") {
  // (a, b, alpha, beta, ||S||, i) rows
  const StateStats s1{1, 0, 1, 0, 1, 1};
  const StateStats s2{0, 1, 1, 0, 1, -1};
  const StateStats s3{1, 0, 0, 1, 1, -1};
  const StateStats s4{0, 1, 0, 1, 2, -1};
  CHECK(state_contribution(s1) ==
        HLaurent::graded(loop_poly().pow(2).shifted(2), 0));
  CHECK(state_contribution(s2) ==
        HLaurent::graded(loop_poly().pow(2).shifted(4), 1));
  CHECK(state_contribution(s3) ==
        HLaurent::graded((loop_poly() * poly({{4, -1}, {-4, -1}})).shifted(2), 1));
  CHECK(state_contribution(s4) ==
        HLaurent::graded((loop_poly().pow(2) * poly({{4, -1}, {-4, -1}})).shifted(4), 1));

  const StateStats unknot_state{0, 0, 0, 0, 1, 1};
  CHECK(state_contribution(unknot_state) == HLaurent::graded(loop_poly(), 0));
}

TEST_CASE("r of simple diagrams") {
  CHECK(r_poly(Diagram::unknots(1)) == HLaurent::graded(loop_poly(), 0));
  CHECK(r_poly(example_diagram("example1")) == kExampleR);
}

TEST_CASE("bracket values") {
  CHECK(bracket(Diagram::unknots(1)) == loop_poly());
  CHECK(bracket(example_diagram("example1")) == kExampleBracket);
  CHECK(bracket(example_diagram("trefoil")) == kTrefoilBracket);
  CHECK(bracket_skein(example_diagram("trefoil")) == kTrefoilBracket);
  CHECK(bracket(example_diagram("hopf")) == kHopfBracket);
}

TEST_CASE("singular clasp equals linked plus unlinked circles") {
  // by the singular skein identity, its bracket is the sum of the positive
  // clasp (hopf) and the cancelled clasp (two circles)
  CHECK(bracket(example_diagram("singular-hopf")) ==
        kHopfBracket + loop_poly().pow(2));
}

TEST_CASE("split of the reference example") {
  const auto [phi, psi] = split(example_diagram("example1"));
  CHECK(phi == poly({{12, 1}, {4, -1}}));
  CHECK(psi == poly({{6, -1}, {2, -2}, {-2, -1}}));

  const auto [phi_u, psi_u] = split(Diagram::unknots(1));
  CHECK(phi_u.is_zero());
  CHECK(psi_u == loop_poly());
}

TEST_CASE("adding a far-away circle multiplies by the loop value") {
  const Diagram unknot = Diagram::unknots(1);
  for (const char* name : {"example1", "trefoil", "singular-hopf"}) {
    const Diagram d = example_diagram(name);
    CHECK(r_poly(d.disjoint_union(unknot)) ==
          r_poly(d) * HLaurent::graded(loop_poly(), 0));
    CHECK(bracket(d.disjoint_union(unknot)) == bracket(d) * loop_poly());
  }
}

TEST_CASE("disjoint union mixes the split parts bilinearly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomDiagramOptions opt;
    opt.max_real = 4;
    opt.max_virtual = 3;
    const Diagram d1 = random_diagram(seed, opt);
    const Diagram d2 = random_diagram(seed + 500, opt);
    const auto [phi1, psi1] = split(d1);
    const auto [phi2, psi2] = split(d2);
    const auto [phi, psi] = split(d1.disjoint_union(d2));
    CHECK(phi == phi1 * psi2 + psi1 * phi2);
    CHECK(psi == phi1 * phi2 + psi1 * psi2);
  }
}

TEST_CASE("the skein recursion agrees with the state sum") {
  CHECK(bracket_skein(Diagram::unknots(1)) == loop_poly());
  CHECK(bracket_skein(example_diagram("unknot-kink-pos")) == loop_poly());
  CHECK(bracket_skein(example_diagram("example1")) == kExampleBracket);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Diagram d = random_diagram(seed);
    CHECK(bracket(d) == bracket_skein(d));
  }
}

TEST_CASE("substituting h = 1 into r gives the bracket") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Diagram d = random_diagram(seed);
    CHECK(r_poly(d).eval_h1() == bracket(d));
  }
}

TEST_CASE("singular identity") {
  CHECK(check_singular_identity(example_diagram("example1"), 1));
  CHECK(check_singular_identity(example_diagram("singular-hopf"), 1));
  CHECK_THROWS_AS(check_singular_identity(example_diagram("example1"), 99),
                  Error);
  // a virtual crossing is not singular
  CHECK_THROWS_AS(check_singular_identity(example_diagram("example1"), 2), Error);
}

TEST_CASE("maximum A power of a contribution") {
  CHECK(max_A(StateStats{1, 0, 1, 0, 1, 1}) == 6);
  CHECK(max_A(StateStats{0, 0, 0, 0, 1, 1}) == 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Diagram d = random_diagram(seed);
    const MagneticGraph g = resolve(d, State{0});
    const StateStats s = stats(d, State{0}, g, 1);
    const HLaurent contrib = state_contribution(s);
    const LaurentPoly flat = contrib.eval_h1();
    CHECK(!flat.is_zero());
    CHECK(flat.terms().rbegin()->first == max_A(s));
  }
}

TEST_CASE("all-oriented state of a connected diagram lands in the 2k band") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 30 && seed < 500; ++seed) {
    RandomDiagramOptions opt;
    opt.max_extra_loops = 0;
    opt.min_real = 1;
    const Diagram d = random_diagram(seed, opt);
    if (d.free_loops() != 0 || d.crossings().empty()) continue;
    // connectivity of the 4-valent graph
    std::vector<int> comp(d.crossings().size(), -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
      const int ci = stack.back();
      stack.pop_back();
      for (int slot = 0; slot < 4; ++slot) {
        const Arc& a = d.arcs()[d.crossings()[ci].arc[slot]];
        for (int other : {a.tail_crossing, a.head_crossing})
          if (comp[other] < 0) {
            comp[other] = 0;
            stack.push_back(other);
          }
      }
    }
    bool connected = true;
    for (int c : comp) connected = connected && c == 0;
    if (!connected) continue;
    ++checked;
    const MagneticGraph g = resolve(d, State{0});
    const StateStats s = stats(d, State{0}, g, 1);
    const int band = ((2 * d.link_components()) % 4 + 4) % 4;
    CHECK(((max_A(s) % 4) + 4) % 4 == band);
  }
  CHECK(checked == 30);
}

TEST_CASE("empty diagram evaluates to one") {
  const InvariantResult r = evaluate(Diagram::empty());
  CHECK(r.bracket == LaurentPoly::one());
  CHECK(r.k == 0);
  CHECK(r.state_count == 1);
}

TEST_CASE("state budget is enforced") {
  CHECK_THROWS_AS(evaluate(example_diagram("trefoil"), 0, 4), Error);
  CHECK(evaluate(example_diagram("trefoil"), 0, 8).state_count == 8);
}

TEST_CASE("bracket exponents are even and h-grading is pure per state") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Diagram d = random_diagram(seed);
    const InvariantResult r = evaluate(d);
    CHECK(r.bracket.all_exponents_even());
    CHECK(r.phi.all_exponents_even());
    CHECK(r.psi.all_exponents_even());
    CHECK(r.r == HLaurent{r.psi, r.phi});
    CHECK(r.r.eval_h1() == r.bracket);
  }
}

TEST_CASE("mirroring a diagram inverts the exponents") {
  auto invert = [](const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
    return out;
  };
  auto mirror = [](const Diagram& d) {
    Diagram out = d;
    for (const Crossing& c : d.crossings()) {
      if (c.kind == CrossingKind::PositiveClassical)
        out = out.with_kind(c.id, CrossingKind::NegativeClassical);
      else if (c.kind == CrossingKind::NegativeClassical)
        out = out.with_kind(c.id, CrossingKind::PositiveClassical);
    }
    return out;
  };
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Diagram d = random_diagram(seed);
    const InvariantResult r = evaluate(d);
    const InvariantResult m = evaluate(mirror(d));
    CHECK(m.bracket == invert(r.bracket));
    CHECK(m.phi == invert(r.phi));
    CHECK(m.psi == invert(r.psi));
  }
}

TEST_CASE("flip dichotomy on random states") {
  std::mt19937_64 rng(3);
  int done = 0;
  for (std::uint64_t seed = 0; done < 120 && seed < 2000; ++seed) {
    const Diagram d = random_diagram(seed);
    const std::size_t n = d.resolvable().size();
    if (n == 0) continue;
    ++done;
    Resolver resolver(d);
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    const int pos = static_cast<int>(rng() % n);

    const MagneticGraph& g1 = resolver.resolve(State{mask});
    const int p1 = parity(g1, canonical_weight_map(g1));
    const StateStats s1 = stats(d, State{mask}, g1, p1);

    const std::uint64_t flipped = mask ^ (std::uint64_t{1} << pos);
    const MagneticGraph& g2 = resolver.resolve(State{flipped});
    const int p2 = parity(g2, canonical_weight_map(g2));
    const StateStats s2 = stats(d, State{flipped}, g2, p2);

    if (s1.n_components != s2.n_components) {
      CHECK(std::abs(s1.n_components - s2.n_components) == 1);
      CHECK(p1 == p2);
      CHECK((max_A(s1) - max_A(s2)) % 4 == 0);
    } else {
      CHECK(p1 == -p2);
      CHECK(((max_A(s1) - max_A(s2)) % 4 + 4) % 4 == 2);
    }
  }
  CHECK(done == 120);
}
