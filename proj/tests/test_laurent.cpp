#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vsl/laurent.hpp"

using namespace vsl;
using vsl::testing::loop_power_oracle;
using vsl::testing::poly;
using vsl::testing::random_hlaurent;
using vsl::testing::random_poly;

TEST_CASE("addition cancels and doubles") {
  CHECK((poly({{2, 1}}) + poly({{2, -1}})).is_zero());
  CHECK(poly({{2, -1}, {-2, -1}}) + poly({{2, -1}, {-2, -1}}) ==
        poly({{2, -2}, {-2, -2}}));
}

TEST_CASE("h-graded addition keeps parts separate") {
  const HLaurent lhs{{}, poly({{12, 1}, {4, -1}})};
  const HLaurent rhs{poly({{6, -1}, {2, -2}, {-2, -1}}), {}};
  const HLaurent sum = lhs + rhs;
  CHECK(sum.odd_part() == poly({{12, 1}, {4, -1}}));
  CHECK(sum.even_part() == poly({{6, -1}, {2, -2}, {-2, -1}}));
  CHECK(sum.str() == "A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
}

TEST_CASE("multiplication expands the loop square") {
  const LaurentPoly loop = poly({{2, -1}, {-2, -1}});
  CHECK(loop * loop == poly({{4, 1}, {0, 2}, {-4, 1}}));
}

TEST_CASE("h squared is one") {
  const HLaurent xh = HLaurent::graded(poly({{2, 1}}), 1);
  const HLaurent yh = HLaurent::graded(poly({{-2, 1}}), 1);
  const HLaurent prod = xh * yh;
  CHECK(prod == HLaurent::one());
  CHECK(prod.odd_part().is_zero());
}

TEST_CASE("weighted contribution of the doubly disoriented state") {
  // A^4 (-A^2-A^-2)^2 (-A^4-A^-4) h, expanded.
  const HLaurent prod = HLaurent::graded(poly({{4, 1}}), 0) *
                        HLaurent::graded(poly({{2, -1}, {-2, -1}}), 0).pow(2) *
                        HLaurent::graded(poly({{4, -1}, {-4, -1}}), 0) *
                        HLaurent::graded(LaurentPoly::one(), 1);
  CHECK(prod.even_part().is_zero());
  CHECK(prod.odd_part() ==
        poly({{12, -1}, {8, -2}, {4, -2}, {0, -2}, {-4, -1}}));
}

TEST_CASE("powers match the binomial oracle") {
  const LaurentPoly loop = poly({{2, -1}, {-2, -1}});
  CHECK(loop.pow(0) == LaurentPoly::one());
  CHECK(loop.pow(2) == poly({{4, 1}, {0, 2}, {-4, 1}}));
  CHECK(loop.pow(4) == poly({{8, 1}, {4, 4}, {0, 6}, {-4, 4}, {-8, 1}}));
  for (int n = 0; n <= 7; ++n) CHECK(loop.pow(n) == loop_power_oracle(n));
}

TEST_CASE("substituting h = 1 folds the parts together") {
  const HLaurent r{poly({{6, -1}, {2, -2}, {-2, -1}}), poly({{12, 1}, {4, -1}})};
  CHECK(r.eval_h1() == poly({{12, 1}, {6, -1}, {4, -1}, {2, -2}, {-2, -1}}));
  CHECK(HLaurent{}.eval_h1().is_zero());
  CHECK(HLaurent::graded(poly({{4, 1}}), 1).eval_h1() == poly({{4, 1}}));
}

TEST_CASE("exponent residues mod 4") {
  CHECK(poly({{12, 1}, {4, -1}}).exponent_residues() == std::set<int>{0});
  CHECK(poly({{6, -1}, {2, -2}, {-2, -1}}).exponent_residues() == std::set<int>{2});
  CHECK(LaurentPoly{}.exponent_residues().empty());
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const HLaurent p = random_hlaurent(rng);
    const HLaurent q = random_hlaurent(rng);
    const HLaurent r = random_hlaurent(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    // h^2 = 1
    CHECK(p.times_h() * q.times_h() == p * q);
    // evaluation at h = 1 is a ring map
    CHECK((p * q).eval_h1() == p.eval_h1() * q.eval_h1());
    CHECK((p + q).eval_h1() == p.eval_h1() + q.eval_h1());
  }
}

TEST_CASE("no zero coefficients survive any operation") {
  std::mt19937_64 rng(7);
  auto canonical = [](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
      if (c == 0) return false;
    return true;
  };
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    CHECK(canonical(p + q));
    CHECK(canonical(p - q));
    CHECK(canonical(p * q));
    CHECK(canonical(p - p));
    CHECK(canonical(-p));
    CHECK(canonical(p.shifted(3)));
  }
}

TEST_CASE("serialization records are sorted and decimal") {
  const HLaurent r{poly({{6, -1}, {-2, -1}}), poly({{12, 1}, {4, -1}})};
  const std::vector<TermRecord> rec = r.records();
  REQUIRE(rec.size() == 4);
  CHECK(rec[0] == TermRecord{-2, 0, "-1"});
  CHECK(rec[1] == TermRecord{6, 0, "-1"});
  CHECK(rec[2] == TermRecord{4, 1, "-1"});
  CHECK(rec[3] == TermRecord{12, 1, "1"});
}

TEST_CASE("text form") {
  CHECK(LaurentPoly{}.str() == "0");
  CHECK(poly({{2, -1}, {-2, -1}}).str() == "-A^2 - A^-2");
  CHECK(poly({{0, 3}, {1, 1}}).str() == "A + 3");
  CHECK(HLaurent{poly({{0, 1}}), poly({{2, 2}})}.str() == "2 A^2 h + 1");
}
