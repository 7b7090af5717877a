#include "vsl/skein.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

#include "vsl/error.hpp"

namespace vsl {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct SkeinEval {
  const Diagram& d;
  std::vector<int> resolvable;      // crossing indices still carrying a crossing
  std::vector<std::uint8_t> choice; // 0 oriented, 1 disoriented
  std::vector<LaurentPoly> loop_pows;
  LaurentPoly result;

  explicit SkeinEval(const Diagram& diagram) : d(diagram) {
    for (std::size_t ci = 0; ci < d.crossings().size(); ++ci)
      if (is_resolvable(d.crossings()[ci].kind)) resolvable.push_back(static_cast<int>(ci));
    choice.resize(resolvable.size());
    loop_pows.push_back(LaurentPoly::one());
  }

  const LaurentPoly& loop_pow(int n) {
    static const LaurentPoly loop =
        LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
    while (static_cast<int>(loop_pows.size()) <= n) loop_pows.push_back(loop_pows.back() * loop);
    return loop_pows[n];
  }

  void leaf(const LaurentPoly& coeff) {
    const auto& crossings = d.crossings();
    UnionFind uf(4 * static_cast<int>(crossings.size()));
    std::size_t pos = 0;
    for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
      const int base = 4 * static_cast<int>(ci);
      if (crossings[ci].kind == CrossingKind::Virtual) {
        uf.unite(base + S1In, base + S1Out);
        uf.unite(base + S2In, base + S2Out);
      } else if (choice[pos++] == 0) {
        uf.unite(base + S1In, base + S2Out);
        uf.unite(base + S2In, base + S1Out);
      } else {
        uf.unite(base + S1In, base + S2In);
        uf.unite(base + S1Out, base + S2Out);
      }
    }
    for (const Arc& a : d.arcs())
      uf.unite(4 * a.tail_crossing + a.tail_slot, 4 * a.head_crossing + a.head_slot);

    int classes = 0;
    for (int p = 0; p < static_cast<int>(uf.parent.size()); ++p)
      if (uf.find(p) == p) ++classes;
    result += coeff * loop_pow(classes + d.free_loops());
  }

  void expand(std::size_t idx, const LaurentPoly& coeff) {
    if (idx == resolvable.size()) {
      leaf(coeff);
      return;
    }
    LaurentPoly w_or, w_dis;
    switch (d.crossings()[resolvable[idx]].kind) {
      case CrossingKind::PositiveClassical:
        w_or = LaurentPoly::term(-1, -2);
        w_dis = LaurentPoly::term(-1, -4);
        break;
      case CrossingKind::NegativeClassical:
        w_or = LaurentPoly::term(-1, 2);
        w_dis = LaurentPoly::term(-1, 4);
        break;
      case CrossingKind::Singular:
        w_or = LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
        w_dis = LaurentPoly::term(-1, 4) + LaurentPoly::term(-1, -4);
        break;
      case CrossingKind::Virtual:
        break;
    }
    choice[idx] = 0;
    expand(idx + 1, coeff * w_or);
    choice[idx] = 1;
    expand(idx + 1, coeff * w_dis);
  }
};

}  // namespace

LaurentPoly bracket_skein(const Diagram& d) {
  SkeinEval eval(d);
  if (eval.resolvable.size() > 24)
    throw Error(ErrorCode::StateBudgetExceeded,
                "skein recursion limited to 24 crossings, diagram has " +
                    std::to_string(eval.resolvable.size()));
  eval.expand(0, LaurentPoly::one());
  return eval.result;
}

}  // namespace vsl
