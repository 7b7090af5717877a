#include "vsl/random_diagram.hpp"

#include <algorithm>
#include <random>

#include "vsl/braid.hpp"

namespace vsl {

Diagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opt) {
  std::mt19937_64 rng(seed);
  // modulo draw keeps seeded runs identical across standard libraries
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const int strands = pick(opt.min_strands, opt.max_strands);
  const int extra_loops = pick(0, opt.max_extra_loops);
  if (strands < 2) return Diagram::unknots(1 + extra_loops);

  const int n_real = pick(opt.min_real, opt.max_real);
  const int n_virtual = pick(0, opt.max_virtual);
  std::vector<BraidLetter> word;
  word.reserve(n_real + n_virtual);
  for (int i = 0; i < n_real; ++i) {
    const int choice = pick(0, opt.allow_singular ? 2 : 1);
    const CrossingKind kind = choice == 0   ? CrossingKind::PositiveClassical
                              : choice == 1 ? CrossingKind::NegativeClassical
                                            : CrossingKind::Singular;
    word.push_back({pick(0, strands - 2), kind});
  }
  for (int i = 0; i < n_virtual; ++i) word.push_back({pick(0, strands - 2), CrossingKind::Virtual});
  std::shuffle(word.begin(), word.end(), rng);
  return braid_closure(strands, word, extra_loops);
}

}  // namespace vsl
