#include "vsl/braid.hpp"

#include <map>
#include <string>

#include "vsl/error.hpp"

namespace vsl {

Diagram braid_closure(int strands, const std::vector<BraidLetter>& word, int extra_loops) {
  if (strands < 1) throw Error(ErrorCode::SyntaxError, "braid needs at least one strand");
  for (const BraidLetter& l : word)
    if (l.pos < 0 || l.pos + 1 >= strands)
      throw Error(ErrorCode::SyntaxError, "braid letter position out of range");

  // cur[j]: token of the open arc whose tail is fixed and which currently
  // sits at strand position j. Bottom tokens start open on both ends; the
  // closure identifies the top arc at position j with the bottom token b<j>.
  std::vector<std::string> cur(strands);
  for (int j = 0; j < strands; ++j) cur[j] = "b" + std::to_string(j);
  const std::vector<std::string> bottom = cur;

  std::vector<CrossingSpec> specs;
  specs.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    const BraidLetter& l = word[k];
    CrossingSpec s;
    s.id = static_cast<int>(k);
    s.kind = l.kind;
    const std::string out1 = "w" + std::to_string(k) + "a";
    const std::string out2 = "w" + std::to_string(k) + "b";
    s.arcs[S1In] = cur[l.pos];
    s.arcs[S2In] = cur[l.pos + 1];
    s.arcs[S1Out] = out1;
    s.arcs[S2Out] = out2;
    specs.push_back(std::move(s));
    // The strands swap positions across the letter.
    cur[l.pos + 1] = out1;
    cur[l.pos] = out2;
  }

  // Close up: the open top arc at position j is the same arc as bottom token
  // b<j>. Rename b<j> to the top token wherever it was consumed; a strand no
  // letter touched becomes a free loop.
  int free_loops = extra_loops;
  std::map<std::string, std::string> rename;
  for (int j = 0; j < strands; ++j) {
    if (cur[j] == bottom[j]) {
      ++free_loops;
    } else {
      rename[bottom[j]] = cur[j];
    }
  }
  for (CrossingSpec& s : specs)
    for (int slot = 0; slot < 4; ++slot) {
      auto it = rename.find(s.arcs[slot]);
      if (it != rename.end()) s.arcs[slot] = it->second;
    }
  return Diagram::from_crossings(std::move(specs), free_loops);
}

}  // namespace vsl
