#include "vsl/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "vsl/error.hpp"

namespace vsl {

char kind_letter(CrossingKind k) {
  switch (k) {
    case CrossingKind::PositiveClassical:
      return 'P';
    case CrossingKind::NegativeClassical:
      return 'N';
    case CrossingKind::Singular:
      return 'S';
    case CrossingKind::Virtual:
      return 'V';
  }
  return '?';
}

bool is_classical(CrossingKind k) {
  return k == CrossingKind::PositiveClassical || k == CrossingKind::NegativeClassical;
}

bool is_resolvable(CrossingKind k) { return k != CrossingKind::Virtual; }

Diagram Diagram::from_crossings(std::vector<CrossingSpec> specs, int free_loops) {
  if (free_loops < 0)
    throw Error(ErrorCode::SyntaxError, "negative free loop count");

  std::sort(specs.begin(), specs.end(),
            [](const CrossingSpec& a, const CrossingSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < specs.size(); ++i)
    if (specs[i].id == specs[i - 1].id)
      throw Error(ErrorCode::SyntaxError,
                  "duplicate crossing id " + std::to_string(specs[i].id));

  // Each token must occur exactly once in an out slot and once in an in slot.
  struct Ends {
    int tail_crossing = -1, tail_slot = -1;
    int head_crossing = -1, head_slot = -1;
  };
  std::map<std::string, Ends> ends;
  for (std::size_t ci = 0; ci < specs.size(); ++ci) {
    for (int slot = 0; slot < 4; ++slot) {
      const std::string& tok = specs[ci].arcs[slot];
      Ends& e = ends[tok];
      if (is_in_slot(slot)) {
        if (e.head_crossing >= 0)
          throw Error(ErrorCode::DuplicatePort,
                      "arc '" + tok + "' used twice as an in-port (crossings " +
                          std::to_string(specs[e.head_crossing].id) + " and " +
                          std::to_string(specs[ci].id) + ")");
        e.head_crossing = static_cast<int>(ci);
        e.head_slot = slot;
      } else {
        if (e.tail_crossing >= 0)
          throw Error(ErrorCode::DuplicatePort,
                      "arc '" + tok + "' used twice as an out-port (crossings " +
                          std::to_string(specs[e.tail_crossing].id) + " and " +
                          std::to_string(specs[ci].id) + ")");
        e.tail_crossing = static_cast<int>(ci);
        e.tail_slot = slot;
      }
    }
  }
  for (const auto& [tok, e] : ends) {
    if (e.tail_crossing < 0)
      throw Error(ErrorCode::DanglingArc,
                  "arc '" + tok + "' never leaves a crossing (missing out-port)");
    if (e.head_crossing < 0)
      throw Error(ErrorCode::DanglingArc,
                  "arc '" + tok + "' never enters a crossing (missing in-port)");
  }

  Diagram d;
  d.free_loops_ = free_loops;
  d.crossings_.reserve(specs.size());
  d.arcs_.reserve(ends.size());
  // std::map iteration gives lexicographic token order.
  for (const auto& [tok, e] : ends) {
    int idx = static_cast<int>(d.arcs_.size());
    d.arcs_.push_back({tok, e.tail_crossing, e.tail_slot, e.head_crossing, e.head_slot});
    d.arc_by_token_.emplace(tok, idx);
  }
  for (std::size_t ci = 0; ci < specs.size(); ++ci) {
    Crossing c;
    c.id = specs[ci].id;
    c.kind = specs[ci].kind;
    for (int slot = 0; slot < 4; ++slot) c.arc[slot] = d.arc_by_token_.at(specs[ci].arcs[slot]);
    d.crossings_.push_back(c);
  }
  for (std::size_t ci = 0; ci < d.crossings_.size(); ++ci)
    if (is_resolvable(d.crossings_[ci].kind)) d.resolvable_.push_back(static_cast<int>(ci));
  return d;
}

std::optional<int> Diagram::crossing_index_by_id(int id) const {
  for (std::size_t i = 0; i < crossings_.size(); ++i)
    if (crossings_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Diagram::arc_index(const std::string& token) const {
  auto it = arc_by_token_.find(token);
  if (it == arc_by_token_.end()) return std::nullopt;
  return it->second;
}

bool Diagram::has_arc_token(const std::string& token) const {
  return arc_by_token_.count(token) > 0;
}

Counts Diagram::counts() const {
  Counts out;
  for (const Crossing& c : crossings_) {
    switch (c.kind) {
      case CrossingKind::PositiveClassical:
        ++out.classical;
        ++out.writhe;
        break;
      case CrossingKind::NegativeClassical:
        ++out.classical;
        --out.writhe;
        break;
      case CrossingKind::Singular:
        ++out.singular;
        break;
      case CrossingKind::Virtual:
        ++out.virt;
        break;
    }
  }
  return out;
}

int Diagram::link_components() const {
  // Follow arcs, passing straight through (s1_in->s1_out, s2_in->s2_out).
  int n = 0;
  std::vector<char> seen(arcs_.size(), 0);
  for (std::size_t start = 0; start < arcs_.size(); ++start) {
    if (seen[start]) continue;
    ++n;
    std::size_t a = start;
    while (!seen[a]) {
      seen[a] = 1;
      const Arc& arc = arcs_[a];
      int out_slot = arc.head_slot == S1In ? S1Out : S2Out;
      a = static_cast<std::size_t>(crossings_[arc.head_crossing].arc[out_slot]);
    }
  }
  return n + free_loops_;
}

Diagram Diagram::disjoint_union(const Diagram& other) const {
  std::vector<CrossingSpec> specs;
  int next_id = 0;
  auto emit = [&](const Diagram& d, const std::string& prefix) {
    for (const Crossing& c : d.crossings_) {
      CrossingSpec s;
      s.id = next_id++;
      s.kind = c.kind;
      for (int slot = 0; slot < 4; ++slot) s.arcs[slot] = prefix + d.arcs_[c.arc[slot]].token;
      specs.push_back(std::move(s));
    }
  };
  emit(*this, "l.");
  emit(other, "r.");
  return from_crossings(std::move(specs), free_loops_ + other.free_loops_);
}

Diagram Diagram::with_kind(int crossing_id, CrossingKind kind) const {
  auto idx = crossing_index_by_id(crossing_id);
  if (!idx)
    throw Error(ErrorCode::UnknownCrossing, "no crossing with id " + std::to_string(crossing_id));
  std::vector<CrossingSpec> specs;
  for (const Crossing& c : crossings_) {
    CrossingSpec s;
    s.id = c.id;
    s.kind = c.id == crossing_id ? kind : c.kind;
    for (int slot = 0; slot < 4; ++slot) s.arcs[slot] = arcs_[c.arc[slot]].token;
    specs.push_back(std::move(s));
  }
  return from_crossings(std::move(specs), free_loops_);
}

std::string Diagram::serialize() const {
  std::ostringstream os;
  for (const Crossing& c : crossings_) {
    os << "crossing " << c.id << ' ' << kind_letter(c.kind);
    for (int slot = 0; slot < 4; ++slot) os << ' ' << arcs_[c.arc[slot]].token;
    os << '\n';
  }
  if (free_loops_ > 0) os << "loops " << free_loops_ << '\n';
  return os.str();
}

void Diagram::validate() const {
  std::vector<CrossingSpec> specs;
  for (const Crossing& c : crossings_) {
    CrossingSpec s;
    s.id = c.id;
    s.kind = c.kind;
    for (int slot = 0; slot < 4; ++slot) s.arcs[slot] = arcs_[c.arc[slot]].token;
    specs.push_back(std::move(s));
  }
  from_crossings(std::move(specs), free_loops_);
}

namespace {

CrossingKind kind_from_letter(const std::string& s, int line) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'P':
        return CrossingKind::PositiveClassical;
      case 'N':
        return CrossingKind::NegativeClassical;
      case 'S':
        return CrossingKind::Singular;
      case 'V':
        return CrossingKind::Virtual;
      default:
        break;
    }
  }
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ": unknown crossing kind '" + s + "'");
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  std::vector<CrossingSpec> specs;
  int free_loops = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "crossing") {
      CrossingSpec s;
      std::string kind;
      if (!(ls >> s.id >> kind >> s.arcs[0] >> s.arcs[1] >> s.arcs[2] >> s.arcs[3]))
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) +
                        ": expected 'crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>'");
      s.kind = kind_from_letter(kind, lineno);
      std::string extra;
      if (ls >> extra)
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
      specs.push_back(std::move(s));
    } else if (word == "loops" || word == "loop") {
      int n;
      if (!(ls >> n) || n < 0)
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) + ": expected 'loops <count>'");
      free_loops += n;
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
    }
  }
  return Diagram::from_crossings(std::move(specs), free_loops);
}

Diagram parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

}  // namespace vsl
