#include "vsl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace vsl {

LaurentPoly::LaurentPoly(Coef constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::term(Coef c, std::int64_t e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

Coef LaurentPoly::coefficient(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coef{0} : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Coef& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::add_shifted(const LaurentPoly& p, std::int64_t shift) {
  for (const auto& [e, c] : p.terms_) add_term(e + shift, c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly acc = LaurentPoly::one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) acc *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
  if (shift == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + shift] = c;
  return out;
}

std::set<int> LaurentPoly::exponent_residues() const {
  std::set<int> out;
  for (const auto& [e, c] : terms_) out.insert(static_cast<int>(((e % 4) + 4) % 4));
  return out;
}

bool LaurentPoly::all_exponents_even() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

std::vector<TermRecord> LaurentPoly::records(int h_exp) const {
  std::vector<TermRecord> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e, h_exp, c.str()});
  return out;
}

namespace {

void append_term(std::ostream& os, bool first, const Coef& c, std::int64_t e,
                 const std::string& suffix) {
  Coef mag = c < 0 ? Coef{-c} : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  const bool unit = (mag == 1);
  if (e == 0) {
    if (unit && !suffix.empty()) {
      os << suffix.substr(1);  // "h" rather than "1 h"
      return;
    }
    os << mag.str();
  } else {
    if (!unit) os << mag.str() << " ";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  os << suffix;
}

}  // namespace

std::string LaurentPoly::str(const std::string& suffix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, it->second, it->first, suffix);
    first = false;
  }
  return os.str();
}

HLaurent::HLaurent(LaurentPoly even, LaurentPoly odd)
    : even_(std::move(even)), odd_(std::move(odd)) {}

HLaurent HLaurent::graded(LaurentPoly p, int h_exp) {
  switch (h_exp) {
    case 0:
      return HLaurent{std::move(p), {}};
    case 1:
      return HLaurent{{}, std::move(p)};
    default:
      throw std::invalid_argument("h exponent must be 0 or 1");
  }
}

HLaurent& HLaurent::operator+=(const HLaurent& rhs) {
  even_ += rhs.even_;
  odd_ += rhs.odd_;
  return *this;
}

HLaurent operator+(HLaurent lhs, const HLaurent& rhs) {
  lhs += rhs;
  return lhs;
}

HLaurent operator-(HLaurent lhs, const HLaurent& rhs) {
  lhs.even_ -= rhs.even_;
  lhs.odd_ -= rhs.odd_;
  return lhs;
}

HLaurent operator*(const HLaurent& lhs, const HLaurent& rhs) {
  return HLaurent{lhs.even_ * rhs.even_ + lhs.odd_ * rhs.odd_,
                  lhs.even_ * rhs.odd_ + lhs.odd_ * rhs.even_};
}

HLaurent HLaurent::operator-() const { return HLaurent{-even_, -odd_}; }

HLaurent HLaurent::pow(unsigned n) const {
  HLaurent acc = HLaurent::one();
  HLaurent base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return acc;
}

HLaurent HLaurent::times_h() const { return HLaurent{odd_, even_}; }

LaurentPoly HLaurent::eval_h1() const { return even_ + odd_; }

std::vector<TermRecord> HLaurent::records() const {
  std::vector<TermRecord> out = even_.records(0);
  std::vector<TermRecord> odd = odd_.records(1);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

std::string HLaurent::str() const {
  if (is_zero()) return "0";
  if (odd_.is_zero()) return even_.str();
  std::string out = odd_.str(" h");
  if (!even_.is_zero()) {
    std::string ev = even_.str();
    if (ev.rfind("-", 0) == 0)
      out += " - " + ev.substr(1);
    else
      out += " + " + ev;
  }
  return out;
}

}  // namespace vsl
