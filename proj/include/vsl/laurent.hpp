// Exact sparse Laurent polynomials in A over arbitrary-precision integers,
// and their extension by a square root of one (h^2 = 1), stored as a pair
// (h^0 part, h^1 part).

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vsl {

using Coef = boost::multiprecision::cpp_int;

// One serialized term: exponent of A, exponent of h (0 or 1), coefficient
// rendered as a decimal string.
struct TermRecord {
  std::int64_t a_exp;
  int h_exp;
  std::string coef;
  bool operator==(const TermRecord&) const = default;
};

class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(Coef constant);

  // A single term c * A^e.
  static LaurentPoly term(Coef c, std::int64_t e);

  static LaurentPoly zero() { return LaurentPoly{}; }
  static LaurentPoly one() { return LaurentPoly{Coef{1}}; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, Coef>& terms() const { return terms_; }

  Coef coefficient(std::int64_t e) const;
  void add_term(std::int64_t e, const Coef& c);

  // *this += p * A^shift, without building a temporary.
  void add_shifted(const LaurentPoly& p, std::int64_t shift);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly pow(unsigned n) const;

  // Multiply by A^shift.
  LaurentPoly shifted(std::int64_t shift) const;

  // { e mod 4 : coefficient of A^e nonzero }, values normalized to 0..3.
  std::set<int> exponent_residues() const;

  bool all_exponents_even() const;

  std::vector<TermRecord> records(int h_exp = 0) const;

  // Human-readable form, highest exponent first, e.g. "-A^6 - 2 A^2 - A^-2".
  // `suffix` is appended to every term ("" or " h").
  std::string str(const std::string& suffix = "") const;

private:
  // invariant: no stored coefficient is zero
  std::map<std::int64_t, Coef> terms_;
};

class HLaurent {
public:
  HLaurent() = default;
  HLaurent(LaurentPoly even, LaurentPoly odd);

  static HLaurent one() { return HLaurent{LaurentPoly::one(), {}}; }
  // p placed in the h^k component, k in {0, 1}.
  static HLaurent graded(LaurentPoly p, int h_exp);

  const LaurentPoly& even_part() const { return even_; }
  const LaurentPoly& odd_part() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  HLaurent& operator+=(const HLaurent& rhs);
  friend HLaurent operator+(HLaurent lhs, const HLaurent& rhs);
  friend HLaurent operator-(HLaurent lhs, const HLaurent& rhs);
  // (a + bh)(c + dh) = (ac + bd) + (ad + bc) h
  friend HLaurent operator*(const HLaurent& lhs, const HLaurent& rhs);
  HLaurent operator-() const;
  bool operator==(const HLaurent&) const = default;

  HLaurent pow(unsigned n) const;

  // Swap the grading, i.e. multiply by h.
  HLaurent times_h() const;

  // Substitute h = 1.
  LaurentPoly eval_h1() const;

  // Records for both parts, sorted by (h_exp, a_exp).
  std::vector<TermRecord> records() const;

  std::string str() const;

private:
  LaurentPoly even_;
  LaurentPoly odd_;
};

}  // namespace vsl
