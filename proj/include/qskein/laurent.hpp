#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qskein {

using Int = boost::multiprecision::cpp_int;

// Exponent pair of a monomial v^v_exp * s^s_exp. Ordered lexicographically,
// v before s.
struct Exponents {
  int v_exp = 0;
  int s_exp = 0;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  Exponents operator+(const Exponents& o) const { return {v_exp + o.v_exp, s_exp + o.s_exp}; }
  Exponents operator-(const Exponents& o) const { return {v_exp - o.v_exp, s_exp - o.s_exp}; }
};

// Element of Z[v^{±1}, s^{±1}] with exact integer coefficients.
// Invariant: the term map never holds a zero coefficient.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Int(c)) {}
  explicit LaurentPoly(Int c);

  static LaurentPoly term(Int coeff, int v_exp, int s_exp);
  static LaurentPoly v(int e = 1) { return term(1, e, 0); }
  static LaurentPoly s(int e = 1) { return term(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(int v_exp, int s_exp) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Ring involution v -> v^{-1}, s -> s^{-1}.
  LaurentPoly bar() const;

  // v -> eps * s^n with eps = ±1; the result lives in Z[s^{±1}].
  LaurentPoly substitute_v(int eps, int n) const;

  // s -> -s^{-1}.
  LaurentPoly substitute_s_neg_inv() const;

  // Exact quotient in the Laurent ring, or nullopt when the divisor does not
  // divide exactly. Divisor must be nonzero.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  // gcd up to units, canonicalised: minimal exponents (0,0), positive leading
  // coefficient. gcd(0, b) is the canonical associate of b.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Positive gcd of all coefficients; 0 for the zero polynomial.
  Int integer_content() const;

  // Componentwise minimum of all exponent pairs. Zero polynomial: (0, 0).
  Exponents min_exponents() const;

  // Term with the lex-largest exponent pair. Polynomial must be nonzero.
  std::pair<Exponents, Int> leading_term() const;

  // Canonical form: terms in descending (v_exp, s_exp) order, e.g.
  // "-v^4 + 2*v^2 + v^2*s^2 - v^2*s^-2". Zero prints "0".
  std::string to_string() const;

 private:
  TermMap terms_;

  void add_term(const Exponents& e, const Int& c);
  friend class RingElem;
};

}  // namespace qskein
