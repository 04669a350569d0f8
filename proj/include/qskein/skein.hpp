#pragma once

#include "qskein/partition.hpp"
#include "qskein/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace qskein {

// Monomial in the commuting generators h_1, h_2, ... and h_1*, h_2*, ...,
// recorded as the multiset of plain subscripts (h) and starred subscripts
// (hs). h_0 = h_0* = 1 is the empty monomial; subscripts are >= 1.
struct SkeinMonomial {
  Partition h;
  Partition hs;

  int plain_degree() const { return h.size(); }
  int starred_degree() const { return hs.size(); }
  int charge() const { return h.size() - hs.size(); }

  SkeinMonomial merged(const SkeinMonomial& o) const;

  friend bool operator==(const SkeinMonomial&, const SkeinMonomial&) = default;
  // Ordering chosen so that map iteration is display order: higher total
  // degree first, then lex-larger subscript lists first.
  friend bool operator<(const SkeinMonomial& a, const SkeinMonomial& b);

  std::string to_string() const;  // "h3*h2*hs1"; empty monomial -> ""
};

// Element of the free commutative algebra over the coefficient field on the
// generators above. Invariant: no stored coefficient is zero.
class SkeinElement {
 public:
  using TermMap = std::map<SkeinMonomial, RingElem>;

  SkeinElement() = default;
  SkeinElement(int c) : SkeinElement(RingElem(c)) {}
  explicit SkeinElement(RingElem c);
  explicit SkeinElement(SkeinMonomial m, RingElem c = RingElem(1));

  // h_n, resp. h_n*; n < 0 gives 0 and n = 0 gives 1.
  static SkeinElement h(int n);
  static SkeinElement hstar(int n);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  RingElem coeff(const SkeinMonomial& m) const;

  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

  SkeinElement operator-() const;
  SkeinElement& operator+=(const SkeinElement& o);
  SkeinElement& operator-=(const SkeinElement& o);
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const SkeinElement& a, const SkeinElement& b);
  SkeinElement& operator*=(const SkeinElement& o) { return *this = *this * o; }
  SkeinElement scaled(const RingElem& c) const;

  // Algebra involution h_n <-> h_n*, identity on coefficients.
  SkeinElement star() const;

  // Mirror symmetry: identity on generators, bar on coefficients.
  SkeinElement mirror() const;

  // Largest plain, resp. starred, degree over the monomials; 0 when empty.
  int max_plain_degree() const;
  int max_starred_degree() const;

  // True when every monomial has the same charge, which is then *charge.
  bool pure_charge(int* charge = nullptr) const;

  // Splits into charge-homogeneous summands, keyed by charge.
  std::map<int, SkeinElement> charge_split() const;

  std::string to_string() const;  // "h3*h2*hs1 - 2*hs2"; zero -> "0"

 private:
  TermMap terms_;

  void add_term(const SkeinMonomial& m, const RingElem& c);
};

// Parses the expression syntax over hN, hsN, v, s, integers, + - * / ^ and
// parentheses. Division is only by scalar (generator-free) subexpressions.
// Throws std::invalid_argument on malformed input.
SkeinElement parse_skein_element(const std::string& text);

}  // namespace qskein
