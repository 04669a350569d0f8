#pragma once

#include "qskein/laurent.hpp"

#include <optional>
#include <string>

namespace qskein {

// Element of the fraction field of Z[v^{±1}, s^{±1}], kept as an exact
// numerator/denominator pair. Arithmetic never reduces fully; a cheap
// normalisation (shared monomial and integer content, denominator leading
// coefficient positive) runs after every operation and a full gcd reduction
// kicks in once the representation grows past a size threshold. Equality is
// cross-multiplication, so it is independent of the representative.
class RingElem {
 public:
  RingElem() : num_(), den_(1) {}
  RingElem(int c) : num_(c), den_(1) {}
  RingElem(Int c) : num_(std::move(c)), den_(1) {}
  RingElem(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RingElem(LaurentPoly num, LaurentPoly den);

  static RingElem v(int e = 1) { return RingElem(LaurentPoly::v(e)); }
  static RingElem s(int e = 1) { return RingElem(LaurentPoly::s(e)); }

  // (v^{-1} - v)/(s - s^{-1}), the value of a null-homotopic loop.
  static RingElem delta();

  // Balanced quantum integer [k] = (s^k - s^{-k})/(s - s^{-1}) as an explicit
  // Laurent polynomial; [0] = 0, [-k] = -[k].
  static RingElem quantum_int(int k);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator/(const RingElem& a, const RingElem& b);
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  RingElem& operator/=(const RingElem& o) { return *this = *this / o; }

  // Integer power; negative exponents invert (element must be nonzero).
  RingElem pow(int e) const;

  // Ring involution v -> v^{-1}, s -> s^{-1}.
  RingElem bar() const;

  // v -> eps * s^n. Throws std::domain_error when the denominator vanishes
  // under the substitution.
  RingElem substitute_v(int eps, int n) const;

  // s -> -s^{-1}.
  RingElem substitute_s_neg_inv() const;

  // The element as a Laurent polynomial, when the denominator divides the
  // numerator exactly.
  std::optional<LaurentPoly> to_integral() const;

  // Fully reduced representative (gcd cancelled out of num/den).
  RingElem reduced() const;

  // Canonical display: fully reduced; "num" when the denominator is 1, else
  // "(num)/(den)" with parentheses dropped around single terms.
  std::string to_string() const;

 private:
  LaurentPoly num_, den_;

  // Invariant kept by every constructor and operation: den is nonzero, its
  // leading coefficient is positive, and num/den share no monomial factor or
  // integer content.
  void normalize();
};

// Parses the expression syntax over v, s, integers, + - * / ^ and parentheses.
// Throws std::invalid_argument on malformed input.
RingElem parse_ring_elem(const std::string& text);

}  // namespace qskein
