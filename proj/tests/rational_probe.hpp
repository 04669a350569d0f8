#pragma once

// Numeric probes for the exact types: everything evaluated at a concrete
// rational point (v0, s0). Used to cross-check symbolic results against
// independently computed numbers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "qskein/laurent.hpp"
#include "qskein/ring.hpp"

namespace probe {

using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_pow(const Rat& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat acc(1), b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b *= b;
  }
  return acc;
}

inline Rat eval_laurent(const qskein::LaurentPoly& p, const Rat& v0, const Rat& s0) {
  Rat total(0);
  for (const auto& [e, c] : p.terms())
    total += Rat(c) * rat_pow(v0, e.v_exp) * rat_pow(s0, e.s_exp);
  return total;
}

inline Rat eval_ring(const qskein::RingElem& x, const Rat& v0, const Rat& s0) {
  const Rat den = eval_laurent(x.den(), v0, s0);
  if (den == 0) throw std::domain_error("probe point hits a denominator zero");
  return eval_laurent(x.num(), v0, s0) / den;
}

// Random small nonzero rational, never 0 or +-1, so the standard
// denominators s^i - s^-i stay nonzero.
inline Rat random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(2, 19);
  std::uniform_int_distribution<int> den(2, 19);
  std::uniform_int_distribution<int> flip(0, 1);
  int p = num(rng), q = den(rng);
  while (p == q) p = num(rng);
  Rat r(p, q);
  return flip(rng) ? r : -r;
}

}  // namespace probe
