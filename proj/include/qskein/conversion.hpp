#pragma once

#include "qskein/qbasis.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qskein {

using BasisKey = std::pair<Partition, Partition>;

// Finite expansion in the determinantal basis: the value at (lambda, mu) is
// the coefficient of q_element(lambda, mu). Zero coefficients are not stored.
struct QExpansion {
  std::map<BasisKey, RingElem> coeffs;

  SkeinElement recombine() const;
  friend bool operator==(const QExpansion&, const QExpansion&) = default;
  std::string to_string() const;  // "Q([2],[]) + 2*Q([1],[1])"; empty -> "0"
};

// All (lambda, mu) with |lambda| - |mu| = charge and |lambda| <= max_n,
// ordered by descending |lambda|, then lex-descending lambda, then
// lex-descending mu. Requires max_n >= max(charge, 0).
std::vector<BasisKey> enumerate_basis(int charge, int max_n);

// Exact coordinates of x in the determinantal basis. Each charge class is
// solved independently against the candidate span enumerate_basis(charge,
// max plain degree) by Gaussian elimination over the fraction field. The
// candidates provably span, so a nonzero residual throws std::logic_error.
QExpansion expand_in_q(const SkeinElement& x);

// Structure constants: the expansion of q_element(l1,m1) * q_element(l2,m2).
// Verifies that every coefficient is a nonnegative integer and throws
// std::logic_error otherwise.
QExpansion multiply_in_q(const Partition& l1, const Partition& m1,
                         const Partition& l2, const Partition& m2);

// Meridian maps: diagonal in the determinantal basis. Scales the (lambda,
// mu) coordinate by eigenvalue(lambda, mu) for the positive map and by
// eigenvalue(mu, lambda) for the reversed one, then recombines.
SkeinElement meridian_map(const SkeinElement& x, MeridianKind kind);

}  // namespace qskein
