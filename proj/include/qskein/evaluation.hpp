#pragma once

#include "qskein/skein.hpp"

namespace qskein {

// <h_n>: 0 for n < 0, 1 for n = 0, else the product
// (-1)^n prod_{i=1}^n (v s^{1-i} - v^{-1} s^{i-1}) / (s^i - s^{-i}).
RingElem eval_h(int n);

// The evaluation homomorphism: h_n and h_n* both map to eval_h(n),
// extended multiplicatively and linearly.
RingElem eval_element(const SkeinElement& x);

// Hook-content product q^{n(lambda)} prod_{cells} (a - b q^c)/(1 - q^h)
// with a = vs, b = v^{-1}s, q = s^2. Contract: equals
// eval_element(q_element(lambda, {})).
RingElem macdonald_schur(const Partition& lambda);

// Rank-N restriction onto the h-only subalgebra, N >= 0:
// h_n* -> h_{N-n}; h_n -> h_n for n < N, 1 for n = N, 0 for n > N.
SkeinElement phi_n(const SkeinElement& x, int N);

// Checks <h_n> = <h_{N-n}> under v -> -s^N and returns the common value.
// N >= 0; throws std::logic_error when the identity fails.
RingElem specialized_identity_h(int n, int N);

// Checks, under v -> -s^N with N >= lambda_1 + mu_1:
// eval(q_element(lambda, mu)) = eval(q_element(nu, {})) for
// nu = complement_union(lambda, mu, N), and that the common value is
// nonzero. Returns the value; throws std::logic_error on failure.
RingElem specialized_identity_pair(const Partition& lambda, const Partition& mu, int N);

}  // namespace qskein
