#include "qskein/evaluation.hpp"

#include "qskein/qbasis.hpp"

#include <stdexcept>

namespace qskein {

RingElem eval_h(int n) {
  if (n < 0) return RingElem(0);
  LaurentPoly num(1), den(1);
  for (int i = 1; i <= n; ++i) {
    num *= LaurentPoly::term(1, 1, 1 - i) - LaurentPoly::term(1, -1, i - 1);
    den *= LaurentPoly::s(i) - LaurentPoly::s(-i);
  }
  if (n % 2 != 0) num = -num;
  return RingElem(std::move(num), std::move(den));
}

RingElem eval_element(const SkeinElement& x) {
  RingElem out(0);
  for (const auto& [m, c] : x.terms()) {
    RingElem term = c;
    for (int p : m.h.parts()) term *= eval_h(p);
    for (int p : m.hs.parts()) term *= eval_h(p);
    out += term;
  }
  return out;
}

RingElem macdonald_schur(const Partition& lambda) {
  LaurentPoly num = LaurentPoly::s(static_cast<int>(2 * lambda.weighted_row_sum()));
  LaurentPoly den(1);
  auto contents = lambda.cell_contents();
  auto hooks = lambda.cell_hooks();
  for (std::size_t i = 0; i < contents.size(); ++i) {
    // a - b q^c = v s - v^{-1} s^{2c+1};  1 - q^h = 1 - s^{2h}.
    num *= LaurentPoly::term(1, 1, 1) - LaurentPoly::term(1, -1, 2 * contents[i] + 1);
    den *= LaurentPoly(1) - LaurentPoly::s(2 * hooks[i]);
  }
  return RingElem(std::move(num), std::move(den));
}

SkeinElement phi_n(const SkeinElement& x, int N) {
  if (N < 0) throw std::invalid_argument("phi_n: need N >= 0");
  SkeinElement out;
  for (const auto& [m, c] : x.terms()) {
    SkeinElement term{c};
    for (int p : m.h.parts()) {
      if (p > N) {
        term = SkeinElement{};
        break;
      }
      if (p < N) term *= SkeinElement::h(p);
      // p == N contributes the factor 1.
    }
    if (term.is_zero()) continue;
    for (int p : m.hs.parts()) {
      term *= SkeinElement::h(N - p);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

RingElem specialized_identity_h(int n, int N) {
  if (N < 0) throw std::invalid_argument("specialized_identity_h: need N >= 0");
  RingElem lhs = eval_h(n).substitute_v(-1, N);
  RingElem rhs = eval_h(N - n).substitute_v(-1, N);
  if (lhs != rhs)
    throw std::logic_error("specialized rank-" + std::to_string(N) + " identity fails for n = " +
                           std::to_string(n) + ": " + (lhs - rhs).to_string());
  return lhs;
}

RingElem specialized_identity_pair(const Partition& lambda, const Partition& mu, int N) {
  Partition nu = complement_union(lambda, mu, N);
  RingElem lhs = eval_element(q_element(lambda, mu)).substitute_v(-1, N);
  RingElem rhs = eval_element(q_element(nu, Partition{})).substitute_v(-1, N);
  std::string tag = "(" + lambda.to_string() + "," + mu.to_string() + "), N = " + std::to_string(N);
  if (lhs != rhs)
    throw std::logic_error("specialized evaluations differ for " + tag + ": " +
                           (lhs - rhs).to_string());
  if (lhs.is_zero())
    throw std::logic_error("specialized evaluation vanishes for " + tag);
  return lhs;
}

}  // namespace qskein
