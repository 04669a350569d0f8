#include "qskein/conversion.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "rational_probe.hpp"

namespace {

using probe::Rat;
using qskein::BasisKey;
using qskein::MeridianKind;
using qskein::Partition;
using qskein::QExpansion;
using qskein::RingElem;
using qskein::SkeinElement;
using qskein::SkeinMonomial;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SkeinElement parse(const std::string& text) {
  return qskein::parse_skein_element(text);
}

// The element as numeric coordinates in the monomial basis, coefficients
// specialized at (v0, s0).
std::map<SkeinMonomial, Rat> specialize(const SkeinElement& x, const Rat& v0,
                                        const Rat& s0) {
  std::map<SkeinMonomial, Rat> out;
  for (const auto& [m, c] : x.terms()) {
    const Rat val = probe::eval_ring(c, v0, s0);
    if (val != 0) out[m] = val;
  }
  return out;
}

}  // namespace

TEST_CASE("basis enumeration order") {
  using qskein::enumerate_basis;
  CHECK(enumerate_basis(0, 1) ==
        std::vector<BasisKey>{{P({1}), P({1})}, {{}, {}}});
  CHECK(enumerate_basis(2, 2) ==
        std::vector<BasisKey>{{P({2}), {}}, {P({1, 1}), {}}});
  CHECK(enumerate_basis(-1, 0) == std::vector<BasisKey>{{{}, P({1})}});
  CHECK(enumerate_basis(0, 3).size() == 15);
}

TEST_CASE("expansion of generator products") {
  const QExpansion e = qskein::expand_in_q(parse("h1*hs1"));
  REQUIRE(e.coeffs.size() == 2);
  CHECK(e.coeffs.at({P({1}), P({1})}) == RingElem(1));
  CHECK(e.coeffs.at({{}, {}}) == RingElem(1));
  CHECK(e.to_string() == "Q([],[]) + Q([1],[1])");

  const QExpansion sq = qskein::expand_in_q(parse("h1*h1"));
  REQUIRE(sq.coeffs.size() == 2);
  CHECK(sq.coeffs.at({P({2}), {}}) == RingElem(1));
  CHECK(sq.coeffs.at({P({1, 1}), {}}) == RingElem(1));

  CHECK(qskein::expand_in_q(SkeinElement()).coeffs.empty());
  CHECK(qskein::expand_in_q(SkeinElement()).to_string() == "0");
}

TEST_CASE("basis elements expand to unit vectors") {
  const std::vector<BasisKey> keys = {
      {{}, {}}, {P({2}), {}}, {P({1}), P({1})}, {P({2, 1}), P({1, 1})}};
  for (const auto& [l, m] : keys) {
    const QExpansion e = qskein::expand_in_q(qskein::q_element(l, m));
    REQUIRE(e.coeffs.size() == 1);
    CHECK(e.coeffs.begin()->first == BasisKey{l, m});
    CHECK(e.coeffs.begin()->second == RingElem(1));
  }
}

TEST_CASE("expansion round trips on field coefficients") {
  const SkeinElement x = parse("3*h2*hs1 - h1").scaled(RingElem::delta()) +
                         parse("v*hs2 + 1/2");
  CHECK(qskein::expand_in_q(x).recombine() == x);
  const SkeinElement mixed = parse("h3*h1 - 2*hs2 + h1*hs1*hs1");
  CHECK(qskein::expand_in_q(mixed).recombine() == mixed);
}

TEST_CASE("structure constants of the smallest products") {
  const QExpansion sq = qskein::multiply_in_q(P({1}), {}, P({1}), {});
  REQUIRE(sq.coeffs.size() == 2);
  CHECK(sq.coeffs.at({P({2}), {}}) == RingElem(1));
  CHECK(sq.coeffs.at({P({1, 1}), {}}) == RingElem(1));

  const QExpansion pair = qskein::multiply_in_q(P({1}), {}, {}, P({1}));
  REQUIRE(pair.coeffs.size() == 2);
  CHECK(pair.coeffs.at({P({1}), P({1})}) == RingElem(1));
  CHECK(pair.coeffs.at({{}, {}}) == RingElem(1));
}

TEST_CASE("square of the charge-zero box pair") {
  const QExpansion sq = qskein::multiply_in_q(P({1}), P({1}), P({1}), P({1}));
  CHECK(sq.to_string() ==
        "Q([],[]) + 2*Q([1],[1]) + Q([1,1],[1,1]) + Q([1,1],[2]) + "
        "Q([2],[1,1]) + Q([2],[2])");

  // Independent check: specialize both sides of the expansion identity at
  // random rational points and compare coordinates monomial by monomial.
  const SkeinElement box = qskein::q_element(P({1}), P({1}));
  const SkeinElement product = box * box;
  std::mt19937_64 rng(4711);
  for (int trial = 0; trial < 12; ++trial) {
    const Rat v0 = probe::random_point(rng);
    const Rat s0 = probe::random_point(rng);
    std::map<SkeinMonomial, Rat> lhs;
    for (const auto& [key, coeff] : sq.coeffs) {
      const Rat c = probe::eval_ring(coeff, v0, s0);
      for (const auto& [m, val] :
           specialize(qskein::q_element(key.first, key.second), v0, s0)) {
        lhs[m] += c * val;
        if (lhs[m] == 0) lhs.erase(m);
      }
    }
    CHECK(lhs == specialize(product, v0, s0));
  }
}

TEST_CASE("meridian maps act diagonally") {
  const RingElem d = RingElem::delta();
  CHECK(qskein::meridian_map(SkeinElement(1), MeridianKind::kPositive) ==
        SkeinElement(1).scaled(d));
  CHECK(qskein::meridian_map(SkeinElement::h(1), MeridianKind::kPositive) ==
        SkeinElement::h(1).scaled(
            RingElem::v(-1) * (RingElem::s() - RingElem::s(-1)) + d));

  for (int n = 1; n <= 4; ++n) {
    const RingElem expected =
        qskein::meridian_generator_eigenvalue(MeridianKind::kReversed, true, n);
    CHECK(qskein::meridian_map(SkeinElement::hstar(n), MeridianKind::kReversed) ==
          SkeinElement::hstar(n).scaled(expected));
  }

  // Basis elements are joint eigenvectors.
  const SkeinElement q = qskein::q_element(P({2}), P({1}));
  CHECK(qskein::meridian_map(q, MeridianKind::kPositive) ==
        q.scaled(qskein::eigenvalue(P({2}), P({1}))));
  CHECK(qskein::meridian_map(q, MeridianKind::kReversed) ==
        q.scaled(qskein::eigenvalue(P({1}), P({2}))));

  // Rotation intertwines the two meridian maps.
  const SkeinElement x = parse("h2*hs1 + 2*h1 - 1").scaled(d) + parse("h1*h1");
  CHECK(qskein::meridian_map(x, MeridianKind::kPositive).star() ==
        qskein::meridian_map(x.star(), MeridianKind::kReversed));
}
