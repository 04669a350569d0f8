#include "qskein/ring.hpp"

#include <doctest.h>

#include <stdexcept>

namespace {

using qskein::LaurentPoly;
using qskein::RingElem;

const RingElem V = RingElem::v();
const RingElem S = RingElem::s();
const RingElem Z = S - RingElem::s(-1);

}  // namespace

TEST_CASE("delta is the loop value") {
  const RingElem d = RingElem::delta();
  CHECK(d * Z == RingElem::v(-1) - V);
  CHECK(d.to_string() == "(-v + v^-1)/(s - s^-1)");
  CHECK(d.bar() == d);
  CHECK(d.substitute_s_neg_inv() == d);
}

TEST_CASE("quantum integers") {
  CHECK(RingElem::quantum_int(0).is_zero());
  CHECK(RingElem::quantum_int(1).is_one());
  CHECK(RingElem::quantum_int(2) == S + RingElem::s(-1));
  CHECK(RingElem::quantum_int(3) == RingElem::s(2) + 1 + RingElem::s(-2));
  for (int k = 1; k <= 8; ++k) {
    CHECK(RingElem::quantum_int(-k) == -RingElem::quantum_int(k));
    CHECK(RingElem::quantum_int(k) * Z == RingElem::s(k) - RingElem::s(-k));
  }
}

TEST_CASE("equality ignores the representative") {
  const LaurentPoly v = LaurentPoly::v(), s = LaurentPoly::s();
  const RingElem unreduced(v * v - s * s, v - s);
  CHECK(unreduced == V + S);
  CHECK(unreduced.reduced() == V + S);
  CHECK(unreduced.reduced().den().is_one());
  CHECK(unreduced != V - S);
}

TEST_CASE("field arithmetic") {
  const RingElem d = RingElem::delta();
  CHECK((V + S) * (V - S) == V * V - S * S);
  CHECK(V / V == RingElem(1));
  CHECK(d / d == RingElem(1));
  CHECK(d.pow(3) == d * d * d);
  CHECK(d.pow(-2) * d.pow(2) == RingElem(1));
  CHECK(d.pow(0) == RingElem(1));
  CHECK((RingElem(2) / RingElem(3) + RingElem(1) / RingElem(3)) == RingElem(1));
  CHECK((-d) + d == RingElem(0));
  CHECK(RingElem(0).is_zero());
  CHECK(RingElem(7).pow(-1) * RingElem(7) == RingElem(1));
}

TEST_CASE("bar conjugation") {
  CHECK(V.bar() == RingElem::v(-1));
  const RingElem x = (V + RingElem::s(-2)) / (RingElem(1) - S * V);
  CHECK(x.bar().bar() == x);
  const RingElem y = Z / (V - RingElem(2));
  CHECK((x * y).bar() == x.bar() * y.bar());
}

TEST_CASE("substitute_v cancels removable singularities") {
  const LaurentPoly v = LaurentPoly::v(), s = LaurentPoly::s();
  // (v - s)(v + s)/(v - s) at v -> s is fine after reduction.
  const RingElem x((v - s) * (v + s), v - s);
  CHECK(x.substitute_v(1, 1) == RingElem::s() * 2);

  // A genuine pole throws.
  const RingElem pole(LaurentPoly(1), v - s);
  CHECK_THROWS_AS(pole.substitute_v(1, 1), std::domain_error);

  // delta at v = -s^N is a quantum integer: (-(-s^N)^-1 + ... ) = [N].
  for (int N = 0; N <= 5; ++N)
    CHECK(RingElem::delta().substitute_v(-1, N) == RingElem::quantum_int(N));
}

TEST_CASE("to_integral") {
  const LaurentPoly v = LaurentPoly::v(), s = LaurentPoly::s();
  const RingElem x(v * v - s * s, v + s);
  auto integral = x.to_integral();
  REQUIRE(integral.has_value());
  CHECK(*integral == v - s);
  CHECK_FALSE(RingElem::delta().to_integral().has_value());
  CHECK(RingElem(0).to_integral().value().is_zero());
}

TEST_CASE("display centers the denominator") {
  // A monomial denominator folds into the numerator.
  CHECK(RingElem(LaurentPoly(1), LaurentPoly::s(2)).to_string() == "s^-2");
  CHECK(RingElem(LaurentPoly::v(1), LaurentPoly::term(2, 0, 0)).to_string() ==
        "v/2");
  // The denominator's leading sign normalizes to positive.
  const RingElem r = (V - RingElem::v(-1)) / (RingElem::s(-1) - S);
  CHECK(r.to_string() == "(-v + v^-1)/(s - s^-1)");
}

TEST_CASE("ring parse round trips") {
  CHECK(qskein::parse_ring_elem("(-v + v^-1)/(s - s^-1)") == RingElem::delta());
  CHECK(qskein::parse_ring_elem("v^2*s - 3") == RingElem::v(2) * S - RingElem(3));
  CHECK(qskein::parse_ring_elem("(v + s)^2") == (V + S) * (V + S));
  CHECK(qskein::parse_ring_elem("1/2 + 1/2") == RingElem(1));
  const RingElem x = (V * V - Z) / (S * V + RingElem(5));
  CHECK(qskein::parse_ring_elem(x.to_string()) == x);
  CHECK_THROWS_AS(qskein::parse_ring_elem("v +"), std::invalid_argument);
  CHECK_THROWS_AS(qskein::parse_ring_elem("w^2"), std::invalid_argument);
  CHECK_THROWS_AS(qskein::parse_ring_elem("(v"), std::invalid_argument);
}
