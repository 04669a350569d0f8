#include "qskein/laurent.hpp"

#include <doctest.h>

namespace {

using qskein::Exponents;
using qskein::Int;
using qskein::LaurentPoly;

const LaurentPoly V = LaurentPoly::v();
const LaurentPoly S = LaurentPoly::s();

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK((V + S) * (V - S) == V * V - S * S);
  CHECK(LaurentPoly(0).is_zero());
  CHECK((V - V).is_zero());
  CHECK(LaurentPoly(1).is_one());
  CHECK((V * LaurentPoly::v(-1)).is_one());

  LaurentPoly p = LaurentPoly::term(2, 1, -1);
  p += LaurentPoly::term(-2, 1, -1);
  CHECK(p.is_zero());

  CHECK(LaurentPoly::term(3, 2, 1).coeff(2, 1) == 3);
  CHECK(LaurentPoly::term(3, 2, 1).coeff(0, 0) == 0);
}

TEST_CASE("laurent to_string descends in (v, s)") {
  CHECK(V.to_string() == "v");
  CHECK(LaurentPoly::s(-2).to_string() == "s^-2");
  CHECK(LaurentPoly::term(2, 1, -1).to_string() == "2*v*s^-1");
  CHECK((V * V - S * S).to_string() == "v^2 - s^2");
  CHECK((LaurentPoly(1) - V).to_string() == "-v + 1");
  CHECK((LaurentPoly::s(1) - LaurentPoly::s(-1)).to_string() == "s - s^-1");
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("laurent bar and substitutions") {
  const LaurentPoly m = LaurentPoly::term(3, 2, -1);
  CHECK(m.bar() == LaurentPoly::term(3, -2, 1));
  const LaurentPoly sum = V + LaurentPoly::s(2) - LaurentPoly(5);
  CHECK(sum.bar().bar() == sum);

  // v -> -s^2 kills v + s^2.
  CHECK((V + S * S).substitute_v(-1, 2).is_zero());
  CHECK((V * V).substitute_v(-1, 2) == LaurentPoly::s(4));

  // s -> -s^-1 negates s + s^-1 and fixes s - s^-1.
  const LaurentPoly odd = S - LaurentPoly::s(-1);
  const LaurentPoly even = S + LaurentPoly::s(-1);
  CHECK(odd.substitute_s_neg_inv() == odd);
  CHECK(even.substitute_s_neg_inv() == -even);
}

TEST_CASE("laurent exact division") {
  const LaurentPoly prod = (V + S) * (V - S);
  auto q = prod.divide_exact(V - S);
  REQUIRE(q.has_value());
  CHECK(*q == V + S);

  CHECK_FALSE(prod.divide_exact(V - LaurentPoly(1)).has_value());
  CHECK(LaurentPoly().divide_exact(V).value().is_zero());

  // Dividing by a monomial shifts exponents.
  auto shifted = V.divide_exact(LaurentPoly::s(2));
  REQUIRE(shifted.has_value());
  CHECK(*shifted == LaurentPoly::term(1, 1, -2));
}

TEST_CASE("laurent gcd is canonical") {
  const LaurentPoly a = (V + S) * (V - S);
  const LaurentPoly b = (V + S) * (V + S);
  CHECK(LaurentPoly::gcd(a, b) == V + S);

  // Units (monomials) and content factor out canonically.
  CHECK(LaurentPoly::gcd(LaurentPoly::term(2, 1, 0), LaurentPoly::term(4, 2, 0)) ==
        LaurentPoly(2));
  CHECK(LaurentPoly::gcd(LaurentPoly(), -V) == LaurentPoly(1));
  CHECK(LaurentPoly::gcd(-V + S, LaurentPoly()) == V - S);

  const LaurentPoly c = LaurentPoly::term(6, 1, 0) - LaurentPoly::term(4, 0, 1);
  CHECK(c.integer_content() == 2);
  CHECK(LaurentPoly().integer_content() == 0);
}

TEST_CASE("laurent leading term and exponent range") {
  const LaurentPoly p = LaurentPoly::term(-2, 3, 1) + LaurentPoly::term(7, 3, -4) +
                        LaurentPoly::term(1, -1, 2);
  const auto [lead, coeff] = p.leading_term();
  CHECK(lead == Exponents{3, 1});
  CHECK(coeff == -2);
  CHECK(p.min_exponents() == Exponents{-1, -4});
  CHECK(LaurentPoly().min_exponents() == Exponents{0, 0});
}
