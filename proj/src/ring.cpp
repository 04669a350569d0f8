#include "qskein/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qskein {

namespace {

// Past this many combined terms an operation result gets a full gcd
// reduction; below it only the cheap normalisation runs.
constexpr std::size_t kReduceThreshold = 48;

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

LaurentPoly shift_all(const LaurentPoly& p, const Exponents& by) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::term(c, e.v_exp + by.v_exp, e.s_exp + by.s_exp);
  return r;
}

LaurentPoly divide_by_int(const LaurentPoly& p, const Int& g) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::term(c / g, e.v_exp, e.s_exp);
  return r;
}

RingElem maybe_reduce(RingElem r) {
  if (r.num().term_count() + r.den().term_count() > kReduceThreshold)
    return r.reduced();
  return r;
}

}  // namespace

RingElem::RingElem(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RingElem: zero denominator");
  normalize();
}

void RingElem::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  Exponents mn = num_.min_exponents(), md = den_.min_exponents();
  Exponents common{std::min(mn.v_exp, md.v_exp), std::min(mn.s_exp, md.s_exp)};
  if (common.v_exp != 0 || common.s_exp != 0) {
    Exponents neg{-common.v_exp, -common.s_exp};
    num_ = shift_all(num_, neg);
    den_ = shift_all(den_, neg);
  }
  Int g = int_gcd(num_.integer_content(), den_.integer_content());
  if (g > 1) {
    num_ = divide_by_int(num_, g);
    den_ = divide_by_int(den_, g);
  }
  if (den_.leading_term().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RingElem RingElem::delta() {
  return RingElem(LaurentPoly::v(-1) - LaurentPoly::v(1),
                  LaurentPoly::s(1) - LaurentPoly::s(-1));
}

RingElem RingElem::quantum_int(int k) {
  if (k < 0) return -quantum_int(-k);
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p += LaurentPoly::s(k - 1 - 2 * i);
  return RingElem(p);
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.num_ = -r.num_;
  return r;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  if (a.den_ == b.den_) return maybe_reduce(RingElem(a.num_ + b.num_, a.den_));
  return maybe_reduce(RingElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  if (a.den_ == b.den_) return maybe_reduce(RingElem(a.num_ - b.num_, a.den_));
  return maybe_reduce(RingElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  return maybe_reduce(RingElem(a.num_ * b.num_, a.den_ * b.den_));
}

RingElem operator/(const RingElem& a, const RingElem& b) {
  if (b.is_zero()) throw std::domain_error("RingElem: division by zero");
  return maybe_reduce(RingElem(a.num_ * b.den_, a.den_ * b.num_));
}

RingElem RingElem::pow(int e) const {
  if (e == 0) return RingElem(1);
  RingElem base = *this;
  if (e < 0) {
    if (is_zero()) throw std::domain_error("RingElem: negative power of zero");
    base = RingElem(den_, num_);
    e = -e;
  }
  RingElem r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

RingElem RingElem::bar() const {
  return RingElem(num_.bar(), den_.bar());
}

RingElem RingElem::substitute_v(int eps, int n) const {
  // Reduce first so a removable factor in the denominator cannot produce a
  // spurious vanishing.
  RingElem r = reduced();
  LaurentPoly den = r.den_.substitute_v(eps, n);
  if (den.is_zero())
    throw std::domain_error("substitute_v: denominator vanishes under substitution");
  return RingElem(r.num_.substitute_v(eps, n), std::move(den));
}

RingElem RingElem::substitute_s_neg_inv() const {
  return RingElem(num_.substitute_s_neg_inv(), den_.substitute_s_neg_inv());
}

std::optional<LaurentPoly> RingElem::to_integral() const {
  return num_.divide_exact(den_);
}

RingElem RingElem::reduced() const {
  if (num_.is_zero() || den_.is_one()) return *this;
  if (auto q = num_.divide_exact(den_)) return RingElem(std::move(*q));
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (g.is_one()) return *this;
  RingElem r;
  // gcd returns a common divisor, so both divisions are exact.
  r.num_ = num_.divide_exact(g).value();
  r.den_ = den_.divide_exact(g).value();
  r.normalize();
  return r;
}

std::string RingElem::to_string() const {
  RingElem r = reduced();
  if (!r.den_.is_one()) {
    // Display unit: centre the denominator's exponent ranges, so e.g. the
    // loop value shows as (-v + v^-1)/(s - s^-1) and a monomial denominator
    // folds into the numerator.
    int vmin = 0, vmax = 0, smin = 0, smax = 0;
    bool first = true;
    for (const auto& [e, c] : r.den_.terms()) {
      if (first) {
        vmin = vmax = e.v_exp;
        smin = smax = e.s_exp;
        first = false;
      } else {
        vmin = std::min(vmin, e.v_exp);
        vmax = std::max(vmax, e.v_exp);
        smin = std::min(smin, e.s_exp);
        smax = std::max(smax, e.s_exp);
      }
    }
    auto centre = [](int lo, int hi) {
      const int sum = lo + hi;
      return sum >= 0 ? sum / 2 : -((-sum + 1) / 2);
    };
    const Exponents shift{-centre(vmin, vmax), -centre(smin, smax)};
    if (shift.v_exp != 0 || shift.s_exp != 0) {
      r.num_ = shift_all(r.num_, shift);
      r.den_ = shift_all(r.den_, shift);
    }
  }
  if (r.den_.is_one()) return r.num_.to_string();
  std::string ns = r.num_.to_string();
  std::string ds = r.den_.to_string();
  if (!r.num_.is_single_term()) ns = "(" + ns + ")";
  if (!r.den_.is_single_term()) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace qskein
