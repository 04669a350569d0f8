#include "qskein/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qskein {

namespace {

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

// Univariate polynomials over Z, dense, index = degree. Normalised form has a
// nonzero back(); the zero polynomial is the empty vector.
using UniPoly = std::vector<Int>;

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  uni_trim(r);
  return r;
}

UniPoly uni_scale(const UniPoly& a, const Int& c) {
  if (c == 0) return {};
  UniPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

void uni_sub_inplace(UniPoly& a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  uni_trim(a);
}

Int uni_content(const UniPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

UniPoly uni_divide_by_int(const UniPoly& p, const Int& c) {
  UniPoly r = p;
  for (auto& x : r) x /= c;
  return r;
}

// Exact division; caller guarantees divisibility (used to strip contents and
// PRS scale factors).
UniPoly uni_divide_exact(const UniPoly& a, const UniPoly& b) {
  if (a.empty()) return {};
  UniPoly r = a;
  UniPoly q(a.size() - b.size() + 1, Int(0));
  while (!r.empty()) {
    std::size_t d = r.size() - b.size();
    Int c = r.back() / b.back();
    q[d] = c;
    UniPoly t(d, Int(0));
    t.insert(t.end(), b.begin(), b.end());
    uni_sub_inplace(r, uni_scale(t, c));
  }
  return q;
}

UniPoly uni_primitive(const UniPoly& p) {
  Int c = uni_content(p);
  if (c == 0) return {};
  UniPoly r = uni_divide_by_int(p, c);
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

// Sign-normalised copy that keeps the integer content, so gcd(p, 0) is an
// honest divisor of p.
UniPoly uni_canonical(UniPoly p) {
  uni_trim(p);
  if (!p.empty() && p.back() < 0)
    for (auto& x : p) x = -x;
  return p;
}

// Pseudo-remainder of a by b, deg a >= deg b, b nonzero.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t d = a.size() - b.size();
    Int lc = a.back();
    a = uni_scale(a, b.back());
    UniPoly t(d, Int(0));
    t.insert(t.end(), b.begin(), b.end());
    uni_sub_inplace(a, uni_scale(t, lc));
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  if (a.empty()) return uni_canonical(std::move(b));
  if (b.empty()) return uni_canonical(std::move(a));
  Int ca = uni_content(a), cb = uni_content(b);
  Int cg = int_gcd(ca, cb);
  a = uni_divide_by_int(a, ca);
  b = uni_divide_by_int(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UniPoly r = uni_prem(a, b);
    a = std::move(b);
    b = uni_primitive(r);
  }
  UniPoly g = uni_scale(a, cg);
  if (g.back() < 0)
    for (auto& x : g) x = -x;
  return g;
}

// Bivariate polynomials as elements of (Z[s])[v], dense in v.
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UniPoly bi_content(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p) g = uni_gcd(g, c);
  return g;
}

BiPoly bi_divide_content(const BiPoly& p, const UniPoly& c) {
  BiPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(x.empty() ? UniPoly{} : uni_divide_exact(x, c));
  return r;
}

BiPoly bi_mul_uni(const BiPoly& p, const UniPoly& c) {
  BiPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(uni_mul(x, c));
  bi_trim(r);
  return r;
}

void bi_sub_inplace(BiPoly& a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    UniPoly t = a[i];
    uni_sub_inplace(t, b[i]);
    a[i] = std::move(t);
  }
  bi_trim(a);
}

BiPoly bi_shift_v(const BiPoly& p, std::size_t k) {
  BiPoly r(k);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

// Pseudo-remainder in (Z[s])[v].
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    UniPoly lc_a = a.back();
    std::size_t d = a.size() - b.size();
    a = bi_mul_uni(a, b.back());
    BiPoly t = bi_mul_uni(bi_shift_v(b, d), lc_a);
    bi_sub_inplace(a, t);
  }
  return a;
}

BiPoly bi_primitive(const BiPoly& p) {
  if (p.empty()) return {};
  return bi_divide_content(p, bi_content(p));
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  bi_trim(a);
  bi_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UniPoly ca = bi_content(a), cb = bi_content(b);
  UniPoly cg = uni_gcd(ca, cb);
  a = bi_divide_content(a, ca);
  b = bi_divide_content(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = bi_prem(a, b);
    a = std::move(b);
    b = bi_primitive(r);
  }
  return bi_mul_uni(a, cg);
}

}  // namespace

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_[{0, 0}] = std::move(c);
}

LaurentPoly LaurentPoly::term(Int coeff, int v_exp, int s_exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[{v_exp, s_exp}] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Int LaurentPoly::coeff(int v_exp, int s_exp) const {
  auto it = terms_.find({v_exp, s_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{-e.v_exp, -e.s_exp}] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_v(int eps, int n) const {
  if (eps != 1 && eps != -1) throw std::invalid_argument("substitute_v: eps must be ±1");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    Int cc = (eps == -1 && (e.v_exp % 2 != 0)) ? Int(-c) : c;
    r.add_term({0, e.v_exp * n + e.s_exp}, cc);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_s_neg_inv() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    Int cc = (e.s_exp % 2 != 0) ? Int(-c) : c;
    r.terms_[{e.v_exp, -e.s_exp}] = std::move(cc);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  if (is_zero()) return LaurentPoly{};
  // Shift both operands to ordinary polynomials; exactness is unaffected
  // because monomials are units.
  Exponents sa = min_exponents(), sb = divisor.min_exponents();
  LaurentPoly r, q;
  for (const auto& [e, c] : terms_) r.terms_[e - sa] = c;
  LaurentPoly b;
  for (const auto& [e, c] : divisor.terms_) b.terms_[e - sb] = c;
  auto [eb, cb] = b.leading_term();
  while (!r.is_zero()) {
    auto [er, cr] = r.leading_term();
    Exponents d = er - eb;
    if (d.v_exp < 0 || d.s_exp < 0) return std::nullopt;
    if (cr % cb != 0) return std::nullopt;
    LaurentPoly t = term(cr / cb, d.v_exp, d.s_exp);
    q += t;
    r -= t * b;
  }
  Exponents shift = sa - sb;
  LaurentPoly out;
  for (const auto& [e, c] : q.terms_) out.terms_[e + shift] = c;
  return out;
}

Int LaurentPoly::integer_content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  int mv = terms_.begin()->first.v_exp;
  int ms = terms_.begin()->first.s_exp;
  for (const auto& [e, c] : terms_) {
    mv = std::min(mv, e.v_exp);
    ms = std::min(ms, e.s_exp);
  }
  return {mv, ms};
}

std::pair<Exponents, Int> LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  // Convert to (Z[s])[v] with nonnegative exponents, run a primitive PRS.
  auto to_bi = [](const LaurentPoly& p) -> BiPoly {
    if (p.is_zero()) return {};
    Exponents m = p.min_exponents();
    BiPoly r;
    for (const auto& [e, c] : p.terms_) {
      std::size_t dv = static_cast<std::size_t>(e.v_exp - m.v_exp);
      std::size_t ds = static_cast<std::size_t>(e.s_exp - m.s_exp);
      if (r.size() <= dv) r.resize(dv + 1);
      if (r[dv].size() <= ds) r[dv].resize(ds + 1, Int(0));
      r[dv][ds] = c;
    }
    for (auto& u : r) uni_trim(u);
    bi_trim(r);
    return r;
  };
  BiPoly g = bi_gcd(to_bi(a), to_bi(b));
  LaurentPoly out;
  for (std::size_t dv = 0; dv < g.size(); ++dv)
    for (std::size_t ds = 0; ds < g[dv].size(); ++ds)
      if (g[dv][ds] != 0) out.terms_[{static_cast<int>(dv), static_cast<int>(ds)}] = g[dv][ds];
  if (out.is_zero()) return out;
  Exponents m = out.min_exponents();
  LaurentPoly shifted;
  bool flip = out.leading_term().second < 0;
  for (const auto& [e, c] : out.terms_) shifted.terms_[e - m] = flip ? Int(-c) : c;
  return shifted;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending (v_exp, s_exp) order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    if (e.v_exp != 0) {
      mono += 'v';
      if (e.v_exp != 1) mono += '^' + std::to_string(e.v_exp);
    }
    if (e.s_exp != 0) {
      if (!mono.empty()) mono += '*';
      mono += 's';
      if (e.s_exp != 1) mono += '^' + std::to_string(e.s_exp);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace qskein
