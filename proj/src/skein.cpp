#include "qskein/skein.hpp"

#include <algorithm>
#include <sstream>

namespace qskein {

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

// True when a is lexicographically larger than b.
bool lex_greater(const Partition& a, const Partition& b) {
  return b < a;
}

}  // namespace

SkeinMonomial SkeinMonomial::merged(const SkeinMonomial& o) const {
  return {merge_parts(h, o.h), merge_parts(hs, o.hs)};
}

bool operator<(const SkeinMonomial& a, const SkeinMonomial& b) {
  int ta = a.plain_degree() + a.starred_degree();
  int tb = b.plain_degree() + b.starred_degree();
  if (ta != tb) return ta > tb;
  if (a.h != b.h) return lex_greater(a.h, b.h);
  return lex_greater(a.hs, b.hs);
}

std::string SkeinMonomial::to_string() const {
  std::string out;
  for (int p : h.parts()) {
    if (!out.empty()) out += '*';
    out += 'h' + std::to_string(p);
  }
  for (int p : hs.parts()) {
    if (!out.empty()) out += '*';
    out += "hs" + std::to_string(p);
  }
  return out;
}

SkeinElement::SkeinElement(RingElem c) {
  if (!c.is_zero()) terms_[SkeinMonomial{}] = std::move(c);
}

SkeinElement::SkeinElement(SkeinMonomial m, RingElem c) {
  if (!c.is_zero()) terms_[std::move(m)] = std::move(c);
}

SkeinElement SkeinElement::h(int n) {
  if (n < 0) return SkeinElement{};
  if (n == 0) return SkeinElement(1);
  return SkeinElement(SkeinMonomial{Partition({n}), {}});
}

SkeinElement SkeinElement::hstar(int n) {
  if (n < 0) return SkeinElement{};
  if (n == 0) return SkeinElement(1);
  return SkeinElement(SkeinMonomial{{}, Partition({n})});
}

RingElem SkeinElement::coeff(const SkeinMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingElem(0) : it->second;
}

void SkeinElement::add_term(const SkeinMonomial& m, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkeinElement SkeinElement::operator-() const {
  SkeinElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
  SkeinElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.merged(mb), ca * cb);
  return r;
}

SkeinElement SkeinElement::scaled(const RingElem& c) const {
  SkeinElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

SkeinElement SkeinElement::star() const {
  SkeinElement r;
  for (const auto& [m, c] : terms_) r.terms_[{m.hs, m.h}] = c;
  return r;
}

SkeinElement SkeinElement::mirror() const {
  SkeinElement r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c.bar();
  return r;
}

int SkeinElement::max_plain_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.plain_degree());
  return d;
}

int SkeinElement::max_starred_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.starred_degree());
  return d;
}

bool SkeinElement::pure_charge(int* charge) const {
  if (terms_.empty()) {
    if (charge) *charge = 0;
    return true;
  }
  int c0 = terms_.begin()->first.charge();
  for (const auto& [m, c] : terms_)
    if (m.charge() != c0) return false;
  if (charge) *charge = c0;
  return true;
}

std::map<int, SkeinElement> SkeinElement::charge_split() const {
  std::map<int, SkeinElement> out;
  for (const auto& [m, c] : terms_) out[m.charge()].add_term(m, c);
  return out;
}

std::string SkeinElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Pull a leading minus out of plainly negative coefficients.
    RingElem shown = c;
    bool neg = false;
    RingElem r = c.reduced();
    if (r.num().is_single_term() && r.num().leading_term().second < 0) {
      neg = true;
      shown = -c;
    }
    std::string cs = shown.to_string();
    std::string mono = m.to_string();
    std::string piece;
    if (mono.empty()) {
      piece = cs;
    } else if (cs == "1") {
      piece = mono;
    } else {
      bool wrap = cs.find(' ') != std::string::npos;
      piece = (wrap ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (first) {
      os << (neg ? "-" : "") << piece;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << piece;
    }
  }
  return os.str();
}

}  // namespace qskein
