#include "qskein/ring.hpp"
#include "qskein/skein.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qskein {

namespace {

std::optional<RingElem> as_scalar(const SkeinElement& e) {
  if (e.is_zero()) return RingElem(0);
  if (e.term_count() == 1 && e.terms().begin()->first == SkeinMonomial{})
    return e.terms().begin()->second;
  return std::nullopt;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected number");
    return Int(std::string(text.substr(start, pos - start)));
  }

  int parse_exponent() {
    bool parens = eat('(');
    bool neg = eat('-');
    Int n = parse_number();
    if (parens && !eat(')')) fail("expected ')'");
    if (n > 1000000) fail("exponent out of range");
    int e = static_cast<int>(n);
    return neg ? -e : e;
  }

  SkeinElement parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      SkeinElement e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SkeinElement(RingElem(parse_number()));
    if (c == 'v') {
      ++pos;
      return SkeinElement(RingElem::v());
    }
    if (c == 's') {
      ++pos;
      return SkeinElement(RingElem::s());
    }
    if (c == 'h') {
      ++pos;
      bool starred = pos < text.size() && text[pos] == 's';
      if (starred) ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected subscript after generator");
      Int n = parse_number();
      if (n > 10000) fail("generator subscript out of range");
      int k = static_cast<int>(n);
      return starred ? SkeinElement::hstar(k) : SkeinElement::h(k);
    }
    fail("expected value");
  }

  SkeinElement apply_power(const SkeinElement& base, int e) {
    if (e >= 0) {
      SkeinElement r(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    auto sc = as_scalar(base);
    if (!sc) fail("negative power of a generator expression");
    if (sc->is_zero()) throw std::domain_error("parse: negative power of zero");
    return SkeinElement(sc->pow(e));
  }

  SkeinElement parse_factor() {
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '-') {
        sign = -sign;
        ++pos;
      } else if (c == '+') {
        ++pos;
      } else {
        break;
      }
    }
    SkeinElement e = parse_primary();
    if (eat('^')) e = apply_power(e, parse_exponent());
    return sign == 1 ? e : -e;
  }

  SkeinElement parse_term() {
    SkeinElement e = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        e *= parse_factor();
      } else if (c == '/') {
        ++pos;
        SkeinElement d = parse_factor();
        auto sc = as_scalar(d);
        if (!sc) fail("division by a generator expression");
        if (sc->is_zero()) throw std::domain_error("parse: division by zero");
        e = e.scaled(sc->pow(-1));
      } else {
        break;
      }
    }
    return e;
  }

  SkeinElement parse_expr() {
    SkeinElement e = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        e += parse_term();
      } else if (c == '-') {
        ++pos;
        e -= parse_term();
      } else {
        break;
      }
    }
    return e;
  }

  SkeinElement parse_all() {
    SkeinElement e = parse_expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return e;
  }
};

}  // namespace

SkeinElement parse_skein_element(const std::string& text) {
  Parser p{text};
  return p.parse_all();
}

RingElem parse_ring_elem(const std::string& text) {
  SkeinElement e = parse_skein_element(text);
  auto sc = as_scalar(e);
  if (!sc) throw std::invalid_argument("parse error: expected a coefficient expression without generators");
  return *sc;
}

}  // namespace qskein
