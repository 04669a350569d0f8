#include "qskein/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

#include "qskein/conversion.hpp"
#include "qskein/evaluation.hpp"
#include "qskein/homfly.hpp"
#include "qskein/qbasis.hpp"

namespace qskein {
namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

LaurentPoly random_laurent(Rng& g, int max_terms, int max_exp, int max_coeff) {
  LaurentPoly p;
  const int n = rand_int(g, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    int c = rand_int(g, -max_coeff, max_coeff);
    if (c == 0) c = 1;
    p += LaurentPoly::term(Int(c), rand_int(g, -max_exp, max_exp),
                           rand_int(g, -max_exp, max_exp));
  }
  return p;
}

RingElem random_ring(Rng& g) {
  LaurentPoly num = random_laurent(g, 3, 2, 3);
  LaurentPoly den(1);
  switch (rand_int(g, 0, 3)) {
    case 1: den = LaurentPoly::s() - LaurentPoly::s(-1); break;
    case 2: den = LaurentPoly::v(-1); break;
    case 3: den = LaurentPoly(1) + LaurentPoly::s(2); break;
    default: break;
  }
  return RingElem(std::move(num), std::move(den));
}

Partition random_partition(Rng& g, int max_size) {
  int budget = rand_int(g, 0, max_size);
  std::vector<int> parts;
  int prev = budget;
  while (budget > 0) {
    const int p = rand_int(g, 1, std::min(prev, budget));
    parts.push_back(p);
    budget -= p;
    prev = p;
  }
  return Partition(std::move(parts));
}

SkeinElement random_skein(Rng& g, int max_size, int max_terms = 3) {
  SkeinElement x;
  const int n = rand_int(g, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    SkeinMonomial m{random_partition(g, max_size), random_partition(g, max_size)};
    x += SkeinElement(m, RingElem(random_laurent(g, 2, 1, 2)));
  }
  return x;
}

// All (lambda, mu) with |lambda| + |mu| <= bound.
std::vector<BasisKey> small_pairs(int bound) {
  std::vector<BasisKey> keys;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m + n <= bound; ++m)
      for (const Partition& l : Partition::all_of(n))
        for (const Partition& mu : Partition::all_of(m))
          keys.emplace_back(l, mu);
  return keys;
}

struct Checker {
  SuiteResult& r;
  void operator()(bool ok, const std::string& msg) const {
    if (ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.failures.size() < 20) r.failures.push_back(msg);
    }
  }
};

void suite_ring(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed);
  const RingElem z = RingElem::s() - RingElem::s(-1);
  check(RingElem::delta() * z == RingElem::v(-1) - RingElem::v(),
        "delta * (s - s^-1) != v^-1 - v");
  for (int k = 0; k <= 8; ++k) {
    check(RingElem::quantum_int(k) * z == RingElem::s(k) - RingElem::s(-k),
          "[k](s - s^-1) != s^k - s^-k at k=" + std::to_string(k));
    check(RingElem::quantum_int(-k) == -RingElem::quantum_int(k),
          "[-k] != -[k] at k=" + std::to_string(k));
  }
  for (int i = 0; i < o.cases; ++i) {
    const RingElem a = random_ring(g), b = random_ring(g), c = random_ring(g);
    const std::string tag = " (case " + std::to_string(i) + ")";
    check((a + b) * c == a * c + b * c, "distributivity failed" + tag);
    check((a - a).is_zero(), "a - a != 0" + tag);
    check(a.bar().bar() == a, "bar not involutive" + tag);
    check((a * b).bar() == a.bar() * b.bar(), "bar not multiplicative" + tag);
    check(a.substitute_s_neg_inv().substitute_s_neg_inv() == a,
          "s -> -s^-1 not involutive" + tag);
    if (!b.is_zero()) check(a / b * b == a, "division round trip failed" + tag);
    check(a == a.reduced(), "reduction changed the value" + tag);
    check(parse_ring_elem(a.to_string()) == a, "print/parse round trip failed" + tag);
  }
}

void suite_skein(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed + 1);
  for (int i = 0; i < o.cases; ++i) {
    const SkeinElement x = random_skein(g, o.max_size);
    const SkeinElement y = random_skein(g, o.max_size);
    const SkeinElement w = random_skein(g, o.max_size, 2);
    const std::string tag = " (case " + std::to_string(i) + ")";
    check(parse_skein_element(x.to_string()) == x,
          "print/parse round trip failed" + tag);
    check(x.star().star() == x, "star not involutive" + tag);
    check(x.mirror().mirror() == x, "mirror not involutive" + tag);
    check(x.star().mirror() == x.mirror().star(),
          "star and mirror do not commute" + tag);
    check((x * y).star() == x.star() * y.star(),
          "star not multiplicative" + tag);
    check(x * y == y * x, "product not commutative" + tag);
    check(x * (y + w) == x * y + x * w, "product not bilinear" + tag);
  }
  for (int a = 0; a <= o.max_size; ++a) {
    for (int b = 0; b <= o.max_size; ++b) {
      int ch = 0;
      const SkeinElement prod = SkeinElement::h(a) * SkeinElement::hstar(b);
      check(prod.pure_charge(&ch) && ch == a - b,
            "charge of h" + std::to_string(a) + "*hs" + std::to_string(b) +
                " is not " + std::to_string(a - b));
    }
  }
}

void suite_qbasis(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed + 2);
  check(q_element(Partition(), Partition()) == SkeinElement(1),
        "Q of the empty pair != 1");
  for (const auto& [l, m] : small_pairs(o.max_size)) {
    const std::string tag = " at (" + l.to_string() + ", " + m.to_string() + ")";
    check(eigenvalue_from_index(index_vector(l, m)) == eigenvalue(m, l),
          "index-vector eigenvalue mismatch" + tag);
    check(q_element(l, m).star() == q_element(m, l),
          "star does not swap the pair" + tag);
    const NormalForm nf = normalize_index_vector(index_vector(l, m));
    check(!nf.is_zero && nf.sign == 1 && nf.lambda == l && nf.mu == m,
          "normalization not the identity on a standard vector" + tag);
  }
  const int span = o.max_size + 2;
  for (int i = 0; i < o.cases; ++i) {
    IndexVector w;
    const int kstar = rand_int(g, 0, 2), k = rand_int(g, 0, 2);
    for (int t = 0; t < kstar; ++t) w.starred.push_back(rand_int(g, -span, span));
    for (int t = 0; t < k; ++t) w.plain.push_back(rand_int(g, -span, span));
    const std::string tag = " at w = " + w.to_string();
    const SkeinElement det = TemplateMatrix(w).determinant();
    const NormalForm nf = normalize_index_vector(w);
    if (nf.is_zero) {
      check(det.is_zero(), "determinant nonzero on a degenerate vector" + tag);
    } else {
      SkeinElement expect = q_element(nf.lambda, nf.mu);
      if (nf.sign < 0) expect = -expect;
      check(det == expect, "determinant != signed normal form" + tag);
    }
  }
}

void suite_conversion(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed + 3);
  for (const auto& [l, m] : small_pairs(o.max_size)) {
    const std::string tag = " at (" + l.to_string() + ", " + m.to_string() + ")";
    QExpansion single;
    single.coeffs[{l, m}] = RingElem(1);
    check(expand_in_q(q_element(l, m)) == single,
          "expansion of a basis element is not itself" + tag);
    check(meridian_map(q_element(l, m), MeridianKind::kPositive) ==
              q_element(l, m).scaled(eigenvalue(l, m)),
          "positive meridian not diagonal" + tag);
    check(meridian_map(q_element(l, m), MeridianKind::kReversed) ==
              q_element(l, m).scaled(eigenvalue(m, l)),
          "reversed meridian not diagonal" + tag);
  }
  for (int i = 0; i < o.cases; ++i) {
    const std::string tag = " (case " + std::to_string(i) + ")";
    QExpansion x;
    const int picks = rand_int(g, 1, 3);
    for (int t = 0; t < picks; ++t) {
      const int charge = rand_int(g, -1, 1);
      const auto keys = enumerate_basis(charge, o.max_size);
      const auto& key = keys[static_cast<size_t>(rand_int(
          g, 0, static_cast<int>(keys.size()) - 1))];
      LaurentPoly c = random_laurent(g, 2, 1, 2);
      if (c.is_zero()) c = LaurentPoly(1);
      auto [it, inserted] = x.coeffs.emplace(key, RingElem(c));
      if (!inserted) it->second += RingElem(c);
      if (it->second.is_zero()) x.coeffs.erase(it);
    }
    check(expand_in_q(x.recombine()) == x, "expansion round trip failed" + tag);
  }
  for (const auto& [l1, m1] : small_pairs(2)) {
    for (const auto& [l2, m2] : small_pairs(2)) {
      const std::string tag = " at (" + l1.to_string() + "," + m1.to_string() +
                              ") x (" + l2.to_string() + "," + m2.to_string() + ")";
      try {
        multiply_in_q(l1, m1, l2, m2);
        ++r.passed;
      } catch (const std::logic_error& e) {
        check(false, std::string("structure constants: ") + e.what() + tag);
      }
    }
  }
}

void suite_evaluation(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed + 4);
  check(eval_h(0).is_one(), "<h_0> != 1");
  check(eval_h(1) == RingElem::delta(), "<h_1> != delta");
  for (int i = 0; i < o.cases; ++i) {
    const SkeinElement x = random_skein(g, o.max_size, 2);
    const SkeinElement y = random_skein(g, o.max_size, 2);
    check(eval_element(x * y) == eval_element(x) * eval_element(y),
          "evaluation not multiplicative (case " + std::to_string(i) + ")");
  }
  for (int n = 0; n <= o.max_size + 1; ++n) {
    for (const Partition& l : Partition::all_of(n)) {
      check(macdonald_schur(l) == eval_element(q_element(l, Partition())),
            "hook-content product mismatch at " + l.to_string());
    }
  }
  for (const auto& [l, m] : small_pairs(o.max_size)) {
    const std::string tag = " at (" + l.to_string() + ", " + m.to_string() + ")";
    check(eval_element(q_element(l, m)).substitute_s_neg_inv() ==
              eval_element(q_element(l.conjugate(), m.conjugate())),
          "conjugate symmetry failed" + tag);
    const int n_cap = l.part(1) + m.part(1);
    try {
      specialized_identity_pair(l, m, n_cap);
      ++r.passed;
    } catch (const std::logic_error& e) {
      check(false, std::string("specialization: ") + e.what() + tag);
    }
  }
  for (int n_cap = 0; n_cap <= 5; ++n_cap) {
    for (int n = 0; n <= n_cap; ++n) {
      try {
        specialized_identity_h(n, n_cap);
        ++r.passed;
      } catch (const std::logic_error& e) {
        check(false, std::string("generator specialization: ") + e.what() +
                         " at n=" + std::to_string(n) +
                         ", N=" + std::to_string(n_cap));
      }
    }
  }
}

void suite_homfly(const VerifyOptions& o, SuiteResult& r) {
  Checker check{r};
  Rng g(o.seed + 5);
  check(framed_homfly(LinkDiagram({}, 1)) == RingElem::delta(),
        "<unknot> != delta");
  check(framed_homfly(LinkDiagram({}, 2)) == RingElem::delta().pow(2),
        "<two circles> != delta^2");
  check(homfly_p(LinkDiagram::from_braid_word({}, 1)).is_one(),
        "P(unknot) != 1");
  const int cases = std::min(o.cases, 25);
  for (int i = 0; i < cases; ++i) {
    const int strands = rand_int(g, 2, 3);
    const int len = rand_int(g, 1, 6);
    std::vector<int> word;
    for (int t = 0; t < len; ++t) {
      const int k = rand_int(g, 1, strands - 1);
      word.push_back(rand_int(g, 0, 1) ? k : -k);
    }
    const LinkDiagram d = LinkDiagram::from_braid_word(word, strands);
    const RingElem f = framed_homfly(d, o.max_crossings);
    std::string tag = " (word";
    for (int letter : word) tag += " " + std::to_string(letter);
    tag += ")";
    check(d.writhe() == static_cast<int>(word.size()) -
                            2 * static_cast<int>(std::count_if(
                                    word.begin(), word.end(),
                                    [](int letter) { return letter < 0; })),
          "writhe != algebraic length" + tag);
    if (d.crossing_count() > 0) {
      const int e = d.first_edge();
      check(framed_homfly(d.with_positive_kink(e), o.max_crossings) ==
                RingElem::v(-1) * f,
            "positive curl factor != v^-1" + tag);
      check(framed_homfly(d.with_finger_move(e), o.max_crossings) == f,
            "Reidemeister-II insertion changed the value" + tag);
    }
    check(framed_homfly(d.mirrored(), o.max_crossings) == f.bar(),
          "mirror != bar conjugate" + tag);
    std::vector<int> conj(word.begin() + 1, word.end());
    conj.push_back(word.front());
    check(framed_homfly(LinkDiagram::from_braid_word(conj, strands),
                        o.max_crossings) == f,
          "braid conjugation changed the value" + tag);
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "ring", "skein", "q-basis", "conversion", "evaluation", "homfly"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "all") {
    SuiteResult total;
    total.suite = "all";
    for (const std::string& n : verify_suite_names()) {
      SuiteResult r = run_suite(n, opts);
      total.passed += r.passed;
      total.failed += r.failed;
      for (std::string& f : r.failures)
        total.failures.push_back(n + ": " + std::move(f));
    }
    return total;
  }
  SuiteResult r;
  r.suite = name;
  if (name == "ring") suite_ring(opts, r);
  else if (name == "skein") suite_skein(opts, r);
  else if (name == "q-basis") suite_qbasis(opts, r);
  else if (name == "conversion") suite_conversion(opts, r);
  else if (name == "evaluation") suite_evaluation(opts, r);
  else if (name == "homfly") suite_homfly(opts, r);
  else throw std::invalid_argument("unknown suite: " + name);
  return r;
}

}  // namespace qskein
