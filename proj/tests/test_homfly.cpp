#include "qskein/homfly.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "rational_probe.hpp"

namespace {

using probe::Rat;
using qskein::Crossing;
using qskein::LinkDiagram;
using qskein::RingElem;

LinkDiagram braid(std::vector<int> word, int strands) {
  return LinkDiagram::from_braid_word(word, strands);
}

RingElem parse(const std::string& text) { return qskein::parse_ring_elem(text); }

// Plain numeric resolution at a fixed rational point: no memoization, no
// curl preprocessing, just the skein recursion on the first crossing the
// traversal reaches on its under channel, with descending diagrams scored
// as framed unlinks. Independent of the symbolic engine.
struct NaiveResolver {
  Rat v, s, z, delta;

  NaiveResolver(const Rat& v0, const Rat& s0)
      : v(v0), s(s0), z(s0 - Rat(1) / s0), delta((Rat(1) / v0 - v0) / z) {}

  static void rename(std::vector<Crossing>& cs, int from, int to) {
    for (Crossing& c : cs) {
      if (c.under_in == from) c.under_in = to;
      if (c.under_out == from) c.under_out = to;
      if (c.over_in == from) c.over_in = to;
      if (c.over_out == from) c.over_out = to;
    }
  }

  Rat pow(const Rat& base, int e) const { return probe::rat_pow(base, e); }

  Rat resolve(std::vector<Crossing> cs) const {
    // Walk components from their smallest edges; find the first crossing
    // whose first visit arrives on the under channel.
    std::map<int, std::pair<int, bool>> in;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
      in.emplace(cs[i].under_in, std::pair{i, true});
      in.emplace(cs[i].over_in, std::pair{i, false});
    }
    std::set<int> pending;
    for (const auto& [edge, port] : in) pending.insert(edge);
    std::vector<bool> seen(cs.size(), false);
    int violated = -1, components = 0;
    while (!pending.empty()) {
      ++components;
      const int start = *pending.begin();
      int e = start;
      do {
        pending.erase(e);
        const auto [ci, under] = in.at(e);
        if (!seen[ci]) {
          seen[ci] = true;
          if (under && violated < 0) violated = ci;
        }
        e = under ? cs[ci].under_out : cs[ci].over_out;
      } while (e != start);
    }

    if (violated < 0) {
      int wr = 0;
      for (const Crossing& c : cs) wr += c.sign;
      Rat val = pow(v, -wr);
      for (int i = 0; i < components; ++i) val *= delta;
      return val;
    }

    const Crossing c = cs[violated];
    std::vector<Crossing> switched = cs;
    switched[violated] =
        Crossing{-c.sign, c.over_in, c.over_out, c.under_in, c.under_out};

    std::vector<Crossing> smoothed = cs;
    smoothed.erase(smoothed.begin() + violated);
    Rat loops(1);
    if (c.under_in == c.over_out)
      loops *= delta;
    else
      rename(smoothed, c.over_out, c.under_in);
    if (c.over_in == c.under_out)
      loops *= delta;
    else
      rename(smoothed, c.under_out, c.over_in);

    const Rat sm = loops * resolve(std::move(smoothed));
    const Rat sw = resolve(std::move(switched));
    return c.sign > 0 ? Rat(sw + z * sm) : Rat(sw - z * sm);
  }

  Rat operator()(const LinkDiagram& d) const {
    Rat val = resolve(d.crossings());
    for (int i = 0; i < d.free_loops(); ++i) val *= delta;
    return val;
  }
};

}  // namespace

TEST_CASE("unknots and curls") {
  const RingElem d = RingElem::delta();
  CHECK(qskein::framed_homfly(LinkDiagram({}, 1)) == d);
  CHECK(qskein::framed_homfly(LinkDiagram({}, 2)) == d * d);
  CHECK(qskein::homfly_p(LinkDiagram({}, 1)) == RingElem(1));

  const LinkDiagram curl({Crossing{1, 0, 1, 1, 0}});
  CHECK(qskein::framed_homfly(curl) == RingElem::v(-1) * d);
  CHECK(qskein::homfly_p(curl) == RingElem(1));
  CHECK(qskein::framed_homfly(curl.mirrored()) == RingElem::v(1) * d);
}

TEST_CASE("torus knots and the figure eight") {
  const LinkDiagram trefoil = braid({1, 1, 1}, 2);
  CHECK(qskein::framed_homfly(trefoil).to_string() ==
        "(v^2 - s^2 - 1 - s^-2 + v^-2*s^2 + v^-2*s^-2)/(s - s^-1)");
  CHECK(qskein::homfly_p(trefoil).to_string() ==
        "-v^4 + v^2*s^2 + v^2*s^-2");

  const LinkDiagram fig8 = braid({1, -2, 1, -2}, 3);
  CHECK(qskein::homfly_p(fig8).to_string() ==
        "v^2 - s^2 + 1 - s^-2 + v^-2");
  // Amphichiral: fixed by bar conjugation.
  CHECK(qskein::homfly_p(fig8).bar() == qskein::homfly_p(fig8));
}

TEST_CASE("crossing exchange relation on closures of two-strand braids") {
  const RingElem z = RingElem::s() - RingElem::s(-1);
  const RingElem p_plus = qskein::homfly_p(braid({1, 1, 1}, 2));
  const RingElem p_minus = qskein::homfly_p(braid({1, 1, -1}, 2));
  const RingElem p_zero = qskein::homfly_p(braid({1, 1}, 2));
  CHECK(p_minus == RingElem(1));
  CHECK(RingElem::v(-1) * p_plus - RingElem::v(1) * p_minus == z * p_zero);
}

TEST_CASE("framing and mirror behavior") {
  const LinkDiagram trefoil = braid({1, 1, 1}, 2);
  const RingElem base = qskein::framed_homfly(trefoil);
  CHECK(qskein::framed_homfly(trefoil.with_positive_kink(trefoil.first_edge())) ==
        RingElem::v(-1) * base);
  CHECK(qskein::framed_homfly(trefoil.with_finger_move(trefoil.first_edge())) ==
        base);
  CHECK(qskein::framed_homfly(trefoil.mirrored()) == base.bar());

  const LinkDiagram fig8 = braid({1, -2, 1, -2}, 3);
  CHECK(qskein::framed_homfly(fig8.mirrored()) == qskein::framed_homfly(fig8).bar());
}

TEST_CASE("crossing cap") {
  const LinkDiagram trefoil = braid({1, 1, 1}, 2);
  CHECK_THROWS_AS(qskein::framed_homfly(trefoil, 2), std::invalid_argument);
  CHECK_NOTHROW(qskein::framed_homfly(trefoil, 3));
}

TEST_CASE("numeric cross-check of the symbolic engine") {
  const std::vector<LinkDiagram> diagrams = {
      braid({1, 1, 1}, 2),
      braid({1, -2, 1, -2}, 3),
      braid({1, 1}, 2),
      braid({-1, 2, -1, 2, 2}, 3),
      braid({1, 1, 1}, 2).with_positive_kink(0),
      LinkDiagram({Crossing{1, 0, 1, 1, 0}}, 1),
  };
  std::mt19937_64 rng(90210);
  for (const LinkDiagram& d : diagrams) {
    const RingElem symbolic = qskein::framed_homfly(d);
    for (int trial = 0; trial < 10; ++trial) {
      const Rat v0 = probe::random_point(rng);
      const Rat s0 = probe::random_point(rng);
      const NaiveResolver naive(v0, s0);
      CHECK(probe::eval_ring(symbolic, v0, s0) == naive(d));
    }
  }
}

TEST_CASE("two-strand satellite invariant") {
  CHECK(qskein::k_invariant_box_box(LinkDiagram({}, 1)) == RingElem(1));

  // Amphichirality of the figure eight survives the satellite.
  const RingElem k8 = qskein::k_invariant_box_box(braid({1, -2, 1, -2}, 3));
  CHECK(k8.bar() == k8);
  const auto integral = k8.to_integral();
  REQUIRE(integral.has_value());
  CHECK(integral->coeff(0, 0) == 11);
}
