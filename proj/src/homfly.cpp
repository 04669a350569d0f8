#include "qskein/homfly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qskein {
namespace {

void rename_edge(std::vector<Crossing>& cs, int from, int to) {
  for (Crossing& c : cs) {
    if (c.under_in == from) c.under_in = to;
    if (c.under_out == from) c.under_out = to;
    if (c.over_in == from) c.over_in = to;
    if (c.over_out == from) c.over_out = to;
  }
}

struct Analysis {
  int violated = -1;  // first crossing reached on its under channel
  int components = 0;
};

// Resolution engine. Memo keys are crossing lists after curl removal, sorted
// by under-in edge (unique per crossing), so the two orders of resolving a
// pair of crossings land on the same entry.
struct Engine {
  RingElem z = RingElem::s() - RingElem::s(-1);
  RingElem delta = RingElem::delta();
  std::unordered_map<std::string, RingElem> memo;

  static std::string key(std::vector<Crossing> cs) {
    std::sort(cs.begin(), cs.end(), [](const Crossing& a, const Crossing& b) {
      return a.under_in < b.under_in;
    });
    std::string k(cs.size() * sizeof(Crossing), '\0');
    if (!cs.empty()) std::memcpy(k.data(), cs.data(), k.size());
    return k;
  }

  // Removes curls (factor v^-sign) and any circles they leave behind
  // (factor delta); returns the extracted factor.
  RingElem simplify(std::vector<Crossing>& cs) {
    RingElem factor(1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < cs.size(); ++i) {
        const Crossing c = cs[i];
        int keep, lose;
        if (c.under_out == c.over_in) {
          keep = c.under_in;
          lose = c.over_out;
        } else if (c.over_out == c.under_in) {
          keep = c.over_in;
          lose = c.under_out;
        } else {
          continue;
        }
        factor *= RingElem::v(-c.sign);
        cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
        if (keep == lose) {
          factor *= delta;
        } else {
          rename_edge(cs, lose, keep);
        }
        changed = true;
        break;
      }
    }
    return factor;
  }

  // Walks every component from its smallest edge id. A diagram is descending
  // when each crossing is first reached on its over channel; descending
  // diagrams are unlinks and evaluate directly.
  static Analysis analyze(const std::vector<Crossing>& cs) {
    std::map<int, std::pair<int, bool>> in;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
      in.emplace(cs[i].under_in, std::pair{i, true});
      in.emplace(cs[i].over_in, std::pair{i, false});
    }
    std::set<int> unvisited;
    for (const auto& [edge, port] : in) unvisited.insert(edge);
    std::vector<char> seen(cs.size(), 0);
    Analysis a;
    while (!unvisited.empty()) {
      ++a.components;
      const int start = *unvisited.begin();
      int e = start;
      do {
        unvisited.erase(e);
        auto [ci, under] = in.at(e);
        if (!seen[ci]) {
          seen[ci] = 1;
          if (under && a.violated < 0) a.violated = ci;
        }
        e = under ? cs[ci].under_out : cs[ci].over_out;
      } while (e != start);
    }
    return a;
  }

  RingElem eval(std::vector<Crossing> cs) {
    const RingElem factor = simplify(cs);
    if (cs.empty()) return factor;
    std::string k = key(cs);
    if (auto it = memo.find(k); it != memo.end()) return factor * it->second;

    const Analysis a = analyze(cs);
    RingElem val;
    if (a.violated < 0) {
      int wr = 0;
      for (const Crossing& c : cs) wr += c.sign;
      val = RingElem::v(-wr) * delta.pow(a.components);
    } else {
      const Crossing c = cs[a.violated];
      std::vector<Crossing> switched = cs;
      switched[a.violated] =
          Crossing{-c.sign, c.over_in, c.over_out, c.under_in, c.under_out};
      std::vector<Crossing> smoothed = cs;
      smoothed.erase(smoothed.begin() + a.violated);
      RingElem loops(1);
      if (c.under_in == c.over_out) {
        loops *= delta;
      } else {
        rename_edge(smoothed, c.over_out, c.under_in);
      }
      if (c.over_in == c.under_out) {
        loops *= delta;
      } else {
        rename_edge(smoothed, c.under_out, c.over_in);
      }
      const RingElem smoothed_val = loops * eval(std::move(smoothed));
      const RingElem switched_val = eval(std::move(switched));
      val = c.sign > 0 ? switched_val + z * smoothed_val
                       : switched_val - z * smoothed_val;
    }
    memo.emplace(std::move(k), val);
    return factor * val;
  }
};

}  // namespace

RingElem framed_homfly(const LinkDiagram& d, int max_crossings) {
  if (d.crossing_count() > max_crossings)
    throw std::invalid_argument(
        "diagram has " + std::to_string(d.crossing_count()) +
        " crossings, above the cap of " + std::to_string(max_crossings) +
        "; raise max_crossings to evaluate it");
  Engine eng;
  return eng.delta.pow(d.free_loops()) * eng.eval(d.crossings());
}

RingElem homfly_p(const LinkDiagram& d, int max_crossings) {
  return RingElem::v(d.writhe()) * framed_homfly(d, max_crossings) /
         RingElem::delta();
}

RingElem k_invariant_box_box(const LinkDiagram& d, int max_crossings) {
  const RingElem rp = framed_homfly(d.reverse_parallel(), max_crossings);
  const RingElem dd = RingElem::delta() * RingElem::delta();
  return (rp - RingElem(1)) / (dd - RingElem(1));
}

}  // namespace qskein
