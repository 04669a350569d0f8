#include "qskein/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace qskein {
namespace {

// in-port lookup: edge -> (crossing index, entering on under channel)
std::map<int, std::pair<int, bool>> in_ports(const std::vector<Crossing>& cs) {
  std::map<int, std::pair<int, bool>> m;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    m.emplace(cs[i].under_in, std::pair{i, true});
    m.emplace(cs[i].over_in, std::pair{i, false});
  }
  return m;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  validate();
}

void LinkDiagram::validate() const {
  if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
  std::map<int, int> in_count, out_count;
  for (const Crossing& c : crossings_) {
    if (c.sign != 1 && c.sign != -1)
      throw std::invalid_argument("crossing sign must be +1 or -1");
    ++in_count[c.under_in];
    ++in_count[c.over_in];
    ++out_count[c.under_out];
    ++out_count[c.over_out];
  }
  for (const auto& [edge, n] : in_count) {
    if (n != 1 || out_count[edge] != 1)
      throw std::invalid_argument("edge " + std::to_string(edge) +
                                  " is not wired exactly once in and once out");
  }
  for (const auto& [edge, n] : out_count) {
    if (in_count.find(edge) == in_count.end())
      throw std::invalid_argument("edge " + std::to_string(edge) +
                                  " is not wired exactly once in and once out");
  }
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign;
  return w;
}

int LinkDiagram::component_count() const {
  auto in = in_ports(crossings_);
  std::set<int> unvisited;
  for (const auto& [edge, port] : in) unvisited.insert(edge);
  int components = free_loops_;
  while (!unvisited.empty()) {
    ++components;
    int start = *unvisited.begin();
    int e = start;
    do {
      unvisited.erase(e);
      auto [ci, under] = in.at(e);
      e = under ? crossings_[ci].under_out : crossings_[ci].over_out;
    } while (e != start);
  }
  return components;
}

int LinkDiagram::first_edge() const {
  if (crossings_.empty()) throw std::logic_error("diagram has no crossings");
  int best = crossings_[0].under_in;
  for (const Crossing& c : crossings_) best = std::min({best, c.under_in, c.over_in});
  return best;
}

LinkDiagram LinkDiagram::from_braid_word(const std::vector<int>& word, int strands) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<int> current(strands);
  for (int p = 0; p < strands; ++p) current[p] = p;
  int next_id = strands;
  std::vector<Crossing> cs;
  for (int letter : word) {
    int k = letter > 0 ? letter : -letter;
    if (k < 1 || k >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(letter) +
                                  " out of range for " + std::to_string(strands) +
                                  " strands");
    int p = k - 1;
    int a = current[p], b = current[p + 1];
    int fresh_p = next_id++, fresh_p1 = next_id++;
    if (letter > 0) {
      cs.push_back({+1, b, fresh_p, a, fresh_p1});
    } else {
      cs.push_back({-1, a, fresh_p1, b, fresh_p});
    }
    current[p] = fresh_p;
    current[p + 1] = fresh_p1;
  }
  int free_loops = 0;
  for (int p = 0; p < strands; ++p) {
    if (current[p] == p) {
      ++free_loops;
      continue;
    }
    for (Crossing& c : cs) {
      if (c.under_out == current[p]) c.under_out = p;
      if (c.over_out == current[p]) c.over_out = p;
    }
  }
  return LinkDiagram(std::move(cs), free_loops);
}

LinkDiagram LinkDiagram::cable(const std::vector<bool>& directions) const {
  int w = static_cast<int>(directions.size());
  if (w < 1) throw std::invalid_argument("cable needs at least one lane");
  if (component_count() != 1)
    throw std::invalid_argument("cable requires a knot diagram");
  if (crossings_.empty()) return LinkDiagram({}, w);

  std::set<int> edge_set;
  for (const Crossing& c : crossings_) {
    edge_set.insert(c.under_in);
    edge_set.insert(c.over_in);
  }
  std::map<int, int> rank;
  for (int e : edge_set) rank.emplace(e, static_cast<int>(rank.size()));
  auto lane_edge = [&](int edge, int lane) { return rank.at(edge) * w + lane; };
  int next_id = static_cast<int>(rank.size()) * w;

  // Lane 0 sits leftmost of the original travel direction; lane copies keep
  // their absolute offset through every crossing. At a sign +1 crossing the
  // under lanes meet the over lanes from the last lane back to lane 0 and
  // the over lanes meet under lanes in natural order; at sign -1 both orders
  // flip.
  std::vector<Crossing> out;
  for (const Crossing& c : crossings_) {
    std::vector<Crossing> grid(static_cast<size_t>(w) * w);
    auto at = [&](int i, int j) -> Crossing& { return grid[i * w + j]; };
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) at(i, j).sign = c.sign;
    for (int i = 0; i < w; ++i) {
      int cur = lane_edge(c.under_in, i);
      for (int t = 0; t < w; ++t) {
        int j = c.sign > 0 ? w - 1 - t : t;
        at(i, j).under_in = cur;
        cur = t + 1 < w ? next_id++ : lane_edge(c.under_out, i);
        at(i, j).under_out = cur;
      }
    }
    for (int j = 0; j < w; ++j) {
      int cur = lane_edge(c.over_in, j);
      for (int t = 0; t < w; ++t) {
        int i = c.sign > 0 ? t : w - 1 - t;
        at(i, j).over_in = cur;
        cur = t + 1 < w ? next_id++ : lane_edge(c.over_out, j);
        at(i, j).over_out = cur;
      }
    }
    for (int i = 0; i < w; ++i) {
      for (int j = 0; j < w; ++j) {
        Crossing& x = at(i, j);
        if (!directions[i]) std::swap(x.under_in, x.under_out);
        if (!directions[j]) std::swap(x.over_in, x.over_out);
        if (directions[i] != directions[j]) x.sign = -x.sign;
        out.push_back(x);
      }
    }
  }
  return LinkDiagram(std::move(out), 0);
}

LinkDiagram LinkDiagram::reverse_parallel() const { return cable({true, false}); }

LinkDiagram LinkDiagram::mirrored() const {
  std::vector<Crossing> cs = crossings_;
  for (Crossing& c : cs) {
    c.sign = -c.sign;
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
  }
  return LinkDiagram(std::move(cs), free_loops_);
}

LinkDiagram LinkDiagram::with_positive_kink(int edge) const {
  auto in = in_ports(crossings_);
  auto it = in.find(edge);
  if (it == in.end())
    throw std::invalid_argument("edge " + std::to_string(edge) + " not in diagram");
  int top = 0;
  for (const auto& [e, port] : in) top = std::max(top, e);
  int g2 = top + 1, g3 = top + 2;
  std::vector<Crossing> cs = crossings_;
  auto [ci, under] = it->second;
  (under ? cs[ci].under_in : cs[ci].over_in) = g3;
  cs.push_back({+1, edge, g2, g2, g3});
  return LinkDiagram(std::move(cs), free_loops_);
}

LinkDiagram LinkDiagram::with_finger_move(int edge) const {
  auto in = in_ports(crossings_);
  auto it = in.find(edge);
  if (it == in.end())
    throw std::invalid_argument("edge " + std::to_string(edge) + " not in diagram");
  int top = 0;
  for (const auto& [e, port] : in) top = std::max(top, e);
  int g2 = top + 1, g3 = top + 2, g4 = top + 3, g5 = top + 4;
  std::vector<Crossing> cs = crossings_;
  auto [ci, under] = it->second;
  (under ? cs[ci].under_in : cs[ci].over_in) = g5;
  cs.push_back({+1, g3, g4, edge, g2});
  cs.push_back({-1, g4, g5, g2, g3});
  return LinkDiagram(std::move(cs), free_loops_);
}

}  // namespace qskein
