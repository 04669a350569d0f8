#pragma once

#include <string>
#include <vector>

namespace qskein {

// Oriented crossing wired by edge ids: the under-strand runs under_in ->
// under_out, the over-strand over_in -> over_out. sign is +1 exactly when a
// quarter counterclockwise turn of the over direction gives the under
// direction.
struct Crossing {
  int sign = 1;
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Combinatorial oriented link diagram: crossings wired by edge ids plus a
// count of crossing-free circles. Invariant: every edge id occurs exactly
// once as an in-port and once as an out-port. Planarity of the wiring is
// trusted, not verified.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  explicit LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int writhe() const;
  int component_count() const;

  // Closure of a braid word: letter k > 0 crosses strand k over strand k+1
  // (a sign +1 crossing), letter -k the inverse. Strand positions are
  // 1-based; |letter| must be < strands.
  static LinkDiagram from_braid_word(const std::vector<int>& word, int strands);

  // Satellite with one parallel lane per entry of directions: lane i keeps
  // the original orientation when directions[i] is true and is reversed
  // otherwise. Each original crossing becomes width^2 crossings whose signs
  // follow the lane orientation pairs; blackboard framing, no correction
  // curls. Input must be a knot diagram.
  LinkDiagram cable(const std::vector<bool>& directions) const;

  // cable({true, false}): the two-lane satellite with one strand in each
  // direction.
  LinkDiagram reverse_parallel() const;

  // All crossings switched: the mirror image.
  LinkDiagram mirrored() const;

  // Test helpers. with_positive_kink adds a sign +1 curl on the edge
  // (framing +1); with_finger_move pokes the start of the edge over its end,
  // inserting a cancelling Reidemeister-II pair of crossings.
  LinkDiagram with_positive_kink(int edge) const;
  LinkDiagram with_finger_move(int edge) const;

  // Some edge id present in the diagram (smallest); requires a crossing.
  int first_edge() const;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;

  void validate() const;
};

}  // namespace qskein
