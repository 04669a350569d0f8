#pragma once

#include "qskein/diagram.hpp"
#include "qskein/ring.hpp"

namespace qskein {

inline constexpr int kDefaultCrossingCap = 24;

// Framed invariant of a diagram: switching a crossing and smoothing it are
// related by <L+> - <L-> = (s - s^-1)<L0>, a positive curl contributes v^-1,
// a disjoint circle contributes delta, <empty> = 1. Throws when the diagram
// exceeds max_crossings.
RingElem framed_homfly(const LinkDiagram& d,
                       int max_crossings = kDefaultCrossingCap);

// v^writhe * framed / delta: invariant under all three Reidemeister moves,
// equal to 1 on the unknot.
RingElem homfly_p(const LinkDiagram& d, int max_crossings = kDefaultCrossingCap);

// Invariant of the knot d decorated by the charge-zero basis element with a
// single-cell partition on each side, Q([1],[1]) = h1*hs1 - 1; computed as
// (<reverse parallel of d> - 1) / (delta^2 - 1).
RingElem k_invariant_box_box(const LinkDiagram& d,
                             int max_crossings = kDefaultCrossingCap);

}  // namespace qskein
