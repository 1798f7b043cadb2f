#ifndef KNOTOID_TOOLS_PLANAR_HPP
#define KNOTOID_TOOLS_PLANAR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "knotoid/diagram.hpp"

// Compiles polyline drawings in the plane into rotation systems.  The
// drawing must be generic: all intersections transversal, interior to
// both segments, and pairwise distinct.  Integer coordinates keep every
// predicate exact.

namespace planar {

using Point = std::pair<int64_t, int64_t>;

struct Drawing {
    std::vector<Point> main;      // tail ... head
    std::vector<Point> shortcut;  // same endpoints; may be empty (no shortcut)
    // one entry per main self-crossing, in order of first passage along
    // the main strand: true when the first passage goes over
    std::vector<bool> first_over;
};

knotoid::Map compile(const Drawing& d);

}  // namespace planar

#endif
