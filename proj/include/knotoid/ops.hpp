#ifndef KNOTOID_OPS_HPP
#define KNOTOID_OPS_HPP

#include "knotoid/diagram.hpp"

namespace knotoid {

enum class Involution { Rev, Mir, Sym, Rot };

Involution involution_from_name(const std::string& name);
const char* involution_name(Involution which);

// rev swaps the endpoint labels and reverses every edge; mir swaps the
// over designation at each crossing; sym reverses the cyclic slot order
// at every vertex (ambient orientation flip); rot = sym o mir.
Map involution(const Map& m, Involution which);

// Glues the head of m1 to the tail of m2 and smooths the joint away.
// Both maps must carry the same number of shortcut strands (0 or 1).
Map product(const Map& m1, const Map& m2);

enum class ClosureMode { Over, Under };

// Turns a one-shortcut diagram into a closed knot diagram: every flat
// becomes a crossing with the shortcut passing over (or under), the
// endpoints become 2-valent joints, and the whole circle is retagged as
// a single main strand.
Map closure(const Map& m, ClosureMode mode);

struct LiftResult {
    Map map;          // one lifted main strand, n lifted shortcuts
    int n = 1;
    bool stabilized = false;  // surviving crossings all have index 0
};

// Lift to the n-fold cover of the sphere branched over the endpoints.
// A crossing survives iff its two passages land on the same sheet; the
// n lifted shortcuts are labelled so that they increment counterclockwise
// around the tail, with the main strand leaving between the last and the
// first.
LiftResult lift_cover(const Map& m, int n);

// Lift with n = 1 + max |index|, which keeps exactly the index-0
// crossings and so produces the stable knot-type diagram.
LiftResult stabilize(const Map& m);

// ---- shortcut routing (plumbing for building shortcut diagrams) ----

// Inserts a shortcut that crosses the main strand along the given face
// boundary darts, in order; each dart is crossed from its own face into
// the opposite one.  Edges must be main and pairwise distinct.
Map with_shortcut(const Map& knotoid_map, const std::vector<DartId>& crossed);

// All shortcut insertions crossing at most max_crossings distinct edges,
// routed through pairwise distinct faces.
std::vector<Map> enumerate_shortcuts(const Map& knotoid_map, int max_crossings);

}  // namespace knotoid

#endif
