#ifndef KNOTOID_INVARIANTS_HPP
#define KNOTOID_INVARIANTS_HPP

#include <map>
#include <stdexcept>

#include "knotoid/diagram.hpp"
#include "knotoid/laurent.hpp"

namespace knotoid {

// Raised when a computed quantity violates an identity that holds for
// every valid diagram (a convention bug, never a data error).
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised when a state sum would exceed the crossing guard.
struct StateSumGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateSumOptions {
    int max_crossings = 20;     // 2^n states; refuse anything larger
    int parallel_threshold = 12;  // split the state space above this
    bool parallel = true;
};

// n -> J_n for nonzero n; finitely supported integer table.
struct WritheTable {
    std::map<int, long long> entries;

    long long at(int n) const {
        auto it = entries.find(n);
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const WritheTable& o) const { return entries == o.entries; }
};

struct BoundSource {
    static constexpr const char* kIndex = "index";
    static constexpr const char* kTuraev = "turaev";
    static constexpr const char* kBoth = "both";
};

struct BoundsReport {
    int lower_pos = 0;
    int lower_neg = 0;
    const char* source_pos = BoundSource::kIndex;
    const char* source_neg = BoundSource::kIndex;
};

// Winding number of the loop produced by the orientation-respecting
// smoothing at crossing c, measured by its signed intersections with the
// remaining interval.  Independent of over/under data.
int intersection_index(const Map& m, VertexId c);

// J_n = half the signed count of index-n crossings; throws
// InternalConsistencyError if any half-sum is not an integer.
WritheTable n_writhes(const Map& m);

Laurent1 index_polynomial(const Map& m);         // F = sum J_n (t^n - 1)
Laurent1 index_polynomial(const WritheTable& t);
// P = sum sign(c) (t^{w(c)} - 1); asserts P(t) = F(t) + F(t^-1).
Laurent1 affine_index_polynomial(const Map& m);

// Kauffman-style state sums.  The bracket ignores any shortcut; it
// accepts knotoid maps, shortcut maps and closed diagrams (for closed
// ones the traced knot circle is not counted).
Laurent1 bracket(const Map& m, const StateSumOptions& opt = {});
Laurent1 normalized_bracket(const Map& m, const StateSumOptions& opt = {});

// Two-variable state sum over a shortcut diagram; u records the algebraic
// shortcut-crossing count of the interval component of each smoothing.
Laurent2 turaev_polynomial(const Map& m, const StateSumOptions& opt = {});
// (-A)^{-3w} u^{-a(K)} times the above; asserts even exponents in A and u.
Laurent2 normalized_turaev(const Map& m, const StateSumOptions& opt = {});

// Signed-height lower bounds combining the index-polynomial bound with
// the Turaev u-degree bound.
BoundsReport height_lower_bounds(const Map& m, const StateSumOptions& opt = {});

}  // namespace knotoid

#endif
