#ifndef KNOTOID_SEQCALC_HPP
#define KNOTOID_SEQCALC_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace knotoid {

// Finite sequence over {+1, -1}.  Length is the diagram height, the
// counts of +1/-1 entries the signed heights.
class SignSequence {
public:
    SignSequence() = default;
    explicit SignSequence(std::vector<int8_t> entries);

    static SignSequence parse(const std::string& text);  // e.g. "+-"

    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int8_t operator[](size_t i) const { return entries_[i]; }
    const std::vector<int8_t>& entries() const { return entries_; }

    int h_pos() const;  // count of +1
    int h_neg() const;  // count of -1
    int sum() const { return h_pos() - h_neg(); }

    SignSequence reversed() const;
    SignSequence negated() const;
    SignSequence concat(const SignSequence& o) const;

    std::string str() const;  // compact "+-" form; empty sequence -> ""

    bool operator==(const SignSequence& o) const { return entries_ == o.entries_; }
    bool operator<(const SignSequence& o) const { return entries_ < o.entries_; }

private:
    std::vector<int8_t> entries_;
};

enum class ShiftDirection { Left, Right };

// All sequences obtainable by one shift move of the given size:
// simultaneously delete `size` disjoint consecutive (-,+) pairs (Left;
// (+,-) for Right) and insert `size` consecutive copies of the opposite
// pair anywhere in the intermediate sequence.  Empty when not enough
// disjoint pairs exist.
std::set<SignSequence> shift_results(const SignSequence& a, ShiftDirection dir,
                                     int size);

// All results of shift moves of any size >= 1.
std::set<SignSequence> all_shift_results(const SignSequence& a);

struct ShiftConnectivity {
    bool connected = false;
    // Witness: for each member reached from the first element, the path
    // of members leading to it (BFS tree edges as index pairs into the
    // sorted member list).
    std::vector<std::pair<size_t, size_t>> tree_edges;
};

// True iff the graph on S whose edges are shift moves *within S* is
// connected.  Sets with mixed lengths or mixed (h+, h-) are disconnected
// by definition.  The empty set and singletons are connected.
ShiftConnectivity shift_connected(const std::set<SignSequence>& s);

// True iff some consecutive run of entries sums to `target` (the empty
// run counts, so target 0 is always true).
bool consecutive_subsum_exists(const SignSequence& a, int target);

// Prefix-sum based subsequence used by branched-cover lifts: keep the
// entries whose crossing level q(i) = max(p(i-1), p(i)) is congruent to
// x mod n, where p is the prefix sum.
SignSequence lift_subsequence(const SignSequence& a, int n, int x);

}  // namespace knotoid

#endif
