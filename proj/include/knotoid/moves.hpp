#ifndef KNOTOID_MOVES_HPP
#define KNOTOID_MOVES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/seqcalc.hpp"

namespace knotoid {

enum class MoveKind : uint8_t {
    R1Pos,   // kink creation, positive crossing
    R1Neg,   // kink creation, negative crossing
    R1Undo,  // kink removal at a monogon
    R2,      // finger of one main edge pushed across another
    R2Undo,  // bigon removal between two crossings
    R3,      // slide a side of a triangle across the opposite crossing
    S1,      // swing a strand end around an endpoint across the other
    S1Undo,  // remove the flat next to an endpoint
    S2,      // finger across main/shortcut pair
    S2Undo,  // bigon removal between two flats
    S3,      // slide the shortcut side of a triangle across a crossing
};

const char* move_kind_name(MoveKind k);

// Where a rewrite applies.  Darts refer to the map the site was
// enumerated from; sites do not survive other rewrites.
struct MoveSite {
    MoveKind kind;
    DartId a = -1;       // primary dart (edge/face position per kind)
    DartId b = -1;       // secondary dart (R2/S2 crossed position)
    VertexId v = -1;     // endpoint vertex (S1)
    uint8_t variant = 0;  // R1: side | over_first<<1;  S1: corner dart index
};

// Complete, deterministically ordered list of applicable rewrite sites.
std::vector<MoveSite> enumerate_moves(const Map& m);

// Applies a site enumerated from this exact map; throws
// std::invalid_argument on stale or inapplicable sites.
Map apply_move(const Map& m, const MoveSite& site);

struct Budget {
    int max_crossings = 0;
    int max_height = 0;
    uint64_t max_states = 1000000;

    // spec'd defaults relative to the starting diagram
    static Budget defaults_for(const Map& m);
};

struct ExploreResult {
    std::set<SignSequence> sequences;      // every observed sign sequence
    std::set<SignSequence> minimal_seqs;   // sequences at the least height found
    int min_height = -1;                   // least h found (h+ plus h-)
    int min_h_pos = -1, min_h_neg = -1;    // least signed counts over all reached
    uint64_t states = 0;                   // distinct diagrams reached
    bool partial = false;                  // state budget exhausted
};

// Breadth-first closure of the diagram under all moves, within budgets.
// Every reached diagram is checked against the polynomial lower bounds
// and the consecutive-subsequence law.
ExploreResult explore(const Map& m, const Budget& budget);

enum class CertifyStatus { Exact, Interval };

struct CertifyResult {
    CertifyStatus status = CertifyStatus::Interval;
    int lower_pos = 0, upper_pos = -1;
    int lower_neg = 0, upper_neg = -1;
    std::set<SignSequence> minimal_seqs;
    Budget budget;
    uint64_t states = 0;
    bool partial = false;
    // set when the certification is exact and the index-polynomial
    // bounds are tight, in which case the minimal sequence is unique
    bool unique_minimal = false;
};

// Combines the searched upper bounds with the polynomial lower bounds;
// exact exactly when they meet.  Inconsistencies (upper < lower) are
// internal errors, never results.
CertifyResult certify_heights(const Map& m, const Budget& budget);

}  // namespace knotoid

#endif
