#ifndef KNOTOID_DIAGRAM_HPP
#define KNOTOID_DIAGRAM_HPP

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotoid/seqcalc.hpp"

namespace knotoid {

// A diagram is a rotation system on the sphere: vertices carry their
// incident edge-ends in counterclockwise cyclic order, which determines
// the embedding combinatorially.  The sphere itself is certified by the
// Euler formula V - E + F = 2 with faces counted by orbit tracing.

using VertexId = int32_t;
using EdgeId = int32_t;

enum class VertexKind : uint8_t {
    Crossing,  // 4 slots, two transversal main-strand passages, over data
    Flat,      // 4 slots, main/shortcut intersection, no over data
    Endpoint,  // 1 main slot plus any shortcut slots
    Joint,     // 2 slots, plain pass-through (closed diagrams only)
};

enum class Strand : uint8_t { Main, Shortcut };
enum class EndpointLabel : uint8_t { Tail, Head };

struct Port {
    VertexId v = -1;
    int slot = -1;
    bool operator==(const Port& o) const { return v == o.v && slot == o.slot; }
};

// A dart is one end of an edge sitting in a vertex slot.  Encoded as
// edge * 2 + end, where end 0 is the edge's 'from' side.
using DartId = int32_t;
inline DartId make_dart(EdgeId e, int end) { return e * 2 + end; }
inline EdgeId dart_edge(DartId d) { return d / 2; }
inline int dart_end(DartId d) { return d & 1; }

struct Vertex {
    VertexKind kind = VertexKind::Crossing;
    EndpointLabel label = EndpointLabel::Tail;  // endpoints only
    uint8_t over = 0;  // crossings: 0 = slots {0,2} over, 1 = slots {1,3}
    bool alive = true;
    // ccw order; -1 marks an empty slot; inline storage keeps map copies
    // allocation-free for ordinary 4-valent vertices
    boost::container::small_vector<DartId, 4> slots;
};

struct Edge {
    Port from, to;  // oriented from -> to along the strand
    Strand strand = Strand::Main;
    bool alive = true;
};

enum class MapClass { Knotoid, Shortcut, Closed, Invalid };

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    bool ok = false;
    MapClass cls = MapClass::Invalid;
    int shortcut_strands = 0;
    int faces = -1;
    std::vector<Violation> items;

    void add(const std::string& code, const std::string& message) {
        items.push_back({code, message});
    }
};

class Map {
public:
    // building
    VertexId add_crossing(uint8_t over_pair);
    VertexId add_flat();
    VertexId add_endpoint(EndpointLabel label, int nslots = 1);
    VertexId add_joint();
    VertexId add_vertex(VertexKind kind, int nslots);
    EdgeId connect(Port from, Port to, Strand s);
    void disconnect(EdgeId e);
    void remove_vertex(VertexId v);  // slots must all be empty
    // Reconnect one end of an edge to a new empty port.
    void move_end(EdgeId e, int end, Port p);
    // Drop dead records and renumber contiguously.
    void compact();

    // access
    size_t vertex_count() const;  // alive vertices
    size_t edge_count() const;
    const std::vector<Vertex>& raw_vertices() const { return verts_; }
    const std::vector<Edge>& raw_edges() const { return edges_; }
    const Vertex& vertex(VertexId v) const { return verts_[v]; }
    Vertex& vertex(VertexId v) { return verts_[v]; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    DartId dart_at(Port p) const { return verts_[p.v].slots[p.slot]; }
    Port port_of(DartId d) const;
    DartId alpha(DartId d) const { return make_dart(dart_edge(d), 1 - dart_end(d)); }
    DartId sigma(DartId d) const;      // ccw-next dart around the vertex
    DartId sigma_inv(DartId d) const;  // cw-next
    // Next dart along the face boundary, face kept on the left.
    DartId face_next(DartId d) const { return sigma_inv(alpha(d)); }
    bool dart_is_src(DartId d) const { return dart_end(d) == 0; }
    Strand dart_strand(DartId d) const { return edges_[dart_edge(d)].strand; }

    std::optional<VertexId> find_endpoint(EndpointLabel label) const;

    // counts faces by orbit tracing; -1 on structurally broken maps
    int count_faces() const;
    std::vector<std::vector<DartId>> faces() const;

    bool operator==(const Map& o) const;

private:
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
};

// ---- structural checks and elementary quantities ----

ValidationReport validate(const Map& m);

// Crossing sign under the fixed counterclockwise convention: +1 when the
// under-strand outgoing direction is the ccw-next slot after the
// over-strand outgoing direction.
int crossing_sign(const Map& m, VertexId c);
int writhe(const Map& m);

// Sign of a main/shortcut intersection: +1 when the main strand crosses
// the shortcut from its right to its left (main-out being the ccw-next
// slot after shortcut-out).
int flat_sign(const Map& m, VertexId f);

// Arrival darts along the main strand walk, tail to head (or around the
// circle for closed maps, starting from the given edge).
struct MainWalk {
    std::vector<DartId> arrivals;  // dst-side darts in traversal order
    bool closed = false;
};
MainWalk main_walk(const Map& m);

// Walk of one shortcut strand; `start` is the tail-side dart of its
// first edge.
std::vector<DartId> shortcut_walk(const Map& m, DartId start);
// Tail-side starting darts of every shortcut strand, in ccw order
// starting after the main dart at the tail.
std::vector<DartId> shortcut_starts(const Map& m);

SignSequence seq(const Map& m);  // one shortcut strand expected
SignSequence seq_of_shortcut(const Map& m, DartId start);
SignSequence seq_from_walk(const Map& m, const MainWalk& walk);
int algebraic_height(const Map& m);

// Underlying knotoid map: shortcut edges removed, flats smoothed away.
Map strip_shortcut(const Map& m);

// Removes a 4-valent vertex, merging the two passages straight through.
// Used by undo moves; the caller guarantees no free circle is created.
void dissolve_passthrough(Map& m, VertexId v);

// ---- serialization ----

// JSON fixture format; round-trips up to vertex renumbering.
Map parse_map(const std::string& json_text);
std::string serialize_map(const Map& m, const std::string& name = "",
                          const std::string& meta_json = "");
Map load_map_file(const std::string& path);

// ---- canonical form ----

// Canonical byte encoding over all strand-respecting relabelings (the
// main-walk order makes the labeling unique).  Requires a valid knotoid
// or shortcut map.  Equal encodings == isomorphic maps.
std::vector<uint8_t> canonical_key(const Map& m);
std::vector<uint8_t> canonical_key(const Map& m, const MainWalk& walk);
Map decode_canonical(const std::vector<uint8_t>& key);
uint64_t fingerprint(const std::vector<uint8_t>& key);
bool isomorphic(const Map& a, const Map& b);

}  // namespace knotoid

#endif
