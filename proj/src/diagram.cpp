#include "knotoid/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace knotoid {

// ---------------------------------------------------------------- building

VertexId Map::add_vertex(VertexKind kind, int nslots) {
    Vertex v;
    v.kind = kind;
    v.slots.assign(nslots, -1);
    verts_.push_back(std::move(v));
    return static_cast<VertexId>(verts_.size() - 1);
}

VertexId Map::add_crossing(uint8_t over_pair) {
    VertexId v = add_vertex(VertexKind::Crossing, 4);
    verts_[v].over = over_pair;
    return v;
}

VertexId Map::add_flat() { return add_vertex(VertexKind::Flat, 4); }

VertexId Map::add_endpoint(EndpointLabel label, int nslots) {
    VertexId v = add_vertex(VertexKind::Endpoint, nslots);
    verts_[v].label = label;
    return v;
}

VertexId Map::add_joint() { return add_vertex(VertexKind::Joint, 2); }

EdgeId Map::connect(Port from, Port to, Strand s) {
    Edge e;
    e.from = from;
    e.to = to;
    e.strand = s;
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    auto attach = [&](const Port& p, int end) {
        Vertex& v = verts_[p.v];
        if (p.slot < 0 || p.slot >= static_cast<int>(v.slots.size()))
            throw std::logic_error("connect: slot out of range");
        if (v.slots[p.slot] != -1)
            throw std::logic_error("connect: slot already occupied");
        v.slots[p.slot] = make_dart(id, end);
    };
    attach(from, 0);
    attach(to, 1);
    return id;
}

void Map::disconnect(EdgeId e) {
    Edge& ed = edges_[e];
    if (!ed.alive) throw std::logic_error("disconnect: dead edge");
    verts_[ed.from.v].slots[ed.from.slot] = -1;
    verts_[ed.to.v].slots[ed.to.slot] = -1;
    ed.alive = false;
}

void Map::remove_vertex(VertexId v) {
    Vertex& vx = verts_[v];
    for (DartId d : vx.slots)
        if (d != -1) throw std::logic_error("remove_vertex: slots not empty");
    vx.alive = false;
}

void Map::move_end(EdgeId e, int end, Port p) {
    Edge& ed = edges_[e];
    Port& old = end == 0 ? ed.from : ed.to;
    verts_[old.v].slots[old.slot] = -1;
    Vertex& nv = verts_[p.v];
    if (nv.slots[p.slot] != -1)
        throw std::logic_error("move_end: target slot occupied");
    nv.slots[p.slot] = make_dart(e, end);
    old = p;
}

void Map::compact() {
    std::vector<VertexId> vmap(verts_.size(), -1);
    std::vector<Vertex> nverts;
    nverts.reserve(verts_.size());
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (!verts_[i].alive) continue;
        vmap[i] = static_cast<VertexId>(nverts.size());
        nverts.push_back(verts_[i]);
    }
    std::vector<EdgeId> emap(edges_.size(), -1);
    std::vector<Edge> nedges;
    nedges.reserve(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (!edges_[i].alive) continue;
        emap[i] = static_cast<EdgeId>(nedges.size());
        Edge e = edges_[i];
        e.from.v = vmap[e.from.v];
        e.to.v = vmap[e.to.v];
        nedges.push_back(e);
    }
    for (auto& v : nverts)
        for (auto& d : v.slots)
            if (d != -1) d = make_dart(emap[dart_edge(d)], dart_end(d));
    verts_ = std::move(nverts);
    edges_ = std::move(nedges);
}

// ----------------------------------------------------------------- access

size_t Map::vertex_count() const {
    size_t n = 0;
    for (const auto& v : verts_)
        if (v.alive) ++n;
    return n;
}

size_t Map::edge_count() const {
    size_t n = 0;
    for (const auto& e : edges_)
        if (e.alive) ++n;
    return n;
}

Port Map::port_of(DartId d) const {
    const Edge& e = edges_[dart_edge(d)];
    return dart_end(d) == 0 ? e.from : e.to;
}

DartId Map::sigma(DartId d) const {
    Port p = port_of(d);
    const Vertex& v = verts_[p.v];
    int n = static_cast<int>(v.slots.size());
    return v.slots[(p.slot + 1) % n];
}

DartId Map::sigma_inv(DartId d) const {
    Port p = port_of(d);
    const Vertex& v = verts_[p.v];
    int n = static_cast<int>(v.slots.size());
    return v.slots[(p.slot + n - 1) % n];
}

std::optional<VertexId> Map::find_endpoint(EndpointLabel label) const {
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].alive && verts_[i].kind == VertexKind::Endpoint &&
            verts_[i].label == label)
            return static_cast<VertexId>(i);
    return std::nullopt;
}

int Map::count_faces() const {
    const size_t nd = edges_.size() * 2;
    std::vector<char> done(nd, 1);
    size_t total = 0;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) {
            done[2 * e] = done[2 * e + 1] = 0;
            total += 2;
        }
    int faces = 0;
    size_t guard = 0;
    for (size_t s = 0; s < nd; ++s) {
        if (done[s]) continue;
        DartId start = static_cast<DartId>(s);
        DartId d = start;
        do {
            if (done[d]) return -1;  // orbit structure broken
            done[d] = 1;
            d = face_next(d);
            if (d == -1) return -1;
            if (++guard > 4 * total + 8) return -1;
        } while (d != start);
        ++faces;
    }
    return faces;
}

std::vector<std::vector<DartId>> Map::faces() const {
    const size_t nd = edges_.size() * 2;
    std::vector<char> done(nd, 1);
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) done[2 * e] = done[2 * e + 1] = 0;
    std::vector<std::vector<DartId>> out;
    for (size_t s = 0; s < nd; ++s) {
        if (done[s]) continue;
        std::vector<DartId> cycle;
        DartId start = static_cast<DartId>(s);
        DartId d = start;
        do {
            done[d] = 1;
            cycle.push_back(d);
            d = face_next(d);
        } while (d != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

bool Map::operator==(const Map& o) const {
    // structural identity, not isomorphism
    if (verts_.size() != o.verts_.size() || edges_.size() != o.edges_.size())
        return false;
    for (size_t i = 0; i < verts_.size(); ++i) {
        const Vertex &a = verts_[i], &b = o.verts_[i];
        if (a.alive != b.alive) return false;
        if (!a.alive) continue;
        if (a.kind != b.kind || a.slots != b.slots) return false;
        if (a.kind == VertexKind::Crossing && a.over != b.over) return false;
        if (a.kind == VertexKind::Endpoint && a.label != b.label) return false;
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge &a = edges_[i], &b = o.edges_[i];
        if (a.alive != b.alive) return false;
        if (!a.alive) continue;
        if (!(a.from == b.from) || !(a.to == b.to) || a.strand != b.strand)
            return false;
    }
    return true;
}

// ------------------------------------------------------------------ walks

MainWalk main_walk(const Map& m) {
    MainWalk w;
    auto tail = m.find_endpoint(EndpointLabel::Tail);
    DartId cur = -1;
    if (tail) {
        const Vertex& tv = m.vertex(*tail);
        for (DartId d : tv.slots)
            if (d != -1 && m.dart_strand(d) == Strand::Main) cur = d;
    } else {
        // closed diagram: start from the lowest live main edge's source
        for (size_t e = 0; e < m.raw_edges().size(); ++e)
            if (m.raw_edges()[e].alive && m.raw_edges()[e].strand == Strand::Main) {
                cur = make_dart(static_cast<EdgeId>(e), 0);
                break;
            }
        w.closed = true;
    }
    if (cur == -1) return w;
    w.arrivals.reserve(m.raw_edges().size());
    const DartId first = cur;
    size_t guard = 0;
    const size_t limit = 2 * m.raw_edges().size() + 4;
    while (true) {
        DartId arr = m.alpha(cur);
        w.arrivals.push_back(arr);
        Port p = m.port_of(arr);
        const Vertex& v = m.vertex(p.v);
        DartId next = -1;
        switch (v.kind) {
            case VertexKind::Endpoint:
                return w;
            case VertexKind::Crossing:
            case VertexKind::Flat:
                next = v.slots[(p.slot + 2) % 4];
                break;
            case VertexKind::Joint:
                next = v.slots[1 - p.slot];
                break;
        }
        if (next == -1) return w;
        cur = next;
        if (w.closed && cur == first) return w;
        if (++guard > limit) {
            w.arrivals.clear();
            return w;
        }
    }
}

std::vector<DartId> shortcut_walk(const Map& m, DartId start) {
    std::vector<DartId> arrivals;
    DartId cur = start;
    size_t guard = 0;
    const size_t limit = 2 * m.raw_edges().size() + 4;
    while (true) {
        DartId arr = m.alpha(cur);
        arrivals.push_back(arr);
        Port p = m.port_of(arr);
        const Vertex& v = m.vertex(p.v);
        if (v.kind == VertexKind::Endpoint) return arrivals;
        if (v.kind != VertexKind::Flat) {
            arrivals.clear();
            return arrivals;
        }
        cur = v.slots[(p.slot + 2) % 4];
        if (cur == -1 || ++guard > limit) {
            arrivals.clear();
            return arrivals;
        }
    }
}

std::vector<DartId> shortcut_starts(const Map& m) {
    std::vector<DartId> out;
    auto tail = m.find_endpoint(EndpointLabel::Tail);
    if (!tail) return out;
    const Vertex& tv = m.vertex(*tail);
    int n = static_cast<int>(tv.slots.size());
    int main_slot = -1;
    for (int s = 0; s < n; ++s)
        if (tv.slots[s] != -1 && m.dart_strand(tv.slots[s]) == Strand::Main)
            main_slot = s;
    if (main_slot < 0) return out;
    for (int k = 1; k <= n; ++k) {
        int s = (main_slot + k) % n;
        if (s == main_slot) break;
        DartId d = tv.slots[s];
        if (d != -1 && m.dart_strand(d) == Strand::Shortcut) out.push_back(d);
    }
    return out;
}

// ------------------------------------------------------------------ signs

namespace {

// outgoing slot of the strand occupying the given opposite slot pair
int out_slot_of_pair(const Map& m, VertexId v, int pair) {
    const Vertex& vx = m.vertex(v);
    for (int s : {pair, pair + 2}) {
        DartId d = vx.slots[s];
        if (d != -1 && m.dart_is_src(d)) return s;
    }
    throw std::logic_error("no outgoing dart in slot pair");
}

}  // namespace

int crossing_sign(const Map& m, VertexId c) {
    const Vertex& v = m.vertex(c);
    if (v.kind != VertexKind::Crossing)
        throw std::invalid_argument("crossing_sign: not a crossing");
    int over_pair = v.over ? 1 : 0;
    int p = out_slot_of_pair(m, c, over_pair);
    int q = out_slot_of_pair(m, c, 1 - over_pair);
    return (q - p + 4) % 4 == 1 ? 1 : -1;
}

int writhe(const Map& m) {
    int w = 0;
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (v.alive && v.kind == VertexKind::Crossing)
            w += crossing_sign(m, static_cast<VertexId>(i));
    }
    return w;
}

int flat_sign(const Map& m, VertexId f) {
    const Vertex& v = m.vertex(f);
    if (v.kind != VertexKind::Flat)
        throw std::invalid_argument("flat_sign: not a flat vertex");
    int main_pair = m.dart_strand(v.slots[0]) == Strand::Main ? 0 : 1;
    int mo = out_slot_of_pair(m, f, main_pair);
    int so = out_slot_of_pair(m, f, 1 - main_pair);
    return (mo - so + 4) % 4 == 1 ? 1 : -1;
}

SignSequence seq_of_shortcut(const Map& m, DartId start) {
    // signs in main-strand order restricted to this shortcut's flats
    std::set<VertexId> mine;
    for (DartId arr : shortcut_walk(m, start)) {
        Port p = m.port_of(arr);
        if (m.vertex(p.v).kind == VertexKind::Flat) mine.insert(p.v);
    }
    std::vector<int8_t> entries;
    for (DartId arr : main_walk(m).arrivals) {
        Port p = m.port_of(arr);
        if (m.vertex(p.v).kind == VertexKind::Flat && mine.count(p.v))
            entries.push_back(static_cast<int8_t>(flat_sign(m, p.v)));
    }
    return SignSequence(std::move(entries));
}

SignSequence seq_from_walk(const Map& m, const MainWalk& walk) {
    std::vector<int8_t> entries;
    for (DartId arr : walk.arrivals) {
        Port p = m.port_of(arr);
        if (m.vertex(p.v).kind == VertexKind::Flat)
            entries.push_back(static_cast<int8_t>(flat_sign(m, p.v)));
    }
    return SignSequence(std::move(entries));
}

SignSequence seq(const Map& m) { return seq_from_walk(m, main_walk(m)); }

int algebraic_height(const Map& m) { return seq(m).sum(); }

// ------------------------------------------------------------- validation

namespace {

bool structural_ok(const Map& m, ValidationReport& rep) {
    bool ok = true;
    const auto& verts = m.raw_vertices();
    const auto& edges = m.raw_edges();
    for (size_t i = 0; i < verts.size(); ++i) {
        const Vertex& v = verts[i];
        if (!v.alive) continue;
        size_t expect = 0;
        switch (v.kind) {
            case VertexKind::Crossing:
            case VertexKind::Flat: expect = 4; break;
            case VertexKind::Joint: expect = 2; break;
            case VertexKind::Endpoint: expect = v.slots.size(); break;
        }
        if (v.slots.size() != expect) {
            rep.add("slot-count", "vertex " + std::to_string(i) +
                                     " has wrong slot count");
            ok = false;
            continue;
        }
        if (v.kind == VertexKind::Endpoint && v.slots.empty()) {
            rep.add("slot-count", "endpoint " + std::to_string(i) + " has no slots");
            ok = false;
        }
        for (size_t s = 0; s < v.slots.size(); ++s) {
            DartId d = v.slots[s];
            if (d == -1) {
                rep.add("empty-slot", "vertex " + std::to_string(i) + " slot " +
                                          std::to_string(s) + " is empty");
                ok = false;
                continue;
            }
            EdgeId e = dart_edge(d);
            if (e < 0 || e >= static_cast<EdgeId>(edges.size()) || !edges[e].alive) {
                rep.add("bad-dart", "vertex " + std::to_string(i) +
                                        " references dead edge");
                ok = false;
                continue;
            }
            Port p = dart_end(d) == 0 ? edges[e].from : edges[e].to;
            if (p.v != static_cast<VertexId>(i) || p.slot != static_cast<int>(s)) {
                rep.add("dart-mismatch", "edge " + std::to_string(e) +
                                             " does not point back to vertex " +
                                             std::to_string(i));
                ok = false;
            }
        }
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (!ed.alive) continue;
        for (const Port& p : {ed.from, ed.to}) {
            if (p.v < 0 || p.v >= static_cast<VertexId>(verts.size()) ||
                !verts[p.v].alive) {
                rep.add("bad-edge", "edge " + std::to_string(e) +
                                        " touches a dead vertex");
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace

ValidationReport validate(const Map& m) {
    ValidationReport rep;
    if (!structural_ok(m, rep)) return rep;

    const auto& verts = m.raw_vertices();
    int tails = 0, heads = 0, flats = 0, joints = 0;
    size_t main_edges = 0, shortcut_edges = 0;
    for (const auto& e : m.raw_edges()) {
        if (!e.alive) continue;
        (e.strand == Strand::Main ? main_edges : shortcut_edges)++;
    }
    for (size_t i = 0; i < verts.size(); ++i) {
        const Vertex& v = verts[i];
        if (!v.alive) continue;
        switch (v.kind) {
            case VertexKind::Endpoint:
                (v.label == EndpointLabel::Tail ? tails : heads)++;
                break;
            case VertexKind::Flat: ++flats; break;
            case VertexKind::Joint: ++joints; break;
            default: break;
        }
    }

    bool closed = tails == 0 && heads == 0;
    if (!closed && (tails != 1 || heads != 1)) {
        rep.add("endpoint-count", "expected one tail and one head, found " +
                                      std::to_string(tails) + " tail(s) and " +
                                      std::to_string(heads) + " head(s)");
        return rep;
    }
    if (closed && (flats > 0 || shortcut_edges > 0)) {
        rep.add("closed-shortcut", "closed diagram carries shortcut data");
        return rep;
    }
    if (!closed && joints > 0)
        rep.add("joint-in-open-map", "joint vertices only occur in closed diagrams");

    // strand typing and in/out structure per vertex
    bool typing_ok = true;
    for (size_t i = 0; i < verts.size(); ++i) {
        const Vertex& v = verts[i];
        if (!v.alive) continue;
        auto strand_of = [&](int s) { return m.dart_strand(v.slots[s]); };
        auto src_count_pair = [&](int pair) {
            int n = 0;
            for (int s : {pair, pair + 2})
                if (m.dart_is_src(v.slots[s])) ++n;
            return n;
        };
        switch (v.kind) {
            case VertexKind::Crossing: {
                for (int s = 0; s < 4; ++s)
                    if (strand_of(s) != Strand::Main) {
                        rep.add("crossing-strand", "crossing " + std::to_string(i) +
                                                       " meets a shortcut edge");
                        typing_ok = false;
                    }
                if (v.over > 1) {
                    rep.add("over-data", "crossing " + std::to_string(i) +
                                             " has invalid over designation");
                    typing_ok = false;
                }
                for (int pair : {0, 1})
                    if (typing_ok && src_count_pair(pair) != 1) {
                        rep.add("orientation", "crossing " + std::to_string(i) +
                                                   " passage is not oriented through");
                        typing_ok = false;
                    }
                break;
            }
            case VertexKind::Flat: {
                bool alternating =
                    strand_of(0) == strand_of(2) && strand_of(1) == strand_of(3) &&
                    strand_of(0) != strand_of(1);
                if (!alternating) {
                    rep.add("flat-strand", "flat " + std::to_string(i) +
                                               " slots do not alternate main/shortcut");
                    typing_ok = false;
                    break;
                }
                for (int pair : {0, 1})
                    if (src_count_pair(pair) != 1) {
                        rep.add("orientation", "flat " + std::to_string(i) +
                                                   " passage is not oriented through");
                        typing_ok = false;
                    }
                break;
            }
            case VertexKind::Endpoint: {
                int main_count = 0;
                for (size_t s = 0; s < v.slots.size(); ++s)
                    if (strand_of(static_cast<int>(s)) == Strand::Main) ++main_count;
                if (main_count != 1) {
                    rep.add("endpoint-strand", "endpoint " + std::to_string(i) +
                                                   " must meet exactly one main edge");
                    typing_ok = false;
                }
                for (size_t s = 0; s < v.slots.size(); ++s) {
                    bool src = m.dart_is_src(v.slots[s]);
                    bool want_src = v.label == EndpointLabel::Tail;
                    if (src != want_src) {
                        rep.add("orientation",
                                "edge direction at endpoint " + std::to_string(i) +
                                    " disagrees with its tail/head label");
                        typing_ok = false;
                    }
                }
                break;
            }
            case VertexKind::Joint: {
                if (strand_of(0) != strand_of(1)) {
                    rep.add("joint-strand", "joint " + std::to_string(i) +
                                                " mixes strand types");
                    typing_ok = false;
                }
                int n = 0;
                for (int s = 0; s < 2; ++s)
                    if (m.dart_is_src(v.slots[s])) ++n;
                if (n != 1) {
                    rep.add("orientation", "joint " + std::to_string(i) +
                                               " is not oriented through");
                    typing_ok = false;
                }
                break;
            }
        }
    }
    if (!typing_ok) return rep;

    // main strand walk covers every main edge exactly once
    MainWalk w = main_walk(m);
    if (w.arrivals.size() != main_edges) {
        rep.add("main-walk", "main strand is not a single walk covering every "
                             "main edge (visited " +
                                 std::to_string(w.arrivals.size()) + " of " +
                                 std::to_string(main_edges) + ")");
        return rep;
    }
    if (!closed) {
        Port last = m.port_of(w.arrivals.back());
        if (m.vertex(last.v).kind != VertexKind::Endpoint ||
            m.vertex(last.v).label != EndpointLabel::Head) {
            rep.add("main-walk", "main strand does not terminate at the head");
            return rep;
        }
        // walk direction must follow edge orientations
        for (DartId arr : w.arrivals)
            if (m.dart_is_src(arr)) {
                rep.add("orientation", "main walk runs against an edge direction");
                return rep;
            }
    }

    // shortcut strands: embedded tail-to-head arcs through flats
    int shortcut_count = 0;
    if (!closed) {
        std::set<VertexId> flats_seen;
        size_t sc_edges_seen = 0;
        for (DartId start : shortcut_starts(m)) {
            auto arc = shortcut_walk(m, start);
            if (arc.empty()) {
                rep.add("shortcut-walk", "shortcut strand does not reach the head");
                return rep;
            }
            sc_edges_seen += arc.size();
            for (DartId arr : arc) {
                if (m.dart_is_src(arr)) {
                    rep.add("orientation", "shortcut walk runs against an edge direction");
                    return rep;
                }
                Port p = m.port_of(arr);
                if (m.vertex(p.v).kind == VertexKind::Flat &&
                    !flats_seen.insert(p.v).second) {
                    rep.add("shortcut-embedded", "two shortcut passages meet flat " +
                                                     std::to_string(p.v));
                    return rep;
                }
            }
            ++shortcut_count;
        }
        if (sc_edges_seen != shortcut_edges) {
            rep.add("shortcut-walk", "shortcut edges not covered by tail-to-head walks");
            return rep;
        }
        if (static_cast<int>(flats_seen.size()) != flats) {
            rep.add("shortcut-walk", "flat vertex missed by every shortcut strand");
            return rep;
        }
    }

    // sphere certificate
    int F = m.count_faces();
    rep.faces = F;
    long long V = static_cast<long long>(m.vertex_count());
    long long E = static_cast<long long>(m.edge_count());
    if (F < 0 || V - E + F != 2) {
        rep.add("euler", "V - E + F = " + std::to_string(V) + " - " +
                             std::to_string(E) + " + " + std::to_string(F) +
                             " != 2; not a sphere embedding");
        return rep;
    }

    rep.ok = true;
    rep.shortcut_strands = shortcut_count;
    rep.cls = closed            ? MapClass::Closed
              : shortcut_count ? MapClass::Shortcut
                               : MapClass::Knotoid;
    return rep;
}

// --------------------------------------------------------------- rewrites

Map strip_shortcut(const Map& m) {
    Map out;
    std::map<VertexId, VertexId> vmap;
    auto tail = m.find_endpoint(EndpointLabel::Tail);
    auto head = m.find_endpoint(EndpointLabel::Head);
    if (!tail || !head) throw std::invalid_argument("strip_shortcut: open map required");
    vmap[*tail] = out.add_endpoint(EndpointLabel::Tail, 1);
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (v.alive && v.kind == VertexKind::Crossing)
            vmap[static_cast<VertexId>(i)] = out.add_crossing(v.over);
    }
    vmap[*head] = out.add_endpoint(EndpointLabel::Head, 1);

    MainWalk w = main_walk(m);
    // exit port of the current pending segment, in new-map coordinates
    auto new_port = [&](Port p) -> Port {
        const Vertex& v = m.vertex(p.v);
        if (v.kind == VertexKind::Endpoint) return Port{vmap[p.v], 0};
        return Port{vmap[p.v], p.slot};
    };
    Port seg_from;
    {
        const Vertex& tv = m.vertex(*tail);
        int ms = -1;
        for (size_t s = 0; s < tv.slots.size(); ++s)
            if (m.dart_strand(tv.slots[s]) == Strand::Main) ms = static_cast<int>(s);
        seg_from = new_port(Port{*tail, ms});
    }
    for (DartId arr : w.arrivals) {
        Port p = m.port_of(arr);
        const Vertex& v = m.vertex(p.v);
        if (v.kind == VertexKind::Flat) continue;  // smoothed away
        out.connect(seg_from, new_port(p), Strand::Main);
        if (v.kind == VertexKind::Crossing)
            seg_from = new_port(Port{p.v, (p.slot + 2) % 4});
    }
    return out;
}

void dissolve_passthrough(Map& m, VertexId v) {
    const Vertex& vx = m.vertex(v);
    if (vx.slots.size() != 4)
        throw std::logic_error("dissolve_passthrough: 4-valent vertex required");
    for (int pair : {0, 1}) {
        DartId d0 = vx.slots[pair], d2 = vx.slots[pair + 2];
        EdgeId e0 = dart_edge(d0), e2 = dart_edge(d2);
        if (e0 == e2)
            throw std::logic_error("dissolve_passthrough: would create a free circle");
        DartId din = m.dart_is_src(d0) ? d2 : d0;   // incoming side
        DartId dout = m.dart_is_src(d0) ? d0 : d2;  // outgoing side
        EdgeId ein = dart_edge(din), eout = dart_edge(dout);
        Port from = m.edge(ein).from;
        Port to = m.edge(eout).to;
        Strand s = m.edge(ein).strand;
        if (s != m.edge(eout).strand)
            throw std::logic_error("dissolve_passthrough: strand mismatch");
        m.disconnect(ein);
        m.disconnect(eout);
        m.connect(from, to, s);
    }
    m.remove_vertex(v);
}

// ------------------------------------------------------------------- JSON

namespace {

using nlohmann::ordered_json;

std::pair<int, int> offset_to_line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void parse_fail(const std::string& msg) {
    throw std::runtime_error("map parse error: " + msg);
}

}  // namespace

Map parse_map(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = offset_to_line_col(json_text, e.byte);
        throw std::runtime_error("map parse error at line " + std::to_string(line) +
                                 ", column " + std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        parse_fail("expected an object with 'vertices' and 'edges'");

    Map m;
    std::map<long long, VertexId> idmap;
    std::vector<std::pair<long long, ordered_json>> vrecs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("kind"))
            parse_fail("vertex record needs 'id' and 'kind'");
        vrecs.emplace_back(v["id"].get<long long>(), v);
    }
    std::sort(vrecs.begin(), vrecs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [id, v] : vrecs) {
        if (idmap.count(id)) parse_fail("duplicate vertex id " + std::to_string(id));
        std::string kind = v["kind"].get<std::string>();
        int nslots = v.contains("slots") ? v["slots"].get<int>() : -1;
        VertexId nv;
        if (kind == "crossing") {
            if (nslots != -1 && nslots != 4) parse_fail("crossing must have 4 slots");
            int over = v.contains("over") ? v["over"].get<int>() : 0;
            if (over != 0 && over != 1) parse_fail("'over' must be 0 or 1");
            nv = m.add_crossing(static_cast<uint8_t>(over));
        } else if (kind == "flat") {
            if (nslots != -1 && nslots != 4) parse_fail("flat must have 4 slots");
            nv = m.add_flat();
        } else if (kind == "endpoint") {
            if (!v.contains("label")) parse_fail("endpoint needs a 'label'");
            std::string lab = v["label"].get<std::string>();
            if (lab != "tail" && lab != "head") parse_fail("label must be tail or head");
            if (nslots == -1) nslots = 1;
            if (nslots < 1) parse_fail("endpoint needs at least one slot");
            nv = m.add_endpoint(lab == "tail" ? EndpointLabel::Tail : EndpointLabel::Head,
                                nslots);
        } else if (kind == "joint") {
            if (nslots != -1 && nslots != 2) parse_fail("joint must have 2 slots");
            nv = m.add_joint();
        } else {
            parse_fail("unknown vertex kind '" + kind + "'");
        }
        idmap[id] = nv;
    }

    auto port = [&](const ordered_json& p) -> Port {
        if (!p.is_array() || p.size() != 2) parse_fail("port must be [vertex, slot]");
        long long vid = p[0].get<long long>();
        int slot = p[1].get<int>();
        auto it = idmap.find(vid);
        if (it == idmap.end()) parse_fail("port references unknown vertex " +
                                          std::to_string(vid));
        int ns = static_cast<int>(m.vertex(it->second).slots.size());
        if (slot < 0 || slot >= ns)
            parse_fail("slot " + std::to_string(slot) + " out of range for vertex " +
                       std::to_string(vid));
        if (m.vertex(it->second).slots[slot] != -1)
            parse_fail("slot " + std::to_string(slot) + " of vertex " +
                       std::to_string(vid) + " used twice");
        return Port{it->second, slot};
    };
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to"))
            parse_fail("edge record needs 'from' and 'to'");
        Strand s = Strand::Main;
        if (e.contains("strand")) {
            std::string st = e["strand"].get<std::string>();
            if (st == "shortcut")
                s = Strand::Shortcut;
            else if (st != "main")
                parse_fail("strand must be main or shortcut");
        }
        Port pf = port(e["from"]);
        Port pt = port(e["to"]);
        m.connect(pf, pt, s);
    }
    return m;
}

std::string serialize_map(const Map& m, const std::string& name,
                          const std::string& meta_json) {
    ordered_json j;
    j["format"] = "knotoid-map";
    if (!name.empty()) j["name"] = name;
    // vertices sorted by id; compacted ids are contiguous
    std::map<VertexId, int> idmap;
    {
        int next = 0;
        for (size_t i = 0; i < m.raw_vertices().size(); ++i)
            if (m.raw_vertices()[i].alive) idmap[static_cast<VertexId>(i)] = next++;
    }
    ordered_json verts = ordered_json::array();
    for (const auto& [old_id, new_id] : idmap) {
        const Vertex& v = m.vertex(old_id);
        ordered_json rec;
        rec["id"] = new_id;
        switch (v.kind) {
            case VertexKind::Crossing:
                rec["kind"] = "crossing";
                rec["slots"] = 4;
                rec["over"] = static_cast<int>(v.over);
                break;
            case VertexKind::Flat:
                rec["kind"] = "flat";
                rec["slots"] = 4;
                break;
            case VertexKind::Endpoint:
                rec["kind"] = "endpoint";
                rec["slots"] = static_cast<int>(v.slots.size());
                rec["label"] = v.label == EndpointLabel::Tail ? "tail" : "head";
                break;
            case VertexKind::Joint:
                rec["kind"] = "joint";
                rec["slots"] = 2;
                break;
        }
        verts.push_back(rec);
    }
    j["vertices"] = verts;

    struct ERec {
        int fv, fs, tv, ts;
        bool shortcut;
    };
    std::vector<ERec> ers;
    for (const auto& e : m.raw_edges()) {
        if (!e.alive) continue;
        ers.push_back({idmap.at(e.from.v), e.from.slot, idmap.at(e.to.v), e.to.slot,
                       e.strand == Strand::Shortcut});
    }
    std::sort(ers.begin(), ers.end(), [](const ERec& a, const ERec& b) {
        return std::tie(a.fv, a.fs) < std::tie(b.fv, b.fs);
    });
    ordered_json edges = ordered_json::array();
    for (const auto& e : ers) {
        ordered_json rec;
        rec["from"] = {e.fv, e.fs};
        rec["to"] = {e.tv, e.ts};
        rec["strand"] = e.shortcut ? "shortcut" : "main";
        edges.push_back(rec);
    }
    j["edges"] = edges;
    if (!meta_json.empty()) j["meta"] = ordered_json::parse(meta_json);
    return j.dump(2) + "\n";
}

Map load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_map(ss.str());
}

// -------------------------------------------------------- canonical form

namespace {

struct CanonLabels {
    std::vector<int> vorder;             // canonical index -> vertex id
    std::vector<int> vindex;             // vertex id -> canonical index
    std::vector<int> voffset;            // rotation: canonical slot j = original (offset+j) % n
    std::vector<int> base;               // canonical dart base per canonical vertex
    int total_darts = 0;
    int shortcut_strands = 0;
};

// Labels vertices in main-walk order, rotates crossings/flats so the
// first main arrival lands in canonical slot 2 and endpoints so the main
// dart is canonical slot 0.  This leaves no residual freedom, so the
// encoding below is a true canonical form.
CanonLabels canon_labels(const Map& m, const MainWalk& walk) {
    CanonLabels L;
    size_t nv = m.raw_vertices().size();
    L.vindex.assign(nv, -1);
    L.voffset.assign(nv, 0);

    auto tail = m.find_endpoint(EndpointLabel::Tail);
    if (!tail) throw std::invalid_argument("canonical form needs an open diagram");
    auto visit = [&](VertexId v, int offset) {
        if (L.vindex[v] != -1) return;
        L.vindex[v] = static_cast<int>(L.vorder.size());
        L.vorder.push_back(v);
        L.voffset[v] = offset;
    };
    {
        const Vertex& tv = m.vertex(*tail);
        int ms = -1;
        for (size_t s = 0; s < tv.slots.size(); ++s)
            if (tv.slots[s] != -1 && m.dart_strand(tv.slots[s]) == Strand::Main)
                ms = static_cast<int>(s);
        visit(*tail, ms);
    }
    for (DartId arr : walk.arrivals) {
        Port p = m.port_of(arr);
        const Vertex& v = m.vertex(p.v);
        if (v.kind == VertexKind::Endpoint)
            visit(p.v, p.slot);  // head: main dart at canonical slot 0
        else
            visit(p.v, (p.slot + 2) % 4);  // arrival at canonical slot 2
    }
    L.shortcut_strands = static_cast<int>(shortcut_starts(m).size());
    for (VertexId v : L.vorder) {
        L.base.push_back(L.total_darts);
        L.total_darts += static_cast<int>(m.vertex(v).slots.size());
    }
    if (L.vorder.size() != m.vertex_count())
        throw std::logic_error("canonical labeling missed vertices (invalid map?)");
    return L;
}

int canon_dart_index(const Map& m, const CanonLabels& L, Port p) {
    const Vertex& v = m.vertex(p.v);
    int n = static_cast<int>(v.slots.size());
    int ci = L.vindex[p.v];
    int cslot = (p.slot - L.voffset[p.v] % n + 2 * n) % n;
    return L.base[ci] + cslot;
}

constexpr uint8_t kKindCode[4] = {0, 1, 2, 3};

}  // namespace

std::vector<uint8_t> canonical_key(const Map& m) {
    return canonical_key(m, main_walk(m));
}

std::vector<uint8_t> canonical_key(const Map& m, const MainWalk& walk) {
    CanonLabels L = canon_labels(m, walk);
    std::vector<uint8_t> out;
    out.reserve(8 + 4 * L.vorder.size() + 3 * L.total_darts);
    auto put16 = [&](int x) {
        out.push_back(static_cast<uint8_t>(x & 0xff));
        out.push_back(static_cast<uint8_t>((x >> 8) & 0xff));
    };
    out.push_back(static_cast<uint8_t>(L.shortcut_strands));
    put16(static_cast<int>(L.vorder.size()));
    for (VertexId v : L.vorder) {
        const Vertex& vx = m.vertex(v);
        out.push_back(kKindCode[static_cast<int>(vx.kind)]);
        switch (vx.kind) {
            case VertexKind::Crossing:
                // rotating by offset flips the over pair parity with it
                out.push_back(static_cast<uint8_t>((vx.over + L.voffset[v]) % 2));
                break;
            case VertexKind::Endpoint:
                out.push_back(static_cast<uint8_t>(vx.label));
                out.push_back(static_cast<uint8_t>(vx.slots.size()));
                break;
            default:
                break;
        }
    }
    for (VertexId v : L.vorder) {
        const Vertex& vx = m.vertex(v);
        int n = static_cast<int>(vx.slots.size());
        for (int j = 0; j < n; ++j) {
            int orig = (L.voffset[v] + j) % n;
            DartId d = vx.slots[orig];
            DartId partner = m.alpha(d);
            put16(canon_dart_index(m, L, m.port_of(partner)));
            uint8_t flags = 0;
            if (m.dart_strand(d) == Strand::Shortcut) flags |= 1;
            if (m.dart_is_src(d)) flags |= 2;
            out.push_back(flags);
        }
    }
    return out;
}

Map decode_canonical(const std::vector<uint8_t>& key) {
    size_t pos = 0;
    auto get8 = [&]() { return key.at(pos++); };
    auto get16 = [&]() {
        int lo = key.at(pos++);
        int hi = key.at(pos++);
        return lo | (hi << 8);
    };
    get8();  // shortcut strand count (redundant with structure)
    int nv = get16();
    Map m;
    std::vector<int> base;
    std::vector<int> nslots;
    int total = 0;
    for (int i = 0; i < nv; ++i) {
        uint8_t kind = get8();
        VertexId v = -1;
        int ns = 0;
        switch (kind) {
            case 0: v = m.add_crossing(get8()); ns = 4; break;
            case 1: v = m.add_flat(); ns = 4; break;
            case 2: {
                uint8_t label = get8();
                ns = get8();
                v = m.add_endpoint(label ? EndpointLabel::Head : EndpointLabel::Tail, ns);
                break;
            }
            case 3: v = m.add_joint(); ns = 2; break;
            default: throw std::runtime_error("bad canonical key");
        }
        (void)v;
        base.push_back(total);
        nslots.push_back(ns);
        total += ns;
    }
    auto locate = [&](int dart) -> Port {
        for (int i = nv - 1; i >= 0; --i)
            if (dart >= base[i]) return Port{i, dart - base[i]};
        throw std::runtime_error("bad canonical key");
    };
    struct Pending {
        int partner;
        uint8_t flags;
    };
    std::vector<Pending> darts(total);
    for (int d = 0; d < total; ++d) {
        darts[d].partner = get16();
        darts[d].flags = get8();
    }
    for (int d = 0; d < total; ++d) {
        int p = darts[d].partner;
        if (p < d) continue;  // edge created from the lower side
        bool shortcut = darts[d].flags & 1;
        bool d_is_src = darts[d].flags & 2;
        Port a = locate(d), b = locate(p);
        if (d_is_src)
            m.connect(a, b, shortcut ? Strand::Shortcut : Strand::Main);
        else
            m.connect(b, a, shortcut ? Strand::Shortcut : Strand::Main);
    }
    return m;
}

uint64_t fingerprint(const std::vector<uint8_t>& key) {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : key) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

bool isomorphic(const Map& a, const Map& b) {
    return canonical_key(a) == canonical_key(b);
}

}  // namespace knotoid
