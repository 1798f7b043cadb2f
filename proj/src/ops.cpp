#include "knotoid/ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <functional>
#include <stdexcept>

#include "knotoid/invariants.hpp"

namespace knotoid {

Involution involution_from_name(const std::string& name) {
    if (name == "rev") return Involution::Rev;
    if (name == "mir") return Involution::Mir;
    if (name == "sym") return Involution::Sym;
    if (name == "rot") return Involution::Rot;
    throw std::invalid_argument("unknown involution '" + name + "'");
}

const char* involution_name(Involution which) {
    switch (which) {
        case Involution::Rev: return "rev";
        case Involution::Mir: return "mir";
        case Involution::Sym: return "sym";
        case Involution::Rot: return "rot";
    }
    return "?";
}

namespace {

Map reverse_orientation(const Map& m) {
    Map out = m;
    for (size_t i = 0; i < out.raw_vertices().size(); ++i) {
        Vertex& v = out.vertex(static_cast<VertexId>(i));
        if (v.alive && v.kind == VertexKind::Endpoint)
            v.label = v.label == EndpointLabel::Tail ? EndpointLabel::Head
                                                     : EndpointLabel::Tail;
    }
    // swapping from/to flips every dart's end bit; fix the slots to match
    Map flipped;
    for (size_t i = 0; i < out.raw_vertices().size(); ++i) {
        const Vertex& v = out.raw_vertices()[i];
        VertexId nv = flipped.add_vertex(v.kind, static_cast<int>(v.slots.size()));
        flipped.vertex(nv).label = v.label;
        flipped.vertex(nv).over = v.over;
        flipped.vertex(nv).alive = v.alive;
    }
    for (const auto& e : out.raw_edges())
        if (e.alive) flipped.connect(e.to, e.from, e.strand);
    return flipped;
}

Map mirror_crossings(const Map& m) {
    Map out = m;
    for (size_t i = 0; i < out.raw_vertices().size(); ++i) {
        Vertex& v = out.vertex(static_cast<VertexId>(i));
        if (v.alive && v.kind == VertexKind::Crossing) v.over ^= 1;
    }
    return out;
}

Map flip_sphere(const Map& m) {
    // reverse the cyclic slot order at every vertex: slot s -> (n - s) % n
    Map out;
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        VertexId nv = out.add_vertex(v.kind, static_cast<int>(v.slots.size()));
        out.vertex(nv).label = v.label;
        out.vertex(nv).over = v.over;  // opposite pairs are preserved
        out.vertex(nv).alive = v.alive;
    }
    auto remap = [&](Port p) {
        int n = static_cast<int>(m.vertex(p.v).slots.size());
        return Port{p.v, (n - p.slot) % n};
    };
    for (const auto& e : m.raw_edges())
        if (e.alive) out.connect(remap(e.from), remap(e.to), e.strand);
    return out;
}

}  // namespace

Map involution(const Map& m, Involution which) {
    switch (which) {
        case Involution::Rev: return reverse_orientation(m);
        case Involution::Mir: return mirror_crossings(m);
        case Involution::Sym: return flip_sphere(m);
        case Involution::Rot: return mirror_crossings(flip_sphere(m));
    }
    throw std::logic_error("unreachable");
}

Map product(const Map& m1, const Map& m2) {
    auto r1 = validate(m1), r2 = validate(m2);
    if (!r1.ok || !r2.ok)
        throw std::invalid_argument("product: operands must be valid diagrams");
    if (r1.cls == MapClass::Closed || r2.cls == MapClass::Closed)
        throw std::invalid_argument("product: operands must be open diagrams");
    if (r1.shortcut_strands != r2.shortcut_strands || r1.shortcut_strands > 1)
        throw std::invalid_argument(
            "product: operands must carry the same shortcut arity (0 or 1)");

    Map out;
    std::vector<VertexId> map1(m1.raw_vertices().size(), -1);
    std::vector<VertexId> map2(m2.raw_vertices().size(), -1);
    VertexId head1 = *m1.find_endpoint(EndpointLabel::Head);
    VertexId tail2 = *m2.find_endpoint(EndpointLabel::Tail);
    auto copy_vertices = [&](const Map& src, std::vector<VertexId>& vmap,
                             VertexId skip) {
        for (size_t i = 0; i < src.raw_vertices().size(); ++i) {
            const Vertex& v = src.raw_vertices()[i];
            if (!v.alive || static_cast<VertexId>(i) == skip) continue;
            VertexId nv = out.add_vertex(v.kind, static_cast<int>(v.slots.size()));
            out.vertex(nv).label = v.label;
            out.vertex(nv).over = v.over;
            vmap[i] = nv;
        }
    };
    copy_vertices(m1, map1, head1);
    copy_vertices(m2, map2, tail2);

    // edges not touching the glued endpoints copy straight across; the
    // strands through the joint merge pairwise by type
    struct Dangling {
        Port far;     // surviving far port (new ids)
        bool is_from;  // far end is the edge's source
    };
    std::map<int, Dangling> half1, half2;  // keyed by strand type
    auto copy_edges = [&](const Map& src, const std::vector<VertexId>& vmap,
                          VertexId skip, std::map<int, Dangling>& half) {
        for (const auto& e : src.raw_edges()) {
            if (!e.alive) continue;
            bool skip_from = e.from.v == skip, skip_to = e.to.v == skip;
            if (skip_from && skip_to)
                throw std::invalid_argument("product: degenerate joint edge");
            if (!skip_from && !skip_to) {
                out.connect({vmap[e.from.v], e.from.slot}, {vmap[e.to.v], e.to.slot},
                            e.strand);
                continue;
            }
            Dangling d;
            d.is_from = skip_to;  // far end survives as source iff the skipped end was 'to'
            Port far = skip_to ? e.from : e.to;
            d.far = Port{vmap[far.v], far.slot};
            half[static_cast<int>(e.strand)] = d;
        }
    };
    copy_edges(m1, map1, head1, half1);
    copy_edges(m2, map2, tail2, half2);
    for (const auto& [strand, d1] : half1) {
        auto it = half2.find(strand);
        if (it == half2.end())
            throw std::invalid_argument("product: strand mismatch at the joint");
        const Dangling& d2 = it->second;
        // m1's side flows into the joint, m2's side flows out of it
        out.connect(d1.far, d2.far, static_cast<Strand>(strand));
    }
    return out;
}

Map closure(const Map& m, ClosureMode mode) {
    auto rep = validate(m);
    if (!rep.ok || rep.cls != MapClass::Shortcut || rep.shortcut_strands != 1)
        throw std::invalid_argument("closure: a one-shortcut diagram is required");

    Map out;
    std::vector<VertexId> vmap(m.raw_vertices().size(), -1);
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (!v.alive) continue;
        VertexId nv;
        switch (v.kind) {
            case VertexKind::Endpoint:
                nv = out.add_joint();
                break;
            case VertexKind::Flat: {
                // the shortcut pair becomes the over strand in Over mode
                int shortcut_pair =
                    m.dart_strand(v.slots[0]) == Strand::Shortcut ? 0 : 1;
                int over = mode == ClosureMode::Over ? shortcut_pair
                                                     : 1 - shortcut_pair;
                nv = out.add_crossing(static_cast<uint8_t>(over));
                break;
            }
            default:
                nv = out.add_vertex(v.kind, static_cast<int>(v.slots.size()));
                out.vertex(nv).over = v.over;
                out.vertex(nv).label = v.label;
                break;
        }
        vmap[i] = nv;
    }
    for (const auto& e : m.raw_edges()) {
        if (!e.alive) continue;
        Port f{vmap[e.from.v], e.from.slot}, t{vmap[e.to.v], e.to.slot};
        // the circle runs along the main strand and back along the
        // shortcut, so shortcut edges reverse
        if (e.strand == Strand::Shortcut)
            out.connect(t, f, Strand::Main);
        else
            out.connect(f, t, Strand::Main);
    }
    return out;
}

// ---------------------------------------------------------------- lifting

LiftResult lift_cover(const Map& m, int n) {
    if (n < 1) throw std::invalid_argument("lift_cover: n must be >= 1");
    auto rep = validate(m);
    if (!rep.ok || rep.cls != MapClass::Shortcut || rep.shortcut_strands != 1)
        throw std::invalid_argument("lift_cover: a one-shortcut diagram is required");

    MainWalk walk = main_walk(m);
    VertexId tail = *m.find_endpoint(EndpointLabel::Tail);
    VertexId head = *m.find_endpoint(EndpointLabel::Head);

    // prefix sheet along the main strand; flats carry the seam label
    // q = max(sheet before, sheet after)
    std::map<VertexId, std::pair<int, int>> crossing_sheets;  // first, second
    std::map<VertexId, int> flat_seam;
    int sheet = 0;
    for (DartId arr : walk.arrivals) {
        Port p = m.port_of(arr);
        const Vertex& v = m.vertex(p.v);
        if (v.kind == VertexKind::Crossing) {
            auto it = crossing_sheets.find(p.v);
            if (it == crossing_sheets.end())
                crossing_sheets[p.v] = {sheet, sheet};
            else
                it->second.second = sheet;
        } else if (v.kind == VertexKind::Flat) {
            int eps = flat_sign(m, p.v);
            flat_seam[p.v] = std::max(sheet, sheet + eps);
            sheet += eps;
        }
    }

    auto mod = [&](int x) { return ((x % n) + n) % n; };

    std::set<VertexId> survivors;
    bool stabilized = true;
    for (const auto& [c, sh] : crossing_sheets) {
        if (mod(sh.first) == mod(sh.second)) {
            survivors.insert(c);
            if (sh.first != sh.second) stabilized = false;
        }
    }

    LiftResult out;
    out.n = n;
    out.stabilized = stabilized;
    Map& lift = out.map;

    std::vector<VertexId> vmap(m.raw_vertices().size(), -1);
    VertexId ntail = lift.add_endpoint(EndpointLabel::Tail, 1 + n);
    VertexId nhead = lift.add_endpoint(EndpointLabel::Head, 1 + n);
    vmap[tail] = ntail;
    vmap[head] = nhead;
    for (const auto& [c, sh] : crossing_sheets) {
        (void)sh;
        if (survivors.count(c)) vmap[c] = lift.add_crossing(m.vertex(c).over);
    }
    for (const auto& [f, q] : flat_seam) {
        (void)q;
        vmap[f] = lift.add_flat();
    }

    // main strand: consecutive surviving stops merge the edges between
    {
        Port seg_from{ntail, 0};
        for (DartId arr : walk.arrivals) {
            Port p = m.port_of(arr);
            const Vertex& v = m.vertex(p.v);
            if (v.kind == VertexKind::Crossing && !survivors.count(p.v)) continue;
            Port np = v.kind == VertexKind::Endpoint ? Port{vmap[p.v], 0}
                                                     : Port{vmap[p.v], p.slot};
            lift.connect(seg_from, np, Strand::Main);
            if (v.kind != VertexKind::Endpoint)
                seg_from = Port{vmap[p.v], (p.slot + 2) % 4};
        }
    }

    // tail rotation: ccw (main, a^1, a^2, ..., a^{n-1}, a^0); the seam
    // between sheets x-1 and x is the lift labelled x
    std::vector<int> tail_slot_of_label(n), head_slot_of_label(n);
    for (int k = 1; k <= n; ++k) tail_slot_of_label[mod(k)] = k;
    int mfin = mod(sheet);  // final sheet = algebraic height mod n
    // head rotation: ccw (main, a^m, a^{m-1}, ..., a^{m-n+1})
    for (int k = 1; k <= n; ++k) head_slot_of_label[mod(mfin - k + 1)] = k;

    // shortcut seams: original flats in shortcut order, filtered by label
    DartId sc_start = shortcut_starts(m).at(0);
    std::vector<VertexId> flats_in_order;
    for (DartId arr : shortcut_walk(m, sc_start)) {
        Port p = m.port_of(arr);
        if (m.vertex(p.v).kind == VertexKind::Flat) flats_in_order.push_back(p.v);
    }
    for (int label = 0; label < n; ++label) {
        Port prev{ntail, tail_slot_of_label[label]};
        for (VertexId f : flats_in_order) {
            if (mod(flat_seam[f]) != label) continue;
            // entry slot = where the original shortcut edge arrives at f
            const Vertex& v = m.vertex(f);
            int in_slot = -1, out_slot = -1;
            for (int s = 0; s < 4; ++s) {
                DartId d = v.slots[s];
                if (m.dart_strand(d) != Strand::Shortcut) continue;
                if (m.dart_is_src(d))
                    out_slot = s;
                else
                    in_slot = s;
            }
            lift.connect(prev, Port{vmap[f], in_slot}, Strand::Shortcut);
            prev = Port{vmap[f], out_slot};
        }
        lift.connect(prev, Port{nhead, head_slot_of_label[label]}, Strand::Shortcut);
    }
    return out;
}

LiftResult stabilize(const Map& m) {
    int max_ind = 0;
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (v.alive && v.kind == VertexKind::Crossing)
            max_ind = std::max(max_ind,
                               std::abs(intersection_index(m, static_cast<VertexId>(i))));
    }
    return lift_cover(m, max_ind + 1);
}

// ------------------------------------------------------- shortcut routing

Map with_shortcut(const Map& knotoid_map, const std::vector<DartId>& crossed) {
    auto rep = validate(knotoid_map);
    if (!rep.ok || rep.cls != MapClass::Knotoid)
        throw std::invalid_argument("with_shortcut: a shortcut-free diagram is required");
    {
        std::set<EdgeId> edges;
        for (DartId d : crossed) {
            if (knotoid_map.dart_strand(d) != Strand::Main)
                throw std::invalid_argument("with_shortcut: crossed edges must be main");
            if (!edges.insert(dart_edge(d)).second)
                throw std::invalid_argument("with_shortcut: edges must be distinct");
        }
    }

    Map out;
    std::vector<VertexId> vmap(knotoid_map.raw_vertices().size(), -1);
    VertexId tail = *knotoid_map.find_endpoint(EndpointLabel::Tail);
    VertexId head = *knotoid_map.find_endpoint(EndpointLabel::Head);
    for (size_t i = 0; i < knotoid_map.raw_vertices().size(); ++i) {
        const Vertex& v = knotoid_map.raw_vertices()[i];
        if (!v.alive) continue;
        if (v.kind == VertexKind::Endpoint) {
            vmap[i] = out.add_endpoint(v.label, 2);
        } else {
            VertexId nv = out.add_vertex(v.kind, 4);
            out.vertex(nv).over = v.over;
            vmap[i] = nv;
        }
    }

    // per crossed edge: flat vertex; slots 0 = main downstream (in the
    // dart's traversal direction), 1 = shortcut entry (the dart's face
    // side), 2 = main upstream, 3 = shortcut exit
    std::map<EdgeId, std::pair<DartId, VertexId>> flats;  // edge -> (dart, flat)
    for (DartId d : crossed) flats[dart_edge(d)] = {d, out.add_flat()};

    for (size_t ei = 0; ei < knotoid_map.raw_edges().size(); ++ei) {
        const Edge& e = knotoid_map.raw_edges()[ei];
        if (!e.alive) continue;
        Port f{vmap[e.from.v], e.from.slot}, t{vmap[e.to.v], e.to.slot};
        if (e.from.v == tail || e.from.v == head) f.slot = 0;
        if (e.to.v == tail || e.to.v == head) t.slot = 0;
        auto it = flats.find(static_cast<EdgeId>(ei));
        if (it == flats.end()) {
            out.connect(f, t, Strand::Main);
            continue;
        }
        auto [d, fv] = it->second;
        // slot 2 faces the dart's own vertex
        bool dart_at_from = dart_end(d) == 0;
        Port near = dart_at_from ? f : t;
        Port far = dart_at_from ? t : f;
        if (dart_at_from) {
            out.connect(near, Port{fv, 2}, Strand::Main);
            out.connect(Port{fv, 0}, far, Strand::Main);
        } else {
            out.connect(far, Port{fv, 0}, Strand::Main);
            out.connect(Port{fv, 2}, near, Strand::Main);
        }
    }

    Port prev{vmap[tail], 1};
    for (DartId d : crossed) {
        VertexId fv = flats[dart_edge(d)].second;
        out.connect(prev, Port{fv, 1}, Strand::Shortcut);
        prev = Port{fv, 3};
    }
    out.connect(prev, Port{vmap[head], 1}, Strand::Shortcut);
    return out;
}

std::vector<Map> enumerate_shortcuts(const Map& knotoid_map, int max_crossings) {
    auto rep = validate(knotoid_map);
    if (!rep.ok || rep.cls != MapClass::Knotoid)
        throw std::invalid_argument("enumerate_shortcuts: shortcut-free diagram required");

    auto all_faces = knotoid_map.faces();
    std::map<DartId, int> face_of;
    for (size_t i = 0; i < all_faces.size(); ++i)
        for (DartId d : all_faces[i]) face_of[d] = static_cast<int>(i);

    auto face_of_vertex = [&](VertexId v) {
        DartId d = knotoid_map.vertex(v).slots[0];
        return face_of.at(d);
    };
    int start_face = face_of_vertex(*knotoid_map.find_endpoint(EndpointLabel::Tail));
    int goal_face = face_of_vertex(*knotoid_map.find_endpoint(EndpointLabel::Head));

    std::vector<Map> results;
    std::vector<DartId> path;
    std::set<int> used_faces;
    std::set<EdgeId> used_edges;

    std::function<void(int)> extend = [&](int face) {
        if (face == goal_face) {
            Map candidate = with_shortcut(knotoid_map, path);
            if (validate(candidate).ok) results.push_back(std::move(candidate));
        }
        if (static_cast<int>(path.size()) == max_crossings) return;
        for (DartId d : all_faces[face]) {
            if (knotoid_map.dart_strand(d) != Strand::Main) continue;
            if (used_edges.count(dart_edge(d))) continue;
            int next = face_of.at(knotoid_map.alpha(d));
            if (used_faces.count(next)) continue;
            path.push_back(d);
            used_edges.insert(dart_edge(d));
            used_faces.insert(next);
            extend(next);
            used_faces.erase(next);
            used_edges.erase(dart_edge(d));
            path.pop_back();
        }
    };
    used_faces.insert(start_face);
    extend(start_face);
    return results;
}

}  // namespace knotoid
