#include "knotoid/moves.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "knotoid/invariants.hpp"

namespace knotoid {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Pos: return "R1+";
        case MoveKind::R1Neg: return "R1-";
        case MoveKind::R1Undo: return "R1undo";
        case MoveKind::R2: return "R2";
        case MoveKind::R2Undo: return "R2undo";
        case MoveKind::R3: return "R3";
        case MoveKind::S1: return "S1";
        case MoveKind::S1Undo: return "S1undo";
        case MoveKind::S2: return "S2";
        case MoveKind::S2Undo: return "S2undo";
        case MoveKind::S3: return "S3";
    }
    return "?";
}

namespace {

bool edge_over_at(const Map& m, DartId d) {
    Port p = m.port_of(d);
    const Vertex& v = m.vertex(p.v);
    return (p.slot % 2) == (v.over ? 1 : 0);
}

// sign of the kink an R1 site creates: left-side kinks are positive when
// the second passage is over, right-side when the first is
int r1_sign(int side, bool over_first) {
    if (side == 0) return over_first ? -1 : 1;
    return over_first ? 1 : -1;
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Map& m) {
    std::vector<MoveSite> sites;

    // R1 creations on every main edge
    for (size_t e = 0; e < m.raw_edges().size(); ++e) {
        const Edge& ed = m.raw_edges()[e];
        if (!ed.alive || ed.strand != Strand::Main) continue;
        for (int side = 0; side < 2; ++side)
            for (int of = 0; of < 2; ++of) {
                MoveSite s;
                s.kind = r1_sign(side, of) > 0 ? MoveKind::R1Pos : MoveKind::R1Neg;
                s.a = make_dart(static_cast<EdgeId>(e), 0);
                s.variant = static_cast<uint8_t>(side | (of << 1));
                sites.push_back(s);
            }
    }

    // S1 swings at 2-valent endpoints
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (!v.alive || v.kind != VertexKind::Endpoint || v.slots.size() != 2)
            continue;
        for (int corner = 0; corner < 2; ++corner) {
            MoveSite s;
            s.kind = MoveKind::S1;
            s.v = static_cast<VertexId>(i);
            s.variant = static_cast<uint8_t>(corner);
            sites.push_back(s);
        }
    }

    auto faces = m.faces();
    for (const auto& face : faces) {
        if (face.size() == 1) {
            DartId d = face[0];
            Port p = m.port_of(d);
            if (m.vertex(p.v).kind == VertexKind::Crossing) {
                MoveSite s;
                s.kind = MoveKind::R1Undo;
                s.a = d;
                sites.push_back(s);
            }
        } else if (face.size() == 2) {
            DartId d1 = face[0], d2 = face[1];
            Port p1 = m.port_of(d1), p2 = m.port_of(d2);
            if (p1.v == p2.v) continue;
            if (dart_edge(d1) == dart_edge(d2)) continue;
            const Vertex &v1 = m.vertex(p1.v), &v2 = m.vertex(p2.v);
            Strand s1 = m.dart_strand(d1), s2 = m.dart_strand(d2);
            if (v1.kind == VertexKind::Crossing && v2.kind == VertexKind::Crossing &&
                s1 == Strand::Main && s2 == Strand::Main) {
                bool a_over_1 = edge_over_at(m, d1);
                bool a_over_2 = edge_over_at(m, m.alpha(d1));
                if (a_over_1 == a_over_2) {
                    MoveSite s;
                    s.kind = MoveKind::R2Undo;
                    s.a = d1;
                    sites.push_back(s);
                }
            } else if (v1.kind == VertexKind::Flat && v2.kind == VertexKind::Flat &&
                       s1 != s2) {
                MoveSite s;
                s.kind = MoveKind::S2Undo;
                s.a = d1;
                sites.push_back(s);
            } else if ((v1.kind == VertexKind::Flat &&
                        v2.kind == VertexKind::Endpoint) ||
                       (v1.kind == VertexKind::Endpoint &&
                        v2.kind == VertexKind::Flat)) {
                if (s1 != s2) {
                    MoveSite s;
                    s.kind = MoveKind::S1Undo;
                    s.a = v1.kind == VertexKind::Flat ? d1 : d2;
                    sites.push_back(s);
                }
            }
        } else if (face.size() == 3) {
            Port p0 = m.port_of(face[0]), p1 = m.port_of(face[1]),
                 p2 = m.port_of(face[2]);
            if (p0.v == p1.v || p1.v == p2.v || p0.v == p2.v) continue;
            int crossings = 0, flats = 0;
            for (Port p : {p0, p1, p2}) {
                VertexKind k = m.vertex(p.v).kind;
                if (k == VertexKind::Crossing) ++crossings;
                if (k == VertexKind::Flat) ++flats;
            }
            if (crossings == 3) {
                for (DartId d : face) {
                    if (m.dart_strand(d) != Strand::Main) continue;
                    bool over_near = edge_over_at(m, d);
                    bool over_far = edge_over_at(m, m.alpha(d));
                    if (over_near == over_far) {
                        MoveSite s;
                        s.kind = MoveKind::R3;
                        s.a = d;
                        sites.push_back(s);
                    }
                }
            } else if (crossings == 1 && flats == 2) {
                for (DartId d : face) {
                    if (m.dart_strand(d) != Strand::Shortcut) continue;
                    Port q = m.port_of(d), qa = m.port_of(m.alpha(d));
                    if (m.vertex(q.v).kind == VertexKind::Flat &&
                        m.vertex(qa.v).kind == VertexKind::Flat) {
                        MoveSite s;
                        s.kind = MoveKind::S3;
                        s.a = d;
                        sites.push_back(s);
                    }
                }
            }
        }
        // finger moves across the face: R2 (main/main) and S2 (mixed)
        for (size_t i = 0; i < face.size(); ++i) {
            for (size_t j = 0; j < face.size(); ++j) {
                if (i == j) continue;
                Strand si = m.dart_strand(face[i]);
                Strand sj = m.dart_strand(face[j]);
                if (si == Strand::Main && sj == Strand::Main) {
                    if (i < j) {  // unordered; which side fingers is immaterial
                        for (int over = 0; over < 2; ++over) {
                            MoveSite s;
                            s.kind = MoveKind::R2;
                            s.a = face[i];
                            s.b = face[j];
                            s.variant = static_cast<uint8_t>(over);
                            sites.push_back(s);
                        }
                    }
                } else if (si != sj) {
                    MoveSite s;  // the dart-a strand is the finger
                    s.kind = MoveKind::S2;
                    s.a = face[i];
                    s.b = face[j];
                    sites.push_back(s);
                }
            }
        }
    }
    return sites;
}

namespace {

[[noreturn]] void stale(const char* what) {
    throw std::invalid_argument(std::string("apply_move: stale site: ") + what);
}

Map apply_r1(const Map& m, const MoveSite& site) {
    Map out = m;
    EdgeId e = dart_edge(site.a);
    if (!out.raw_edges()[e].alive || out.edge(e).strand != Strand::Main)
        stale("edge");
    int side = site.variant & 1;
    bool over_first = (site.variant >> 1) & 1;
    Port a0 = out.edge(e).from, a1 = out.edge(e).to;
    out.disconnect(e);
    VertexId c = out.add_crossing(over_first ? 0 : 1);  // first passage: in 2, out 0
    out.connect(a0, {c, 2}, Strand::Main);
    if (side == 0) {  // loop on the left of the oriented edge
        out.connect({c, 0}, {c, 1}, Strand::Main);
        out.connect({c, 3}, a1, Strand::Main);
    } else {
        out.connect({c, 0}, {c, 3}, Strand::Main);
        out.connect({c, 1}, a1, Strand::Main);
    }
    out.compact();
    return out;
}

Map apply_r1_undo(const Map& m, const MoveSite& site) {
    Map out = m;
    DartId d = site.a;
    if (!out.raw_edges()[dart_edge(d)].alive) stale("edge");
    Port p = out.port_of(d), q = out.port_of(out.alpha(d));
    if (p.v != q.v || out.vertex(p.v).kind != VertexKind::Crossing) stale("monogon");
    if ((p.slot + 1) % 4 != q.slot && (q.slot + 1) % 4 != p.slot) stale("monogon");
    if (out.face_next(d) != d) stale("monogon");
    VertexId c = p.v;
    EdgeId loop = dart_edge(d);
    int o1 = (p.slot + 2) % 4, o2 = (q.slot + 2) % 4;
    DartId d1 = out.vertex(c).slots[o1], d2 = out.vertex(c).slots[o2];
    EdgeId e1 = dart_edge(d1), e2 = dart_edge(d2);
    if (e1 == e2) stale("kink closes a circle");
    DartId din = out.dart_is_src(d1) ? d2 : d1;
    DartId dout = out.dart_is_src(d1) ? d1 : d2;
    Port from = out.edge(dart_edge(din)).from;
    Port to = out.edge(dart_edge(dout)).to;
    out.disconnect(loop);
    out.disconnect(dart_edge(din));
    out.disconnect(dart_edge(dout));
    out.connect(from, to, Strand::Main);
    out.remove_vertex(c);
    out.compact();
    return out;
}

// finger of the dart-a edge pushed across the dart-b edge; the two new
// vertices are crossings for R2, flats for S2
Map apply_finger(const Map& m, const MoveSite& site, bool is_r2) {
    Map out = m;
    DartId da = site.a, db = site.b;
    EdgeId ea = dart_edge(da), eb = dart_edge(db);
    if (!out.raw_edges()[ea].alive || !out.raw_edges()[eb].alive) stale("edge");
    Strand sa = out.dart_strand(da), sb = out.dart_strand(db);
    if (is_r2 && (sa != Strand::Main || sb != Strand::Main)) stale("strand");
    if (!is_r2 && sa == sb) stale("strand");

    bool rev_a = !out.dart_is_src(da);
    bool rev_b = !out.dart_is_src(db);
    Port A0 = out.port_of(da), A1 = out.port_of(out.alpha(da));
    Port B0 = out.port_of(db), B1 = out.port_of(out.alpha(db));

    VertexId ca, cb;
    if (is_r2) {
        // the finger strand occupies the odd slot pair
        uint8_t over_bit = site.variant == 0 ? 1 : 0;
        ca = out.add_crossing(over_bit);
        cb = out.add_crossing(over_bit);
    } else {
        ca = out.add_flat();
        cb = out.add_flat();
    }

    auto link = [&](Port x, Port y, bool reversed, Strand s) {
        if (reversed)
            out.connect(y, x, s);
        else
            out.connect(x, y, s);
    };

    if (ea != eb) {
        out.disconnect(ea);
        out.disconnect(eb);
        // finger: A0 - ca.1, tip ca.3 - cb.3, cb.1 - A1
        link(A0, {ca, 1}, rev_a, sa);
        link({ca, 3}, {cb, 3}, rev_a, sa);
        link({cb, 1}, A1, rev_a, sa);
        // crossed strand: B0 - cb.2, cb.0 - ca.2, ca.0 - B1
        link(B0, {cb, 2}, rev_b, sb);
        link({cb, 0}, {ca, 2}, rev_b, sb);
        link({ca, 0}, B1, rev_b, sb);
    } else {
        // finger across the same edge
        out.disconnect(ea);
        link(A0, {ca, 1}, rev_a, sa);
        link({ca, 3}, {cb, 3}, rev_a, sa);
        link({cb, 1}, {cb, 0}, rev_a, sa);
        link({cb, 2}, {ca, 0}, rev_a, sa);
        link({ca, 2}, A1, rev_a, sa);
    }
    out.compact();
    return out;
}

Map apply_bigon_undo(const Map& m, const MoveSite& site) {
    Map out = m;
    DartId d1 = site.a;
    if (!out.raw_edges()[dart_edge(d1)].alive) stale("edge");
    DartId d2 = out.face_next(d1);
    if (d2 == -1 || out.face_next(d2) != d1) stale("bigon");
    Port p1 = out.port_of(d1), p2 = out.port_of(d2);
    if (p1.v == p2.v) stale("bigon");
    VertexId u1 = p1.v, u2 = p2.v;
    dissolve_passthrough(out, u1);
    dissolve_passthrough(out, u2);
    out.compact();
    return out;
}

Map apply_s1(const Map& m, const MoveSite& site) {
    Map out = m;
    VertexId v = site.v;
    if (v < 0 || v >= static_cast<VertexId>(out.raw_vertices().size())) stale("vertex");
    const Vertex& vx = out.vertex(v);
    if (!vx.alive || vx.kind != VertexKind::Endpoint || vx.slots.size() != 2)
        stale("endpoint");
    int main_slot = out.dart_strand(vx.slots[0]) == Strand::Main ? 0 : 1;
    // corner 0 lies ccw after the main dart, corner 1 after the shortcut
    bool corner_after_main = site.variant == 0;

    EdgeId me = dart_edge(vx.slots[main_slot]);
    EdgeId se = dart_edge(vx.slots[1 - main_slot]);
    bool is_tail = vx.label == EndpointLabel::Tail;
    Port main_far = is_tail ? out.edge(me).to : out.edge(me).from;
    Port sc_far = is_tail ? out.edge(se).to : out.edge(se).from;
    if (main_far.v == v || sc_far.v == v) stale("degenerate endpoint edge");
    out.disconnect(me);
    out.disconnect(se);
    VertexId f = out.add_flat();
    // ccw slots at the flat: (main-far, X, main-near, Y), with
    // (X, Y) = (sc-far, sc-near) when swinging through the corner after
    // the main dart
    int sc_far_slot = corner_after_main ? 1 : 3;
    int sc_near_slot = corner_after_main ? 3 : 1;
    if (is_tail) {
        out.connect({v, main_slot}, {f, 2}, Strand::Main);
        out.connect({f, 0}, main_far, Strand::Main);
        out.connect({v, 1 - main_slot}, {f, sc_near_slot}, Strand::Shortcut);
        out.connect({f, sc_far_slot}, sc_far, Strand::Shortcut);
    } else {
        out.connect({f, 2}, {v, main_slot}, Strand::Main);
        out.connect(main_far, {f, 0}, Strand::Main);
        out.connect({f, sc_near_slot}, {v, 1 - main_slot}, Strand::Shortcut);
        out.connect(sc_far, {f, sc_far_slot}, Strand::Shortcut);
    }
    out.compact();
    return out;
}

Map apply_s1_undo(const Map& m, const MoveSite& site) {
    Map out = m;
    DartId d = site.a;
    if (!out.raw_edges()[dart_edge(d)].alive) stale("edge");
    DartId d2 = out.face_next(d);
    if (d2 == -1 || out.face_next(d2) != d) stale("bigon");
    Port pf = out.port_of(d);
    if (out.vertex(pf.v).kind != VertexKind::Flat) stale("flat");
    dissolve_passthrough(out, pf.v);
    out.compact();
    return out;
}

// slide the side containing dart t0 across the opposite vertex
Map apply_slide(const Map& m, const MoveSite& site, bool is_r3) {
    Map out = m;
    DartId t0 = site.a;
    if (!out.raw_edges()[dart_edge(t0)].alive) stale("edge");
    DartId t1 = out.face_next(t0);
    DartId t2 = t1 == -1 ? -1 : out.face_next(t1);
    if (t1 == -1 || t2 == -1 || out.face_next(t2) != t0) stale("triangle");
    VertexId U = out.port_of(t0).v;
    VertexId W = out.port_of(t1).v;
    VertexId O = out.port_of(t2).v;
    if (U == W || W == O || U == O) stale("triangle corners");
    if (is_r3) {
        for (VertexId x : {U, W, O})
            if (out.vertex(x).kind != VertexKind::Crossing) stale("corner kind");
    } else {
        if (out.vertex(U).kind != VertexKind::Flat ||
            out.vertex(W).kind != VertexKind::Flat ||
            out.vertex(O).kind != VertexKind::Crossing)
            stale("corner kind");
        if (out.dart_strand(t0) != Strand::Shortcut) stale("strand");
    }

    int a0 = out.port_of(t0).slot;
    int a1 = out.port_of(out.alpha(t0)).slot;
    int b1 = out.port_of(t1).slot;
    int r0 = out.port_of(out.alpha(t1)).slot;
    int q0 = out.port_of(t2).slot;
    int b0 = out.port_of(out.alpha(t2)).slot;

    Strand slide_strand = out.dart_strand(t0);
    bool slide_src_at_w = out.edge(dart_edge(t0)).from.v == W;

    auto edge_at = [&](VertexId vv, int slot) {
        DartId d = out.vertex(vv).slots[slot];
        if (d == -1) stale("missing edge");
        return dart_edge(d);
    };
    auto end_of = [&](EdgeId e, VertexId vv, int slot) {
        Port p{vv, slot};
        return (out.edge(e).from == p) ? 0 : 1;
    };

    EdgeId e_p_u = edge_at(U, (a0 + 2) % 4);
    EdgeId e_q_u = edge_at(U, (b0 + 2) % 4);
    EdgeId e_p_w = edge_at(W, (a1 + 2) % 4);
    EdgeId e_r_w = edge_at(W, (b1 + 2) % 4);

    VertexId U2 = out.vertex(U).kind == VertexKind::Crossing
                      ? out.add_crossing(out.vertex(U).over)
                      : out.add_flat();
    VertexId W2 = out.vertex(W).kind == VertexKind::Crossing
                      ? out.add_crossing(out.vertex(W).over)
                      : out.add_flat();

    out.disconnect(dart_edge(t0));
    out.disconnect(dart_edge(t1));
    out.disconnect(dart_edge(t2));

    out.move_end(e_r_w, end_of(e_r_w, W, (b1 + 2) % 4), Port{O, r0});
    out.move_end(e_q_u, end_of(e_q_u, U, (b0 + 2) % 4), Port{O, q0});
    out.move_end(e_p_w, end_of(e_p_w, W, (a1 + 2) % 4), Port{U2, a0});
    out.move_end(e_p_u, end_of(e_p_u, U, (a0 + 2) % 4), Port{W2, a1});

    // subdivide the two continuations beyond the opposite vertex
    auto subdivide = [&](VertexId atv, int far_slot, VertexId nv, int near_slot) {
        EdgeId e = edge_at(atv, far_slot);
        Strand s = out.edge(e).strand;
        Port other;
        bool into_here;  // edge oriented into the subdivided vertex
        if (out.edge(e).from == Port{atv, far_slot}) {
            other = out.edge(e).to;
            into_here = false;
        } else {
            other = out.edge(e).from;
            into_here = true;
        }
        out.disconnect(e);
        if (into_here) {
            out.connect(other, Port{nv, (near_slot + 2) % 4}, s);
            out.connect(Port{nv, near_slot}, Port{atv, far_slot}, s);
        } else {
            out.connect(Port{atv, far_slot}, Port{nv, near_slot}, s);
            out.connect(Port{nv, (near_slot + 2) % 4}, other, s);
        }
    };
    subdivide(O, (r0 + 2) % 4, W2, (b1 + 2) % 4);
    subdivide(O, (q0 + 2) % 4, U2, (b0 + 2) % 4);

    if (slide_src_at_w)
        out.connect(Port{U2, (a0 + 2) % 4}, Port{W2, (a1 + 2) % 4}, slide_strand);
    else
        out.connect(Port{W2, (a1 + 2) % 4}, Port{U2, (a0 + 2) % 4}, slide_strand);

    out.remove_vertex(U);
    out.remove_vertex(W);
    out.compact();
    return out;
}

}  // namespace

Map apply_move(const Map& m, const MoveSite& site) {
    switch (site.kind) {
        case MoveKind::R1Pos:
        case MoveKind::R1Neg: return apply_r1(m, site);
        case MoveKind::R1Undo: return apply_r1_undo(m, site);
        case MoveKind::R2: return apply_finger(m, site, true);
        case MoveKind::S2: return apply_finger(m, site, false);
        case MoveKind::R2Undo:
        case MoveKind::S2Undo: return apply_bigon_undo(m, site);
        case MoveKind::S1: return apply_s1(m, site);
        case MoveKind::S1Undo: return apply_s1_undo(m, site);
        case MoveKind::R3: return apply_slide(m, site, true);
        case MoveKind::S3: return apply_slide(m, site, false);
    }
    throw std::logic_error("unreachable");
}

// ------------------------------------------------------------ exploration

Budget Budget::defaults_for(const Map& m) {
    int crossings = 0, flats = 0;
    for (const auto& v : m.raw_vertices()) {
        if (!v.alive) continue;
        if (v.kind == VertexKind::Crossing) ++crossings;
        if (v.kind == VertexKind::Flat) ++flats;
    }
    Budget b;
    b.max_crossings = crossings + 4;
    b.max_height = flats + 2;
    b.max_states = 1000000;
    return b;
}

namespace {

void count_sizes(const Map& m, int& crossings, int& flats) {
    crossings = 0;
    flats = 0;
    for (const auto& v : m.raw_vertices()) {
        if (!v.alive) continue;
        if (v.kind == VertexKind::Crossing) ++crossings;
        if (v.kind == VertexKind::Flat) ++flats;
    }
}

}  // namespace

ExploreResult explore(const Map& m, const Budget& budget) {
    auto rep = validate(m);
    if (!rep.ok || rep.cls != MapClass::Shortcut || rep.shortcut_strands != 1)
        throw std::invalid_argument("explore: a one-shortcut diagram is required");
    {
        int c, f;
        count_sizes(m, c, f);
        if (c > budget.max_crossings || f > budget.max_height)
            throw std::invalid_argument("explore: budgets below the starting diagram");
    }
    // laws checked on every diagram reached
    BoundsReport bounds = height_lower_bounds(m);
    Laurent1 f_poly = index_polynomial(m);
    const int deg_pos = f_poly.deg_pos(), deg_neg = f_poly.deg_neg();

    ExploreResult res;
    std::unordered_set<uint64_t> seen;
    seen.reserve(std::min<uint64_t>(budget.max_states + 1, 4u << 20));
    std::deque<std::vector<uint8_t>> queue;

    auto admit = [&](const Map& cand) -> bool {
        int c, f;
        count_sizes(cand, c, f);
        if (c > budget.max_crossings || f > budget.max_height) return false;
        MainWalk walk = main_walk(cand);
        auto key = canonical_key(cand, walk);
        if (!seen.insert(fingerprint(key)).second) return false;

        SignSequence sq = seq_from_walk(cand, walk);
        int hp = sq.h_pos(), hn = sq.h_neg();
        if (hp < bounds.lower_pos || hn < bounds.lower_neg)
            throw InternalConsistencyError(
                "reached a diagram below the polynomial height bounds");
        if (!consecutive_subsum_exists(sq, deg_pos) ||
            !consecutive_subsum_exists(sq, -deg_neg))
            throw InternalConsistencyError(
                "reached a sequence without the required consecutive subsum");
        res.sequences.insert(sq);
        if (res.min_h_pos < 0 || hp < res.min_h_pos) res.min_h_pos = hp;
        if (res.min_h_neg < 0 || hn < res.min_h_neg) res.min_h_neg = hn;
        int h = hp + hn;
        if (res.min_height < 0 || h < res.min_height) {
            res.min_height = h;
            res.minimal_seqs.clear();
        }
        if (h == res.min_height) res.minimal_seqs.insert(sq);
        ++res.states;
        queue.push_back(std::move(key));
        return true;
    };

    admit(m);
    while (!queue.empty()) {
        if (res.states >= budget.max_states) {
            res.partial = true;
            break;
        }
        Map cur = decode_canonical(queue.front());
        queue.pop_front();
        for (const MoveSite& site : enumerate_moves(cur)) {
            Map next = apply_move(cur, site);
            admit(next);
            if (res.states >= budget.max_states) break;
        }
    }
    if (!queue.empty() && res.states >= budget.max_states) res.partial = true;
    return res;
}

CertifyResult certify_heights(const Map& m, const Budget& budget) {
    BoundsReport bounds = height_lower_bounds(m);
    ExploreResult ex = explore(m, budget);

    CertifyResult r;
    r.budget = budget;
    r.states = ex.states;
    r.partial = ex.partial;
    r.lower_pos = bounds.lower_pos;
    r.lower_neg = bounds.lower_neg;
    r.upper_pos = ex.min_h_pos;
    r.upper_neg = ex.min_h_neg;
    r.minimal_seqs = ex.minimal_seqs;

    if (ex.min_height < bounds.lower_pos + bounds.lower_neg)
        throw InternalConsistencyError("searched upper bound beats the lower bound");

    if (ex.min_height == bounds.lower_pos + bounds.lower_neg) {
        r.status = CertifyStatus::Exact;
        r.upper_pos = bounds.lower_pos;
        r.upper_neg = bounds.lower_neg;
        for (const auto& s : r.minimal_seqs)
            if (s.h_pos() != r.lower_pos || s.h_neg() != r.lower_neg)
                throw InternalConsistencyError(
                    "minimal sequence with the wrong signed counts");
        if (!shift_connected(r.minimal_seqs).connected)
            throw InternalConsistencyError(
                "minimal attainable sequences are not shift-connected");
        Laurent1 f = index_polynomial(m);
        if (r.lower_pos == f.deg_pos() && r.lower_neg == f.deg_neg()) {
            if (r.minimal_seqs.size() != 1)
                throw InternalConsistencyError(
                    "tight index-polynomial bounds admit a unique minimal "
                    "sequence, found " +
                    std::to_string(r.minimal_seqs.size()));
            r.unique_minimal = true;
        }
    }
    return r;
}

}  // namespace knotoid
