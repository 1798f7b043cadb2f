#include "knotoid/invariants.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

namespace knotoid {

namespace {

// walk positions of each crossing's two passages
struct WalkIndex {
    std::vector<DartId> arrivals;
    std::map<VertexId, std::vector<size_t>> positions;  // crossings only
};

WalkIndex index_walk(const Map& m) {
    WalkIndex w;
    w.arrivals = main_walk(m).arrivals;
    for (size_t i = 0; i < w.arrivals.size(); ++i) {
        Port p = m.port_of(w.arrivals[i]);
        if (m.vertex(p.v).kind == VertexKind::Crossing) w.positions[p.v].push_back(i);
    }
    return w;
}

int exit_slot(const Map& m, DartId arrival) {
    return (m.port_of(arrival).slot + 2) % 4;
}

}  // namespace

int intersection_index(const Map& m, VertexId c) {
    if (m.vertex(c).kind != VertexKind::Crossing)
        throw std::invalid_argument("intersection_index: not a crossing");
    WalkIndex w = index_walk(m);
    const auto& cpos = w.positions.at(c);
    if (cpos.size() != 2)
        throw std::invalid_argument("intersection_index: malformed walk");
    size_t lo = cpos[0], hi = cpos[1];

    int ind = 0;
    for (const auto& [d, pos] : w.positions) {
        if (d == c) continue;
        bool in0 = pos[0] > lo && pos[0] < hi;
        bool in1 = pos[1] > lo && pos[1] < hi;
        if (in0 == in1) continue;  // zero or two passages on the loop
        DartId loop_arr = in0 ? w.arrivals[pos[0]] : w.arrivals[pos[1]];
        DartId rest_arr = in0 ? w.arrivals[pos[1]] : w.arrivals[pos[0]];
        int l_out = exit_slot(m, loop_arr);
        int k_out = exit_slot(m, rest_arr);
        ind += (l_out - k_out + 4) % 4 == 1 ? 1 : -1;
    }
    return ind;
}

WritheTable n_writhes(const Map& m) {
    std::map<int, long long> sums;
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (!v.alive || v.kind != VertexKind::Crossing) continue;
        VertexId c = static_cast<VertexId>(i);
        int n = intersection_index(m, c);
        if (n == 0) continue;
        sums[n] += crossing_sign(m, c);
    }
    WritheTable t;
    for (const auto& [n, s] : sums) {
        if (s % 2 != 0)
            throw InternalConsistencyError(
                "n-writhe is not an integer: signed count of index-" +
                std::to_string(n) + " crossings is odd");
        if (s != 0) t.entries[n] = s / 2;
    }
    return t;
}

Laurent1 index_polynomial(const WritheTable& t) {
    Laurent1 f('t');
    for (const auto& [n, j] : t.entries) {
        f.add_term(n, j);
        f.add_term(0, -j);
    }
    return f;
}

Laurent1 index_polynomial(const Map& m) { return index_polynomial(n_writhes(m)); }

Laurent1 affine_index_polynomial(const Map& m) {
    WalkIndex w = index_walk(m);
    Laurent1 p('t');
    for (const auto& [c, pos] : w.positions) {
        int sign = crossing_sign(m, c);
        int ind = intersection_index(m, c);
        // sequential sign: +1 when the over strand is the earlier passage
        int first_slot = m.port_of(w.arrivals[pos[0]]).slot;
        int over_pair = m.vertex(c).over ? 1 : 0;
        int ssgn = (first_slot % 2 == over_pair) ? 1 : -1;
        int weight = sign * ssgn * ind;
        p.add_term(weight, sign);
        p.add_term(0, -sign);
    }
    Laurent1 f = index_polynomial(m);
    if (p != f + f.substitute_inverse())
        throw InternalConsistencyError(
            "affine index polynomial disagrees with F(t) + F(t^-1)");
    return p;
}

// ------------------------------------------------------------- state sums

namespace {

struct SumPrep {
    std::vector<VertexId> crossings;      // fixed enumeration order
    std::vector<int> crossing_index;      // vertex -> position or -1
    std::vector<std::array<int, 4>> partner_a, partner_b;
    DartId start = -1;                    // tail's main dart (open maps)
    std::vector<EdgeId> main_edges;
    std::vector<int> edge_trace_index;    // edge -> dense index
    bool closed = false;
};

SumPrep prepare(const Map& m, const StateSumOptions& opt) {
    SumPrep prep;
    prep.crossing_index.assign(m.raw_vertices().size(), -1);
    for (size_t i = 0; i < m.raw_vertices().size(); ++i) {
        const Vertex& v = m.raw_vertices()[i];
        if (!v.alive || v.kind != VertexKind::Crossing) continue;
        prep.crossing_index[i] = static_cast<int>(prep.crossings.size());
        prep.crossings.push_back(static_cast<VertexId>(i));
    }
    if (static_cast<int>(prep.crossings.size()) > opt.max_crossings)
        throw StateSumGuardError(
            "state sum over " + std::to_string(prep.crossings.size()) +
            " crossings exceeds the guard of " + std::to_string(opt.max_crossings));
    for (VertexId c : prep.crossings) {
        const Vertex& v = m.vertex(c);
        int over_pair = v.over ? 1 : 0;
        int p = -1;
        for (int s : {over_pair, over_pair + 2}) {
            DartId d = v.slots[s];
            if (m.dart_is_src(d)) p = s;
        }
        std::array<int, 4> pa{}, pb{};
        // A-smoothing joins (p+1, p+2) and (p+3, p); B the other pairing
        pa[(p + 1) % 4] = (p + 2) % 4;
        pa[(p + 2) % 4] = (p + 1) % 4;
        pa[(p + 3) % 4] = p;
        pa[p] = (p + 3) % 4;
        pb[p] = (p + 1) % 4;
        pb[(p + 1) % 4] = p;
        pb[(p + 2) % 4] = (p + 3) % 4;
        pb[(p + 3) % 4] = (p + 2) % 4;
        prep.partner_a.push_back(pa);
        prep.partner_b.push_back(pb);
    }
    auto tail = m.find_endpoint(EndpointLabel::Tail);
    if (tail) {
        const Vertex& tv = m.vertex(*tail);
        for (DartId d : tv.slots)
            if (d != -1 && m.dart_strand(d) == Strand::Main) prep.start = d;
    } else {
        prep.closed = true;
    }
    prep.edge_trace_index.assign(m.raw_edges().size(), -1);
    for (size_t e = 0; e < m.raw_edges().size(); ++e)
        if (m.raw_edges()[e].alive && m.raw_edges()[e].strand == Strand::Main) {
            prep.edge_trace_index[e] = static_cast<int>(prep.main_edges.size());
            prep.main_edges.push_back(static_cast<EdgeId>(e));
        }
    return prep;
}

// per-thread scratch for tracing smoothed components
struct Tracer {
    const Map& m;
    const SumPrep& prep;
    std::vector<uint32_t> mark;
    uint32_t epoch = 0;

    Tracer(const Map& mm, const SumPrep& pp)
        : m(mm), prep(pp), mark(pp.main_edges.size(), 0) {}

    // follows the smoothed diagram from a leaving dart until an endpoint
    // or until the component closes; accumulates the signed flat count
    // (meaningful for the interval trace)
    int trace(DartId start, uint64_t state) {
        DartId cur = start;
        int a_sum = 0;
        while (true) {
            EdgeId e = dart_edge(cur);
            int idx = prep.edge_trace_index[e];
            if (mark[idx] == epoch) return a_sum;  // closed the cycle
            mark[idx] = epoch;
            DartId arr = m.alpha(cur);
            Port p = m.port_of(arr);
            const Vertex& v = m.vertex(p.v);
            switch (v.kind) {
                case VertexKind::Endpoint:
                    return a_sum;
                case VertexKind::Flat: {
                    bool forward = !m.dart_is_src(arr);
                    a_sum += flat_sign(m, p.v) * (forward ? 1 : -1);
                    cur = v.slots[(p.slot + 2) % 4];
                    break;
                }
                case VertexKind::Joint:
                    cur = v.slots[1 - p.slot];
                    break;
                case VertexKind::Crossing: {
                    int ci = prep.crossing_index[p.v];
                    bool bit_a = (state >> ci) & 1;
                    const auto& partner =
                        bit_a ? prep.partner_a[ci] : prep.partner_b[ci];
                    cur = v.slots[partner[p.slot]];
                    break;
                }
            }
        }
    }

    // one state: n(s), l(s), a(s)
    void eval(uint64_t state, int& n, int& circles, int& a_interval) {
        ++epoch;
        n = 0;
        for (size_t i = 0; i < prep.crossings.size(); ++i)
            n += ((state >> i) & 1) ? 1 : -1;
        a_interval = 0;
        circles = 0;
        if (prep.start != -1) a_interval = trace(prep.start, state);
        for (size_t i = 0; i < prep.main_edges.size(); ++i) {
            if (mark[i] == epoch) continue;
            trace(make_dart(prep.main_edges[i], 0), state);
            ++circles;
        }
        if (prep.closed) --circles;  // the traced knot circle is not counted
    }
};

Laurent2 sum_block(const Map& m, const SumPrep& prep, bool with_u,
                   uint64_t begin, uint64_t end) {
    Tracer tracer(m, prep);
    int n_cross = static_cast<int>(prep.crossings.size());
    std::vector<Laurent1> delta_pow;
    {
        Laurent1 delta('A');
        delta.add_term(2, -1);
        delta.add_term(-2, -1);
        delta_pow.push_back(Laurent1::constant(1, 'A'));
        for (int i = 0; i <= n_cross; ++i)
            delta_pow.push_back(delta_pow.back() * delta);
    }
    Laurent2 acc;
    for (uint64_t s = begin; s < end; ++s) {
        int n, circles, a_int;
        tracer.eval(s, n, circles, a_int);
        for (const auto& [e, c] : delta_pow[circles].terms())
            acc.add_term(e + n, with_u ? a_int : 0, c);
    }
    return acc;
}

Laurent2 state_sum(const Map& m, bool with_u, const StateSumOptions& opt) {
    SumPrep prep = prepare(m, opt);
    int n_cross = static_cast<int>(prep.crossings.size());
    uint64_t total = 1ull << n_cross;
    if (!opt.parallel || n_cross < opt.parallel_threshold)
        return sum_block(m, prep, with_u, 0, total);

    const int blocks = 8;
    uint64_t per = total / blocks;
    std::vector<std::future<Laurent2>> futs;
    for (int b = 0; b < blocks; ++b) {
        uint64_t lo = b * per, hi = (b == blocks - 1) ? total : (b + 1) * per;
        futs.push_back(std::async(std::launch::async, [&m, &prep, with_u, lo, hi] {
            return sum_block(m, prep, with_u, lo, hi);
        }));
    }
    Laurent2 acc;
    for (auto& f : futs) acc += f.get();
    return acc;
}

Laurent1 writhe_norm_factor(int w) {
    // (-A)^{-3w}
    return Laurent1::monomial((w % 2 == 0) ? 1 : -1, -3 * w, 'A');
}

}  // namespace

Laurent1 bracket(const Map& m, const StateSumOptions& opt) {
    return state_sum(m, false, opt).collapse_u();
}

Laurent1 normalized_bracket(const Map& m, const StateSumOptions& opt) {
    return bracket(m, opt) * writhe_norm_factor(writhe(m));
}

Laurent2 turaev_polynomial(const Map& m, const StateSumOptions& opt) {
    if (!m.find_endpoint(EndpointLabel::Tail))
        throw std::invalid_argument("turaev polynomial needs a shortcut diagram");
    return state_sum(m, true, opt);
}

Laurent2 normalized_turaev(const Map& m, const StateSumOptions& opt) {
    Laurent2 raw = turaev_polynomial(m, opt);
    int w = writhe(m);
    int ak = algebraic_height(m);
    Laurent2 norm = raw * Laurent2::monomial((w % 2 == 0) ? 1 : -1, -3 * w, -ak);
    for (const auto& [key, c] : norm.terms()) {
        (void)c;
        if (key.first % 2 != 0 || key.second % 2 != 0)
            throw InternalConsistencyError(
                "normalized Turaev polynomial has an odd exponent: A^" +
                std::to_string(key.first) + " u^" + std::to_string(key.second));
    }
    return norm;
}

BoundsReport height_lower_bounds(const Map& m, const StateSumOptions& opt) {
    Laurent1 f = index_polynomial(m);
    Laurent2 nt = normalized_turaev(m, opt);
    BoundsReport r;
    int f_pos = f.deg_pos(), f_neg = f.deg_neg();
    int t_pos = (nt.deg_neg(1) + 1) / 2;  // 2h+ >= deg_u^-
    int t_neg = (nt.deg_pos(1) + 1) / 2;  // 2h- >= deg_u^+
    r.lower_pos = std::max(f_pos, t_pos);
    r.lower_neg = std::max(f_neg, t_neg);
    auto source = [](int fv, int tv) {
        if (fv == tv) return BoundSource::kBoth;
        return fv > tv ? BoundSource::kIndex : BoundSource::kTuraev;
    };
    r.source_pos = source(f_pos, t_pos);
    r.source_neg = source(f_neg, t_neg);
    return r;
}

}  // namespace knotoid
