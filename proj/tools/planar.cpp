#include "planar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace planar {

namespace {

using knotoid::EndpointLabel;
using knotoid::Map;
using knotoid::Port;
using knotoid::Strand;
using knotoid::VertexId;

using I128 = __int128;

int64_t cross(Point o, Point a, Point b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

struct Vec {
    int64_t x, y;
};

// exact ccw angular order starting just above the positive x-axis
bool angle_less(const Vec& a, const Vec& b) {
    auto half = [](const Vec& v) {
        return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    I128 cr = (I128)a.x * b.y - (I128)a.y * b.x;
    if (cr == 0) throw std::runtime_error("planar: collinear directions at a vertex");
    return cr > 0;
}

// exact rational point with positive denominator
struct RPoint {
    int64_t xn, yn, d;
    bool operator==(const RPoint& o) const {
        return (I128)xn * o.d == (I128)o.xn * d && (I128)yn * o.d == (I128)o.yn * d;
    }
    bool operator<(const RPoint& o) const {
        I128 lx = (I128)xn * o.d, rx = (I128)o.xn * d;
        if (lx != rx) return lx < rx;
        return (I128)yn * o.d < (I128)o.yn * d;
    }
};

struct Seg {
    Point a, b;
    int strand;  // 0 main, 1 shortcut
    int index;   // position along its strand
};

struct Hit {
    int seg1, seg2;
    int64_t t1n, t2n, den;  // parameters along seg1/seg2, den > 0
    RPoint p;
    VertexId vertex = -1;
};

bool on_segment(Point a, Point b, Point p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.first, b.first) <= p.first &&
           p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second &&
           p.second <= std::max(a.second, b.second);
}

bool segments_touch(const Seg& s, const Seg& t) {
    int64_t o1 = cross(s.a, s.b, t.a), o2 = cross(s.a, s.b, t.b);
    int64_t o3 = cross(t.a, t.b, s.a), o4 = cross(t.a, t.b, s.b);
    if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 && ((o3 > 0) != (o4 > 0)) &&
        o3 != 0 && o4 != 0)
        return true;
    return (o1 == 0 && on_segment(s.a, s.b, t.a)) ||
           (o2 == 0 && on_segment(s.a, s.b, t.b)) ||
           (o3 == 0 && on_segment(t.a, t.b, s.a)) ||
           (o4 == 0 && on_segment(t.a, t.b, s.b));
}

bool proper_crossing(const Seg& s, const Seg& t) {
    int64_t o1 = cross(s.a, s.b, t.a), o2 = cross(s.a, s.b, t.b);
    int64_t o3 = cross(t.a, t.b, s.a), o4 = cross(t.a, t.b, s.b);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && ((o1 > 0) != (o2 > 0)) &&
           ((o3 > 0) != (o4 > 0));
}

}  // namespace

knotoid::Map compile(const Drawing& d) {
    if (d.main.size() < 2) throw std::runtime_error("planar: main strand too short");
    bool has_shortcut = !d.shortcut.empty();
    if (has_shortcut) {
        if (d.shortcut.front() != d.main.front() || d.shortcut.back() != d.main.back())
            throw std::runtime_error("planar: shortcut must share the endpoints");
        if (d.shortcut.size() < 2)
            throw std::runtime_error("planar: shortcut too short");
    }

    std::vector<Seg> segs;
    for (size_t i = 0; i + 1 < d.main.size(); ++i)
        segs.push_back({d.main[i], d.main[i + 1], 0, (int)i});
    const size_t main_segs = segs.size();
    if (has_shortcut)
        for (size_t i = 0; i + 1 < d.shortcut.size(); ++i)
            segs.push_back({d.shortcut[i], d.shortcut[i + 1], 1, (int)i});

    std::vector<Hit> hits;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &s = segs[i], &t = segs[j];
            bool adjacent = s.strand == t.strand && std::abs(s.index - t.index) == 1;
            bool shares_endpoint =
                s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
            if (adjacent || (s.strand != t.strand && shares_endpoint)) {
                if (proper_crossing(s, t))
                    throw std::runtime_error("planar: adjacent segments cross");
                continue;
            }
            if (!segments_touch(s, t)) continue;
            if (!proper_crossing(s, t))
                throw std::runtime_error("planar: non-generic contact between segments");
            if (s.strand == 1 && t.strand == 1)
                throw std::runtime_error("planar: shortcut crosses itself");

            // s.a + u (s.b - s.a) = t.a + v (t.b - t.a)
            int64_t den = (s.b.first - s.a.first) * (t.b.second - t.a.second) -
                          (s.b.second - s.a.second) * (t.b.first - t.a.first);
            int64_t un = (t.a.first - s.a.first) * (t.b.second - t.a.second) -
                         (t.a.second - s.a.second) * (t.b.first - t.a.first);
            int64_t vn = (t.a.first - s.a.first) * (s.b.second - s.a.second) -
                         (t.a.second - s.a.second) * (s.b.first - s.a.first);
            if (den < 0) {
                den = -den;
                un = -un;
                vn = -vn;
            }
            Hit h;
            h.seg1 = (int)i;
            h.seg2 = (int)j;
            h.t1n = un;
            h.t2n = vn;
            h.den = den;
            h.p = RPoint{s.a.first * den + un * (s.b.first - s.a.first),
                         s.a.second * den + un * (s.b.second - s.a.second), den};
            hits.push_back(h);
        }
    }

    {
        std::vector<RPoint> pts;
        for (const auto& h : hits) pts.push_back(h.p);
        std::sort(pts.begin(), pts.end());
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1])
                throw std::runtime_error("planar: coincident intersection points");
    }

    // stops along each segment ordered by parameter
    std::vector<std::vector<std::pair<std::pair<int64_t, int64_t>, int>>> stops(
        segs.size());
    for (size_t h = 0; h < hits.size(); ++h) {
        stops[hits[h].seg1].push_back({{hits[h].t1n, hits[h].den}, (int)h});
        stops[hits[h].seg2].push_back({{hits[h].t2n, hits[h].den}, (int)h});
    }
    for (auto& v : stops)
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            return (I128)a.first.first * b.first.second <
                   (I128)b.first.first * a.first.second;
        });

    Map m;
    VertexId tail = m.add_endpoint(EndpointLabel::Tail, has_shortcut ? 2 : 1);
    VertexId head = m.add_endpoint(EndpointLabel::Head, has_shortcut ? 2 : 1);

    // first-encounter order along the main strand
    std::vector<int> hit_order;
    for (size_t si = 0; si < main_segs; ++si)
        for (const auto& [t, h] : stops[si]) {
            (void)t;
            if (std::find(hit_order.begin(), hit_order.end(), h) == hit_order.end())
                hit_order.push_back(h);
        }
    size_t cross_count = 0;
    for (int h : hit_order)
        if (segs[hits[h].seg2].strand == 0) ++cross_count;
    if (cross_count != d.first_over.size())
        throw std::runtime_error("planar: first_over has " +
                                 std::to_string(d.first_over.size()) +
                                 " entries but the drawing has " +
                                 std::to_string(cross_count) + " crossings");

    // vertices with their ccw slot directions
    std::map<int, std::vector<Vec>> slot_dirs;
    for (int h : hit_order) {
        Hit& hit = hits[h];
        const Seg& s1 = segs[hit.seg1];
        const Seg& s2 = segs[hit.seg2];
        Vec d1{s1.b.first - s1.a.first, s1.b.second - s1.a.second};
        Vec d2{s2.b.first - s2.a.first, s2.b.second - s2.a.second};
        std::vector<Vec> dirs = {d1, Vec{-d1.x, -d1.y}, d2, Vec{-d2.x, -d2.y}};
        std::sort(dirs.begin(), dirs.end(), angle_less);
        hit.vertex = segs[hit.seg2].strand == 0 ? m.add_crossing(0) : m.add_flat();
        slot_dirs[h] = dirs;
    }

    auto slot_of_dir = [&](int hit_idx, Vec dir) {
        const auto& dirs = slot_dirs.at(hit_idx);
        for (int s = 0; s < 4; ++s)
            if ((I128)dirs[s].x * dir.y == (I128)dirs[s].y * dir.x &&
                (dirs[s].x * dir.x > 0 || dirs[s].y * dir.y > 0))
                return s;
        throw std::logic_error("planar: direction not found at vertex");
    };

    auto emit_strand = [&](size_t first_seg, size_t count, Strand strand,
                           int endpoint_slot) {
        Port prev{tail, endpoint_slot};
        for (size_t k = 0; k < count; ++k) {
            const Seg& s = segs[first_seg + k];
            Vec dir{s.b.first - s.a.first, s.b.second - s.a.second};
            for (const auto& [t, h] : stops[first_seg + k]) {
                (void)t;
                int arrive = slot_of_dir(h, Vec{-dir.x, -dir.y});
                m.connect(prev, Port{hits[h].vertex, arrive}, strand);
                prev = Port{hits[h].vertex, slot_of_dir(h, dir)};
            }
        }
        m.connect(prev, Port{head, endpoint_slot}, strand);
    };
    emit_strand(0, main_segs, Strand::Main, 0);
    if (has_shortcut)
        emit_strand(main_segs, segs.size() - main_segs, Strand::Shortcut, 1);

    // over designations in first-passage order; seg1 is always the
    // earlier passage since main segments are indexed along the strand
    {
        size_t ci = 0;
        for (int h : hit_order) {
            const Hit& hit = hits[h];
            if (segs[hit.seg2].strand != 0) continue;
            const Seg& s1 = segs[hit.seg1];
            Vec d1{s1.b.first - s1.a.first, s1.b.second - s1.a.second};
            int slot_first = slot_of_dir(h, d1);
            bool over_first = d.first_over[ci++];
            int over_pair = over_first ? slot_first % 2 : 1 - slot_first % 2;
            m.vertex(hit.vertex).over = static_cast<uint8_t>(over_pair);
        }
    }
    return m;
}

}  // namespace planar
