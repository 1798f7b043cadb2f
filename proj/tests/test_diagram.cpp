#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotoid/diagram.hpp"

using namespace knotoid;

namespace {

// two endpoints, one main edge
Map trivial_knotoid() {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail);
    VertexId h = m.add_endpoint(EndpointLabel::Head);
    m.connect({t, 0}, {h, 0}, Strand::Main);
    return m;
}

// trivial knotoid with a disjoint shortcut
Map trivial_shortcut() {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail, 2);
    VertexId h = m.add_endpoint(EndpointLabel::Head, 2);
    m.connect({t, 0}, {h, 0}, Strand::Main);
    m.connect({t, 1}, {h, 1}, Strand::Shortcut);
    return m;
}

// single positive kink: over strand exits east, loop hugs the SE corner
Map positive_kink() {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail);
    VertexId h = m.add_endpoint(EndpointLabel::Head);
    VertexId c = m.add_crossing(0);  // slots {0,2} over
    m.connect({t, 0}, {c, 2}, Strand::Main);
    m.connect({c, 0}, {c, 3}, Strand::Main);
    m.connect({c, 1}, {h, 0}, Strand::Main);
    return m;
}

Map negative_kink() {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail);
    VertexId h = m.add_endpoint(EndpointLabel::Head);
    VertexId c = m.add_crossing(0);
    m.connect({t, 0}, {c, 2}, Strand::Main);
    m.connect({c, 0}, {c, 1}, Strand::Main);
    m.connect({c, 3}, {h, 0}, Strand::Main);
    return m;
}

// one flat between trivial main and shortcut; `positive` picks the side
Map one_flat(bool positive) {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail, 2);
    VertexId h = m.add_endpoint(EndpointLabel::Head, 2);
    VertexId f = m.add_flat();
    m.connect({t, 0}, {f, 2}, Strand::Main);
    m.connect({f, 0}, {h, 0}, Strand::Main);
    if (positive) {
        m.connect({t, 1}, {f, 1}, Strand::Shortcut);
        m.connect({f, 3}, {h, 1}, Strand::Shortcut);
    } else {
        m.connect({t, 1}, {f, 3}, Strand::Shortcut);
        m.connect({f, 1}, {h, 1}, Strand::Shortcut);
    }
    return m;
}

}  // namespace

TEST_CASE("trivial diagram is valid with one face") {
    Map m = trivial_knotoid();
    auto rep = validate(m);
    CHECK(rep.ok);
    CHECK(rep.cls == MapClass::Knotoid);
    CHECK(rep.faces == 1);
    CHECK(writhe(m) == 0);
    CHECK(seq(m).empty());
}

TEST_CASE("trivial shortcut diagram") {
    Map m = trivial_shortcut();
    auto rep = validate(m);
    CHECK(rep.ok);
    CHECK(rep.cls == MapClass::Shortcut);
    CHECK(rep.shortcut_strands == 1);
    CHECK(seq(m).empty());
    CHECK(algebraic_height(m) == 0);
}

TEST_CASE("kink signs") {
    Map p = positive_kink();
    auto rep = validate(p);
    REQUIRE(rep.ok);
    CHECK(writhe(p) == 1);
    Map n = negative_kink();
    REQUIRE(validate(n).ok);
    CHECK(writhe(n) == -1);
    CHECK_FALSE(isomorphic(p, n));
}

TEST_CASE("flat signs and seq") {
    Map pos = one_flat(true);
    REQUIRE(validate(pos).ok);
    CHECK(seq(pos).str() == "+");
    CHECK(algebraic_height(pos) == 1);

    Map neg = one_flat(false);
    REQUIRE(validate(neg).ok);
    CHECK(seq(neg).str() == "-");
    CHECK(algebraic_height(neg) == -1);
    CHECK_FALSE(isomorphic(pos, neg));
}

TEST_CASE("three endpoints rejected") {
    Map m = trivial_knotoid();
    VertexId extra = m.add_endpoint(EndpointLabel::Head);
    VertexId t2 = m.add_endpoint(EndpointLabel::Tail);
    m.connect({t2, 0}, {extra, 0}, Strand::Main);
    auto rep = validate(m);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.items)
        if (v.code == "endpoint-count") found = true;
    CHECK(found);
}

TEST_CASE("torus wiring fails the sphere certificate") {
    // single closed curve through two crossings, wired as on the torus
    Map m;
    VertexId a = m.add_crossing(0);
    VertexId b = m.add_crossing(0);
    m.connect({a, 0}, {b, 2}, Strand::Main);
    m.connect({b, 0}, {a, 3}, Strand::Main);
    m.connect({a, 1}, {b, 3}, Strand::Main);
    m.connect({b, 1}, {a, 2}, Strand::Main);
    auto rep = validate(m);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.items)
        if (v.code == "euler") found = true;
    CHECK(found);
}

TEST_CASE("shortcut through a crossing rejected") {
    Map m;
    VertexId t = m.add_endpoint(EndpointLabel::Tail, 2);
    VertexId h = m.add_endpoint(EndpointLabel::Head, 2);
    VertexId c = m.add_crossing(0);
    m.connect({t, 0}, {c, 2}, Strand::Main);
    m.connect({c, 0}, {c, 3}, Strand::Main);
    m.connect({c, 1}, {h, 0}, Strand::Main);
    (void)t;
    // a "shortcut" wired through nothing, plus a flat-free crossing is fine,
    // but a shortcut into a crossing is not representable without breaking
    // typing; emulate by tagging one crossing edge as shortcut
    Map bad;
    VertexId t2 = bad.add_endpoint(EndpointLabel::Tail, 2);
    VertexId h2 = bad.add_endpoint(EndpointLabel::Head, 2);
    VertexId c2 = bad.add_crossing(0);
    bad.connect({t2, 0}, {c2, 2}, Strand::Main);
    bad.connect({c2, 0}, {c2, 3}, Strand::Main);
    bad.connect({c2, 1}, {h2, 0}, Strand::Main);
    bad.connect({t2, 1}, {h2, 1}, Strand::Shortcut);
    REQUIRE(validate(bad).ok);  // shortcut avoiding the crossing is fine
    Map bad2 = bad;
    // retag the kink loop as shortcut: crossing now meets a shortcut edge
    Map worse;
    VertexId t3 = worse.add_endpoint(EndpointLabel::Tail, 2);
    VertexId h3 = worse.add_endpoint(EndpointLabel::Head, 2);
    VertexId c3 = worse.add_crossing(0);
    worse.connect({t3, 0}, {c3, 2}, Strand::Main);
    worse.connect({c3, 0}, {c3, 3}, Strand::Shortcut);
    worse.connect({c3, 1}, {h3, 0}, Strand::Main);
    worse.connect({t3, 1}, {h3, 1}, Strand::Shortcut);
    CHECK_FALSE(validate(worse).ok);
    (void)bad2;
}

TEST_CASE("serialize and parse round trip") {
    for (Map m : {positive_kink(), one_flat(true), trivial_shortcut()}) {
        REQUIRE(validate(m).ok);
        std::string text = serialize_map(m, "probe");
        Map back = parse_map(text);
        REQUIRE(validate(back).ok);
        CHECK(isomorphic(m, back));
        // serializing the parse is canonical: a second round trip is identity
        CHECK(serialize_map(back) == serialize_map(parse_map(serialize_map(back))));
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(parse_map("{"));
    CHECK_THROWS(parse_map("{}"));
    CHECK_THROWS(parse_map(R"({"vertices": [{"id":0,"kind":"crossing","slots":3}],
                              "edges": []})"));
    CHECK_THROWS(parse_map(R"({"vertices": [{"id":0,"kind":"endpoint","label":"tail"},
                                            {"id":1,"kind":"endpoint","label":"head"}],
                              "edges": [{"from": [0,0], "to": [7,0]}]})"));
    // line/column in grammar errors
    try {
        parse_map("{\n  \"vertices\": oops\n}");
        CHECK(false);
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("canonical form is relabeling invariant") {
    // same one-flat diagram built in two different construction orders
    Map a = one_flat(true);
    Map b;
    {
        VertexId f = b.add_flat();
        VertexId h = b.add_endpoint(EndpointLabel::Head, 2);
        VertexId t = b.add_endpoint(EndpointLabel::Tail, 2);
        // also rotate the flat's slot labels by 2 (same cyclic order)
        b.connect({t, 1}, {f, 0}, Strand::Main);
        b.connect({f, 2}, {h, 0}, Strand::Main);
        b.connect({t, 0}, {f, 3}, Strand::Shortcut);
        b.connect({f, 1}, {h, 1}, Strand::Shortcut);
    }
    REQUIRE(validate(b).ok);
    CHECK(isomorphic(a, b));
    CHECK(seq(b).str() == "+");

    Map decoded = decode_canonical(canonical_key(a));
    REQUIRE(validate(decoded).ok);
    CHECK(isomorphic(decoded, a));
}

TEST_CASE("crossing sign is relabeling invariant") {
    // kink built with the loop attached in rotated slot positions
    for (int rot = 0; rot < 4; ++rot) {
        Map m;
        VertexId t = m.add_endpoint(EndpointLabel::Tail);
        VertexId h = m.add_endpoint(EndpointLabel::Head);
        auto s = [&](int k) { return (k + rot) % 4; };
        VertexId c = m.add_crossing(rot % 2 == 0 ? 0 : 1);
        m.connect({t, 0}, {c, s(2)}, Strand::Main);
        m.connect({c, s(0)}, {c, s(3)}, Strand::Main);
        m.connect({c, s(1)}, {h, 0}, Strand::Main);
        REQUIRE(validate(m).ok);
        CHECK(crossing_sign(m, c) == 1);
        CHECK(isomorphic(m, positive_kink()));
    }
}

TEST_CASE("strip shortcut") {
    Map m = one_flat(true);
    Map k = strip_shortcut(m);
    auto rep = validate(k);
    REQUIRE(rep.ok);
    CHECK(rep.cls == MapClass::Knotoid);
    CHECK(isomorphic(k, trivial_knotoid()));

    Map kk = strip_shortcut(positive_kink() /* already shortcut-free */);
    CHECK(isomorphic(kk, positive_kink()));
}

TEST_CASE("dissolving a flat as pass-through") {
    Map m = one_flat(true);
    VertexId f = -1;
    for (size_t i = 0; i < m.raw_vertices().size(); ++i)
        if (m.raw_vertices()[i].kind == VertexKind::Flat) f = (VertexId)i;
    REQUIRE(f >= 0);
    dissolve_passthrough(m, f);
    m.compact();
    REQUIRE(validate(m).ok);
    CHECK(isomorphic(m, trivial_shortcut()));
}
