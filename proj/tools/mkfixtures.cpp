// Generates the fixture corpus into fixtures/.  Every fixture is
// verified against its expected invariants before being written, so a
// convention regression fails generation instead of silently shipping
// wrong data.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "knotoid/diagram.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/ops.hpp"
#include "planar.hpp"

using namespace knotoid;
using nlohmann::ordered_json;

namespace {

struct VSpec {
    char kind;  // 'c' crossing, 'f' flat, 't' tail, 'h' head
    int over = 0;
};
struct ESpec {
    int fv, fs, tv, ts;
    bool shortcut = false;
};

Map explicit_map(const std::vector<VSpec>& vs, const std::vector<ESpec>& es) {
    Map m;
    for (const auto& v : vs) {
        switch (v.kind) {
            case 'c': m.add_crossing(static_cast<uint8_t>(v.over)); break;
            case 'f': m.add_flat(); break;
            case 't': m.add_endpoint(EndpointLabel::Tail, 2); break;
            case 'h': m.add_endpoint(EndpointLabel::Head, 2); break;
            default: throw std::runtime_error("bad vertex spec");
        }
    }
    for (const auto& e : es)
        m.connect({e.fv, e.fs}, {e.tv, e.ts},
                  e.shortcut ? Strand::Shortcut : Strand::Main);
    return m;
}

void fail(const std::string& name, const std::string& what) {
    throw std::runtime_error("fixture '" + name + "': " + what);
}

void write_fixture(const std::string& dir, const std::string& name, const Map& m,
                   ordered_json expect) {
    auto rep = validate(m);
    if (!rep.ok) {
        for (auto& v : rep.items)
            std::cerr << "  " << v.code << ": " << v.message << "\n";
        fail(name, "does not validate");
    }
    if (expect.contains("seq") && seq(m).str() != expect["seq"].get<std::string>())
        fail(name, "sign sequence is '" + seq(m).str() + "', expected '" +
                       expect["seq"].get<std::string>() + "'");
    if (expect.contains("index_poly") &&
        index_polynomial(m).str() != expect["index_poly"].get<std::string>())
        fail(name, "index polynomial is '" + index_polynomial(m).str() +
                       "', expected '" + expect["index_poly"].get<std::string>() + "'");
    if (expect.contains("normalized_bracket") &&
        normalized_bracket(m).str() != expect["normalized_bracket"].get<std::string>())
        fail(name, "normalized bracket is '" + normalized_bracket(m).str() + "'");
    if (expect.contains("normalized_turaev_u2")) {
        Laurent1 u2 = normalized_turaev(m).u_coefficient(2);
        if (u2.str() != expect["normalized_turaev_u2"].get<std::string>())
            fail(name, "normalized Turaev u^2 slice is '" + u2.str() + "'");
    }
    if (expect.contains("closures_trivial") && expect["closures_trivial"].get<bool>()) {
        Laurent1 one = Laurent1::constant(1, 'A');
        if (!(normalized_bracket(closure(m, ClosureMode::Over)) == one) ||
            !(normalized_bracket(closure(m, ClosureMode::Under)) == one))
            fail(name, "closures are not both trivial");
    }
    affine_index_polynomial(m);  // asserts the P = F + F(1/t) identity

    ordered_json meta;
    meta["name"] = name;
    meta["expect"] = std::move(expect);
    std::string text = serialize_map(m, name, meta.dump());
    std::ofstream out(dir + "/" + name + ".json");
    out << text;
    std::cout << name << ": ok (" << m.vertex_count() << " vertices, "
              << m.edge_count() << " edges)\n";
}

Map kinoshita_map() {
    // five crossings, trivial overpass and underpass closures, drawn
    // shortcut crossing (+,-)
    return explicit_map(
        {{'t'}, {'h'}, {'c', 1}, {'c', 0}, {'c', 0}, {'c', 1}, {'c', 0}, {'f'}, {'f'}},
        {{0, 0, 2, 2}, {0, 1, 7, 1, true}, {2, 0, 3, 2}, {2, 3, 7, 0},
         {3, 0, 4, 2}, {3, 1, 5, 2},       {4, 0, 8, 2}, {4, 3, 1, 0},
         {5, 0, 6, 2}, {5, 3, 4, 1},       {6, 0, 2, 1}, {6, 1, 5, 1},
         {7, 2, 6, 3}, {7, 3, 8, 1, true}, {8, 0, 3, 3}, {8, 3, 1, 1, true}});
}

Map cloud_map() {
    // five crossings, trivial underpass closure, index polynomial 1 - t
    return explicit_map(
        {{'t'}, {'h'}, {'c', 0}, {'c', 1}, {'c', 0}, {'c', 1}, {'c', 0}, {'f'}, {'f'}},
        {{0, 0, 2, 2}, {0, 1, 7, 1, true}, {2, 0, 3, 2}, {2, 1, 7, 2},
         {3, 0, 4, 2}, {3, 3, 4, 3},       {4, 0, 5, 2}, {4, 1, 1, 0},
         {5, 0, 6, 2}, {5, 1, 8, 0},       {6, 0, 2, 3}, {6, 3, 5, 3},
         {7, 0, 6, 1}, {7, 3, 8, 1, true}, {8, 2, 3, 1}, {8, 3, 1, 1, true}});
}

Map borromean_map() {
    // trivial index polynomial; the Turaev polynomial alone certifies the
    // height pair (1,1)
    return explicit_map(
        {{'t'}, {'h'}, {'c', 0}, {'c', 1}, {'c', 0}, {'c', 0}, {'c', 0}, {'f'}, {'f'}},
        {{0, 0, 2, 2}, {0, 1, 7, 1, true}, {2, 0, 3, 2}, {2, 3, 7, 0},
         {3, 0, 4, 2}, {3, 3, 5, 1},       {4, 0, 8, 2}, {4, 1, 6, 2},
         {5, 0, 4, 3}, {5, 3, 1, 0},       {6, 0, 2, 1}, {6, 1, 3, 1},
         {7, 2, 6, 3}, {7, 3, 8, 1, true}, {8, 0, 5, 2}, {8, 3, 1, 1, true}});
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    try {
        {
            planar::Drawing d;
            d.main = {{0, 0}, {10, 0}};
            d.shortcut = {{0, 0}, {5, -4}, {10, 0}};
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "";
            e["index_poly"] = "0";
            e["normalized_bracket"] = "1";
            e["h_pos"] = 0;
            e["h_neg"] = 0;
            e["minimal_seqs"] = {""};
            write_fixture(dir, "trivial", planar::compile(d), e);
        }
        {
            planar::Drawing d;
            d.main = {{0, 0}, {4, 0}, {4, 3}, {-2, 3}, {-2, -2}, {2, -2}, {2, 5}};
            d.shortcut = {{0, 0}, {0, 4}, {2, 5}};
            d.first_over = {true, false};
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "+";
            e["index_poly"] = "-1 + t";
            e["h_pos"] = 1;
            e["h_neg"] = 0;
            e["minimal_seqs"] = {"+"};
            write_fixture(dir, "bifoil", planar::compile(d), e);
        }
        {
            planar::Drawing d;
            d.main = {{0, 0}, {4, 0}, {4, 3}, {-2, 3}, {-2, -2}, {6, -2},
                      {6, 5}, {-4, 5}, {-4, -4}, {2, -4}, {2, 7}};
            d.shortcut = {{0, 0}, {0, 6}, {2, 7}};
            d.first_over = {true, false, true, false};
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "++";
            e["index_poly"] = "-2 + t + t^2";
            e["h_pos"] = 2;
            e["h_neg"] = 0;
            e["minimal_seqs"] = {"++"};
            write_fixture(dir, "spiral", planar::compile(d), e);
        }
        {
            planar::Drawing d;
            d.main = {{-15, 14}, {-10, -5}, {0, 0}, {10, 10}, {0, 20},
                      {10, 30},  {20, 35},  {25, 15}, {20, -5}, {10, 0},
                      {0, 10},   {10, 20},  {0, 30},  {-10, 35}, {-15, 16}};
            d.shortcut = {{-15, 14}, {-17, 15}, {-15, 16}};
            d.first_over = {true, false, true};
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "";
            e["index_poly"] = "0";
            e["normalized_bracket"] = "-A^-16 + A^-12 + A^-4";
            e["h_pos"] = 0;
            e["h_neg"] = 0;
            e["minimal_seqs"] = {""};
            e["knot_type"] = true;
            write_fixture(dir, "trefoil", planar::compile(d), e);
        }
        {
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "+-";
            e["index_poly"] = "t^-1 - 2 + t";
            e["h_pos"] = 1;
            e["h_neg"] = 1;
            e["minimal_seqs"] = {"+-"};
            e["closures_trivial"] = true;
            write_fixture(dir, "kinoshita", kinoshita_map(), e);
        }
        {
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "+-";
            e["index_poly"] = "1 - t";
            e["normalized_turaev_u2"] = "-A^-10 + 2*A^-6 - A^-2";
            e["h_pos"] = 1;
            e["h_neg"] = 1;
            write_fixture(dir, "cloud", cloud_map(), e);
        }
        {
            ordered_json e;
            e["class"] = "shortcut";
            e["seq"] = "+-";
            e["index_poly"] = "0";
            e["h_pos"] = 1;
            e["h_neg"] = 1;
            e["minimal_seqs"] = {"+-"};
            write_fixture(dir, "borromean", borromean_map(), e);
        }
    } catch (const std::exception& ex) {
        std::cerr << "mkfixtures: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
