#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>

#include "hyperpascal/graph_export.hpp"
#include "hyperpascal/icosahedron.hpp"
#include "hyperpascal/pyramid.hpp"
#include "hyperpascal/verify.hpp"

using namespace hyperpascal;

namespace {

PyramidGraph build(unsigned levels) {
    PyramidGraph g;
    g.grow_to(levels);
    return g;
}

}  // namespace

TEST_CASE("rotation system is a consistent icosahedron embedding") {
    using namespace icosa;
    // each row is a pentagon: entries adjacent to the centre and cyclically
    // adjacent to each other
    for (int v = 0; v < kVertexCount; ++v) {
        const auto& pent = kRotation[static_cast<size_t>(v)];
        std::set<int8_t> distinct(pent.begin(), pent.end());
        CHECK(distinct.size() == 5);
        for (int k = 0; k < 5; ++k) {
            CHECK(adjacent(v, pent[static_cast<size_t>(k)]));
            CHECK(adjacent(pent[static_cast<size_t>(k)], pent[static_cast<size_t>((k + 1) % 5)]));
        }
    }
    // adjacency is symmetric with degree 5 everywhere (30 edges)
    int edges = 0;
    for (int u = 0; u < kVertexCount; ++u) {
        for (int v = u + 1; v < kVertexCount; ++v) {
            CHECK(adjacent(u, v) == adjacent(v, u));
            if (adjacent(u, v)) ++edges;
        }
    }
    CHECK(edges == 30);
    // face tracing: following next-after around every directed edge closes
    // triangles, 20 in total
    auto next_after = [&](int w, int u) {
        const auto& pent = kRotation[static_cast<size_t>(w)];
        for (int k = 0; k < 5; ++k) {
            if (pent[static_cast<size_t>(k)] == u) return static_cast<int>(pent[static_cast<size_t>((k + 1) % 5)]);
        }
        REQUIRE(false);
        return -1;
    };
    std::set<std::set<int>> faces;
    for (int u = 0; u < kVertexCount; ++u) {
        for (int8_t w : kRotation[static_cast<size_t>(u)]) {
            int a = u, b = w;
            std::set<int> face{a, b};
            for (int step = 0; step < 3; ++step) {
                int c = next_after(b, a);
                a = b;
                b = c;
                face.insert(c);
            }
            CHECK(a == u);  // orbit closes after three steps
            CHECK(b == w);
            CHECK(face.size() == 3);
            faces.insert(face);
        }
    }
    CHECK(faces.size() == 20);
}

TEST_CASE("link templates carry the expected slot structure") {
    const LinkTemplate& c = link_template(VertexType::C);
    CHECK(c.parent_positions == std::vector<int8_t>{0, 1, 2});
    for (int p : {3, 5, 7}) CHECK(c.slot_kind[static_cast<size_t>(p)] == SlotKind::IntC);
    for (int p : {4, 6, 8}) CHECK(c.slot_kind[static_cast<size_t>(p)] == SlotKind::IntD);
    for (int p : {9, 10, 11}) CHECK(c.slot_kind[static_cast<size_t>(p)] == SlotKind::IntE);
    CHECK(c.child_link.size() == 18);
    CHECK(c.out_degree() == 9);

    const LinkTemplate& d = link_template(VertexType::D);
    for (int p : {2, 5}) CHECK(d.slot_kind[static_cast<size_t>(p)] == SlotKind::IntC);
    for (int p : {3, 4, 6, 7}) CHECK(d.slot_kind[static_cast<size_t>(p)] == SlotKind::IntD);
    for (int p : {8, 9, 10, 11}) CHECK(d.slot_kind[static_cast<size_t>(p)] == SlotKind::IntE);
    CHECK(d.child_link.size() == 21);
    CHECK(d.out_degree() == 10);

    const LinkTemplate& e = link_template(VertexType::E);
    for (int p = 1; p <= 5; ++p) CHECK(e.slot_kind[static_cast<size_t>(p)] == SlotKind::IntD);
    for (int p = 6; p <= 11; ++p) CHECK(e.slot_kind[static_cast<size_t>(p)] == SlotKind::IntE);
    CHECK(e.child_link.size() == 25);
    CHECK(e.out_degree() == 11);

    CHECK(link_template(VertexType::A).child_link.size() == 5);
    CHECK(link_template(VertexType::A).out_degree() == 4);
    CHECK(link_template(VertexType::B).child_link.size() == 7);
    CHECK(link_template(VertexType::B).out_degree() == 5);
    CHECK(link_template(VertexType::One).child_link.size() == 3);
    CHECK(link_template(VertexType::One).out_degree() == 3);
    CHECK(link_template(VertexType::Apex).child_link.size() == 3);
    CHECK(link_template(VertexType::Apex).out_degree() == 3);
}

TEST_CASE("first levels match the hand-built pyramid") {
    PyramidGraph g = build(4);

    const LevelData& l0 = g.level(0);
    REQUIRE(l0.size() == 1);
    CHECK(l0.type[0] == VertexType::Apex);
    CHECK(l0.value[0] == 1);

    const LevelData& l1 = g.level(1);
    REQUIRE(l1.size() == 3);
    for (uint32_t v = 0; v < 3; ++v) {
        CHECK(l1.type[v] == VertexType::One);
        CHECK(l1.value[v] == 1);
    }

    auto [c2, s2] = g.census(2);
    CHECK(c2.a == 3);
    CHECK(c2.s == 6);
    CHECK(s2.s == 9);
    const LevelData& l2 = g.level(2);
    for (uint32_t v = 0; v < l2.size(); ++v) {
        if (l2.type[v] == VertexType::A) CHECK(l2.value[v] == 2);
    }

    auto [c3, s3] = g.census(3);
    CHECK(c3.a == 6);
    CHECK(c3.b == 3);
    CHECK(c3.c == 1);
    CHECK(c3.d == 0);
    CHECK(c3.e == 0);
    CHECK(c3.s == 13);
    CHECK(s3.s == 33);
    // the unique interior vertex at level 3: all three level-2 A vertices as
    // parents, value 6
    const LevelData& l3 = g.level(3);
    int interior = 0;
    for (uint32_t v = 0; v < l3.size(); ++v) {
        if (l3.type[v] != VertexType::C) continue;
        ++interior;
        CHECK(l3.value[v] == 6);
        REQUIRE(l3.parent_count(v) == 3);
        for (size_t j = l3.parent_begin[v]; j < l3.parent_begin[v + 1]; ++j) {
            CHECK(l2.type[l3.parents[j]] == VertexType::A);
        }
    }
    CHECK(interior == 1);

    auto [c4, s4] = g.census(4);
    CHECK(c4.a == 12);
    CHECK(c4.b == 12);
    CHECK(c4.c == 3);
    CHECK(c4.d == 3);
    CHECK(c4.e == 3);
    CHECK(c4.s == 36);
    CHECK(s4.s == 165);
    CHECK(s4.c == 36);
    CHECK(s4.d == 24);
    CHECK(s4.e == 18);
}

TEST_CASE("census equals both recurrence engines through level 6") {
    PyramidGraph g = build(6);
    auto counts = count_vectors(6);
    auto sums = sum_vectors(6);
    for (unsigned n = 0; n <= 6; ++n) {
        auto [cv, sv] = g.census(n);
        CHECK(cv.a == counts[n].a);
        CHECK(cv.b == counts[n].b);
        CHECK(cv.c == counts[n].c);
        CHECK(cv.d == counts[n].d);
        CHECK(cv.e == counts[n].e);
        CHECK(cv.s == counts[n].s);
        CHECK(sv.a == sums[n].a);
        CHECK(sv.b == sums[n].b);
        CHECK(sv.c == sums[n].c);
        CHECK(sv.d == sums[n].d);
        CHECK(sv.e == sums[n].e);
        CHECK(sv.s == sums[n].s);
    }
}

TEST_CASE("face rows equal the triangle engine") {
    PyramidGraph g = build(6);
    for (unsigned n = 0; n <= 6; ++n) {
        TriangleRow expect = triangle_row(5, n);
        for (int face = 0; face < 3; ++face) {
            TriangleRow row = g.face_row(face, n);
            CHECK(row.values == expect.values);
            CHECK(row.kinds == expect.kinds);
        }
    }
    CHECK_THROWS_AS(g.face_row(3, 2), std::invalid_argument);
}

TEST_CASE("level cap guards growth") {
    PyramidGraph g({2, false});
    g.grow_to(2);
    CHECK_THROWS_AS(g.grow(), std::invalid_argument);
    PyramidGraph open({2, true});
    open.grow_to(3);
    CHECK(open.top_level() == 3);
}

TEST_CASE("euclidean oracle: trinomial levels") {
    auto level2 = euclidean_level_values(2);
    REQUIRE(level2.size() == 3);
    CHECK(level2[0] == std::vector<Int>{1});
    CHECK(level2[1] == std::vector<Int>{2, 2});
    CHECK(level2[2] == std::vector<Int>{1, 2, 1});
    for (unsigned n = 0; n <= 20; ++n) {
        Int expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 3, n);
        CHECK(euclidean_level_sum(n) == expect);
        size_t cells = 0;
        for (const auto& row : euclidean_level_values(n)) cells += row.size();
        CHECK(cells == (n + 1) * (n + 2) / 2);
    }
}

TEST_CASE("exports are deterministic and well-formed") {
    PyramidGraph g1 = build(3);
    PyramidGraph g2 = build(3);

    std::ostringstream json1, json2;
    write_level_json(json1, g1, 1);
    write_level_json(json2, g2, 1);
    CHECK(json1.str() == json2.str());
    // level 1: three vertices, each with the apex as sole parent, value "1"
    CHECK(json1.str().find("\"parents\": [\n        \"0:0\"\n      ]") != std::string::npos);
    CHECK(json1.str().find("\"value\": \"1\"") != std::string::npos);

    std::ostringstream csv;
    write_level_csv(csv, g1, 3);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "id,type,parent_ids,value");
    int rows = 0;
    long value_sum = 0;
    while (std::getline(lines, line)) {
        ++rows;
        value_sum += std::stol(line.substr(line.rfind(',') + 1));
    }
    CHECK(rows == 13);
    CHECK(value_sum == 33);

    std::ostringstream dot;
    write_slab_dot(dot, g1, 2);
    // 6 + 13 nodes; 21 edges (3 wingers + 6 A's with 2 parents + 3 B + 1 C with 3)
    int node_count = 0, edge_count = 0;
    std::istringstream dot_lines(dot.str());
    while (std::getline(dot_lines, line)) {
        if (line.find("[label=") != std::string::npos) ++node_count;
        if (line.find("->") != std::string::npos) ++edge_count;
    }
    CHECK(node_count == 6 + 13);
    CHECK(edge_count == 3 * 1 + 6 * 2 + 3 * 1 + 1 * 3);

    std::ostringstream nd1, nd2;
    write_level_ndjson(nd1, g1, 3);
    write_level_ndjson(nd2, g2, 3);
    CHECK(nd1.str() == nd2.str());
}

TEST_CASE("level json follows the wire schema") {
    PyramidGraph g = build(3);
    std::ostringstream out;
    write_level_json(out, g, 3);
    auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["level"] == 3);
    REQUIRE(doc["vertices"].is_array());
    REQUIRE(doc["vertices"].size() == 13);
    std::set<std::string> allowed{"apex", "1", "A", "B", "C", "D", "E"};
    for (const auto& rec : doc["vertices"]) {
        CHECK(rec["id"].is_string());
        CHECK(rec["id"].get<std::string>().rfind("3:", 0) == 0);
        CHECK(allowed.count(rec["type"].get<std::string>()) == 1);
        CHECK(rec["parents"].is_array());
        CHECK(rec["value"].is_string());  // decimal string, arbitrary size
        for (const auto& p : rec["parents"]) {
            CHECK(p.get<std::string>().rfind("2:", 0) == 0);
        }
    }
    // ndjson lines are the same records, one per line
    std::ostringstream nd;
    write_level_ndjson(nd, g, 3);
    std::istringstream lines(nd.str());
    std::string line;
    size_t count = 0;
    while (std::getline(lines, line)) {
        auto rec = nlohmann::json::parse(line);
        CHECK(rec == doc["vertices"][count]);
        ++count;
    }
    CHECK(count == 13);
}

TEST_CASE("structural audit passes on a healthy graph") {
    PyramidGraph g = build(6);
    auto [cv, sv] = g.census(6);
    CHECK(cv.s == 736);
    VerificationReport report = structural_audit(g);
    for (const auto& c : report.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.passed);
    }
}
