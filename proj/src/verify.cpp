#include "hyperpascal/verify.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hyperpascal/recurrence.hpp"

namespace hyperpascal {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

size_t VerificationReport::failure_count() const {
    size_t n = 0;
    for (const auto& c : checks) {
        if (!c.passed) ++n;
    }
    return n;
}

void VerificationReport::write_json(std::ostream& out) const {
    nlohmann::ordered_json j;
    j["passed"] = all_passed();
    j["failures"] = failure_count();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.passed ? "pass" : "fail";
        if (!c.detail.empty()) jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    out << j.dump(2) << '\n';
}

void VerificationReport::write_text(std::ostream& out) const {
    for (const auto& c : checks) {
        out << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
    }
}

const TableFixture& expected_counts_table() {
    static const TableFixture t = {{
        {0, 0, 3, 6, 12, 27, 66, 168, 435, 1134, 2964},
        {0, 0, 0, 3, 12, 36, 99, 264, 696, 1827, 4788},
        {0, 0, 0, 1, 3, 9, 34, 174, 1128, 8251, 63315},
        {0, 0, 0, 0, 3, 24, 177, 1347, 10467, 82029, 644808},
        {0, 0, 0, 0, 3, 39, 357, 2952, 23622, 186984, 1474773},
        {1, 3, 6, 13, 36, 138, 736, 4908, 36351, 280228, 2190651},
    }};
    return t;
}

const TableFixture& expected_sums_table() {
    static const TableFixture t = {{
        {0, 0, 6, 18, 54, 174, 582, 1974, 6726, 22950, 78342},
        {0, 0, 0, 6, 30, 114, 402, 1386, 4746, 16218, 55386},
        {0, 0, 0, 6, 36, 210, 1452, 12138, 114684, 1147002, 11729148},
        {0, 0, 0, 0, 24, 324, 3600, 38148, 398112, 4132596, 42818208},
        {0, 0, 0, 0, 18, 312, 3798, 41544, 438270, 4566120, 47368110},
        {1, 3, 9, 33, 165, 1137, 9837, 95193, 962541, 9884889, 102049197},
    }};
    return t;
}

namespace {

const char* const kRowNames[6] = {"a", "b", "c", "d", "e", "s"};

template <typename Vec>
std::array<Int, 6> row_of(const Vec& v) {
    return {v.a, v.b, v.c, v.d, v.e, v.s};
}

template <typename Vec>
CheckResult check_table(const std::string& name, const std::vector<Vec>& rows, const TableFixture& fixture) {
    CheckResult result{name, true, ""};
    for (unsigned n = 0; n <= 10; ++n) {
        auto actual = row_of(rows[n]);
        for (int r = 0; r < 6; ++r) {
            Int expect(fixture[static_cast<size_t>(r)][n]);
            if (actual[static_cast<size_t>(r)] != expect) {
                result.passed = false;
                result.detail = std::string("first mismatch at (") + kRowNames[r] + "," + std::to_string(n) +
                                "): expected " + expect.get_str() + ", got " +
                                actual[static_cast<size_t>(r)].get_str();
                return result;
            }
        }
    }
    return result;
}

CheckResult check(const std::string& name, bool ok, const std::string& detail_on_failure) {
    CheckResult r{name, ok, ok ? "" : detail_on_failure};
    return r;
}

std::vector<Rat> to_rat_seq(const std::vector<Int>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

struct Sequences {
    std::vector<Int> a, b, c, d, e, s;
};

Sequences count_sequences(unsigned n_max) {
    Sequences q;
    for (const auto& v : count_vectors(n_max)) {
        q.a.push_back(v.a);
        q.b.push_back(v.b);
        q.c.push_back(v.c);
        q.d.push_back(v.d);
        q.e.push_back(v.e);
        q.s.push_back(v.s);
    }
    return q;
}

Sequences sum_sequences(unsigned n_max) {
    Sequences q;
    for (const auto& v : sum_vectors(n_max)) {
        q.a.push_back(v.a);
        q.b.push_back(v.b);
        q.c.push_back(v.c);
        q.d.push_back(v.d);
        q.e.push_back(v.e);
        q.s.push_back(v.s);
    }
    return q;
}

}  // namespace

VerificationReport verify_tables() {
    return verify_tables_against(expected_counts_table(), expected_sums_table());
}

VerificationReport verify_tables_against(const TableFixture& counts, const TableFixture& sums) {
    VerificationReport report;
    report.checks.push_back(check_table("census recurrence vs frozen table", count_vectors(10), counts));
    report.checks.push_back(check_table("value-sum recurrence vs frozen table", sum_vectors(10), sums));
    {
        CheckResult r{"euclidean census sizes (n+1)(n+2)/2", true, ""};
        auto rows = euclidean_counts(20);
        for (unsigned n = 0; n <= 20; ++n) {
            Int expect((n + 1) * (n + 2) / 2);
            if (rows[n].s != expect) {
                r.passed = false;
                r.detail = "level " + std::to_string(n) + ": expected " + expect.get_str() + ", got " +
                           rows[n].s.get_str();
                break;
            }
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

VerificationReport cross_check(unsigned n_max, unsigned graph_cap) {
    VerificationReport report;
    unsigned graph_levels = std::min(n_max, graph_cap);
    {
        PyramidGraph graph({std::max(graph_levels, 1u), false});
        graph.grow_to(graph_levels);
        auto counts = count_vectors(graph_levels);
        auto sums = sum_vectors(graph_levels);
        CheckResult r{"graph census equals recurrence engines (n <= " + std::to_string(graph_levels) + ")", true, ""};
        for (unsigned n = 0; n <= graph_levels && r.passed; ++n) {
            auto [cv, sv] = graph.census(n);
            auto mismatch = [&](const char* what, const Int& got, const Int& expect) {
                r.passed = false;
                r.detail = std::string(what) + " at level " + std::to_string(n) + ": graph " + got.get_str() +
                           " vs recurrence " + expect.get_str();
            };
            if (cv.a != counts[n].a) mismatch("a", cv.a, counts[n].a);
            else if (cv.b != counts[n].b) mismatch("b", cv.b, counts[n].b);
            else if (cv.c != counts[n].c) mismatch("c", cv.c, counts[n].c);
            else if (cv.d != counts[n].d) mismatch("d", cv.d, counts[n].d);
            else if (cv.e != counts[n].e) mismatch("e", cv.e, counts[n].e);
            else if (cv.s != counts[n].s) mismatch("s", cv.s, counts[n].s);
            else if (sv.a != sums[n].a) mismatch("a-sum", sv.a, sums[n].a);
            else if (sv.b != sums[n].b) mismatch("b-sum", sv.b, sums[n].b);
            else if (sv.c != sums[n].c) mismatch("c-sum", sv.c, sums[n].c);
            else if (sv.d != sums[n].d) mismatch("d-sum", sv.d, sums[n].d);
            else if (sv.e != sums[n].e) mismatch("e-sum", sv.e, sums[n].e);
            else if (sv.s != sums[n].s) mismatch("s-sum", sv.s, sums[n].s);
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"closed forms equal recurrences (1 <= n <= " + std::to_string(n_max) + ")", true, ""};
        auto counts = count_vectors(n_max);
        auto sums = sum_vectors(n_max);
        for (unsigned n = 1; n <= n_max && r.passed; ++n) {
            const CountKind kinds[6] = {CountKind::A, CountKind::B, CountKind::C,
                                        CountKind::D, CountKind::E, CountKind::S};
            std::array<Int, 6> expect = {counts[n].a, counts[n].b, counts[n].c,
                                         counts[n].d, counts[n].e, counts[n].s};
            for (int i = 0; i < 6; ++i) {
                Int got = explicit_count(kinds[i], n);
                if (got != expect[static_cast<size_t>(i)]) {
                    r.passed = false;
                    r.detail = std::string("count ") + kRowNames[i] + " at n=" + std::to_string(n) + ": closed form " +
                               got.get_str() + " vs " + expect[static_cast<size_t>(i)].get_str();
                    break;
                }
            }
            if (!r.passed) break;
            Int ga = explicit_sum_ab(CountKind::A, n);
            Int gb = explicit_sum_ab(CountKind::B, n);
            if (ga != sums[n].a || gb != sums[n].b) {
                r.passed = false;
                r.detail = "face value sums at n=" + std::to_string(n) + ": closed form (" + ga.get_str() + "," +
                           gb.get_str() + ") vs (" + sums[n].a.get_str() + "," + sums[n].b.get_str() + ")";
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        unsigned horizon = std::max(n_max, 30u);
        auto qc = count_sequences(horizon);
        auto qs = sum_sequences(horizon);
        RecurrenceSpec quintic{{Rat(12), Rat(-37), Rat(37), Rat(-12), Rat(1)}, false};
        RecurrenceSpec cubic{{Rat(4), Rat(-4), Rat(1)}, false};
        RecurrenceSpec sextic{{Rat(18), Rat(-99), Rat(226), Rat(-224), Rat(92), Rat(-12)}, false};
        RecurrenceSpec sum_cubic{{Rat(5), Rat(-6), Rat(2)}, false};
        bool ok = true;
        std::string detail;
        auto must = [&](const char* name, const std::vector<Int>& seq, const RecurrenceSpec& spec, size_t from) {
            if (ok && !verify_recurrence(to_rat_seq(seq), spec, from)) {
                ok = false;
                detail = std::string(name) + " fails its recurrence from index " + std::to_string(from);
            }
        };
        must("a", qc.a, quintic, 6);
        must("b", qc.b, quintic, 6);
        must("c", qc.c, quintic, 6);
        must("d", qc.d, quintic, 6);
        must("e", qc.e, quintic, 6);
        must("s", qc.s, quintic, 6);
        must("a", qc.a, cubic, 4);
        must("b", qc.b, cubic, 4);
        must("a-sum", qs.a, sextic, 7);
        must("b-sum", qs.b, sextic, 7);
        must("c-sum", qs.c, sextic, 7);
        must("d-sum", qs.d, sextic, 7);
        must("e-sum", qs.e, sextic, 7);
        must("s-sum", qs.s, sextic, 7);
        must("a-sum", qs.a, sum_cubic, 4);
        must("b-sum", qs.b, sum_cubic, 4);
        report.checks.push_back(check("every sequence satisfies its scalar recurrence", ok, detail));
    }
    {
        bool ok = true;
        std::string detail;
        Polynomial quintic({Rat(-1), Rat(12), Rat(-37), Rat(37), Rat(-12), Rat(1)});
        if (minpoly(counts_matrix()) != quintic) {
            ok = false;
            detail = "census system minimal polynomial mismatch";
        }
        Polynomial expected_sums = Polynomial({Rat(-1), Rat(1)}) * Polynomial({Rat(2), Rat(-4), Rat(1)}) *
                                   Polynomial({Rat(-6), Rat(28), Rat(-13), Rat(1)});
        if (ok && charpoly(sums_matrix()) != expected_sums) {
            ok = false;
            detail = "value-sum system characteristic polynomial mismatch";
        }
        auto spec_min = scalar_recurrence(counts_matrix(), RecurrenceMode::Minimal);
        RecurrenceSpec quintic_spec{{Rat(12), Rat(-37), Rat(37), Rat(-12), Rat(1)}, false};
        if (ok && !(spec_min == quintic_spec)) {
            ok = false;
            detail = "derived census recurrence mismatch: " + spec_min.to_string();
        }
        auto spec_sum = scalar_recurrence(sums_matrix(), RecurrenceMode::Characteristic);
        RecurrenceSpec sextic_spec{{Rat(18), Rat(-99), Rat(226), Rat(-224), Rat(92), Rat(-12)}, false};
        if (ok && !(spec_sum == sextic_spec)) {
            ok = false;
            detail = "derived value-sum recurrence mismatch: " + spec_sum.to_string();
        }
        report.checks.push_back(check("polynomial certificates of both systems", ok, detail));
    }
    return report;
}

VerificationReport structural_audit(const PyramidGraph& graph) {
    VerificationReport report;
    const unsigned top = graph.top_level();

    {
        CheckResult r{"in-degree by type", true, ""};
        for (unsigned n = 0; n <= top && r.passed; ++n) {
            const LevelData& d = graph.level(n);
            for (uint32_t v = 0; v < d.size() && r.passed; ++v) {
                size_t expect = link_template(d.type[v]).parent_positions.size();
                if (d.parent_count(v) != expect) {
                    r.passed = false;
                    r.detail = "vertex " + graph.vertex_id(n, v) + " (" + vertex_type_name(d.type[v]) + ") has " +
                               std::to_string(d.parent_count(v)) + " parents, expected " + std::to_string(expect);
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"out-degree by type", true, ""};
        for (unsigned n = 0; n + 1 <= top && r.passed; ++n) {
            const LevelData& d = graph.level(n);
            const LevelData& up = graph.level(n + 1);
            std::vector<size_t> out_degree(d.size(), 0);
            for (uint32_t v = 0; v < up.size(); ++v) {
                for (size_t j = up.parent_begin[v]; j < up.parent_begin[v + 1]; ++j) {
                    ++out_degree[up.parents[j]];
                }
            }
            for (uint32_t v = 0; v < d.size() && r.passed; ++v) {
                size_t expect = static_cast<size_t>(link_template(d.type[v]).out_degree());
                if (out_degree[v] != expect) {
                    r.passed = false;
                    r.detail = "vertex " + graph.vertex_id(n, v) + " (" + vertex_type_name(d.type[v]) + ") has " +
                               std::to_string(out_degree[v]) + " children, expected " + std::to_string(expect);
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"values propagate as parent sums", true, ""};
        for (unsigned n = 1; n <= top && r.passed; ++n) {
            const LevelData& d = graph.level(n);
            const LevelData& below = graph.level(n - 1);
            for (uint32_t v = 0; v < d.size() && r.passed; ++v) {
                Int sum(0);
                for (size_t j = d.parent_begin[v]; j < d.parent_begin[v + 1]; ++j) {
                    sum += below.value[d.parents[j]];
                }
                if (sum != d.value[v]) {
                    r.passed = false;
                    r.detail = "vertex " + graph.vertex_id(n, v) + ": value " + d.value[v].get_str() +
                               " but parents sum to " + sum.get_str();
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"parents sit on the previous level and are sorted", true, ""};
        for (unsigned n = 1; n <= top && r.passed; ++n) {
            const LevelData& d = graph.level(n);
            const LevelData& below = graph.level(n - 1);
            for (uint32_t v = 0; v < d.size() && r.passed; ++v) {
                for (size_t j = d.parent_begin[v]; j < d.parent_begin[v + 1]; ++j) {
                    if (d.parents[j] >= below.size() ||
                        (j > d.parent_begin[v] && d.parents[j] <= d.parents[j - 1])) {
                        r.passed = false;
                        r.detail = "vertex " + graph.vertex_id(n, v) + " has an invalid parent list";
                        break;
                    }
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"boundary vertices generate the right interior child", true, ""};
        for (unsigned n = 1; n + 1 <= top && r.passed; ++n) {
            const LevelData& d = graph.level(n);
            const LevelData& up = graph.level(n + 1);
            std::vector<std::vector<uint32_t>> interior_children(d.size());
            for (uint32_t v = 0; v < up.size(); ++v) {
                if (up.face_mask[v] != 0) continue;
                for (size_t j = up.parent_begin[v]; j < up.parent_begin[v + 1]; ++j) {
                    interior_children[up.parents[j]].push_back(v);
                }
            }
            for (uint32_t v = 0; v < d.size() && r.passed; ++v) {
                VertexType t = d.type[v];
                if (t != VertexType::A && t != VertexType::B) continue;
                VertexType expect = t == VertexType::A ? VertexType::C : VertexType::D;
                if (interior_children[v].size() != 1 || up.type[interior_children[v][0]] != expect) {
                    r.passed = false;
                    r.detail = "vertex " + graph.vertex_id(n, v) + " (" + vertex_type_name(t) +
                               ") does not have exactly one interior child of type " + vertex_type_name(expect);
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"face censuses divisible by 3", true, ""};
        for (unsigned n = 1; n <= top && r.passed; ++n) {
            auto [cv, sv] = graph.census(n);
            if (cv.a % 3 != 0 || cv.b % 3 != 0) {
                r.passed = false;
                r.detail = "level " + std::to_string(n) + ": a=" + cv.a.get_str() + " b=" + cv.b.get_str();
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"winger count is 3 on every level", true, ""};
        for (unsigned n = 1; n <= top && r.passed; ++n) {
            auto [cv, sv] = graph.census(n);
            if (cv.ones != 3) {
                r.passed = false;
                r.detail = "level " + std::to_string(n) + " has " + cv.ones.get_str() + " wingers";
            }
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"face rows equal the {4,5} triangle rows", true, ""};
        unsigned limit = std::min(top, 8u);
        for (unsigned n = 0; n <= limit && r.passed; ++n) {
            TriangleRow expect = triangle_row(5, n);
            for (int face = 0; face < 3 && r.passed; ++face) {
                try {
                    TriangleRow got = graph.face_row(face, n);
                    if (got.values != expect.values || got.kinds != expect.kinds) {
                        r.passed = false;
                        r.detail = "face " + std::to_string(face) + " row " + std::to_string(n) +
                                   " differs from the triangle engine";
                    }
                } catch (const StructuralError& e) {
                    r.passed = false;
                    r.detail = std::string("level ") + std::to_string(n) + ": " + e.what();
                }
            }
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace hyperpascal
