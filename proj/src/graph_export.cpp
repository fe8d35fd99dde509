#include "hyperpascal/graph_export.hpp"

#include <ostream>

#include <json.hpp>

namespace hyperpascal {

namespace {

using nlohmann::ordered_json;

ordered_json vertex_record(const PyramidGraph& graph, unsigned n, uint32_t v) {
    const LevelData& d = graph.level(n);
    ordered_json rec;
    rec["id"] = graph.vertex_id(n, v);
    rec["type"] = vertex_type_name(d.type[v]);
    ordered_json parents = ordered_json::array();
    for (size_t j = d.parent_begin[v]; j < d.parent_begin[v + 1]; ++j) {
        parents.push_back(graph.vertex_id(n - 1, d.parents[j]));
    }
    rec["parents"] = std::move(parents);
    rec["value"] = d.value[v].get_str();
    return rec;
}

}  // namespace

void write_level_json(std::ostream& out, const PyramidGraph& graph, unsigned n) {
    const LevelData& d = graph.level(n);
    ordered_json j;
    j["level"] = n;
    ordered_json vertices = ordered_json::array();
    for (uint32_t v = 0; v < d.size(); ++v) vertices.push_back(vertex_record(graph, n, v));
    j["vertices"] = std::move(vertices);
    out << j.dump(2) << '\n';
}

void write_level_ndjson(std::ostream& out, const PyramidGraph& graph, unsigned n) {
    const LevelData& d = graph.level(n);
    for (uint32_t v = 0; v < d.size(); ++v) {
        out << vertex_record(graph, n, v).dump() << '\n';
    }
}

void write_level_csv(std::ostream& out, const PyramidGraph& graph, unsigned n, bool header) {
    const LevelData& d = graph.level(n);
    if (header) out << "id,type,parent_ids,value\n";
    for (uint32_t v = 0; v < d.size(); ++v) {
        out << graph.vertex_id(n, v) << ',' << vertex_type_name(d.type[v]) << ',';
        for (size_t j = d.parent_begin[v]; j < d.parent_begin[v + 1]; ++j) {
            if (j > d.parent_begin[v]) out << ';';
            out << graph.vertex_id(n - 1, d.parents[j]);
        }
        out << ',' << d.value[v].get_str() << '\n';
    }
}

void write_slab_dot(std::ostream& out, const PyramidGraph& graph, unsigned n) {
    const LevelData& upper = graph.level(n + 1);
    const LevelData& lower = graph.level(n);
    out << "digraph slab_" << n << "_" << n + 1 << " {\n";
    for (uint32_t v = 0; v < lower.size(); ++v) {
        out << "  \"" << graph.vertex_id(n, v) << "\" [label=\"" << vertex_type_name(lower.type[v]) << ":"
            << lower.value[v].get_str() << "\"];\n";
    }
    for (uint32_t v = 0; v < upper.size(); ++v) {
        out << "  \"" << graph.vertex_id(n + 1, v) << "\" [label=\"" << vertex_type_name(upper.type[v]) << ":"
            << upper.value[v].get_str() << "\"];\n";
    }
    for (uint32_t v = 0; v < upper.size(); ++v) {
        for (size_t j = upper.parent_begin[v]; j < upper.parent_begin[v + 1]; ++j) {
            out << "  \"" << graph.vertex_id(n, upper.parents[j]) << "\" -> \"" << graph.vertex_id(n + 1, v)
                << "\";\n";
        }
    }
    out << "}\n";
}

}  // namespace hyperpascal
