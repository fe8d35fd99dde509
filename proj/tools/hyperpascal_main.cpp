#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "hyperpascal/counts.hpp"
#include "hyperpascal/graph_export.hpp"
#include "hyperpascal/matrix_io.hpp"
#include "hyperpascal/pyramid.hpp"
#include "hyperpascal/recurrence.hpp"
#include "hyperpascal/triangle.hpp"
#include "hyperpascal/verify.hpp"

namespace {

using namespace hyperpascal;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
        }
        return file;
    }
};

PyramidGraph build_graph(unsigned levels, unsigned cap, bool override_cap) {
    PyramidGraph::Options options;
    options.max_levels = cap;
    options.allow_beyond_cap = override_cap;
    PyramidGraph graph(options);
    graph.grow_to(levels);
    return graph;
}

Matrix builtin_matrix(const std::string& name) {
    if (name == "counts") return counts_matrix();
    if (name == "counts-ab") return counts_ab_matrix();
    if (name == "sums") return sums_matrix();
    if (name == "sums-ab") return sums_ab_matrix();
    throw std::invalid_argument("unknown builtin matrix: " + name +
                                " (expected counts, counts-ab, sums, sums-ab)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of the {4,3,5} Pascal pyramid"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    unsigned levels = 10;
    std::string format = "csv";
    std::string out_path;
    bool euclidean = false;
    unsigned precision = 256;
    bool max_levels_override = false;

    app.add_option("--levels", levels, "number of levels (or triangle row)")->capture_default_str();
    app.add_option("--format", format, "output format: csv, json, ndjson, dot")
        ->check(CLI::IsMember({"csv", "json", "ndjson", "dot"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_flag("--euclidean", euclidean, "use the Euclidean degeneration");
    app.add_option("--precision", precision, "working precision in bits")->capture_default_str();
    app.add_flag("--max-levels-override", max_levels_override,
                 "allow building past the default level cap of 10");

    auto* cmd_counts = app.add_subcommand("counts", "per-level census table from the recurrence system");
    auto* cmd_sums = app.add_subcommand("sums", "per-level value-sum table from the recurrence system");
    auto* cmd_build = app.add_subcommand("build", "construct the pyramid and emit all levels");
    auto* cmd_triangle = app.add_subcommand("triangle", "one row of the {4,q} triangle as CSV");
    unsigned triangle_q = 5;
    cmd_triangle->add_option("--q", triangle_q, "mosaic parameter q >= 4")->capture_default_str();
    auto* cmd_verify = app.add_subcommand("verify", "run table, cross-engine and structural checks");
    auto* cmd_recur = app.add_subcommand("recur", "polynomials and scalar recurrence of a rational matrix");
    std::string matrix_path, builtin_name, mode = "characteristic";
    cmd_recur->add_option("--matrix", matrix_path, "matrix JSON file");
    cmd_recur->add_option("--builtin", builtin_name, "builtin system matrix: counts, counts-ab, sums, sums-ab");
    cmd_recur->add_option("--mode", mode, "characteristic or minimal")
        ->check(CLI::IsMember({"characteristic", "minimal"}));
    auto* cmd_ratio = app.add_subcommand("ratio", "growth ratio s_n / s_{n-1} at high precision");
    std::string ratio_kind = "counts";
    unsigned ratio_at = 25;
    cmd_ratio->add_option("--kind", ratio_kind, "counts or sums")->check(CLI::IsMember({"counts", "sums"}));
    cmd_ratio->add_option("--at", ratio_at, "level n (ratio uses levels n-1 and n)")->capture_default_str();
    auto* cmd_export = app.add_subcommand("export", "emit one level or one slab of the pyramid");
    int export_level = -1, export_slab = -1;
    cmd_export->add_option("--level", export_level, "level to emit");
    cmd_export->add_option("--slab", export_slab, "slab n -> n+1 to emit as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        OutputTarget target{out_path, {}};
        const unsigned cap = 10;  // hard flag required beyond this

        if (cmd_counts->parsed()) {
            auto rows = euclidean ? euclidean_counts(levels) : count_vectors(levels);
            write_counts_csv(target.stream(), rows);
            return kExitOk;
        }
        if (cmd_sums->parsed()) {
            write_sums_csv(target.stream(), sum_vectors(levels));
            return kExitOk;
        }
        if (cmd_build->parsed()) {
            if (euclidean) {
                auto level = euclidean_level_values(levels);
                std::ostream& out = target.stream();
                for (const auto& row : level) {
                    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].get_str();
                    out << '\n';
                }
                return kExitOk;
            }
            if (format == "json" && levels >= 9) {
                std::cerr << "build: whole-document json is capped at 8 levels (millions of vertices above "
                             "that); use --format ndjson for streaming emission\n";
                return kExitUsage;
            }
            PyramidGraph graph = build_graph(levels, cap, max_levels_override);
            std::ostream& out = target.stream();
            if (format == "json") {
                for (unsigned n = 0; n <= levels; ++n) write_level_json(out, graph, n);
            } else if (format == "ndjson") {
                for (unsigned n = 0; n <= levels; ++n) write_level_ndjson(out, graph, n);
            } else if (format == "dot") {
                for (unsigned n = 0; n + 1 <= levels; ++n) write_slab_dot(out, graph, n);
            } else {
                out << "id,type,parent_ids,value\n";
                for (unsigned n = 0; n <= levels; ++n) write_level_csv(out, graph, n, false);
            }
            return kExitOk;
        }
        if (cmd_triangle->parsed()) {
            write_row_csv(target.stream(), triangle_row(euclidean ? 4 : triangle_q, levels));
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            VerificationReport report = verify_tables();
            unsigned graph_levels = std::min(levels, max_levels_override ? levels : 8u);
            VerificationReport cross = cross_check(levels, graph_levels);
            PyramidGraph graph = build_graph(graph_levels, cap, max_levels_override);
            VerificationReport audit = structural_audit(graph);
            report.checks.insert(report.checks.end(), cross.checks.begin(), cross.checks.end());
            report.checks.insert(report.checks.end(), audit.checks.begin(), audit.checks.end());
            if (format == "json") {
                report.write_json(target.stream());
            } else {
                report.write_text(target.stream());
            }
            return report.all_passed() ? kExitOk : kExitVerificationFailure;
        }
        if (cmd_recur->parsed()) {
            if (matrix_path.empty() == builtin_name.empty()) {
                std::cerr << "recur: provide exactly one of --matrix or --builtin\n";
                return kExitUsage;
            }
            Matrix m = builtin_name.empty() ? matrix_from_json_file(matrix_path) : builtin_matrix(builtin_name);
            std::ostream& out = target.stream();
            RecurrenceMode rmode = mode == "minimal" ? RecurrenceMode::Minimal : RecurrenceMode::Characteristic;
            if (format == "json") {
                out << recurrence_report_json(m, rmode) << '\n';
                return kExitOk;
            }
            Polynomial cp = charpoly(m);
            Polynomial mp = minpoly(m);
            RecurrenceSpec spec = scalar_recurrence(m, rmode);
            out << "characteristic: " << cp.to_display_string() << '\n';
            out << "minimal: " << mp.to_display_string() << '\n';
            out << "recurrence (" << mode << "): " << spec.to_string() << (spec.degenerate ? "  [degenerate]" : "")
                << '\n';
            return kExitOk;
        }
        if (cmd_ratio->parsed()) {
            RatioKind kind = ratio_kind == "sums" ? RatioKind::Sums
                             : euclidean          ? RatioKind::EuclideanCounts
                                                  : RatioKind::Counts;
            Real ratio = growth_ratio(kind, ratio_at, precision);
            target.stream() << real_to_string(ratio, 40) << '\n';
            return kExitOk;
        }
        if (cmd_export->parsed()) {
            if ((export_level < 0) == (export_slab < 0)) {
                std::cerr << "export: provide exactly one of --level or --slab\n";
                return kExitUsage;
            }
            unsigned need = export_slab >= 0 ? static_cast<unsigned>(export_slab) + 1
                                             : static_cast<unsigned>(export_level);
            PyramidGraph graph = build_graph(need, cap, max_levels_override);
            std::ostream& out = target.stream();
            if (export_slab >= 0) {
                write_slab_dot(out, graph, static_cast<unsigned>(export_slab));
            } else if (format == "json") {
                write_level_json(out, graph, static_cast<unsigned>(export_level));
            } else if (format == "ndjson") {
                write_level_ndjson(out, graph, static_cast<unsigned>(export_level));
            } else {
                write_level_csv(out, graph, static_cast<unsigned>(export_level));
            }
            return kExitOk;
        }
    } catch (const StructuralError& e) {
        std::cerr << "structural integrity failure: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
