#include "hyperpascal/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hyperpascal {

namespace {

using nlohmann::ordered_json;

ordered_json rat_to_pair(const Rat& r) {
    return ordered_json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_pair(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw std::invalid_argument("matrix json: entry must be [numerator, denominator] decimal strings");
    }
    return rat_from_parts(j[0].get<std::string>(), j[1].get<std::string>());
}

}  // namespace

std::string matrix_to_json(const Matrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_pair(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

Matrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw std::invalid_argument("matrix json: need rows, cols, entries");
    }
    size_t rows = j["rows"].get<size_t>();
    size_t cols = j["cols"].get<size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows) {
        throw std::invalid_argument("matrix json: entries row count mismatch");
    }
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const auto& row = entries[r];
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("matrix json: entries column count mismatch");
        }
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rat_from_pair(row[c]);
    }
    return m;
}

Matrix matrix_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

std::string polynomial_to_json(const Polynomial& p) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (size_t k = 0; k < p.coeffs().size(); ++k) coeffs.push_back(rat_to_pair(p.coeff(k)));
    j["coefficients"] = std::move(coeffs);
    return j.dump(2);
}

std::string recurrence_report_json(const Matrix& m, RecurrenceMode mode) {
    ordered_json j;
    j["characteristic"] = nlohmann::json::parse(polynomial_to_json(charpoly(m)));
    j["minimal"] = nlohmann::json::parse(polynomial_to_json(minpoly(m)));
    RecurrenceSpec spec = scalar_recurrence(m, mode);
    ordered_json rec;
    rec["mode"] = mode == RecurrenceMode::Minimal ? "minimal" : "characteristic";
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : spec.coeffs) coeffs.push_back(rat_to_pair(c));
    rec["coefficients"] = std::move(coeffs);
    rec["degenerate"] = spec.degenerate;
    j["recurrence"] = std::move(rec);
    return j.dump(2);
}

}  // namespace hyperpascal
