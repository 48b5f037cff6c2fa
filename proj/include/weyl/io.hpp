#pragma once

/**
 * @file io.hpp
 * @brief Matrix documents, inline matrix literals, and orbit graph output.
 *
 * Matrix document:  {"rank": 2, "entries": ["q11", "q12", "q21", "q22"]}
 * Inline matrix:    "q11, q12; q21, q22"
 */

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weyl/braiding.hpp"
#include "weyl/errors.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/parse.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

inline constexpr int json_schema_version = 1;

/// Parses "q11, q12; q21, q22". Rows are separated by ';', entries by ','.
inline BraidingMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Scalar>> rows;
    std::size_t row_start = 0;
    while (true) {
        const std::size_t row_end = std::min(text.find(';', row_start), text.size());
        std::vector<Scalar> row;
        std::size_t cell_start = row_start;
        while (true) {
            const std::size_t cell_end = std::min(text.find(',', cell_start), row_end);
            row.push_back(parse_scalar(text.substr(cell_start, cell_end - cell_start), cell_start));
            if (cell_end == row_end) break;
            cell_start = cell_end + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(rows.front().size()),
                              row_start);
        rows.push_back(std::move(row));
        if (row_end == text.size()) break;
        row_start = row_end + 1;
    }
    const std::size_t n = rows.size();
    if (rows.front().size() != n)
        throw parse_error("matrix is " + std::to_string(n) + "x" + std::to_string(rows.front().size()) +
                              ", expected square",
                          0);
    std::vector<Scalar> entries;
    for (auto& r : rows)
        for (auto& s : r) entries.push_back(std::move(s));
    return BraidingMatrix(n, std::move(entries));
}

inline nlohmann::json to_json(const BraidingMatrix& M) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& s : M.entries()) entries.push_back(s.to_string());
    return {{"rank", M.rank()}, {"entries", entries}};
}

inline BraidingMatrix matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("entries"))
        throw parse_error("matrix document needs 'rank' and 'entries'", 0);
    if (!doc.at("rank").is_number_integer() || doc.at("rank").get<long long>() < 1)
        throw parse_error("'rank' must be a positive integer", 0);
    const auto n = doc.at("rank").get<std::size_t>();
    const auto& list = doc.at("entries");
    if (!list.is_array() || list.size() != n * n)
        throw parse_error("'entries' must hold " + std::to_string(n * n) + " scalar strings", 0);
    std::vector<Scalar> entries;
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (!list[k].is_string()) throw parse_error("entry " + std::to_string(k + 1) + " is not a string", 0);
        try {
            entries.push_back(parse_scalar(list[k].get<std::string>()));
        } catch (const parse_error& e) {
            throw parse_error("entry " + std::to_string(k + 1) + ": " + e.what(), e.position());
        }
    }
    return BraidingMatrix(n, std::move(entries));
}

inline BraidingMatrix parse_matrix_document(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    return matrix_from_json(doc);
}

inline BraidingMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix_document(ss.str());
}

inline nlohmann::json to_json(const TwistClass& c) {
    nlohmann::json diag = nlohmann::json::array();
    nlohmann::json prods = nlohmann::json::array();
    for (const auto& s : c.diagonal) diag.push_back(s.to_string());
    for (std::size_t i = 0; i < c.rank; ++i)
        for (std::size_t j = i + 1; j < c.rank; ++j)
            prods.push_back({{"i", i + 1}, {"j", j + 1}, {"value", c.product(i, j).to_string()}});
    return {{"rank", c.rank}, {"diagonal", diag}, {"products", prods}};
}

inline nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

/// Vertices are 1-based in every serialized form.
inline nlohmann::json to_json(const OrbitGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"id", n.index}, {"class", to_json(n.twist_class)}, {"matrix", to_json(n.representative)}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from},
                         {"vertex", e.vertex + 1},
                         {"to", e.to},
                         {"target_vertex", e.target_vertex + 1},
                         {"s", to_json(e.s)}});
    nlohmann::json dead = nlohmann::json::array();
    for (const auto& d : g.dead_ends) dead.push_back({{"node", d.node}, {"vertex", d.vertex + 1}});
    return {{"schema", json_schema_version},
            {"status", to_string(g.status)},
            {"nodes", nodes},
            {"edges", edges},
            {"dead_ends", dead}};
}

inline std::string to_dot(const OrbitGraph& g) {
    std::ostringstream os;
    os << "digraph orbit {\n";
    os << "  // status: " << to_string(g.status) << "\n";
    for (const auto& n : g.nodes) os << "  n" << n.index << " [label=\"" << n.twist_class.to_string() << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"s" << e.vertex + 1 << "\"];\n";
    for (const auto& d : g.dead_ends) {
        os << "  dead" << d.node << "_" << d.vertex + 1 << " [shape=point];\n";
        os << "  n" << d.node << " -> dead" << d.node << "_" << d.vertex + 1 << " [label=\"s" << d.vertex + 1
           << "\", style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace weyl
