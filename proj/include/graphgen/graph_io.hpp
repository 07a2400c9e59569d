#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphgen/block_models.hpp"
#include "graphgen/edgelist.hpp"
#include "graphgen/matrix.hpp"

namespace graphgen {

// Interchange formats, both pinned bit-exact:
//   TSV          one "src<TAB>dst\n" line per edge, 0-indexed.
//   MatrixMarket "%%MatrixMarket matrix coordinate pattern general" header,
//                then "rows cols nnz", then 1-indexed "row col" lines.
enum class EdgeFileFormat { TSV, MatrixMarket };

inline EdgeFileFormat parse_edge_format(const std::string& name) {
    if (name == "tsv") return EdgeFileFormat::TSV;
    if (name == "mm" || name == "matrixmarket") return EdgeFileFormat::MatrixMarket;
    throw std::invalid_argument("unknown edge format: " + name);
}

// Writes edges in their list order; returns the byte count emitted.
inline std::uint64_t write_edges(const EdgeList& edges, EdgeFileFormat format,
                                 std::ostream& sink) {
    std::uint64_t bytes = 0;
    auto put = [&](const std::string& s) {
        sink.write(s.data(), static_cast<std::streamsize>(s.size()));
        bytes += s.size();
    };
    if (format == EdgeFileFormat::MatrixMarket) {
        put("%%MatrixMarket matrix coordinate pattern general\n");
        put(std::to_string(edges.num_rows) + " " + std::to_string(edges.num_cols) + " " +
            std::to_string(edges.size()) + "\n");
        for (const Edge& e : edges.edges)
            put(std::to_string(e.src + 1) + " " + std::to_string(e.dst + 1) + "\n");
    } else {
        for (const Edge& e : edges.edges)
            put(std::to_string(e.src) + "\t" + std::to_string(e.dst) + "\n");
    }
    if (!sink) throw std::runtime_error("write_edges: sink write failure");
    return bytes;
}

namespace detail {

inline std::int64_t parse_int_token(const std::string& token, std::int64_t line_no,
                                    const char* what) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size())
        throw std::runtime_error(std::string(what) + ": bad integer '" + token + "' at line " +
                                 std::to_string(line_no));
    return value;
}

}  // namespace detail

// Reads either format back into an EdgeList. TSV carries no dimensions, so
// they are inferred as max index + 1 unless the caller supplies them.
inline EdgeList read_edges(std::istream& source, EdgeFileFormat format,
                           std::int64_t num_rows = -1, std::int64_t num_cols = -1) {
    EdgeList out;
    std::string line;
    std::int64_t line_no = 0;
    if (format == EdgeFileFormat::MatrixMarket) {
        if (!std::getline(source, line) ||
            line.rfind("%%MatrixMarket matrix coordinate pattern", 0) != 0)
            throw std::runtime_error("read_edges: missing MatrixMarket header");
        line_no = 1;
        std::int64_t nnz = -1;
        while (std::getline(source, line)) {
            ++line_no;
            if (!line.empty() && line[0] == '%') continue;
            std::istringstream fields(line);
            if (!(fields >> out.num_rows >> out.num_cols >> nnz))
                throw std::runtime_error("read_edges: bad size line at line " +
                                         std::to_string(line_no));
            break;
        }
        if (nnz < 0) throw std::runtime_error("read_edges: missing size line");
        while (std::getline(source, line)) {
            ++line_no;
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::int64_t r = 0, c = 0;
            if (!(fields >> r >> c))
                throw std::runtime_error("read_edges: bad edge at line " +
                                         std::to_string(line_no));
            out.edges.push_back({r - 1, c - 1});
        }
        if (static_cast<std::int64_t>(out.size()) != nnz)
            throw std::runtime_error("read_edges: edge count does not match header");
        return out;
    }

    std::int64_t max_src = -1, max_dst = -1;
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("read_edges: missing tab at line " +
                                     std::to_string(line_no));
        const std::int64_t src =
            detail::parse_int_token(line.substr(0, tab), line_no, "read_edges");
        const std::int64_t dst =
            detail::parse_int_token(line.substr(tab + 1), line_no, "read_edges");
        out.edges.push_back({src, dst});
        max_src = std::max(max_src, src);
        max_dst = std::max(max_dst, dst);
    }
    out.num_rows = num_rows >= 0 ? num_rows : max_src + 1;
    out.num_cols = num_cols >= 0 ? num_cols : max_dst + 1;
    return out;
}

// Parses rows of whitespace- or comma-separated reals into a probability
// matrix; rows must agree in length and entries must lie in [0, 1].
inline ProbabilityMatrix read_matrix(std::istream& source) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<double> row;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw std::runtime_error("read_matrix: bad number '" + token + "' at line " +
                                         std::to_string(line_no));
            if (!(value >= 0.0 && value <= 1.0))
                throw std::runtime_error("read_matrix: entry outside [0, 1] at line " +
                                         std::to_string(line_no));
            row.push_back(value);
        }
        if (row.empty()) continue;  // blank line
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("read_matrix: ragged row at line " +
                                     std::to_string(line_no));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("read_matrix: no data");
    ProbabilityMatrix m(static_cast<std::int64_t>(rows.size()),
                        static_cast<std::int64_t>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.front().size(); ++j)
            m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = rows[i][j];
    return m;
}

// One non-negative integer per line; blank lines and '#' comments skipped.
inline DegreeSequence read_degrees(std::istream& source) {
    DegreeSequence degrees;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::size_t end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(start, end - start + 1);
        const std::int64_t value = detail::parse_int_token(token, line_no, "read_degrees");
        if (value < 0)
            throw std::runtime_error("read_degrees: negative degree at line " +
                                     std::to_string(line_no));
        degrees.push_back(value);
    }
    return degrees;
}

}  // namespace graphgen
