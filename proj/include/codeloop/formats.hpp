#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "factor_set.hpp"
#include "loop.hpp"

namespace codeloop {

// ---- generator matrix text -------------------------------------------------
//
// One '0'/'1' row per line, all rows the same length. Lines that are blank
// or start with '#' are ignored. Trailing CR is stripped so CRLF files work.

inline std::vector<BitWord> parse_generator_rows(std::istream& in, const std::string& source) {
    std::vector<BitWord> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t");
        const std::string token = line.substr(start, end - start + 1);
        BitWord row;
        try {
            row = parse_word(token);
        } catch (const Error& e) {
            fail(Errc::parse_error,
                 source + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!rows.empty() && row.length != rows.front().length)
            fail(Errc::parse_error, source + ":" + std::to_string(lineno) + ": row length " +
                                        std::to_string(row.length) + " differs from " +
                                        std::to_string(rows.front().length));
        rows.push_back(row);
    }
    if (rows.empty())
        fail(Errc::parse_error, source + ": no generator rows");
    return rows;
}

inline LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::file_not_found, path);
    std::vector<BitWord> rows = parse_generator_rows(in, path);
    return LinearCode::span(rows);
}

// ---- factor set table text ---------------------------------------------------
//
// "k=<dim>" then 2^k lines of 2^k characters, row u, column v.

inline std::string format_phi(const FactorSet& phi) {
    std::ostringstream out;
    out << "k=" << phi.dim() << '\n';
    const std::size_t m = phi.size();
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) out << (phi.entry(u, v) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

inline BitMatrix parse_phi_table(std::istream& in, const std::string& source) {
    std::string header;
    if (!std::getline(in, header))
        fail(Errc::parse_error, source + ": missing k= header");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header.rfind("k=", 0) != 0)
        fail(Errc::parse_error, source + ": expected k=<dim>, got '" + header + "'");
    int k = 0;
    try {
        k = std::stoi(header.substr(2));
    } catch (...) {
        fail(Errc::parse_error, source + ": bad dimension '" + header.substr(2) + "'");
    }
    if (k < 0 || k > LinearCode::max_dimension)
        fail(Errc::dimension_too_large, source + ": dimension " + std::to_string(k));
    const std::size_t m = std::size_t{1} << k;
    BitMatrix table(m, m);
    std::string line;
    for (std::size_t u = 0; u < m; ++u) {
        if (!std::getline(in, line))
            fail(Errc::parse_error, source + ": expected " + std::to_string(m) + " rows");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != m)
            fail(Errc::parse_error, source + ": row " + std::to_string(u) + " has " +
                                        std::to_string(line.size()) + " entries, expected " +
                                        std::to_string(m));
        for (std::size_t v = 0; v < m; ++v) {
            if (line[v] != '0' && line[v] != '1')
                fail(Errc::parse_error, source + ": row " + std::to_string(u) +
                                            " has bad character '" + line[v] + "'");
            table.set(u, v, line[v] == '1');
        }
    }
    return table;
}

// ---- Cayley table text -------------------------------------------------------
//
// "order=<m>" then m rows of m space separated element indices.

inline std::string format_cayley(const CodeLoop& loop) {
    std::ostringstream out;
    const std::size_t m = loop.order();
    out << "order=" << m << '\n';
    for (std::size_t i = 0; i < m; ++i) {
        const LoopElement x = loop.element(i);
        for (std::size_t j = 0; j < m; ++j) {
            if (j) out << ' ';
            out << loop.index(loop.mul(x, loop.element(j)));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace codeloop
