#include "fangcheng/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fangcheng {

Tableau<Integer> from_system(const std::vector<std::vector<Integer>>& coeffs,
                             const std::vector<Integer>& rhs) {
    const std::size_t n = coeffs.size();
    if (n == 0)
        throw DimensionMismatch("empty coefficient matrix");
    if (rhs.size() != n)
        throw DimensionMismatch("coefficient matrix has " + std::to_string(n) +
                                " rows but the right-hand side has " +
                                std::to_string(rhs.size()) + " entries");
    std::vector<std::vector<Integer>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i].size() != n)
            throw DimensionMismatch("coefficient matrix is not square");
        rows[i] = coeffs[i];
        rows[i].push_back(rhs[i]);
    }
    return Tableau<Integer>::from_rows(std::move(rows), /*rhs_cols=*/1);
}

namespace {

struct Line {
    std::string text;
    int number; // 1-based
};

bool is_integer_token(const std::string& tok) {
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size())
        return false;
    return std::all_of(tok.begin() + i, tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// Splits a line into (token, 1-based starting column) pairs.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
    }
    return out;
}

} // namespace

Tableau<Integer> parse_tableau(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            std::size_t first = raw.find_first_not_of(" \t");
            if (first == std::string::npos || raw[first] == '#')
                continue; // blank or comment line
            lines.push_back({raw, number});
        }
    }
    if (lines.empty())
        throw ParseError("missing header line", 1, 1);

    auto header = tokenize(lines[0].text);
    if (header.size() != 2 || !is_integer_token(header[0].first) ||
        !is_integer_token(header[1].first))
        throw ParseError("header must be two integers \"n m\"", lines[0].number,
                         header.empty() ? 1 : header[0].second);
    long n = 0, m = 0;
    try {
        n = std::stol(header[0].first);
        m = std::stol(header[1].first);
    } catch (const std::exception&) {
        throw ParseError("header dimensions out of range", lines[0].number, header[0].second);
    }
    if (n < 1 || m < 1)
        throw ParseError("dimensions must be positive", lines[0].number, header[0].second);
    if (m < n)
        throw ParseError("tableau needs at least as many columns as rows", lines[0].number,
                         header[1].second);

    if (static_cast<long>(lines.size()) - 1 < n) {
        const Line& last = lines.back();
        throw ParseError("expected " + std::to_string(n) + " rows, found " +
                             std::to_string(lines.size() - 1),
                         last.number, 1);
    }
    if (static_cast<long>(lines.size()) - 1 > n) {
        const Line& extra = lines[static_cast<std::size_t>(n) + 1];
        throw ParseError("unexpected content after row " + std::to_string(n), extra.number, 1);
    }

    std::vector<std::vector<Integer>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        auto toks = tokenize(line.text);
        if (static_cast<long>(toks.size()) < m) {
            int col = toks.empty() ? 1 : toks.back().second;
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                                 std::to_string(toks.size()) + " of " + std::to_string(m) +
                                 " entries",
                             line.number, col);
        }
        if (static_cast<long>(toks.size()) > m)
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                                 std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(m),
                             line.number, toks[static_cast<std::size_t>(m)].second);
        std::vector<Integer> row;
        row.reserve(static_cast<std::size_t>(m));
        for (auto& [tok, col] : toks) {
            if (!is_integer_token(tok))
                throw ParseError("\"" + tok + "\" is not an integer", line.number, col);
            row.emplace_back(tok);
        }
        rows.push_back(std::move(row));
    }
    return Tableau<Integer>::from_rows(std::move(rows), m == n + 1 ? 1 : 0);
}

Tableau<MultiPoly> generic_tableau(int n, int m) {
    if (n < 1 || m < n)
        throw DimensionMismatch("generic tableau needs 1 <= n <= m");
    const std::size_t nvars = static_cast<std::size_t>(n) * m;
    Tableau<MultiPoly> t(n, m, 0, MultiPoly::zero(nvars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            t.at(i, j) = MultiPoly::variable(nvars, static_cast<std::size_t>(i) * m + j);
    return t;
}

std::vector<std::string> generic_variable_names(int n, int m) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            names.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

std::string render_board(const std::vector<std::vector<std::string>>& entries) {
    if (entries.empty())
        return "";
    const std::size_t cols = entries.front().size();
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : entries)
        for (std::size_t j = 0; j < cols; ++j)
            width[j] = std::max(width[j], row[j].size());
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += "\n";
        for (std::size_t j = 0; j < cols; ++j) {
            if (j)
                out += " ";
            out += std::string(width[j] - entries[i][j].size(), ' ');
            out += entries[i][j];
        }
    }
    return out;
}

std::string render_json_document(int rows, int cols, int rhs_cols, int step,
                                 const std::vector<std::vector<std::string>>& entries) {
    std::string out = "{\"n\":" + std::to_string(rows) + ",\"m\":" + std::to_string(cols) +
                      ",\"rhs_cols\":" + std::to_string(rhs_cols) +
                      ",\"step\":" + std::to_string(step) + ",\"entries\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += ",";
        out += "[";
        for (std::size_t j = 0; j < entries[i].size(); ++j) {
            if (j)
                out += ",";
            out += "\"" + entries[i][j] + "\"";
        }
        out += "]";
    }
    out += "]}";
    return out;
}

} // namespace fangcheng
