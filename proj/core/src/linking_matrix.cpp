#include "milq/linking_matrix.hpp"

#include "milq/error.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace milq {

LinkingMatrix::LinkingMatrix(int n) : n_(n), e_(std::size_t(n) * n) {
    if (n < 1) throw invalid_input("LinkingMatrix: n must be positive");
}

const Int& LinkingMatrix::entry(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw invalid_input("LinkingMatrix::entry: index out of range");
    return e_[std::size_t(i - 1) * n_ + (j - 1)];
}

void LinkingMatrix::set_linking(int i, int j, Int v) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw invalid_input("LinkingMatrix::set_linking: index out of range");
    if (i == j) throw invalid_input("LinkingMatrix::set_linking: diagonal entries are fixed at 0");
    e_[std::size_t(i - 1) * n_ + (j - 1)] = v;
    e_[std::size_t(j - 1) * n_ + (i - 1)] = std::move(v);
}

LinkingMatrix LinkingMatrix::from_entries(int n, const std::vector<std::vector<Int>>& rows) {
    if (n < 1) throw invalid_input("linking matrix: n must be positive");
    if (rows.size() != std::size_t(n))
        throw invalid_input("linking matrix: expected " + std::to_string(n) + " rows, got " +
                            std::to_string(rows.size()));
    for (int i = 0; i < n; ++i)
        if (rows[i].size() != std::size_t(n))
            throw invalid_input("linking matrix: row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (rows[i][i] != 0)
            throw invalid_input("linking matrix: diagonal entry (" + std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + ") must be 0");
        for (int j = 0; j < i; ++j)
            if (rows[i][j] != rows[j][i]) {
                std::ostringstream msg;
                msg << "linking matrix: entry (" << i + 1 << "," << j + 1 << ") = " << rows[i][j]
                    << " contradicts entry (" << j + 1 << "," << i + 1 << ") = " << rows[j][i]
                    << " (matrix must be symmetric)";
                throw invalid_input(msg.str());
            }
    }
    LinkingMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) m.set_linking(i, j, rows[i - 1][j - 1]);
    return m;
}

namespace {

bool integer_token(const std::string& t) {
    std::size_t p = (t.size() > 0 && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
    if (p == t.size()) return false;
    for (; p < t.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(t[p]))) return false;
    return true;
}

LinkingMatrix load_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string first;
    if (!next_content_line(first)) throw invalid_input("matrix text: empty input");
    int n = 0;
    {
        std::istringstream hs(first);
        std::string tok, extra;
        hs >> tok;
        if (!integer_token(tok))
            throw invalid_input("matrix text line " + std::to_string(lineno) +
                                ": expected the matrix size, got '" + tok + "'");
        try {
            n = std::stoi(tok);
        } catch (const std::exception&) {
            throw invalid_input("matrix text line " + std::to_string(lineno) +
                                ": matrix size out of range");
        }
        if (hs >> extra)
            throw invalid_input("matrix text line " + std::to_string(lineno) +
                                ": unexpected '" + extra + "' after the matrix size");
        if (n < 1)
            throw invalid_input("matrix text line " + std::to_string(lineno) +
                                ": matrix size must be positive");
    }

    std::vector<std::vector<Int>> rows;
    std::vector<int> row_line(n);
    for (int i = 0; i < n; ++i) {
        std::string content;
        if (!next_content_line(content))
            throw invalid_input("matrix text: expected " + std::to_string(n) + " rows, found only " +
                                std::to_string(i));
        row_line[i] = lineno;
        std::istringstream rs(content);
        std::vector<Int> row;
        std::string tok;
        while (rs >> tok) {
            if (!integer_token(tok))
                throw invalid_input("matrix text line " + std::to_string(lineno) + ": '" + tok +
                                    "' is not an integer");
            row.emplace_back(tok);
        }
        if (row.size() != std::size_t(n))
            throw invalid_input("matrix text line " + std::to_string(lineno) + ": row " +
                                std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    std::string tail;
    if (next_content_line(tail))
        throw invalid_input("matrix text line " + std::to_string(lineno) +
                            ": unexpected content after the last row");

    // Re-run the structural checks here so the message can carry line numbers.
    for (int i = 0; i < n; ++i) {
        if (rows[i][i] != 0)
            throw invalid_input("matrix text line " + std::to_string(row_line[i]) +
                                ": diagonal entry (" + std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + ") must be 0");
        for (int j = 0; j < i; ++j)
            if (rows[i][j] != rows[j][i]) {
                std::ostringstream msg;
                msg << "matrix text line " << row_line[i] << ": entry (" << i + 1 << "," << j + 1
                    << ") = " << rows[i][j] << " contradicts entry (" << j + 1 << "," << i + 1
                    << ") = " << rows[j][i] << " at line " << row_line[j]
                    << " (matrix must be symmetric)";
                throw invalid_input(msg.str());
            }
    }
    return LinkingMatrix::from_entries(n, rows);
}

Int json_int(const nlohmann::json& v, int i, int j) {
    const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (!integer_token(s))
            throw invalid_input("matrix json: " + where + " string '" + s + "' is not an integer");
        return Int(s);
    }
    throw invalid_input("matrix json: " + where + " must be an integer (or a decimal string)");
}

LinkingMatrix load_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw invalid_input("matrix json: expected an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw invalid_input("matrix json: \"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    const auto& ent = j["entries"];
    if (!ent.is_array() || ent.size() != std::size_t(n))
        throw invalid_input("matrix json: \"entries\" must be an array of " + std::to_string(n) +
                            " rows");
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n; ++i) {
        if (!ent[i].is_array() || ent[i].size() != std::size_t(n))
            throw invalid_input("matrix json: row " + std::to_string(i + 1) + " must be an array of " +
                                std::to_string(n) + " integers");
        std::vector<Int> row;
        for (int c = 0; c < n; ++c) row.push_back(json_int(ent[i][c], i + 1, c + 1));
        rows.push_back(std::move(row));
    }
    return LinkingMatrix::from_entries(n, rows);
}

} // namespace

LinkingMatrix load_linking_matrix(std::istream& in) {
    // Peek past leading whitespace: '{' means JSON, anything else means text.
    int ch;
    while ((ch = in.peek()) != EOF && std::isspace(ch)) in.get();
    if (ch == '{') return load_json(in);
    return load_text(in);
}

LinkingMatrix load_linking_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open matrix file: " + path);
    return load_linking_matrix(in);
}

LinkingMatrix parse_linking_matrix(const std::string& text) {
    std::istringstream in(text);
    return load_linking_matrix(in);
}

std::string to_text(const LinkingMatrix& m) {
    std::ostringstream out;
    out << m.n() << '\n';
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
            if (j > 1) out << ' ';
            out << m.entry(i, j);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace milq
