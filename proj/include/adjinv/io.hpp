#pragma once

/**
 * @file io.hpp
 * @brief Matrix file reader and exact / decimal / JSON formatting.
 *
 * Matrix file format:
 *
 *     # comment
 *     m n
 *     a11 a12 ... a1n
 *     ...
 *     am1 am2 ... amn
 *
 * '#' starts a comment to end of line, blank lines are ignored, and every
 * entry is a scalar token (see parse_scalar). Plain matrix output uses the
 * same format, so it can be fed back in.
 */

#include <gmpxx.h>
#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "adjinv/errors.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/scalar.hpp"

namespace adjinv {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  ///< 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline std::size_t parse_dimension(const Token& tok, std::size_t line) {
    std::size_t value = 0;
    if (tok.text.empty() || tok.text.size() > 9) throw ParseError("bad dimension '" + std::string(tok.text) + "'", 0, line, tok.column);
    for (std::size_t k = 0; k < tok.text.size(); ++k) {
        char c = tok.text[k];
        if (c < '0' || c > '9')
            throw ParseError("bad dimension '" + std::string(tok.text) + "'", k, line, tok.column + k);
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value == 0) throw ParseError("dimensions must be positive", 0, line, tok.column);
    return value;
}

inline Scalar parse_token(const Token& tok, std::size_t line) {
    try {
        return parse_scalar(tok.text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), e.offset(), line, tok.column + e.offset());
    }
}

}  // namespace detail

/// Parse matrix-file text. Errors carry 1-based line and column.
inline Matrix parse_matrix(std::string_view text) {
    std::size_t m = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Scalar> entries;
    std::size_t rows_read = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 2)
                throw ParseError("header must be 'rows cols'", 0, line_no, tokens.front().column);
            m = detail::parse_dimension(tokens[0], line_no);
            n = detail::parse_dimension(tokens[1], line_no);
            have_header = true;
            entries.reserve(m * n);
        } else {
            if (rows_read == m)
                throw ParseError("more than " + std::to_string(m) + " data rows", 0, line_no, tokens.front().column);
            if (tokens.size() != n) {
                std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
                throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n),
                                 0, line_no, col);
            }
            for (const auto& tok : tokens) entries.push_back(detail::parse_token(tok, line_no));
            ++rows_read;
        }
        if (eol == text.size()) break;
    }
    if (!have_header) throw ParseError("missing 'rows cols' header", 0, line_no, 1);
    if (rows_read != m)
        throw ParseError("expected " + std::to_string(m) + " data rows, found " + std::to_string(rows_read), 0, line_no,
                         1);
    return Matrix(m, n, std::move(entries));
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

/// Whitespace-separated scalars as a column vector.
inline Matrix parse_vector(std::string_view text) {
    auto tokens = detail::split_tokens(text);
    if (tokens.empty()) throw ParseError("empty vector", 0);
    std::vector<Scalar> values;
    values.reserve(tokens.size());
    for (const auto& tok : tokens) {
        try {
            values.push_back(parse_scalar(tok.text));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), tok.column - 1 + e.offset());
        }
    }
    const std::size_t n = values.size();
    return Matrix(n, 1, std::move(values));
}

struct OutputFormat {
    enum class Mode { rational, decimal };
    enum class Layout { plain, json };

    Mode mode = Mode::rational;
    unsigned digits = 6;  ///< fractional digits in decimal mode
    Layout layout = Layout::plain;

    static OutputFormat decimal(unsigned digits) { return {Mode::decimal, digits, Layout::plain}; }
};

/**
 * q rounded to `digits` fractional digits, ties to even. Trailing zeros and a
 * bare trailing point are dropped, so 0 prints as "0" and 1/2 as "0.5".
 */
inline std::string format_decimal(const mpq_class& q, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = abs(q.get_num()) * scale;
    const mpz_class& den = q.get_den();
    mpz_class quot;
    mpz_class rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int cmp_half = cmp(mpz_class(2 * rem), den);
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

    std::string s = quot.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (sgn(q) < 0 && s != "0") s.insert(0, "-");
    return s;
}

inline std::string format_scalar(const Scalar& s, const OutputFormat& fmt = {}) {
    if (fmt.mode == OutputFormat::Mode::rational) return to_string(s);
    std::string re = format_decimal(s.real(), fmt.digits);
    if (s.is_real()) return re;
    std::string im = format_decimal(s.imag(), fmt.digits);
    if (im == "0") return re;
    if (re == "0") return im + "i";
    if (im[0] != '-') im.insert(0, "+");
    return re + im + "i";
}

/// {"rows": m, "cols": n, "entries": [[...], ...]} with string entries.
inline nlohmann::ordered_json matrix_json(const Matrix& a, const OutputFormat& fmt = {}) {
    nlohmann::ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(format_scalar(a(i, k), fmt));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

/// Matrix in file format (plain) or as JSON.
inline std::string format_output(const Matrix& a, const OutputFormat& fmt = {}) {
    if (fmt.layout == OutputFormat::Layout::json) return matrix_json(a, fmt).dump() + "\n";
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (k) out += ' ';
            out += format_scalar(a(i, k), fmt);
        }
        out += '\n';
    }
    return out;
}

inline std::string format_output(const Scalar& s, const OutputFormat& fmt = {}) {
    if (fmt.layout == OutputFormat::Layout::json) return nlohmann::ordered_json(format_scalar(s, fmt)).dump() + "\n";
    return format_scalar(s, fmt) + "\n";
}

/// Vector as a tuple, "(x1, x2, ..., xn)".
inline std::string format_tuple(const Matrix& v, const OutputFormat& fmt = {}) {
    std::string out = "(";
    const auto entries = v.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k) out += ", ";
        out += format_scalar(entries[k], fmt);
    }
    return out + ")";
}

}  // namespace adjinv
