#include "adjx/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "adjx/error.hpp"

namespace adjx
{

namespace
{

bool is_digits(const std::string& s, std::size_t from, std::size_t to)
{
    if (from >= to) {
        return false;
    }
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::size_t parse_dimension(const std::string& token)
{
    if (!is_digits(token, 0, token.size()) || token.size() > 6) {
        throw ParseError("bad matrix dimension '" + token + "'");
    }
    const auto n = std::stoul(token);
    if (n == 0) {
        throw ParseError("matrix dimension must be positive");
    }
    return n;
}

} // namespace

mpq_class parse_entry(const std::string& token)
{
    const std::size_t start = !token.empty() && (token[0] == '-' || token[0] == '+') ? 1 : 0;
    const auto slash = token.find('/');
    const std::size_t num_end = slash == std::string::npos ? token.size() : slash;
    if (!is_digits(token, start, num_end)) {
        throw ParseError("bad matrix entry '" + token + "'");
    }
    mpz_class num(token.substr(start, num_end - start), 10);
    if (token[0] == '-') {
        num = -num;
    }
    mpz_class den = 1;
    if (slash != std::string::npos) {
        if (!is_digits(token, slash + 1, token.size())) {
            throw ParseError("bad matrix entry '" + token + "'");
        }
        den = mpz_class(token.substr(slash + 1), 10);
        if (den == 0) {
            throw ParseError("zero denominator in '" + token + "'");
        }
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Matrix<mpq_class> parse_matrix(std::istream& in)
{
    std::string rows_tok, cols_tok;
    if (!(in >> rows_tok >> cols_tok)) {
        throw ParseError("missing 'n n' header");
    }
    const auto n = parse_dimension(rows_tok);
    if (parse_dimension(cols_tok) != n) {
        throw ParseError("matrix must be square, header is '" + rows_tok + " " + cols_tok + "'");
    }
    std::vector<mpq_class> data;
    data.reserve(n * n);
    std::string token;
    while (in >> token) {
        if (data.size() == n * n) {
            throw ParseError("more than " + std::to_string(n * n) + " entries");
        }
        data.push_back(parse_entry(token));
    }
    if (data.size() != n * n) {
        throw ParseError("expected " + std::to_string(n * n) + " entries, found " + std::to_string(data.size()));
    }
    return Matrix<mpq_class>(n, n, std::move(data));
}

Matrix<mpq_class> parse_matrix_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_matrix(in);
}

Matrix<mpq_class> read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return parse_matrix(in);
}

std::string render_matrix(const Matrix<mpq_class>& m)
{
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += (j ? " " : "") + m(i, j).get_str();
        }
        out += "\n";
    }
    return out;
}

} // namespace adjx
