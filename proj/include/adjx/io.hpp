#ifndef ADJX_IO_HPP
#define ADJX_IO_HPP

#include <cstddef>
#include <istream>
#include <string>

#include <gmpxx.h>

#include "adjx/matrix.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// Matrix file: a header "n n", then n rows of n entries. An entry is a
// signed decimal integer or a fraction p/q with q != 0.
Matrix<mpq_class> parse_matrix(std::istream& in);
Matrix<mpq_class> parse_matrix_string(const std::string& text);
Matrix<mpq_class> read_matrix_file(const std::string& path);

// Inverse of parse_matrix; integers are written without a denominator.
std::string render_matrix(const Matrix<mpq_class>& m);

// Parses one entry; throws ParseError.
mpq_class parse_entry(const std::string& token);

template <CommutativeRing R>
MatrixOf<R> convert_matrix(const R& ring, const Matrix<mpq_class>& m)
{
    std::vector<element_t<R>> data;
    data.reserve(m.data().size());
    for (const auto& q : m.data()) {
        data.push_back(ring.from_rational(q));
    }
    return MatrixOf<R>(m.rows(), m.cols(), std::move(data));
}

} // namespace adjx

#endif
