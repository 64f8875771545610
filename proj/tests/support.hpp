#ifndef ADJX_TESTS_SUPPORT_HPP
#define ADJX_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "adjx/io.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"
#include "adjx/rings.hpp"

namespace adjx::test
{

inline mpq_class q(const std::string& text)
{
    return parse_entry(text);
}

template <CommutativeRing R>
Vec<R> ints(const R& ring, std::initializer_list<long> xs)
{
    Vec<R> out;
    for (long x : xs) {
        out.push_back(ring.from_int(x));
    }
    return out;
}

template <CommutativeRing R>
Vec<R> rationals(const R& ring, std::initializer_list<const char*> xs)
{
    Vec<R> out;
    for (const char* x : xs) {
        out.push_back(ring.from_rational(q(x)));
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> mat(const R& ring, const std::vector<std::vector<long>>& rows)
{
    return from_int_rows(ring, rows);
}

template <CommutativeRing R>
bool vec_equal(const R& ring, const Vec<R>& a, const Vec<R>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!ring.equal(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

// A adj = adj A = det I.
template <CommutativeRing R>
bool is_adjugate(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& adj, const element_t<R>& det)
{
    return is_scalar_matrix(ring, mat_mul(ring, a, adj), det) && is_scalar_matrix(ring, mat_mul(ring, adj, a), det);
}

template <CommutativeRing R>
MatrixOf<R> random_small(const R& ring, std::size_t n, std::mt19937_64& rng, long lo = -9, long hi = 9)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    MatrixOf<R> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = ring.from_int(dist(rng));
        }
    }
    return m;
}

inline MatrixOf<RationalRing> random_rational(const RationalRing& ring, std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    MatrixOf<RationalRing> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class x(num(rng), den(rng));
            x.canonicalize();
            m(i, j) = x;
        }
    }
    return m;
}

template <CommutativeRing R>
Vec<R> random_vec(const R& ring, std::size_t n, std::mt19937_64& rng)
{
    Vec<R> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(ring.random(rng));
    }
    return out;
}

} // namespace adjx::test

#endif
