#ifndef ADJX_ORACLE_HPP
#define ADJX_ORACLE_HPP

// Brute-force references for tests and for the CLI check command. Nothing in
// here calls into the Krylov, Hankel or adjoint modules.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"
#include "adjx/rings.hpp"

namespace adjx::oracle
{

// Determinant by Laplace expansion along the rows, memoized over the set of
// remaining columns: O(2^n n) ring operations, no division.
template <CommutativeRing R>
element_t<R> det_laplace(const R& ring, const MatrixOf<R>& m)
{
    const std::size_t n = m.rows();
    if (!m.square()) {
        throw std::invalid_argument("det_laplace: matrix is not square");
    }
    if (n == 0) {
        return ring.one();
    }
    if (n > 24) {
        throw std::invalid_argument("det_laplace: dimension too large");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // d[mask] = det of the last popcount(mask) rows restricted to columns in mask
    std::vector<element_t<R>> d(std::size_t{1} << n, ring.zero());
    d[0] = ring.one();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        std::optional<element_t<R>> acc;
        std::size_t position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) {
                continue;
            }
            const auto& sub = d[mask & ~(std::uint32_t{1} << j)];
            auto term = ring.mul(m(row, j), sub);
            if (!acc) {
                acc = position % 2 == 0 ? term : ring.neg(term);
            } else {
                acc = position % 2 == 0 ? ring.add(*acc, term) : ring.sub(*acc, term);
            }
            ++position;
        }
        d[mask] = std::move(*acc);
        if (mask == full) {
            break;
        }
    }
    return d[full];
}

template <CommutativeRing R>
MatrixOf<R> minor_matrix(const MatrixOf<R>& m, std::size_t drop_row, std::size_t drop_col)
{
    std::vector<element_t<R>> data;
    data.reserve((m.rows() - 1) * (m.cols() - 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != drop_row && j != drop_col) {
                data.push_back(m(i, j));
            }
        }
    }
    return MatrixOf<R>(m.rows() - 1, m.cols() - 1, std::move(data));
}

// Classical adjugate: adj(i, j) = (-1)^(i+j) det(minor(j, i)). Defined for
// singular matrices as well.
template <CommutativeRing R>
MatrixOf<R> adjugate_cofactor(const R& ring, const MatrixOf<R>& m)
{
    const std::size_t n = m.rows();
    auto out = zero_matrix(ring, n, n);
    if (n == 1) {
        out(0, 0) = ring.one();
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto c = det_laplace(ring, minor_matrix<R>(m, j, i));
            out(i, j) = (i + j) % 2 == 0 ? c : ring.neg(c);
        }
    }
    return out;
}

// Gaussian elimination with unit pivots. Suitable for fields and for rings
// whose nonzero pivots happen to be units (dual numbers over a field).
template <CommutativeRing R>
element_t<R> det_elimination(const R& ring, MatrixOf<R> m)
{
    const std::size_t n = m.rows();
    auto det = ring.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !ring.is_unit(m(p, c))) {
            ++p;
        }
        if (p == n) {
            for (std::size_t i = c; i < n; ++i) {
                if (!ring.is_zero(m(i, c))) {
                    throw NonUnit("det_elimination: column without a unit pivot");
                }
            }
            return ring.zero();
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            det = ring.neg(det);
        }
        det = ring.mul(det, m(c, c));
        const auto piv_inv = ring.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (ring.is_zero(m(i, c))) {
                continue;
            }
            const auto factor = ring.mul(m(i, c), piv_inv);
            for (std::size_t j = c; j < n; ++j) {
                m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(c, j)));
            }
        }
    }
    return det;
}

// Fraction-free (Bareiss) elimination over the integers.
inline mpz_class det_bareiss(MatrixOf<IntegerRing> m)
{
    const IntegerRing ring;
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(k, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = ring.exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Solves M X = RHS by Gauss-Jordan elimination over a field.
template <CommutativeRing R>
MatrixOf<R> solve_elimination(const R& ring, MatrixOf<R> m, MatrixOf<R> rhs)
{
    const std::size_t n = m.rows();
    const std::size_t k = rhs.cols();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && ring.is_zero(m(p, c))) {
            ++p;
        }
        if (p == n) {
            throw SingularInput("solve_elimination: singular matrix");
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(rhs(p, j), rhs(c, j));
            }
        }
        const auto piv_inv = ring.inv(m(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = ring.mul(m(c, j), piv_inv);
        }
        for (std::size_t j = 0; j < k; ++j) {
            rhs(c, j) = ring.mul(rhs(c, j), piv_inv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || ring.is_zero(m(i, c))) {
                continue;
            }
            const auto factor = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(c, j)));
            }
            for (std::size_t j = 0; j < k; ++j) {
                rhs(i, j) = ring.sub(rhs(i, j), ring.mul(factor, rhs(c, j)));
            }
        }
    }
    return rhs;
}

template <CommutativeRing R>
MatrixOf<R> inverse_elimination(const R& ring, const MatrixOf<R>& m)
{
    return solve_elimination(ring, m, identity_matrix(ring, m.rows()));
}

template <CommutativeRing R>
std::size_t rank_elimination(const R& ring, MatrixOf<R> m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && ring.is_zero(m(p, c))) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(p, j), m(rank, j));
        }
        const auto piv_inv = ring.inv(m(rank, c));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const auto factor = ring.mul(m(i, c), piv_inv);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

// (h_{i+j+shift}) for 0 <= i, j < n.
template <CommutativeRing R>
MatrixOf<R> hankel_matrix(const R& ring, const Vec<R>& h, std::size_t n, std::size_t shift = 0)
{
    auto m = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = h.at(i + j + shift);
        }
    }
    return m;
}

// sigma_k(M) = sum of m_ij with i + j = k (0-based), k = 0 .. 2n-1.
template <CommutativeRing R>
Vec<R> anti_diagonal_sums(const R& ring, const MatrixOf<R>& m)
{
    const std::size_t n = m.rows();
    Vec<R> out(2 * n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i + j] = ring.add(out[i + j], m(i, j));
        }
    }
    return out;
}

// Monic f of degree n solving H (f_0..f_{n-1})^T = -(h_n..h_{2n-1})^T.
template <CommutativeRing R>
Poly<element_t<R>> minpoly_elimination(const R& ring, const Vec<R>& h)
{
    const std::size_t n = h.size() / 2;
    MatrixOf<R> rhs(n, 1, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        rhs(i, 0) = ring.neg(h[n + i]);
    }
    auto x = solve_elimination(ring, hankel_matrix(ring, h, n), rhs);
    Poly<element_t<R>> f = x.col(0);
    f.push_back(ring.one());
    return f;
}

// g with H g = e_n.
template <CommutativeRing R>
Poly<element_t<R>> hankel_last_column_elimination(const R& ring, const Vec<R>& h, std::size_t n)
{
    MatrixOf<R> rhs(n, 1, ring.zero());
    rhs(n - 1, 0) = ring.one();
    auto g = solve_elimination(ring, hankel_matrix(ring, h, n), rhs).col(0);
    trim(ring, g);
    return g;
}

template <CommutativeRing R>
struct KrylovMatrices {
    MatrixOf<R> Ku_tilde; // rows u, uA, ..., uA^(n-1)
    MatrixOf<R> Kv;       // columns v, Av, ..., A^(n-1) v
    MatrixOf<R> H;
    MatrixOf<R> H_A;
    std::size_t rank_Ku = 0;
    std::size_t rank_Kv = 0;
    // H = Ku_tilde Kv and H_A = Ku_tilde A Kv, checked against powers of A
    bool verdict = false;
};

// H and H_A are built from u A^k v with explicit powers of A, independently
// of the baby-step/giant-step schedule.
template <CommutativeRing R>
KrylovMatrices<R> krylov_check(const R& ring, const MatrixOf<R>& a, const Vec<R>& u, const Vec<R>& v)
{
    const std::size_t n = a.rows();
    KrylovMatrices<R> out;
    out.Ku_tilde = zero_matrix(ring, n, n);
    out.Kv = zero_matrix(ring, n, n);
    Vec<R> ur = u, vc = v;
    for (std::size_t k = 0; k < n; ++k) {
        out.Ku_tilde.set_row(k, ur);
        out.Kv.set_col(k, vc);
        ur = vec_mat(ring, ur, a);
        vc = mat_vec(ring, a, vc);
    }
    Vec<R> h;
    auto power = identity_matrix(ring, n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        h.push_back(dot(ring, u, mat_vec(ring, power, v)));
        power = mat_mul(ring, power, a);
    }
    out.H = hankel_matrix(ring, h, n);
    out.H_A = hankel_matrix(ring, h, n, 1);
    out.rank_Ku = rank_elimination(ring, out.Ku_tilde);
    out.rank_Kv = rank_elimination(ring, out.Kv);
    out.verdict = mat_equal(ring, mat_mul(ring, out.Ku_tilde, out.Kv), out.H)
        && mat_equal(ring, mat_mul(ring, mat_mul(ring, out.Ku_tilde, a), out.Kv), out.H_A);
    return out;
}

} // namespace adjx::oracle

#endif
