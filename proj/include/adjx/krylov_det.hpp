#ifndef ADJX_KRYLOV_DET_HPP
#define ADJX_KRYLOV_DET_HPP

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"
#include "adjx/seq_minpoly.hpp"

namespace adjx
{

// Baby steps / giant steps split of the 2n Krylov products:
// s = ceil(sqrt n) giant steps with B = A^r, r = ceil(2n/s) baby steps.
struct BsgsParams {
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t r = 0;

    // With round_r_to_pow2 the baby-step count is lifted to the next power of
    // two so that B = A^r comes out of a pure squaring chain.
    static BsgsParams make(std::size_t n, bool round_r_to_pow2 = false)
    {
        if (n == 0) {
            throw std::invalid_argument("dimension must be positive");
        }
        BsgsParams p;
        p.n = n;
        p.s = 1;
        while (p.s * p.s < n) {
            ++p.s;
        }
        p.r = (2 * n + p.s - 1) / p.s;
        if (round_r_to_pow2) {
            p.r = std::bit_ceil(p.r);
        }
        return p;
    }
    bool r_is_pow2() const noexcept
    {
        return std::has_single_bit(r);
    }
};

template <CommutativeRing R>
struct PowerChain {
    MatrixOf<R> B;
    // A^(2^k) for k = 0..log2 r; only filled when r is a power of two.
    std::vector<MatrixOf<R>> squarings;
};

// B = A^r, by repeated squaring when r is a power of two and by
// square-and-multiply otherwise.
template <CommutativeRing R>
PowerChain<R> matrix_power_chain(const R& ring, const MatrixOf<R>& a, std::size_t r)
{
    if (r == 0) {
        throw std::invalid_argument("matrix_power_chain: r must be >= 1");
    }
    PowerChain<R> out;
    if (std::has_single_bit(r)) {
        out.squarings.push_back(a);
        for (std::size_t e = 1; e < r; e *= 2) {
            out.squarings.push_back(mat_mul(ring, out.squarings.back(), out.squarings.back()));
        }
        out.B = out.squarings.back();
        return out;
    }
    std::optional<MatrixOf<R>> acc;
    MatrixOf<R> base = a;
    for (std::size_t e = r;;) {
        if (e & 1U) {
            acc = acc ? mat_mul(ring, *acc, base) : base;
        }
        e >>= 1U;
        if (e == 0) {
            break;
        }
        base = mat_mul(ring, base, base);
    }
    out.B = std::move(*acc);
    return out;
}

// Everything the Det algorithm computes, kept for the reverse pass.
template <CommutativeRing R>
struct DetTrace {
    BsgsParams params;
    MatrixOf<R> A;
    Vec<R> u; // 1 x n
    Vec<R> v; // n x 1
    std::vector<Vec<R>> v_list; // v_i = A^i v, i < r
    MatrixOf<R> B;
    std::vector<MatrixOf<R>> squaring_chain;
    std::vector<Vec<R>> u_list; // u_j = u B^j, j < s
    Vec<R> h;                   // h_k, k < 2n
    Poly<element_t<R>> f;
    element_t<R> det{};

    bool complete() const
    {
        const auto n = params.n;
        return n > 0 && A.rows() == n && A.cols() == n && u.size() == n && v.size() == n
            && v_list.size() == params.r && u_list.size() == params.s && B.rows() == n && h.size() == 2 * n
            && f.size() == n + 1;
    }
};

struct DetOptions {
    bool round_r_to_pow2 = false;
};

// The Det algorithm on (A, u, v). Throws DegenerateProjection when the sequence
// h_k has a generator of degree < n, i.e. when H is singular.
template <CommutativeRing R>
DetTrace<R> det_with_trace(const R& ring, const MatrixOf<R>& a, const Vec<R>& u, const Vec<R>& v,
                           DetOptions options = {})
{
    if (!a.square() || u.size() != a.rows() || v.size() != a.rows()) {
        throw std::invalid_argument("det_with_trace: shape mismatch");
    }
    DetTrace<R> t;
    t.params = BsgsParams::make(a.rows(), options.round_r_to_pow2);
    const auto [n, s, r] = t.params;
    t.A = a;
    t.u = u;
    t.v = v;

    // step i
    t.v_list.reserve(r);
    t.v_list.push_back(v);
    for (std::size_t i = 1; i < r; ++i) {
        t.v_list.push_back(mat_vec(ring, a, t.v_list.back()));
    }
    // step ii
    auto chain = matrix_power_chain(ring, a, r);
    t.B = std::move(chain.B);
    t.squaring_chain = std::move(chain.squarings);
    // step iii
    t.u_list.reserve(s);
    t.u_list.push_back(u);
    for (std::size_t j = 1; j < s; ++j) {
        t.u_list.push_back(vec_mat(ring, t.u_list.back(), t.B));
    }
    // step iv; products with i + jr >= 2n are never used
    t.h.assign(2 * n, ring.zero());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (i + j * r < 2 * n) {
                t.h[i + j * r] = dot(ring, t.u_list[j], t.v_list[i]);
            }
        }
    }
    // step v
    try {
        t.f = minpoly(ring, t.h);
    } catch (const ShortRecurrence& e) {
        throw DegenerateProjection(e.degree(), 1);
    }
    t.det = n % 2 == 0 ? t.f[0] : ring.neg(t.f[0]);
    return t;
}

template <CommutativeRing R>
std::pair<Vec<R>, Vec<R>> choose_projections(const R& ring, std::size_t n, std::mt19937_64& rng)
{
    Vec<R> u, v;
    u.reserve(n);
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        u.push_back(ring.random(rng));
    }
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(ring.random(rng));
    }
    return {std::move(u), std::move(v)};
}

template <CommutativeRing R>
std::pair<Vec<R>, Vec<R>> choose_projections(const R& ring, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return choose_projections(ring, n, rng);
}

inline constexpr std::size_t default_projection_retries = 8;

// Det with random projections drawn from one seeded stream, retried on
// DegenerateProjection. Exhausting the budget rethrows the last failure.
template <CommutativeRing R>
DetTrace<R> det_randomized(const R& ring, const MatrixOf<R>& a, std::uint64_t seed,
                           std::size_t retries = default_projection_retries, DetOptions options = {})
{
    std::mt19937_64 rng(seed);
    std::size_t last_degree = 0;
    for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
        auto [u, v] = choose_projections(ring, a.rows(), rng);
        try {
            return det_with_trace(ring, a, u, v, options);
        } catch (const DegenerateProjection& e) {
            last_degree = e.degree();
        }
    }
    throw DegenerateProjection(last_degree, retries);
}

} // namespace adjx

#endif
