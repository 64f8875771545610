#ifndef ADJX_ADJOINT_HPP
#define ADJX_ADJOINT_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <utility>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/hankel_sigma.hpp"
#include "adjx/krylov_det.hpp"
#include "adjx/matrix.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// Derivative accumulators of the reverse pass. Derivative vectors use the
// transposed layout: the columns of dU are the derivatives of the rows u_j,
// the rows of dV are the derivatives of the columns v_i.
template <CommutativeRing R>
struct AdjointState {
    MatrixOf<R> dH;     // r x s, dH(i, j) = d Delta / d h_{i + j r}
    MatrixOf<R> dU;     // n x s
    MatrixOf<R> dV;     // r x n
    MatrixOf<R> dB;     // n x n
    MatrixOf<R> A_star; // n x n

    static AdjointState zero(const R& ring, const BsgsParams& p)
    {
        return {zero_matrix(ring, p.r, p.s), zero_matrix(ring, p.n, p.s), zero_matrix(ring, p.r, p.n),
                zero_matrix(ring, p.n, p.n), zero_matrix(ring, p.n, p.n)};
    }
};

enum class Step4Strategy {
    automatic, // squaring recursion when r is a power of two, else the sum
    sum,
    squaring,
};

struct AdjointOptions {
    Step4Strategy strategy = Step4Strategy::automatic;
    // Omit the det factor in step i*, which turns the output into A^-1.
    bool inverse = false;
    unsigned threads = 1;
};

// step i*: dDelta/dh_k = (sigma_{k-1}(H_A^-1) - sigma_k(H^-1)) * det.
template <CommutativeRing R>
MatrixOf<R> step1_dh(const R& ring, const DetTrace<R>& trace, bool inverse = false)
{
    const auto& p = trace.params;
    const auto pair = hankel_pair(ring, trace.h);
    const auto sig = sigma_sums(ring, pair.f, pair.g, pair.g_star, p.n);
    auto dh = zero_matrix(ring, p.r, p.s);
    for (std::size_t i = 0; i < p.r; ++i) {
        for (std::size_t j = 0; j < p.s; ++j) {
            const std::size_t k = i + j * p.r;
            if (k >= 2 * p.n) {
                continue;
            }
            auto d = k == 0 ? ring.neg(sig.sig_H[0]) : ring.sub(sig.sig_HA[k - 1], sig.sig_H[k]);
            dh(i, j) = inverse ? std::move(d) : ring.mul(d, trace.det);
        }
    }
    return dh;
}

// step ii*: dU = V dH, dV = dH U.
template <CommutativeRing R>
std::pair<MatrixOf<R>, MatrixOf<R>> step2_outer(const R& ring, const DetTrace<R>& trace, const MatrixOf<R>& dh)
{
    const auto& p = trace.params;
    if (dh.rows() != p.r || dh.cols() != p.s) {
        throw std::invalid_argument("step2_outer: dH must be r x s");
    }
    auto du = zero_matrix(ring, p.n, p.s);
    for (std::size_t l = 0; l < p.n; ++l) {
        for (std::size_t j = 0; j < p.s; ++j) {
            du(l, j) = dot_with(ring, p.r, [&](std::size_t i) -> const auto& { return trace.v_list[i][l]; },
                                [&](std::size_t i) -> const auto& { return dh(i, j); });
        }
    }
    auto dv = zero_matrix(ring, p.r, p.n);
    for (std::size_t i = 0; i < p.r; ++i) {
        for (std::size_t l = 0; l < p.n; ++l) {
            dv(i, l) = dot_with(ring, p.s, [&](std::size_t j) -> const auto& { return dh(i, j); },
                                [&](std::size_t j) -> const auto& { return trace.u_list[j][l]; });
        }
    }
    return {std::move(du), std::move(dv)};
}

// step iii*: for j = s-1 .. 1, du_{j-1} += B du_j and dB += du_j u_{j-1}.
template <CommutativeRing R>
void step3_giant_reverse(const R& ring, const DetTrace<R>& trace, AdjointState<R>& state)
{
    for (std::size_t j = trace.params.s; j-- > 1;) {
        const auto du_j = state.dU.col(j);
        state.dU.set_col(j - 1, vec_add(ring, state.dU.col(j - 1), mat_vec(ring, trace.B, du_j)));
        add_outer(ring, state.dB, du_j, trace.u_list[j - 1]);
    }
}

// sum_{k=1..r} A^(r-k) dB A^(k-1).
// One worker uses T_m = A T_(m-1) + dB A^(m-1), T_1 = dB, so every product has
// A as one factor. Several workers split the r terms, which only share
// read-only powers of A, and the partial sums are added in a fixed order.
template <CommutativeRing R>
MatrixOf<R> power_reverse_sum(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& db, std::size_t r,
                              unsigned threads = 1)
{
    if (r == 0) {
        throw std::invalid_argument("power_reverse_sum: r must be >= 1");
    }
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, r);
    if (workers == 1) {
        MatrixOf<R> t = db;
        MatrixOf<R> tail = db; // dB A^(m-1)
        for (std::size_t m = 2; m <= r; ++m) {
            tail = mat_mul(ring, tail, a);
            t = mat_add(ring, mat_mul(ring, a, t), tail);
        }
        return t;
    }
    // powers[k] = A^k for 1 <= k < r; A^0 products are skipped
    std::vector<MatrixOf<R>> powers(r);
    if (r > 1) {
        powers[1] = a;
    }
    for (std::size_t k = 2; k < r; ++k) {
        powers[k] = mat_mul(ring, powers[k - 1], a);
    }
    auto term = [&](std::size_t k) {
        const std::size_t left = r - k, right = k - 1;
        MatrixOf<R> t = left == 0 ? db : mat_mul(ring, powers[left], db);
        return right == 0 ? t : mat_mul(ring, t, powers[right]);
    };
    auto partial = [&](std::size_t lo, std::size_t hi) {
        MatrixOf<R> acc = term(lo);
        for (std::size_t k = lo + 1; k < hi; ++k) {
            acc = mat_add(ring, acc, term(k));
        }
        return acc;
    };
    std::vector<std::future<MatrixOf<R>>> jobs;
    const std::size_t chunk = (r + workers - 1) / workers;
    for (std::size_t lo = 1; lo <= r; lo += chunk) {
        jobs.push_back(std::async(std::launch::async, partial, lo, std::min(lo + chunk, r + 1)));
    }
    MatrixOf<R> acc = jobs.front().get();
    for (std::size_t w = 1; w < jobs.size(); ++w) {
        acc = mat_add(ring, acc, jobs[w].get());
    }
    return acc;
}

// Reverse of the squaring chain A_{2^k} = A_{2^(k-1)}^2:
//   dA_{2^(k-1)} = A_{2^(k-1)} dA_{2^k} + dA_{2^k} A_{2^(k-1)}, k = log2 r .. 1.
template <CommutativeRing R>
MatrixOf<R> power_reverse_squaring(const R& ring, const std::vector<MatrixOf<R>>& chain, const MatrixOf<R>& db)
{
    if (chain.empty()) {
        throw IncompleteTrace("squaring chain is empty; r is not a power of two");
    }
    MatrixOf<R> d = db;
    for (std::size_t k = chain.size() - 1; k >= 1; --k) {
        d = mat_add(ring, mat_mul(ring, chain[k - 1], d), mat_mul(ring, d, chain[k - 1]));
    }
    return d;
}

inline bool use_squaring(Step4Strategy strategy, bool r_is_pow2)
{
    switch (strategy) {
    case Step4Strategy::sum:
        return false;
    case Step4Strategy::squaring:
        if (!r_is_pow2) {
            throw IncompleteTrace("squaring strategy requested but r is not a power of two");
        }
        return true;
    case Step4Strategy::automatic:
        break;
    }
    return r_is_pow2;
}

// step iv*: dA = sum_{k=1..r} A^(r-k) dB A^(k-1), or its squaring form.
template <CommutativeRing R>
MatrixOf<R> step4_power_reverse(const R& ring, const DetTrace<R>& trace, const MatrixOf<R>& db,
                                Step4Strategy strategy = Step4Strategy::automatic, unsigned threads = 1)
{
    const bool squaring = use_squaring(strategy, trace.params.r_is_pow2() && !trace.squaring_chain.empty());
    if (squaring) {
        return power_reverse_squaring(ring, trace.squaring_chain, db);
    }
    return power_reverse_sum(ring, trace.A, db, trace.params.r, threads);
}

// step v*: for i = r-1 .. 1, dv_{i-1} += dv_i A and acc += v_{i-1} dv_i.
template <CommutativeRing R>
void step5_baby_reverse(const R& ring, const DetTrace<R>& trace, MatrixOf<R>& dv, MatrixOf<R>& acc)
{
    for (std::size_t i = trace.params.r; i-- > 1;) {
        const auto dv_i = dv.row(i);
        dv.set_row(i - 1, vec_add(ring, dv.row(i - 1), vec_mat(ring, dv_i, trace.A)));
        add_outer(ring, acc, trace.v_list[i - 1], dv_i);
    }
}

template <CommutativeRing R>
MatrixOf<R> step5_baby_reverse(const R& ring, const DetTrace<R>& trace, AdjointState<R>& state)
{
    step5_baby_reverse(ring, trace, state.dV, state.A_star);
    return state.A_star;
}

// Algorithm Adjoint: steps i* to v* over the intermediates of one Det run.
// A must be nonsingular; with options.inverse the result is A^-1.
template <CommutativeRing R>
MatrixOf<R> adjoint(const R& ring, const DetTrace<R>& trace, AdjointOptions options = {})
{
    if (!trace.complete()) {
        throw IncompleteTrace("adjoint needs a complete Det trace");
    }
    if (ring.is_zero(trace.det)) {
        throw SingularInput("matrix is singular (det = 0)");
    }
    if (options.inverse && !ring.is_unit(trace.det)) {
        throw SingularInput("det = " + ring.to_string(trace.det) + " is not a unit; no inverse");
    }
    auto state = AdjointState<R>::zero(ring, trace.params);
    state.dH = step1_dh(ring, trace, options.inverse);
    std::tie(state.dU, state.dV) = step2_outer(ring, trace, state.dH);
    step3_giant_reverse(ring, trace, state);
    state.A_star = step4_power_reverse(ring, trace, state.dB, options.strategy, options.threads);
    return step5_baby_reverse(ring, trace, state);
}

} // namespace adjx

#endif
