#ifndef ADJX_HANKEL_SIGMA_HPP
#define ADJX_HANKEL_SIGMA_HPP

#include <cstddef>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"
#include "adjx/seq_minpoly.hpp"

namespace adjx
{

// The data that determines H^-1 and H_A^-1 for H = (h_{i+j}) and
// H_A = (h_{i+j+1}): the generator f (monic, degree n), the last column g of
// H^-1 and the last column g_star of H_A^-1.
template <class E>
struct HankelPair {
    std::size_t n = 0;
    Poly<E> f;
    Poly<E> g;
    Poly<E> g_star;
};

template <class E>
struct SigmaSums {
    // sig_H[k] = sigma_k(H^-1), sig_HA[k] = sigma_k(H_A^-1), 0 <= k < 2n.
    std::vector<E> sig_H;
    std::vector<E> sig_HA;
};

enum class HankelWhich { H, HA };

namespace detail
{
template <CommutativeRing R>
const element_t<R>& coeff_or(const Poly<element_t<R>>& p, std::size_t i, const element_t<R>& zero)
{
    return i < p.size() ? p[i] : zero;
}

template <CommutativeRing R>
std::vector<element_t<R>> padded(const R& ring, const Poly<element_t<R>>& p, std::size_t len)
{
    std::vector<element_t<R>> out(len, ring.zero());
    for (std::size_t i = 0; i < p.size() && i < len; ++i) {
        out[i] = p[i];
    }
    return out;
}
} // namespace detail

// Last column of H_A^-1: the first column of H^-1 divided by -f_0, which by
// the companion identity H_A H^-1 = companion(f) gives
//   g* = -(g_0 / f_0) (f_1, ..., f_{n-1}, 1) + (g_1, ..., g_{n-1}, 0).
template <CommutativeRing R>
Poly<element_t<R>> gstar_from_g(const R& ring, const Poly<element_t<R>>& f, const Poly<element_t<R>>& g)
{
    if (f.empty()) {
        throw std::invalid_argument("gstar_from_g: empty generator");
    }
    const std::size_t n = f.size() - 1;
    const auto zero = ring.zero();
    const auto& f0 = detail::coeff_or<R>(f, 0, zero);
    if (!ring.is_unit(f0)) {
        throw NonUnitF0("f(0) = " + ring.to_string(f0) + " is not a unit");
    }
    const auto scale = ring.neg(ring.mul(detail::coeff_or<R>(g, 0, zero), ring.inv(f0)));
    Poly<element_t<R>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& fi = detail::coeff_or<R>(f, i + 1, zero);
        out.push_back(ring.add(ring.mul(scale, fi), detail::coeff_or<R>(g, i + 1, zero)));
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
HankelPair<element_t<R>> hankel_pair(const R& ring, const Vec<R>& h)
{
    auto e = euclid_hankel(ring, h);
    if (e.generator_degree < e.n) {
        throw ShortRecurrence(e.generator_degree, e.n);
    }
    if (!e.g) {
        throw SingularHankel("Hankel matrix of the sequence is singular");
    }
    HankelPair<element_t<R>> pair;
    pair.n = e.n;
    pair.f = std::move(e.f);
    pair.g = std::move(*e.g);
    pair.g_star = gstar_from_g(ring, pair.f, pair.g);
    return pair;
}

// Anti-diagonal sums of H^-1 and H_A^-1 from four truncated products:
//   f' g - g' f                    mod x^n  -> sigma_0 .. sigma_{n-1}
//   rev(g)' rev(f) - rev(f)' rev(g) mod x^n -> sigma_{2n-2} .. sigma_{n-1}
// and likewise with g*. sigma_{2n-1} is the empty sum.
template <CommutativeRing R>
SigmaSums<element_t<R>> sigma_sums(const R& ring, const Poly<element_t<R>>& f, const Poly<element_t<R>>& g,
                                   const Poly<element_t<R>>& g_star, std::size_t n)
{
    using P = Poly<element_t<R>>;
    const P df = poly_derivative(ring, f);
    const P rev_f = poly_reverse(ring, f, n);
    const P drev_f = poly_derivative(ring, rev_f);

    auto sums_for = [&](const P& col) {
        std::vector<element_t<R>> sig(2 * n, ring.zero());
        const P low = poly_sub(ring, poly_mul_trunc(ring, df, col, n),
                               poly_mul_trunc(ring, poly_derivative(ring, col), f, n));
        const P rev_c = poly_reverse(ring, col, n);
        const P high = poly_sub(ring, poly_mul_trunc(ring, poly_derivative(ring, rev_c), rev_f, n),
                                poly_mul_trunc(ring, drev_f, rev_c, n));
        for (std::size_t k = 0; k < n && k < low.size(); ++k) {
            sig[k] = low[k];
        }
        for (std::size_t k = 0; k + 1 < n && k < high.size(); ++k) {
            sig[2 * n - 2 - k] = high[k];
        }
        return sig;
    };
    return {sums_for(g), sums_for(g_star)};
}

// Full inverse from the generator and a last column, as the difference of two
// (triangular Hankel) x (triangular Toeplitz) products:
//   L(f_1..f_{n-1}, 1) T(col) - L(col_1..col_{n-1}, 0) T(f_0..f_{n-1}).
// With col = g this is H^-1, with col = g* it is H_A^-1.
template <CommutativeRing R>
MatrixOf<R> hankel_inverse_structured(const R& ring, const Poly<element_t<R>>& f, const Poly<element_t<R>>& col,
                                      std::size_t n)
{
    const auto fv = detail::padded(ring, f, n + 1);
    const auto cv = detail::padded(ring, col, n + 1);
    auto hankel_upper = [&](const std::vector<element_t<R>>& c, std::size_t shift) {
        auto m = zero_matrix(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j < n; ++j) {
                m(i, j) = c[i + j + shift];
            }
        }
        return m;
    };
    auto toeplitz_upper = [&](const std::vector<element_t<R>>& c) {
        auto m = zero_matrix(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                m(i, j) = c[j - i];
            }
        }
        return m;
    };
    auto cv_trunc = cv;
    cv_trunc[n] = ring.zero();
    return mat_sub(ring, mat_mul(ring, hankel_upper(fv, 1), toeplitz_upper(cv)),
                   mat_mul(ring, hankel_upper(cv_trunc, 1), toeplitz_upper(fv)));
}

template <CommutativeRing R>
MatrixOf<R> hankel_inverse_structured(const R& ring, const HankelPair<element_t<R>>& pair, HankelWhich which)
{
    return hankel_inverse_structured(ring, pair.f, which == HankelWhich::H ? pair.g : pair.g_star, pair.n);
}

} // namespace adjx

#endif
