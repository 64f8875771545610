#ifndef ADJX_SEQ_MINPOLY_HPP
#define ADJX_SEQ_MINPOLY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// One row of the extended Euclidean scheme: s*a + t*b = c.
template <class E>
struct EuclidStep {
    Poly<E> c;
    Poly<E> s;
    Poly<E> t;
};

template <class E>
struct HankelEuclid {
    std::size_t n = 0;
    std::vector<EuclidStep<E>> steps;
    // Degree of the cofactor t at the first remainder of degree < n; equals n
    // exactly when the n x n Hankel matrix is nonsingular.
    std::size_t generator_degree = 0;
    Poly<E> f;
    std::optional<Poly<E>> g;
};

// Extended Euclid on a = x^(2n) and b = sum_k h_k x^(2n-1-k), stopped at the
// first remainder of degree < n. The row whose remainder has degree exactly n
// yields g with H g = e_n, the next row yields the generator f. Leading
// coefficients are only ever inverted, so over a ring the scheme goes through
// as long as every remainder has a unit leading coefficient.
//
// `h` holds 2n values; 2n-1 values are accepted and padded with a zero, which
// leaves g unchanged but makes f meaningless.
template <CommutativeRing R>
HankelEuclid<element_t<R>> euclid_hankel(const R& ring, const Vec<R>& h, bool with_s = false)
{
    using E = element_t<R>;
    const std::size_t n = (h.size() + 1) / 2;
    if (n == 0) {
        throw std::invalid_argument("empty sequence");
    }
    HankelEuclid<E> out;
    out.n = n;

    Poly<E> a(2 * n + 1, ring.zero());
    a.back() = ring.one();
    Poly<E> b(2 * n, ring.zero());
    for (std::size_t k = 0; k < h.size() && k < 2 * n; ++k) {
        b[2 * n - 1 - k] = h[k];
    }
    trim(ring, b);

    out.steps.push_back({a, with_s ? Poly<E>{ring.one()} : Poly<E>{}, {}});
    out.steps.push_back({b, {}, Poly<E>{ring.one()}});
    const long target = static_cast<long>(n);

    auto take_g = [&](const EuclidStep<E>& step) {
        if (degree(step.c) == target) {
            out.g = poly_scale(ring, step.t, ring.inv(step.c.back()));
        }
    };
    take_g(out.steps.back());

    while (degree(out.steps.back().c) >= target) {
        const auto& prev = out.steps[out.steps.size() - 2];
        const auto& cur = out.steps.back();
        auto [q, rem] = poly_divmod(ring, prev.c, cur.c);
        EuclidStep<E> next;
        next.c = std::move(rem);
        next.t = poly_sub(ring, prev.t, poly_mul(ring, q, cur.t));
        if (with_s) {
            next.s = poly_sub(ring, prev.s, poly_mul(ring, q, cur.s));
        }
        out.steps.push_back(std::move(next));
        take_g(out.steps.back());
    }

    const auto& last = out.steps.back();
    out.generator_degree = static_cast<std::size_t>(std::max(0L, degree(last.t)));
    if (out.generator_degree == n) {
        out.f = poly_scale(ring, last.t, ring.inv(last.t.back()));
    }
    return out;
}

// Monic f of degree n with sum_t f_t h_{k+t} = 0 for 0 <= k < n.
template <CommutativeRing R>
Poly<element_t<R>> minpoly(const R& ring, const Vec<R>& h)
{
    if (h.size() % 2 != 0) {
        throw std::invalid_argument("minpoly expects 2n sequence values");
    }
    auto e = euclid_hankel(ring, h);
    if (e.generator_degree < e.n) {
        throw ShortRecurrence(e.generator_degree, e.n);
    }
    return e.f;
}

// g with H g = e_n, H = (h_{i+j}) built from 2n-1 (or 2n) values.
template <CommutativeRing R>
Poly<element_t<R>> hankel_last_column_g(const R& ring, const Vec<R>& h)
{
    auto e = euclid_hankel(ring, h);
    if (!e.g) {
        throw SingularHankel("Hankel matrix of the sequence is singular");
    }
    return *e.g;
}

} // namespace adjx

#endif
