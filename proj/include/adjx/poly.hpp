#ifndef ADJX_POLY_HPP
#define ADJX_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// Dense univariate polynomial, lowest degree first. A normalized polynomial
// has no trailing zero coefficient; the zero polynomial is empty.
template <class E>
using Poly = std::vector<E>;

template <CommutativeRing R>
void trim(const R& ring, Poly<element_t<R>>& p)
{
    while (!p.empty() && ring.is_zero(p.back())) {
        p.pop_back();
    }
}

// -1 stands for the degree of the zero polynomial.
template <class E>
long degree(const Poly<E>& p) noexcept
{
    return static_cast<long>(p.size()) - 1;
}

template <CommutativeRing R>
Poly<element_t<R>> poly_add(const R& ring, const Poly<element_t<R>>& a, const Poly<element_t<R>>& b)
{
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    Poly<element_t<R>> out(big);
    for (std::size_t i = 0; i < small.size(); ++i) {
        out[i] = ring.add(a[i], b[i]);
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
Poly<element_t<R>> poly_sub(const R& ring, const Poly<element_t<R>>& a, const Poly<element_t<R>>& b)
{
    Poly<element_t<R>> out(std::max(a.size(), b.size()), ring.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size() && i < b.size()) {
            out[i] = ring.sub(a[i], b[i]);
        } else if (i < a.size()) {
            out[i] = a[i];
        } else {
            out[i] = ring.neg(b[i]);
        }
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
Poly<element_t<R>> poly_scale(const R& ring, const Poly<element_t<R>>& a, const element_t<R>& c)
{
    Poly<element_t<R>> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        out.push_back(ring.mul(x, c));
    }
    trim(ring, out);
    return out;
}

// Schoolbook product truncated to its first `len` coefficients.
template <CommutativeRing R>
Poly<element_t<R>> poly_mul_trunc(const R& ring, const Poly<element_t<R>>& a, const Poly<element_t<R>>& b,
                                  std::size_t len)
{
    if (a.empty() || b.empty() || len == 0) {
        return {};
    }
    const std::size_t out_len = std::min(len, a.size() + b.size() - 1);
    Poly<element_t<R>> out;
    out.reserve(out_len);
    for (std::size_t k = 0; k < out_len; ++k) {
        const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
        const std::size_t hi = std::min(k, a.size() - 1);
        auto acc = ring.mul(a[lo], b[k - lo]);
        for (std::size_t i = lo + 1; i <= hi; ++i) {
            acc = ring.add(acc, ring.mul(a[i], b[k - i]));
        }
        out.push_back(std::move(acc));
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
Poly<element_t<R>> poly_mul(const R& ring, const Poly<element_t<R>>& a, const Poly<element_t<R>>& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    return poly_mul_trunc(ring, a, b, a.size() + b.size() - 1);
}

template <CommutativeRing R>
Poly<element_t<R>> poly_derivative(const R& ring, const Poly<element_t<R>>& a)
{
    Poly<element_t<R>> out;
    for (std::size_t i = 1; i < a.size(); ++i) {
        out.push_back(ring.mul(ring.from_int(static_cast<std::int64_t>(i)), a[i]));
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
element_t<R> poly_eval_at_one(const R& ring, const Poly<element_t<R>>& a)
{
    if (a.empty()) {
        return ring.zero();
    }
    auto acc = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        acc = ring.add(acc, a[i]);
    }
    return acc;
}

// x^n * a(1/x); requires deg a <= n.
template <CommutativeRing R>
Poly<element_t<R>> poly_reverse(const R& ring, const Poly<element_t<R>>& a, std::size_t n)
{
    Poly<element_t<R>> out(n + 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[n - i] = a[i];
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
bool poly_equal(const R& ring, const Poly<element_t<R>>& a, const Poly<element_t<R>>& b)
{
    const std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        bool za = i >= a.size() || ring.is_zero(a[i]);
        bool zb = i >= b.size() || ring.is_zero(b[i]);
        if (za && zb) {
            continue;
        }
        if (za != zb || !ring.equal(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

// Division with remainder by a normalized divisor whose leading coefficient
// is a unit. Returns (quotient, remainder).
template <CommutativeRing R>
std::pair<Poly<element_t<R>>, Poly<element_t<R>>> poly_divmod(const R& ring, Poly<element_t<R>> a,
                                                              const Poly<element_t<R>>& b)
{
    if (b.empty()) {
        throw NonUnit("polynomial division by zero");
    }
    trim(ring, a);
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) {
        return {{}, std::move(a)};
    }
    const auto lc_inv = ring.inv(b.back());
    Poly<element_t<R>> q(a.size() - db, ring.zero());
    for (std::size_t k = a.size(); k-- > db;) {
        if (ring.is_zero(a[k])) {
            a.pop_back();
            continue;
        }
        auto c = ring.mul(a[k], lc_inv);
        const std::size_t shift = k - db;
        for (std::size_t i = 0; i < db; ++i) {
            a[shift + i] = ring.sub(a[shift + i], ring.mul(c, b[i]));
        }
        // a[k] - c*lc vanishes exactly; drop it rather than computing it.
        a.pop_back();
        q[shift] = std::move(c);
    }
    trim(ring, q);
    trim(ring, a);
    return {std::move(q), std::move(a)};
}

} // namespace adjx

#endif
