#ifndef ADJX_DUAL_HPP
#define ADJX_DUAL_HPP

#include <cstdint>
#include <random>
#include <string>

#include "adjx/ring.hpp"

namespace adjx
{

// a + eps*b with eps^2 = 0, over a commutative ring R.
template <CommutativeRing R>
struct DualNumber {
    element_t<R> re;
    element_t<R> eps;
};

// R[eps]/(eps^2). Running an algorithm over this ring on A + eps*E carries
// the directional derivative along E in the eps part.
template <CommutativeRing R>
class DualRing
{
public:
    using Element = DualNumber<R>;

    explicit DualRing(R base) : base_(std::move(base)) {}

    const R& base() const noexcept
    {
        return base_;
    }

    Element lift(const element_t<R>& a, const element_t<R>& direction) const
    {
        return {a, direction};
    }
    Element zero() const
    {
        return {base_.zero(), base_.zero()};
    }
    Element one() const
    {
        return {base_.one(), base_.zero()};
    }
    Element from_int(std::int64_t k) const
    {
        return {base_.from_int(k), base_.zero()};
    }
    Element from_mpz(const mpz_class& z) const
    {
        return {base_.from_mpz(z), base_.zero()};
    }
    Element from_rational(const mpq_class& q) const
    {
        return {base_.from_rational(q), base_.zero()};
    }

    Element add(const Element& a, const Element& b) const
    {
        return {base_.add(a.re, b.re), base_.add(a.eps, b.eps)};
    }
    Element sub(const Element& a, const Element& b) const
    {
        return {base_.sub(a.re, b.re), base_.sub(a.eps, b.eps)};
    }
    Element neg(const Element& a) const
    {
        return {base_.neg(a.re), base_.neg(a.eps)};
    }
    Element mul(const Element& a, const Element& b) const
    {
        return {base_.mul(a.re, b.re), base_.add(base_.mul(a.re, b.eps), base_.mul(a.eps, b.re))};
    }
    // (a + eps b)^-1 = a^-1 - eps b a^-2
    Element inv(const Element& a) const
    {
        auto ai = base_.inv(a.re);
        return {ai, base_.neg(base_.mul(a.eps, base_.mul(ai, ai)))};
    }

    bool is_zero(const Element& a) const
    {
        return base_.is_zero(a.re) && base_.is_zero(a.eps);
    }
    bool equal(const Element& a, const Element& b) const
    {
        return base_.equal(a.re, b.re) && base_.equal(a.eps, b.eps);
    }
    bool is_unit(const Element& a) const
    {
        return base_.is_unit(a.re);
    }
    bool is_pm_one(const Element& a) const
    {
        return base_.is_pm_one(a.re) && base_.is_zero(a.eps);
    }
    std::string to_string(const Element& a) const
    {
        return base_.to_string(a.re) + "+eps*" + base_.to_string(a.eps);
    }
    Element random(std::mt19937_64& rng) const
    {
        return {base_.random(rng), base_.zero()};
    }
    std::string name() const
    {
        return "dual(" + base_.name() + ")";
    }

private:
    R base_;
};

} // namespace adjx

#endif
