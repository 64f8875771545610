#ifndef ADJX_RING_HPP
#define ADJX_RING_HPP

#include <atomic>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace adjx
{

// A commutative ring with 1, passed around as a context object. Elements are
// plain values; every arithmetic operation goes through the ring so that
// instrumented rings (counters, tapes, guards) see all of it.
template <class R>
concept CommutativeRing = std::copy_constructible<R>
    && requires(const R& r, const typename R::Element& a, std::int64_t k, const mpz_class& z,
                const mpq_class& q, std::mt19937_64& rng) {
           typename R::Element;
           { r.zero() } -> std::convertible_to<typename R::Element>;
           { r.one() } -> std::convertible_to<typename R::Element>;
           { r.from_int(k) } -> std::convertible_to<typename R::Element>;
           { r.from_mpz(z) } -> std::convertible_to<typename R::Element>;
           { r.from_rational(q) } -> std::convertible_to<typename R::Element>;
           { r.add(a, a) } -> std::convertible_to<typename R::Element>;
           { r.sub(a, a) } -> std::convertible_to<typename R::Element>;
           { r.neg(a) } -> std::convertible_to<typename R::Element>;
           { r.mul(a, a) } -> std::convertible_to<typename R::Element>;
           { r.inv(a) } -> std::convertible_to<typename R::Element>;
           { r.is_zero(a) } -> std::convertible_to<bool>;
           { r.equal(a, a) } -> std::convertible_to<bool>;
           { r.is_unit(a) } -> std::convertible_to<bool>;
           { r.is_pm_one(a) } -> std::convertible_to<bool>;
           { r.to_string(a) } -> std::convertible_to<std::string>;
           { r.random(rng) } -> std::convertible_to<typename R::Element>;
           { r.name() } -> std::convertible_to<std::string>;
       };

template <CommutativeRing R>
using element_t = typename R::Element;

template <CommutativeRing R>
element_t<R> div(const R& ring, const element_t<R>& a, const element_t<R>& b)
{
    return ring.mul(a, ring.inv(b));
}

// Tallies of ring operations. Subtraction and negation count as additions;
// an inversion counts as a division, split by whether the divisor is +-1.
struct OpCounts {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::uint64_t unit_divs = 0;

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

class OpCounter
{
public:
    void add(std::uint64_t k = 1) noexcept
    {
        adds_.fetch_add(k, std::memory_order_relaxed);
    }
    void mul(std::uint64_t k = 1) noexcept
    {
        muls_.fetch_add(k, std::memory_order_relaxed);
    }
    void div(std::uint64_t k = 1) noexcept
    {
        divs_.fetch_add(k, std::memory_order_relaxed);
    }
    void unit_div(std::uint64_t k = 1) noexcept
    {
        unit_divs_.fetch_add(k, std::memory_order_relaxed);
    }
    OpCounts snapshot() const noexcept
    {
        return {adds_.load(std::memory_order_relaxed), muls_.load(std::memory_order_relaxed),
                divs_.load(std::memory_order_relaxed), unit_divs_.load(std::memory_order_relaxed)};
    }
    void reset() noexcept
    {
        adds_ = 0;
        muls_ = 0;
        divs_ = 0;
        unit_divs_ = 0;
    }

private:
    std::atomic<std::uint64_t> adds_{0};
    std::atomic<std::uint64_t> muls_{0};
    std::atomic<std::uint64_t> divs_{0};
    std::atomic<std::uint64_t> unit_divs_{0};
};

// Forwards to an inner ring and records every arithmetic operation in an
// OpCounter. The counter is shared, not owned.
template <CommutativeRing R>
class CountingRing
{
public:
    using Element = element_t<R>;

    CountingRing(R inner, OpCounter& counter) : inner_(std::move(inner)), counter_(&counter) {}

    const R& inner() const noexcept
    {
        return inner_;
    }
    OpCounter& counter() const noexcept
    {
        return *counter_;
    }

    Element zero() const
    {
        return inner_.zero();
    }
    Element one() const
    {
        return inner_.one();
    }
    Element from_int(std::int64_t k) const
    {
        return inner_.from_int(k);
    }
    Element from_mpz(const mpz_class& z) const
    {
        return inner_.from_mpz(z);
    }
    Element from_rational(const mpq_class& q) const
    {
        return inner_.from_rational(q);
    }
    Element add(const Element& a, const Element& b) const
    {
        counter_->add();
        return inner_.add(a, b);
    }
    Element sub(const Element& a, const Element& b) const
    {
        counter_->add();
        return inner_.sub(a, b);
    }
    Element neg(const Element& a) const
    {
        counter_->add();
        return inner_.neg(a);
    }
    Element mul(const Element& a, const Element& b) const
    {
        counter_->mul();
        return inner_.mul(a, b);
    }
    Element inv(const Element& a) const
    {
        if (inner_.is_pm_one(a)) {
            counter_->unit_div();
        } else {
            counter_->div();
        }
        return inner_.inv(a);
    }
    bool is_zero(const Element& a) const
    {
        return inner_.is_zero(a);
    }
    bool equal(const Element& a, const Element& b) const
    {
        return inner_.equal(a, b);
    }
    bool is_unit(const Element& a) const
    {
        return inner_.is_unit(a);
    }
    bool is_pm_one(const Element& a) const
    {
        return inner_.is_pm_one(a);
    }
    std::string to_string(const Element& a) const
    {
        return inner_.to_string(a);
    }
    Element random(std::mt19937_64& rng) const
    {
        return inner_.random(rng);
    }
    std::string name() const
    {
        return inner_.name();
    }

private:
    R inner_;
    OpCounter* counter_;
};

} // namespace adjx

#endif
