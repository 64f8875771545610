#ifndef ADJX_RINGS_HPP
#define ADJX_RINGS_HPP

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "adjx/error.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// Z/pZ for a prime p < 2^32. Residues are kept in [0, p).
class PrimeField
{
public:
    using Element = std::uint64_t;

    static constexpr std::uint64_t default_modulus = 10007;

    explicit PrimeField(std::uint64_t p = default_modulus);

    std::uint64_t modulus() const noexcept
    {
        return p_;
    }

    Element zero() const noexcept
    {
        return 0;
    }
    Element one() const noexcept
    {
        return 1 % p_;
    }
    Element from_int(std::int64_t k) const noexcept
    {
        auto m = static_cast<std::int64_t>(p_);
        auto r = k % m;
        return static_cast<Element>(r < 0 ? r + m : r);
    }
    Element from_mpz(const mpz_class& z) const;
    Element from_rational(const mpq_class& q) const;

    Element add(Element a, Element b) const noexcept
    {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }
    Element neg(Element a) const noexcept
    {
        return a == 0 ? 0 : p_ - a;
    }
    Element mul(Element a, Element b) const noexcept
    {
        return (a * b) % p_;
    }
    Element inv(Element a) const;

    bool is_zero(Element a) const noexcept
    {
        return a == 0;
    }
    bool equal(Element a, Element b) const noexcept
    {
        return a == b;
    }
    bool is_unit(Element a) const noexcept
    {
        return a != 0;
    }
    bool is_pm_one(Element a) const noexcept
    {
        return a == 1 || a == p_ - 1;
    }
    std::string to_string(Element a) const
    {
        return std::to_string(a);
    }
    Element random(std::mt19937_64& rng) const
    {
        return std::uniform_int_distribution<Element>(0, p_ - 1)(rng);
    }
    std::string name() const
    {
        return "zp:" + std::to_string(p_);
    }

private:
    std::uint64_t p_;
};

// Arbitrary-precision integers. Only +1 and -1 are invertible.
class IntegerRing
{
public:
    using Element = mpz_class;

    Element zero() const
    {
        return 0;
    }
    Element one() const
    {
        return 1;
    }
    Element from_int(std::int64_t k) const
    {
        return mpz_class(static_cast<long>(k));
    }
    Element from_mpz(const mpz_class& z) const
    {
        return z;
    }
    Element from_rational(const mpq_class& q) const;

    Element add(const Element& a, const Element& b) const
    {
        return a + b;
    }
    Element sub(const Element& a, const Element& b) const
    {
        return a - b;
    }
    Element neg(const Element& a) const
    {
        return -a;
    }
    Element mul(const Element& a, const Element& b) const
    {
        return a * b;
    }
    Element inv(const Element& a) const;

    bool is_zero(const Element& a) const
    {
        return sgn(a) == 0;
    }
    bool equal(const Element& a, const Element& b) const
    {
        return a == b;
    }
    bool is_unit(const Element& a) const
    {
        return is_pm_one(a);
    }
    bool is_pm_one(const Element& a) const
    {
        return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0;
    }
    std::string to_string(const Element& a) const
    {
        return a.get_str();
    }
    Element random(std::mt19937_64& rng) const
    {
        return from_int(std::uniform_int_distribution<int>(-99, 99)(rng));
    }
    std::string name() const
    {
        return "int";
    }

    // Exact quotient a / b; b must divide a.
    Element exact_div(const Element& a, const Element& b) const;
};

class RationalRing
{
public:
    using Element = mpq_class;

    Element zero() const
    {
        return 0;
    }
    Element one() const
    {
        return 1;
    }
    Element from_int(std::int64_t k) const
    {
        return mpq_class(static_cast<long>(k));
    }
    Element from_mpz(const mpz_class& z) const
    {
        return mpq_class(z);
    }
    Element from_rational(const mpq_class& q) const
    {
        return q;
    }

    Element add(const Element& a, const Element& b) const
    {
        return a + b;
    }
    Element sub(const Element& a, const Element& b) const
    {
        return a - b;
    }
    Element neg(const Element& a) const
    {
        return -a;
    }
    Element mul(const Element& a, const Element& b) const
    {
        return a * b;
    }
    Element inv(const Element& a) const;

    bool is_zero(const Element& a) const
    {
        return sgn(a) == 0;
    }
    bool equal(const Element& a, const Element& b) const
    {
        return a == b;
    }
    bool is_unit(const Element& a) const
    {
        return sgn(a) != 0;
    }
    bool is_pm_one(const Element& a) const
    {
        return a == 1 || a == -1;
    }
    std::string to_string(const Element& a) const
    {
        return a.get_str();
    }
    Element random(std::mt19937_64& rng) const
    {
        return from_int(std::uniform_int_distribution<int>(-99, 99)(rng));
    }
    std::string name() const
    {
        return "rational";
    }
};

static_assert(CommutativeRing<PrimeField>);
static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<RationalRing>);

bool is_prime(std::uint64_t p);

} // namespace adjx

#endif
