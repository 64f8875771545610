#include "adjx/rings.hpp"

#include <utility>

namespace adjx
{

bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
        throw Error("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& z) const
{
    mpz_class r = z % mpz_class(std::to_string(p_));
    if (r < 0) {
        r += mpz_class(std::to_string(p_));
    }
    return r.get_ui();
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const
{
    auto den = from_mpz(q.get_den());
    if (den == 0) {
        throw NonUnit("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
    }
    return mul(from_mpz(q.get_num()), inv(den));
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0) {
        throw NonUnit("zero is not invertible in " + name());
    }
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) {
        t += static_cast<std::int64_t>(p_);
    }
    return static_cast<Element>(t);
}

IntegerRing::Element IntegerRing::from_rational(const mpq_class& q) const
{
    if (q.get_den() != 1) {
        throw ParseError("non-integer value " + q.get_str() + " in the integer ring");
    }
    return q.get_num();
}

IntegerRing::Element IntegerRing::inv(const Element& a) const
{
    if (!is_pm_one(a)) {
        throw NonUnit(a.get_str() + " is not a unit of the integers");
    }
    return a;
}

IntegerRing::Element IntegerRing::exact_div(const Element& a, const Element& b) const
{
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

RationalRing::Element RationalRing::inv(const Element& a) const
{
    if (sgn(a) == 0) {
        throw NonUnit("zero is not invertible in the rationals");
    }
    return 1 / a;
}

} // namespace adjx
