#ifndef ADJX_ERROR_HPP
#define ADJX_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjx
{

// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inversion of an element that is not a unit of its ring.
class NonUnit : public Error
{
public:
    using Error::Error;
};

// Series inversion whose constant term is not invertible.
class NonUnitConstantTerm : public NonUnit
{
public:
    using NonUnit::NonUnit;
};

// Binary operation on truncated series of different orders.
class OrderMismatch : public Error
{
public:
    using Error::Error;
};

// The minimal generator of a sequence has degree d < n.
class ShortRecurrence : public Error
{
public:
    ShortRecurrence(std::size_t degree, std::size_t expected)
        : Error("sequence has a generator of degree " + std::to_string(degree) + " < " + std::to_string(expected)),
          degree_(degree)
    {
    }
    std::size_t degree() const noexcept
    {
        return degree_;
    }

private:
    std::size_t degree_;
};

// Krylov projections (u, v) leave the Hankel matrix H singular.
class DegenerateProjection : public Error
{
public:
    DegenerateProjection(std::size_t degree, std::size_t attempts)
        : Error("degenerate projection: recovered minimum polynomial has degree " + std::to_string(degree)
                + " after " + std::to_string(attempts) + " attempt(s)"),
          degree_(degree), attempts_(attempts)
    {
    }
    std::size_t degree() const noexcept
    {
        return degree_;
    }
    std::size_t attempts() const noexcept
    {
        return attempts_;
    }

private:
    std::size_t degree_;
    std::size_t attempts_;
};

class SingularHankel : public Error
{
public:
    using Error::Error;
};

// f(0) is not a unit, so H_A cannot be inverted through the companion identity.
class NonUnitF0 : public Error
{
public:
    using Error::Error;
};

class SingularInput : public Error
{
public:
    using Error::Error;
};

class IncompleteTrace : public Error
{
public:
    using Error::Error;
};

class SetupInvariantViolation : public Error
{
public:
    using Error::Error;
};

class DegreeContractViolation : public Error
{
public:
    using Error::Error;
};

class DivisionInTapeAtZero : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace adjx

#endif
