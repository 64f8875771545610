#ifndef ADJX_SERIES_HPP
#define ADJX_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

// One series inversion seen by the division guard.
struct GuardEvent {
    std::string constant_term;
    bool unit = false;
    bool pm_one = false;
};

struct GuardReport {
    std::vector<GuardEvent> events;
    // Set when the run stopped on a short recurrence instead of an inversion.
    bool degenerate = false;
    std::string detail;

    bool pass() const
    {
        return !degenerate && std::all_of(events.begin(), events.end(), [](const GuardEvent& e) { return e.pm_one; });
    }
    std::size_t non_pm_one_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(events.begin(), events.end(), [](const GuardEvent& e) { return !e.pm_one; }));
    }
};

// Collects every series inversion performed through a SeriesRing it is
// attached to.
class DivisionGuard
{
public:
    void record(GuardEvent e)
    {
        std::lock_guard lock(mutex_);
        report_.events.push_back(std::move(e));
    }
    void mark_degenerate(std::string detail)
    {
        std::lock_guard lock(mutex_);
        report_.degenerate = true;
        report_.detail = std::move(detail);
    }
    GuardReport report() const
    {
        std::lock_guard lock(mutex_);
        return report_;
    }

private:
    mutable std::mutex mutex_;
    GuardReport report_;
};

// R[[z]] / z^(order+1). Every element stores exactly order+1 coefficients;
// operands built for another order are rejected.
template <CommutativeRing R>
class SeriesRing
{
public:
    using Coeff = element_t<R>;
    using Element = std::vector<Coeff>;

    SeriesRing(R base, std::size_t order, DivisionGuard* guard = nullptr)
        : base_(std::move(base)), order_(order), guard_(guard)
    {
    }

    const R& base() const noexcept
    {
        return base_;
    }
    std::size_t order() const noexcept
    {
        return order_;
    }
    DivisionGuard* guard() const noexcept
    {
        return guard_;
    }

    Element scalar(const Coeff& c) const
    {
        Element s(order_ + 1, base_.zero());
        s[0] = c;
        return s;
    }
    // Coefficients beyond the order are dropped, missing ones are zero.
    Element from_coeffs(const std::vector<Coeff>& cs) const
    {
        Element s(order_ + 1, base_.zero());
        std::copy_n(cs.begin(), std::min(cs.size(), s.size()), s.begin());
        return s;
    }
    Element zero() const
    {
        return Element(order_ + 1, base_.zero());
    }
    Element one() const
    {
        return scalar(base_.one());
    }
    Element from_int(std::int64_t k) const
    {
        return scalar(base_.from_int(k));
    }
    Element from_mpz(const mpz_class& z) const
    {
        return scalar(base_.from_mpz(z));
    }
    Element from_rational(const mpq_class& q) const
    {
        return scalar(base_.from_rational(q));
    }

    Element add(const Element& a, const Element& b) const
    {
        check(a);
        check(b);
        Element out(order_ + 1, base_.zero());
        const std::size_t n = std::max(effective_length(a), effective_length(b));
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = base_.add(a[i], b[i]);
        }
        return out;
    }
    Element sub(const Element& a, const Element& b) const
    {
        check(a);
        check(b);
        Element out(order_ + 1, base_.zero());
        const std::size_t n = std::max(effective_length(a), effective_length(b));
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = base_.sub(a[i], b[i]);
        }
        return out;
    }
    Element neg(const Element& a) const
    {
        check(a);
        Element out(order_ + 1, base_.zero());
        const std::size_t n = effective_length(a);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = base_.neg(a[i]);
        }
        return out;
    }
    // Schoolbook product; only coefficients up to the actual degrees of the
    // operands are touched.
    Element mul(const Element& a, const Element& b) const
    {
        check(a);
        check(b);
        Element out(order_ + 1, base_.zero());
        const std::size_t la = effective_length(a);
        const std::size_t lb = effective_length(b);
        if (la == 0 || lb == 0) {
            return out;
        }
        const std::size_t len = std::min(order_ + 1, la + lb - 1);
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t lo = k >= lb ? k - lb + 1 : 0;
            const std::size_t hi = std::min(k, la - 1);
            auto acc = base_.mul(a[lo], b[k - lo]);
            for (std::size_t i = lo + 1; i <= hi; ++i) {
                acc = base_.add(acc, base_.mul(a[i], b[k - i]));
            }
            out[k] = std::move(acc);
        }
        return out;
    }
    // b_0 = a_0^-1, b_k = -b_0 * sum_{i=1..k} a_i b_{k-i}. With a_0 = +-1 the
    // only base-ring inversion is a unit division.
    Element inv(const Element& a) const
    {
        check(a);
        const bool unit = base_.is_unit(a[0]);
        if (guard_ != nullptr) {
            guard_->record({base_.to_string(a[0]), unit, unit && base_.is_pm_one(a[0])});
        }
        if (!unit) {
            throw NonUnitConstantTerm("series constant term " + base_.to_string(a[0]) + " is not a unit");
        }
        Element out(order_ + 1, base_.zero());
        out[0] = base_.inv(a[0]);
        const auto minus_b0 = base_.neg(out[0]);
        const std::size_t la = effective_length(a);
        for (std::size_t k = 1; k <= order_; ++k) {
            const std::size_t hi = std::min(k, la == 0 ? 0 : la - 1);
            if (hi == 0) {
                continue;
            }
            auto acc = base_.mul(a[1], out[k - 1]);
            for (std::size_t i = 2; i <= hi; ++i) {
                acc = base_.add(acc, base_.mul(a[i], out[k - i]));
            }
            out[k] = base_.mul(minus_b0, acc);
        }
        return out;
    }

    bool is_zero(const Element& a) const
    {
        return effective_length(a) == 0;
    }
    bool equal(const Element& a, const Element& b) const
    {
        check(a);
        check(b);
        for (std::size_t i = 0; i <= order_; ++i) {
            if (!base_.equal(a[i], b[i])) {
                return false;
            }
        }
        return true;
    }
    bool is_unit(const Element& a) const
    {
        return base_.is_unit(a.at(0));
    }
    bool is_pm_one(const Element& a) const
    {
        return effective_length(a) == 1 && base_.is_pm_one(a[0]);
    }
    std::string to_string(const Element& a) const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += (i ? ", " : "") + base_.to_string(a[i]);
        }
        return s + "]";
    }
    Element random(std::mt19937_64& rng) const
    {
        Element s;
        s.reserve(order_ + 1);
        for (std::size_t i = 0; i <= order_; ++i) {
            s.push_back(base_.random(rng));
        }
        return s;
    }
    std::string name() const
    {
        return base_.name() + "[[z]]/z^" + std::to_string(order_ + 1);
    }

    // Index of the last nonzero coefficient plus one.
    std::size_t effective_length(const Element& a) const
    {
        std::size_t n = a.size();
        while (n > 0 && base_.is_zero(a[n - 1])) {
            --n;
        }
        return n;
    }
    long degree(const Element& a) const
    {
        return static_cast<long>(effective_length(a)) - 1;
    }
    Coeff eval_at_one(const Element& a) const
    {
        return poly_eval_at_one(base_, Poly<Coeff>(a.begin(), a.begin() + static_cast<long>(effective_length(a))));
    }

private:
    void check(const Element& a) const
    {
        if (a.size() != order_ + 1) {
            throw OrderMismatch("series of order " + std::to_string(a.size() - 1) + " used in a ring of order "
                                + std::to_string(order_));
        }
    }

    R base_;
    std::size_t order_;
    DivisionGuard* guard_;
};

// Reinterprets a series under another truncation order.
template <CommutativeRing R>
typename SeriesRing<R>::Element retruncate(const SeriesRing<R>& target, const typename SeriesRing<R>::Element& s)
{
    return target.from_coeffs(s);
}

} // namespace adjx

#endif
