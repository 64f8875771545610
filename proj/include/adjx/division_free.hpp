#ifndef ADJX_DIVISION_FREE_HPP
#define ADJX_DIVISION_FREE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adjx/adjoint.hpp"
#include "adjx/error.hpp"
#include "adjx/krylov_det.hpp"
#include "adjx/matrix.hpp"
#include "adjx/poly.hpp"
#include "adjx/ring.hpp"
#include "adjx/rings.hpp"
#include "adjx/seq_minpoly.hpp"
#include "adjx/series.hpp"

namespace adjx
{

// Integer seed (C, phi, psi) for Z(z) = C + z(A - C), with the reference
// projections h_k = phi C^k psi, k < 2n.
struct SeedSetup {
    std::size_t n = 0;
    MatrixOf<IntegerRing> C;
    std::vector<mpz_class> phi;
    std::vector<mpz_class> psi;
    std::vector<mpz_class> h_seed;
    Poly<mpz_class> f; // minimum polynomial of h_seed, empty if it has degree < n
};

inline std::vector<mpz_class> catalan_numbers(std::size_t count)
{
    std::vector<mpz_class> c;
    c.reserve(count);
    mpz_class x = 1;
    for (std::size_t k = 0; k < count; ++k) {
        c.push_back(x);
        // c_{k+1} = c_k * 2(2k+1) / (k+2)
        x = x * static_cast<unsigned long>(2 * (2 * k + 1));
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k + 2));
    }
    return c;
}

// Leading principal minors of an integer matrix, read off the pivots of
// Bareiss elimination without row exchanges. Stops after the first zero minor.
inline std::vector<mpz_class> leading_principal_minors(MatrixOf<IntegerRing> m)
{
    const IntegerRing ring;
    const std::size_t n = m.rows();
    std::vector<mpz_class> minors;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m(k, k));
        if (sgn(m(k, k)) == 0) {
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = ring.exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
        }
        prev = m(k, k);
    }
    return minors;
}

// Seed from an arbitrary (C, phi, psi); h_seed and f are derived, nothing is
// verified.
inline SeedSetup make_setup(MatrixOf<IntegerRing> c, std::vector<mpz_class> phi, std::vector<mpz_class> psi)
{
    const IntegerRing zz;
    const std::size_t n = c.rows();
    if (!c.square() || phi.size() != n || psi.size() != n || n == 0) {
        throw std::invalid_argument("make_setup: shape mismatch");
    }
    SeedSetup s;
    s.n = n;
    s.C = std::move(c);
    s.phi = std::move(phi);
    s.psi = std::move(psi);
    auto w = s.psi;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        s.h_seed.push_back(dot(zz, s.phi, w));
        w = mat_vec(zz, s.C, w);
    }
    try {
        s.f = minpoly(zz, s.h_seed);
    } catch (const ShortRecurrence&) {
        s.f.clear();
    } catch (const NonUnit&) {
        s.f.clear();
    }
    return s;
}

// Throws SetupInvariantViolation unless every leading principal minor of
// H(h_seed) and H_A(h_seed) is +-1 and the minimum polynomial has degree n.
inline void verify_setup(const SeedSetup& s)
{
    const std::size_t n = s.n;
    if (s.h_seed.size() != 2 * n) {
        throw SetupInvariantViolation("seed sequence has the wrong length");
    }
    auto check = [&](std::size_t shift, const char* which) {
        MatrixOf<IntegerRing> h(n, n, mpz_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i + j + shift < 2 * n) {
                    h(i, j) = s.h_seed[i + j + shift];
                }
            }
        }
        const auto minors = leading_principal_minors(std::move(h));
        for (std::size_t k = 0; k < minors.size(); ++k) {
            if (abs(minors[k]) != 1) {
                throw SetupInvariantViolation(std::string(which) + " leading minor of order " + std::to_string(k + 1)
                                              + " is " + minors[k].get_str());
            }
        }
        if (minors.size() != n) {
            throw SetupInvariantViolation(std::string(which) + " is singular");
        }
    };
    check(0, "H");
    if (n > 1) {
        check(1, "H_A");
    } else if (abs(s.h_seed[1]) != 1) {
        throw SetupInvariantViolation("H_A leading minor of order 1 is " + s.h_seed[1].get_str());
    }
    if (s.f.size() != n + 1) {
        throw SetupInvariantViolation("minimum polynomial of the seed sequence has degree < n");
    }
}

// Catalan seed: h_seed = c_0..c_{2n-1}, C = companion matrix of their minimum
// polynomial f, phi = (c_0..c_{n-1}), psi = e_1. Every Hankel minor of the
// Catalan numbers is 1.
inline SeedSetup default_setup(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("default_setup: n must be positive");
    }
    const IntegerRing zz;
    const auto cat = catalan_numbers(2 * n);
    Poly<mpz_class> f;
    try {
        f = minpoly(zz, cat);
    } catch (const Error& e) {
        throw SetupInvariantViolation(std::string("Catalan minimum polynomial: ") + e.what());
    }
    MatrixOf<IntegerRing> c(n, n, mpz_class(0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c(i + 1, i) = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        c(i, n - 1) = -f[i];
    }
    std::vector<mpz_class> phi(cat.begin(), cat.begin() + static_cast<long>(n));
    std::vector<mpz_class> psi(n, mpz_class(0));
    psi[0] = 1;
    auto s = make_setup(std::move(c), std::move(phi), std::move(psi));
    if (s.h_seed != cat) {
        throw SetupInvariantViolation("companion seed does not reproduce the Catalan numbers");
    }
    verify_setup(s);
    return s;
}

// b = b_H z^(n-r+2) + (b_0 + ... + b_{n-r+1}) split of a degree-n series.
template <class E>
struct LazySplit {
    Poly<E> b_H; // b_{n-r+2} .. b_n, degree <= r-2
    E b_L;       // b_0 + ... + b_{n-r+1}
};

template <CommutativeRing R>
LazySplit<element_t<R>> lazy_split(const SeriesRing<R>& series, const typename SeriesRing<R>::Element& b,
                                   std::size_t r)
{
    const auto& base = series.base();
    const std::size_t n = series.order();
    if (r < 2 || n + 2 < r) {
        throw DegreeContractViolation("lazy split needs 2 <= r <= n + 2 (n = " + std::to_string(n)
                                      + ", r = " + std::to_string(r) + ")");
    }
    if (b.size() != n + 1) {
        throw DegreeContractViolation("lazy split operand is not a series of order " + std::to_string(n));
    }
    const std::size_t low = n + 2 - r;
    LazySplit<element_t<R>> out{Poly<element_t<R>>(b.begin() + static_cast<long>(low), b.end()), base.zero()};
    trim(base, out.b_H);
    for (std::size_t i = 0; i < low; ++i) {
        if (!base.is_zero(b[i])) {
            out.b_L = base.is_zero(out.b_L) ? b[i] : base.add(out.b_L, b[i]);
        }
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> evaluate_at_one(const SeriesRing<R>& series, const MatrixOf<SeriesRing<R>>& m)
{
    return map_matrix<SeriesRing<R>>(m, [&](const auto& x) { return series.eval_at_one(x); });
}

namespace detail
{
template <CommutativeRing R>
void check_degree_bound(const SeriesRing<R>& series, const MatrixOf<SeriesRing<R>>& m, long bound, const char* what)
{
    for (const auto& x : m.data()) {
        if (series.degree(x) > bound) {
            throw DegreeContractViolation(std::string(what) + " has an entry of degree " + std::to_string(series.degree(x))
                                          + " > " + std::to_string(bound));
        }
    }
}

// M X with zero entries of M skipped, so that the companion part of Z costs
// O(n^2) per coefficient.
template <CommutativeRing R>
void add_sparse_left(const R& ring, MatrixOf<R>& acc, const MatrixOf<R>& m, const MatrixOf<R>& x)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t l = 0; l < m.cols(); ++l) {
            if (ring.is_zero(m(i, l))) {
                continue;
            }
            for (std::size_t j = 0; j < x.cols(); ++j) {
                acc(i, j) = ring.add(acc(i, j), ring.mul(m(i, l), x(l, j)));
            }
        }
    }
}

// X M with zero entries of M skipped.
template <CommutativeRing R>
void add_sparse_right(const R& ring, MatrixOf<R>& acc, const MatrixOf<R>& x, const MatrixOf<R>& m)
{
    for (std::size_t l = 0; l < m.rows(); ++l) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (ring.is_zero(m(l, j))) {
                continue;
            }
            for (std::size_t i = 0; i < x.rows(); ++i) {
                acc(i, j) = ring.add(acc(i, j), ring.mul(x(i, l), m(l, j)));
            }
        }
    }
}

// sum_{k=1..r} Z^(r-k) X Z^(k-1) mod z^len for Z = Z0 + z Z1, with X and the
// result stored coefficient by coefficient (x[k] is the z^k matrix). Uses
// the recurrence T_m = Z T_(m-1) + X Z^(m-1).
template <CommutativeRing R>
std::vector<MatrixOf<R>> power_reverse_linear(const R& ring, const MatrixOf<R>& z0, const MatrixOf<R>& z1,
                                              const std::vector<MatrixOf<R>>& x, std::size_t r)
{
    const std::size_t len = x.size();
    const std::size_t n = z0.rows();
    auto times_z = [&](const std::vector<MatrixOf<R>>& m, bool left) {
        std::vector<MatrixOf<R>> out(len, zero_matrix(ring, n, n));
        for (std::size_t k = 0; k < len; ++k) {
            if (left) {
                add_sparse_left(ring, out[k], z0, m[k]);
                if (k > 0) {
                    add_sparse_left(ring, out[k], z1, m[k - 1]);
                }
            } else {
                add_sparse_right(ring, out[k], m[k], z0);
                if (k > 0) {
                    add_sparse_right(ring, out[k], m[k - 1], z1);
                }
            }
        }
        return out;
    };
    auto t = x;
    auto tail = x; // X Z^(m-1)
    for (std::size_t m = 2; m <= r; ++m) {
        tail = times_z(tail, false);
        t = times_z(t, true);
        for (std::size_t k = 0; k < len; ++k) {
            t[k] = mat_add(ring, t[k], tail[k]);
        }
    }
    return t;
}

template <CommutativeRing R>
MatrixOf<SeriesRing<R>> retruncate_matrix(const SeriesRing<R>& target, const MatrixOf<SeriesRing<R>>& m)
{
    return map_matrix<SeriesRing<R>>(m, [&](const auto& x) { return retruncate(target, x); });
}
} // namespace detail

// Step iv* with early evaluation at z = 1:
//   (sum Z^(r-k) dB_H Z^(k-1) mod z^(r-1))(1) + sum Z(1)^(r-k) dB_L Z(1)^(k-1).
// Both parts use the sum form or the squaring recursion, as selected.
template <CommutativeRing R>
MatrixOf<R> lazy_step4(const SeriesRing<R>& series, const DetTrace<SeriesRing<R>>& trace,
                       const MatrixOf<SeriesRing<R>>& db, Step4Strategy strategy = Step4Strategy::automatic,
                       unsigned threads = 1)
{
    const auto& base = series.base();
    const auto& p = trace.params;
    detail::check_degree_bound(series, trace.A, 1, "Z(z)");
    const bool squaring = use_squaring(strategy, p.r_is_pow2() && !trace.squaring_chain.empty());
    if (squaring) {
        for (std::size_t k = 0; k < trace.squaring_chain.size(); ++k) {
            detail::check_degree_bound(series, trace.squaring_chain[k], static_cast<long>(std::size_t{1} << k),
                                       "squaring chain");
        }
    }

    const SeriesRing<R> high(base, p.r - 2, series.guard());
    MatrixOf<SeriesRing<R>> db_h(p.n, p.n, high.zero());
    MatrixOf<R> db_l(p.n, p.n, base.zero());
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = 0; j < p.n; ++j) {
            auto split = lazy_split(series, db(i, j), p.r);
            db_h(i, j) = high.from_coeffs(split.b_H);
            db_l(i, j) = std::move(split.b_L);
        }
    }

    MatrixOf<R> part_l = [&] {
        if (squaring) {
            std::vector<MatrixOf<R>> chain;
            for (const auto& m : trace.squaring_chain) {
                chain.push_back(evaluate_at_one(series, m));
            }
            return power_reverse_squaring(base, chain, db_l);
        }
        return power_reverse_sum(base, evaluate_at_one(series, trace.A), db_l, p.r, threads);
    }();
    MatrixOf<SeriesRing<R>> part_h = [&] {
        if (squaring) {
            std::vector<MatrixOf<SeriesRing<R>>> chain;
            for (const auto& m : trace.squaring_chain) {
                chain.push_back(detail::retruncate_matrix(high, m));
            }
            return power_reverse_squaring(high, chain, db_h);
        }
        if (threads > 1) {
            return power_reverse_sum(high, detail::retruncate_matrix(high, trace.A), db_h, p.r, threads);
        }
        // coefficient-major form, Z = Z0 + z Z1
        const std::size_t len = p.r - 1;
        auto coeff = [&](const MatrixOf<SeriesRing<R>>& m, std::size_t k) {
            return map_matrix<SeriesRing<R>>(m, [&](const auto& e) { return k < e.size() ? e[k] : base.zero(); });
        };
        std::vector<MatrixOf<R>> x;
        for (std::size_t k = 0; k < len; ++k) {
            x.push_back(coeff(db_h, k));
        }
        const auto t = detail::power_reverse_linear(base, coeff(trace.A, 0), coeff(trace.A, 1), x, p.r);
        MatrixOf<SeriesRing<R>> out(p.n, p.n, high.zero());
        for (std::size_t i = 0; i < p.n; ++i) {
            for (std::size_t j = 0; j < p.n; ++j) {
                for (std::size_t k = 0; k < len; ++k) {
                    out(i, j)[k] = t[k](i, j);
                }
            }
        }
        return out;
    }();
    return mat_add(base, evaluate_at_one(high, part_h), part_l);
}

// Step iv* over the full series ring, evaluated afterwards. Reference path
// for lazy_step4.
template <CommutativeRing R>
MatrixOf<R> eager_step4(const SeriesRing<R>& series, const DetTrace<SeriesRing<R>>& trace,
                        const MatrixOf<SeriesRing<R>>& db, Step4Strategy strategy = Step4Strategy::automatic,
                        unsigned threads = 1)
{
    return evaluate_at_one(series, step4_power_reverse(series, trace, db, strategy, threads));
}

struct DivisionFreeOptions {
    Step4Strategy strategy = Step4Strategy::automatic;
    bool lazy = true;
    unsigned threads = 1;
    DetOptions det;
};

template <CommutativeRing R>
struct DivisionFreeResult {
    MatrixOf<R> adjoint;
    element_t<R> det{};
    GuardReport guard;
    BsgsParams params;
};

// Z(z) = C + z(A - C) over R[[z]] / z^(n+1).
template <CommutativeRing R>
MatrixOf<SeriesRing<R>> homotopy_matrix(const SeriesRing<R>& series, const MatrixOf<R>& a,
                                        const SeedSetup& setup)
{
    const auto& base = series.base();
    const std::size_t n = a.rows();
    if (!a.square() || setup.n != n) {
        throw std::invalid_argument("homotopy_matrix: dimension mismatch with the seed");
    }
    MatrixOf<SeriesRing<R>> z(n, n, series.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto c = base.from_mpz(setup.C(i, j));
            z(i, j) = series.from_coeffs({c, base.sub(a(i, j), c)});
        }
    }
    return z;
}

template <CommutativeRing R>
Vec<SeriesRing<R>> seed_vector(const SeriesRing<R>& series, const std::vector<mpz_class>& x)
{
    Vec<SeriesRing<R>> out;
    out.reserve(x.size());
    for (const auto& e : x) {
        out.push_back(series.scalar(series.base().from_mpz(e)));
    }
    return out;
}

namespace detail
{
// Runs `body`, turning every failure caused by the seed into
// SetupInvariantViolation after noting it in the guard.
template <class Body>
auto guarded(DivisionGuard& guard, Body&& body)
{
    try {
        return body();
    } catch (const DegenerateProjection& e) {
        guard.mark_degenerate(e.what());
        throw SetupInvariantViolation(std::string("division-free run on a degenerate seed: ") + e.what());
    } catch (const ShortRecurrence& e) {
        guard.mark_degenerate(e.what());
        throw SetupInvariantViolation(std::string("division-free run on a degenerate seed: ") + e.what());
    } catch (const NonUnit& e) {
        throw SetupInvariantViolation(std::string("division-free run hit a non-unit division: ") + e.what());
    } catch (const SingularHankel& e) {
        guard.mark_degenerate(e.what());
        throw SetupInvariantViolation(std::string("division-free run on a degenerate seed: ") + e.what());
    } catch (const NonUnitF0& e) {
        throw SetupInvariantViolation(std::string("division-free run hit a non-unit division: ") + e.what());
    }
}

inline void require_pass(const DivisionGuard& guard)
{
    const auto report = guard.report();
    if (!report.pass()) {
        throw SetupInvariantViolation("division guard saw " + std::to_string(report.non_pm_one_count())
                                      + " series inversion(s) with a constant term other than +-1");
    }
}
} // namespace detail

// det A = (det Z)(1), with series divisions only by +-1 constant terms.
template <CommutativeRing R>
DivisionFreeResult<R> det_division_free(const R& ring, const MatrixOf<R>& a, const SeedSetup& setup,
                                        DivisionFreeOptions options = {}, DivisionGuard* external_guard = nullptr)
{
    DivisionGuard local;
    DivisionGuard& guard = external_guard ? *external_guard : local;
    const SeriesRing<R> series(ring, a.rows(), &guard);
    const auto trace = detail::guarded(guard, [&] {
        return det_with_trace(series, homotopy_matrix(series, a, setup), seed_vector(series, setup.phi),
                              seed_vector(series, setup.psi), options.det);
    });
    detail::require_pass(guard);
    return {MatrixOf<R>(), series.eval_at_one(trace.det), guard.report(), trace.params};
}

template <CommutativeRing R>
DivisionFreeResult<R> det_division_free(const R& ring, const MatrixOf<R>& a, DivisionFreeOptions options = {})
{
    return det_division_free(ring, a, default_setup(a.rows()), options);
}

// A* = Z*(1): Det and steps i*-iii*, v* over R[[z]] / z^(n+1), step iv* with
// lazy evaluation (or eagerly, for reference), then evaluation at z = 1.
template <CommutativeRing R>
DivisionFreeResult<R> adjoint_division_free(const R& ring, const MatrixOf<R>& a, const SeedSetup& setup,
                                            DivisionFreeOptions options = {}, DivisionGuard* external_guard = nullptr)
{
    DivisionGuard local;
    DivisionGuard& guard = external_guard ? *external_guard : local;
    const std::size_t n = a.rows();
    const SeriesRing<R> series(ring, n, &guard);
    auto [trace, state] = detail::guarded(guard, [&] {
        auto t = det_with_trace(series, homotopy_matrix(series, a, setup), seed_vector(series, setup.phi),
                                seed_vector(series, setup.psi), options.det);
        auto st = AdjointState<SeriesRing<R>>::zero(series, t.params);
        st.dH = step1_dh(series, t);
        std::tie(st.dU, st.dV) = step2_outer(series, t, st.dH);
        step3_giant_reverse(series, t, st);
        return std::pair{std::move(t), std::move(st)};
    });
    auto star = options.lazy ? lazy_step4(series, trace, state.dB, options.strategy, options.threads)
                             : eager_step4(series, trace, state.dB, options.strategy, options.threads);
    step5_baby_reverse(series, trace, state.dV, state.A_star);
    star = mat_add(ring, star, evaluate_at_one(series, state.A_star));
    detail::require_pass(guard);
    return {std::move(star), series.eval_at_one(trace.det), guard.report(), trace.params};
}

template <CommutativeRing R>
DivisionFreeResult<R> adjoint_division_free(const R& ring, const MatrixOf<R>& a, DivisionFreeOptions options = {})
{
    return adjoint_division_free(ring, a, default_setup(a.rows()), options);
}

struct ShadowReport {
    std::size_t compared = 0;
    std::vector<std::string> mismatches;

    bool pass() const noexcept
    {
        return compared > 0 && mismatches.empty();
    }
};

// Compares the constant terms of the intermediates of the Z(z) run with the
// same intermediates of a scalar run on (C, phi, psi): Det trace, dH, dU, dV,
// dB, the step iv* matrix and the adjoint.
template <CommutativeRing R>
ShadowReport constant_term_shadow(const R& ring, const MatrixOf<R>& a, const SeedSetup& setup,
                                  DetOptions det_options = {})
{
    const std::size_t n = a.rows();
    DivisionGuard guard;
    const SeriesRing<R> series(ring, n, &guard);
    ShadowReport report;
    auto same = [&](const std::string& what, const typename SeriesRing<R>::Element& x, const element_t<R>& y) {
        ++report.compared;
        if (!ring.equal(x.at(0), y)) {
            report.mismatches.push_back(what + ": " + ring.to_string(x.at(0)) + " vs " + ring.to_string(y));
        }
    };
    auto same_vec = [&](const std::string& what, const auto& xs, const auto& ys) {
        if (xs.size() != ys.size()) {
            report.mismatches.push_back(what + ": length differs");
            return;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            same(what + "[" + std::to_string(i) + "]", xs[i], ys[i]);
        }
    };
    auto same_mat = [&](const std::string& what, const auto& xs, const auto& ys) {
        if (xs.rows() != ys.rows() || xs.cols() != ys.cols()) {
            report.mismatches.push_back(what + ": shape differs");
            return;
        }
        same_vec(what, xs.data(), ys.data());
    };

    const auto c = map_matrix<IntegerRing>(setup.C, [&](const mpz_class& x) { return ring.from_mpz(x); });
    Vec<R> phi, psi;
    for (const auto& x : setup.phi) {
        phi.push_back(ring.from_mpz(x));
    }
    for (const auto& x : setup.psi) {
        psi.push_back(ring.from_mpz(x));
    }
    const auto t0 = det_with_trace(ring, c, phi, psi, det_options);
    auto s0 = AdjointState<R>::zero(ring, t0.params);
    s0.dH = step1_dh(ring, t0);
    std::tie(s0.dU, s0.dV) = step2_outer(ring, t0, s0.dH);
    step3_giant_reverse(ring, t0, s0);
    s0.A_star = step4_power_reverse(ring, t0, s0.dB, Step4Strategy::sum);
    const auto step4_0 = s0.A_star;
    step5_baby_reverse(ring, t0, s0);

    const auto t1 = det_with_trace(series, homotopy_matrix(series, a, setup), seed_vector(series, setup.phi),
                                   seed_vector(series, setup.psi), det_options);
    auto s1 = AdjointState<SeriesRing<R>>::zero(series, t1.params);
    s1.dH = step1_dh(series, t1);
    std::tie(s1.dU, s1.dV) = step2_outer(series, t1, s1.dH);
    step3_giant_reverse(series, t1, s1);
    s1.A_star = step4_power_reverse(series, t1, s1.dB, Step4Strategy::sum);
    const auto step4_1 = s1.A_star;
    step5_baby_reverse(series, t1, s1);

    same_mat("A", t1.A, t0.A);
    for (std::size_t i = 0; i < t0.v_list.size(); ++i) {
        same_vec("v_" + std::to_string(i), t1.v_list[i], t0.v_list[i]);
    }
    same_mat("B", t1.B, t0.B);
    for (std::size_t j = 0; j < t0.u_list.size(); ++j) {
        same_vec("u_" + std::to_string(j), t1.u_list[j], t0.u_list[j]);
    }
    same_vec("h", t1.h, t0.h);
    same_vec("f", t1.f, t0.f);
    same("det", t1.det, t0.det);
    same_mat("dH", s1.dH, s0.dH);
    same_mat("dU", s1.dU, s0.dU);
    same_mat("dV", s1.dV, s0.dV);
    same_mat("dB", s1.dB, s0.dB);
    same_mat("step4", step4_1, step4_0);
    same_mat("adjoint", s1.A_star, s0.A_star);
    return report;
}

} // namespace adjx

#endif
