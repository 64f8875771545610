// Acceptance suite: one PASS/FAIL line per criterion. Criterion 9 is
// informative and does not affect the exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "adjx/adjoint.hpp"
#include "adjx/cli.hpp"
#include "adjx/division_free.hpp"
#include "adjx/dual.hpp"
#include "adjx/hankel_sigma.hpp"
#include "adjx/krylov_det.hpp"
#include "adjx/oracle.hpp"
#include "adjx/slp_tape.hpp"
#include "support.hpp"

using namespace adjx;

namespace
{

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Keeps the first failure.
struct Tally {
    Outcome out;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = what;
        }
    }
};

template <CommutativeRing R>
MatrixOf<R> nonsingular(const R& ring, const std::function<MatrixOf<R>()>& draw)
{
    for (;;) {
        auto a = draw();
        if (!ring.is_zero(oracle::det_elimination(ring, a))) {
            return a;
        }
    }
}

Outcome adjugate_identity()
{
    const PrimeField f;
    std::mt19937_64 rng(1001);
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 24; ++n) {
        for (int k = 0; k < 50; ++k) {
            const auto a = nonsingular<PrimeField>(f, [&] { return random_matrix(f, n, n, rng); });
            const auto trace = det_randomized(f, a, rng());
            t.expect(adjx::test::is_adjugate(f, a, adjoint(f, trace), trace.det), "identity fails at n = " + std::to_string(n));
        }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(s < 30.0, "runtime above 30 s");
    std::ostringstream os;
    os << t.checks - 1 << " matrices, n = 1..24, " << std::fixed;
    os.precision(2);
    os << s << " s";
    return t.out.pass ? Outcome{true, os.str()} : t.out;
}

Outcome oracle_equivalence()
{
    const PrimeField f;
    const IntegerRing z;
    const RationalRing q;
    std::mt19937_64 rng(1002);
    Tally t;
    for (std::size_t n = 1; n <= 7; ++n) {
        const std::string at = " at n = " + std::to_string(n);
        for (int k = 0; k < 20; ++k) {
            const auto a = nonsingular<PrimeField>(f, [&] { return random_matrix(f, n, n, rng); });
            t.expect(mat_equal(f, adjoint(f, det_randomized(f, a, rng())), oracle::adjugate_cofactor(f, a)), "GF(p)" + at);

            const auto b = adjx::test::random_small(z, n, rng);
            t.expect(mat_equal(z, adjoint_division_free(z, b).adjoint, oracle::adjugate_cofactor(z, b)), "Z" + at);

            const auto c = nonsingular<RationalRing>(q, [&] { return adjx::test::random_rational(q, n, rng); });
            t.expect(mat_equal(q, adjoint(q, det_randomized(q, c, rng())), oracle::adjugate_cofactor(q, c)), "Q" + at);
        }
    }
    return t.out.pass ? Outcome{true, std::to_string(t.checks) + " comparisons over GF(10007), Z, Q, n <= 7"} : t.out;
}

Outcome reverse_sweep_agreement()
{
    const PrimeField f;
    std::mt19937_64 rng(1003);
    Tally t;
    double worst = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int k = 0; k < 4; ++k) {
            const DetOptions options{k % 2 == 1};
            const auto a = nonsingular<PrimeField>(f, [&] { return random_matrix(f, n, n, rng); });
            const auto trace = det_randomized(f, a, rng(), default_projection_retries, options);
            const auto tape = record_det(f, a, trace.u, trace.v, options);
            const auto sweep = reverse_sweep(f, tape);
            t.expect(mat_equal(f, transpose<PrimeField>(sweep.derivatives), adjoint(f, trace)),
                     "sweep differs at n = " + std::to_string(n));
            const auto ops = total_ops(sweep.ops);
            t.expect(ops <= 5 * sweep.length, "more than 5L operations at n = " + std::to_string(n));
            worst = std::max(worst, static_cast<double>(ops) / static_cast<double>(sweep.length));
        }
    }
    std::ostringstream os;
    os << "48 tapes, n <= 12, worst sweep ops / L = ";
    os.precision(3);
    os << worst;
    return t.out.pass ? Outcome{true, os.str()} : t.out;
}

Outcome division_free_mode()
{
    const IntegerRing z;
    std::mt19937_64 rng(1004);
    Tally t;
    std::size_t inversions = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int k = 0; k < 3; ++k) {
            const std::string at = " at n = " + std::to_string(n);
            const auto a = adjx::test::random_small(z, n, rng);
            OpCounter counter;
            const CountingRing<IntegerRing> ring(z, counter);
            const auto result = adjoint_division_free(ring, a);
            t.expect(mat_equal(z, result.adjoint, oracle::adjugate_cofactor(z, a)), "adjugate differs" + at);
            t.expect(result.det == oracle::det_bareiss(a), "det differs" + at);
            t.expect(result.guard.pass() && !result.guard.events.empty(), "guard saw a non-unit constant term" + at);
            t.expect(counter.snapshot().divs == 0, "ring division counted" + at);
            inversions += result.guard.events.size();
        }
    }
    return t.out.pass ? Outcome{true, "36 integer matrices, n <= 12, " + std::to_string(inversions)
                                          + " series inversions all +-1, divs = 0"}
                      : t.out;
}

Outcome lazy_step4_agrees()
{
    const IntegerRing z;
    using Series = SeriesRing<IntegerRing>;
    std::mt19937_64 rng(1005);
    Tally t;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int k = 0; k < 2; ++k) {
            const bool pow2 = k == 1;
            const Series series(z, n);
            const auto a = adjx::test::random_small(z, n, rng);
            const auto setup = default_setup(n);
            const auto trace = det_with_trace(series, homotopy_matrix(series, a, setup), seed_vector(series, setup.phi),
                                              seed_vector(series, setup.psi), DetOptions{pow2});
            auto st = AdjointState<Series>::zero(series, trace.params);
            st.dH = step1_dh(series, trace);
            std::tie(st.dU, st.dV) = step2_outer(series, trace, st.dH);
            step3_giant_reverse(series, trace, st);
            const auto eager = eager_step4(series, trace, st.dB, Step4Strategy::sum);
            const std::string at = " at n = " + std::to_string(n);
            t.expect(mat_equal(z, lazy_step4(series, trace, st.dB, Step4Strategy::sum), eager), "sum form" + at);
            if (pow2) {
                t.expect(mat_equal(z, lazy_step4(series, trace, st.dB, Step4Strategy::squaring), eager),
                         "squaring form" + at);
            }
            DivisionFreeOptions eager_options;
            eager_options.lazy = false;
            t.expect(mat_equal(z, adjoint_division_free(z, a).adjoint, adjoint_division_free(z, a, eager_options).adjoint),
                     "full adjoint" + at);
        }
    }
    return t.out.pass ? Outcome{true, "20 trials, n <= 10, sum and squaring forms"} : t.out;
}

Outcome hankel_kernels()
{
    const PrimeField f;
    std::mt19937_64 rng(1006);
    Tally t;
    std::size_t trials = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int k = 0; k < 10;) {
            const auto h = adjx::test::random_vec(f, 2 * n, rng);
            const auto H = oracle::hankel_matrix(f, h, n);
            const auto HA = oracle::hankel_matrix(f, h, n, 1);
            if (oracle::rank_elimination(f, H) < n || oracle::rank_elimination(f, HA) < n) {
                continue;
            }
            ++k;
            ++trials;
            const std::string at = " at n = " + std::to_string(n);
            const auto pair = hankel_pair(f, h);
            const auto hinv = oracle::inverse_elimination(f, H);
            const auto hainv = oracle::inverse_elimination(f, HA);
            const auto sig = sigma_sums(f, pair.f, pair.g, pair.g_star, n);
            t.expect(adjx::test::vec_equal(f, sig.sig_H, oracle::anti_diagonal_sums(f, hinv)), "sigma of H^-1" + at);
            t.expect(adjx::test::vec_equal(f, sig.sig_HA, oracle::anti_diagonal_sums(f, hainv)), "sigma of H_A^-1" + at);
            const auto structured = hankel_inverse_structured(f, pair, HankelWhich::H);
            t.expect(mat_equal(f, structured, hinv), "structured H^-1" + at);
            t.expect(mat_equal(f, hankel_inverse_structured(f, pair, HankelWhich::HA), hainv), "structured H_A^-1" + at);

            auto companion = zero_matrix(f, n, n);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                companion(i, i + 1) = f.one();
            }
            for (std::size_t i = 0; i < n; ++i) {
                companion(n - 1, i) = f.neg(pair.f[i]);
            }
            t.expect(mat_equal(f, mat_mul(f, HA, structured), companion), "companion identity" + at);
        }
    }
    return t.out.pass ? Outcome{true, std::to_string(trials) + " regular sequences, n <= 10"} : t.out;
}

Outcome determinant_path()
{
    const PrimeField f;
    std::mt19937_64 rng(1007);
    Tally t;
    std::size_t runs = 0, degenerate = 0;
    for (std::size_t n = 1; n <= 16; ++n) {
        for (int k = 0; k < 10; ++k) {
            const auto a = random_matrix(f, n, n, rng);
            const auto [u, v] = choose_projections(f, n, rng);
            try {
                const auto trace = det_with_trace(f, a, u, v);
                const auto signed_f0 = n % 2 == 0 ? trace.f[0] : f.neg(trace.f[0]);
                t.expect(f.equal(signed_f0, oracle::det_elimination(f, a)), "(-1)^n f(0) differs at n = " + std::to_string(n));
                ++runs;
            } catch (const DegenerateProjection&) {
                ++degenerate;
            }
            t.expect(f.equal(det_randomized(f, a, rng()).det, oracle::det_elimination(f, a)),
                     "randomized det differs at n = " + std::to_string(n));

            bool threw = false;
            try {
                det_with_trace(f, a, Vec<PrimeField>(n, f.zero()), v);
            } catch (const DegenerateProjection&) {
                threw = true;
            }
            t.expect(threw, "zero projection accepted at n = " + std::to_string(n));
        }
    }
    for (std::size_t n = 2; n <= 6; ++n) {
        bool threw = false;
        try {
            det_randomized(f, identity_matrix(f, n), 1);
        } catch (const DegenerateProjection&) {
            threw = true;
        }
        t.expect(threw, "identity accepted at n = " + std::to_string(n));
    }
    return t.out.pass ? Outcome{true, std::to_string(runs) + " direct runs exact, " + std::to_string(degenerate)
                                          + " degenerate draws, retries recover on 160 random matrices"}
                      : t.out;
}

Outcome dual_numbers()
{
    const PrimeField f;
    const DualRing<PrimeField> d(f);
    std::mt19937_64 rng(1008);
    Tally t;
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 1 + k % 8;
        const auto a = nonsingular<PrimeField>(f, [&] { return random_matrix(f, n, n, rng); });
        const auto trace = det_randomized(f, a, rng());
        const auto star = adjoint(f, trace);
        const std::size_t i = rng() % n, j = rng() % n;
        auto ad = map_matrix<PrimeField>(a, [&](std::uint64_t e) { return d.lift(e, 0); });
        ad(i, j).eps = 1;
        Vec<DualRing<PrimeField>> u, v;
        for (std::size_t c = 0; c < n; ++c) {
            u.push_back(d.lift(trace.u[c], 0));
            v.push_back(d.lift(trace.v[c], 0));
        }
        const auto dual = det_with_trace(d, ad, u, v).det;
        t.expect(dual.re == trace.det && dual.eps == star(j, i), "eps coefficient differs at n = " + std::to_string(n));
    }
    return t.out.pass ? Outcome{true, "20 random (A, i, j), n <= 8"} : t.out;
}

Outcome scaling()
{
    const IntegerRing z;
    const PrimeField f;
    std::mt19937_64 rng(1009);
    std::vector<double> xs, df_muls, det_muls;
    for (std::size_t n : {8, 16, 32}) {
        OpCounter counter;
        const CountingRing<IntegerRing> ring(z, counter);
        adjoint_division_free(ring, random_matrix(z, n, n, rng));
        OpCounter det_counter;
        const CountingRing<PrimeField> field(f, det_counter);
        det_randomized(field, random_matrix(f, n, n, rng), rng());
        xs.push_back(static_cast<double>(n));
        df_muls.push_back(static_cast<double>(counter.snapshot().muls));
        det_muls.push_back(static_cast<double>(det_counter.snapshot().muls));
    }
    const double e = cli::fit_loglog_exponent(xs, df_muls);
    const double e_det = cli::fit_loglog_exponent(xs, det_muls);
    char buf[160];
    std::snprintf(buf, sizeof buf, "division-free adjoint muls exponent %.3f (bound 3.9), field Det exponent %.3f", e,
                  e_det);
    return {e <= 3.9, buf};
}

Outcome constant_term_shadow_matches()
{
    const IntegerRing z;
    std::mt19937_64 rng(1010);
    Tally t;
    std::size_t compared = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int k = 0; k < 5; ++k) {
            const auto report = constant_term_shadow(z, adjx::test::random_small(z, n, rng), default_setup(n));
            t.expect(report.pass(), "shadow mismatch at n = " + std::to_string(n)
                                        + (report.mismatches.empty() ? "" : ": " + report.mismatches.front()));
            compared += report.compared;
        }
    }
    return t.out.pass ? Outcome{true, std::to_string(compared) + " constant terms compared, n <= 6, 5 seeds each"}
                      : t.out;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
        bool gating;
    };
    const Criterion criteria[] = {
        {1, "adjugate identity", adjugate_identity, true},
        {2, "oracle equivalence", oracle_equivalence, true},
        {3, "reverse sweep agreement", reverse_sweep_agreement, true},
        {4, "division-free mode", division_free_mode, true},
        {5, "lazy step iv*", lazy_step4_agrees, true},
        {6, "Hankel kernels", hankel_kernels, true},
        {7, "determinant path", determinant_path, true},
        {8, "dual numbers", dual_numbers, true},
        {9, "scaling (informative)", scaling, false},
        {10, "constant-term shadow", constant_term_shadow_matches, true},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << "\n";
        if (c.gating) {
            all = all && o.pass;
        }
    }
    return all ? 0 : 1;
}
