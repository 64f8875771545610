#include "adjx/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "adjx/adjoint.hpp"
#include "adjx/division_free.hpp"
#include "adjx/dual.hpp"
#include "adjx/error.hpp"
#include "adjx/io.hpp"
#include "adjx/krylov_det.hpp"
#include "adjx/oracle.hpp"
#include "adjx/rings.hpp"
#include "adjx/slp_tape.hpp"

namespace adjx::cli
{

namespace
{

class UsageError : public Error
{
public:
    using Error::Error;
};

constexpr std::size_t cofactor_cap = 8;

std::uint64_t parse_u64(const std::string& text, const char* what)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
        throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
    return std::stoull(text);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("ADJX_SEED"); env != nullptr && *env != '\0') {
        return parse_u64(env, "ADJX_SEED");
    }
    return 0;
}

Step4Strategy parse_strategy(const std::string& s)
{
    if (s == "auto") {
        return Step4Strategy::automatic;
    }
    if (s == "sum") {
        return Step4Strategy::sum;
    }
    if (s == "squaring") {
        return Step4Strategy::squaring;
    }
    throw UsageError("unknown strategy '" + s + "'");
}

template <class F>
decltype(auto) with_ring(const RingSpec& spec, F&& f)
{
    switch (spec.kind) {
    case RingSpec::Kind::integer:
        return f(IntegerRing{});
    case RingSpec::Kind::rational:
        return f(RationalRing{});
    case RingSpec::Kind::zp:
        break;
    }
    return f(PrimeField(spec.modulus));
}

template <CommutativeRing R>
std::vector<std::vector<std::string>> render_rows(const R& ring, const MatrixOf<R>& m)
{
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rows[i].push_back(ring.to_string(m(i, j)));
        }
    }
    return rows;
}

struct ComputeFlags {
    std::string in;
    std::string ring;
    std::string mode;
    std::optional<std::uint64_t> seed;
    std::string strategy = "auto";
    std::size_t retries = default_projection_retries;
    unsigned threads = 1;
    bool no_timing = false;
};

// det / adjoint / inverse
Envelope compute(const std::string& command, const ComputeFlags& flags)
{
    const auto q = read_matrix_file(flags.in);
    bool all_integer = true;
    for (const auto& x : q.data()) {
        all_integer = all_integer && x.get_den() == 1;
    }
    const RingSpec spec = parse_ring_spec(flags.ring.empty() ? (all_integer ? "int" : "rational") : flags.ring);
    const bool is_int = spec.kind == RingSpec::Kind::integer;
    const std::string mode = flags.mode.empty() ? (is_int ? "division-free" : "field") : flags.mode;
    if (mode != "field" && mode != "division-free") {
        throw UsageError("unknown mode '" + mode + "'");
    }
    if (mode == "field" && is_int) {
        throw UsageError("field mode needs a field: use --ring zp:P or --ring rational, or --mode division-free");
    }
    if (command == "inverse" && is_int) {
        throw UsageError("inverse is not available over the integers");
    }
    const auto strategy = parse_strategy(flags.strategy);
    if (flags.retries == 0) {
        throw UsageError("--retries must be positive");
    }

    Envelope env;
    env.command = command;
    env.mode = mode;
    env.ring = spec.text();
    env.n = q.rows();
    env.seed = resolve_seed(flags.seed);
    env.strategy = flags.strategy;
    env.matrix_key = command == "det" ? "" : command;

    OpCounter counter;
    const auto start = std::chrono::steady_clock::now();
    with_ring(spec, [&](auto base) {
        using Base = decltype(base);
        const CountingRing<Base> ring(base, counter);
        const auto a = convert_matrix(ring, q);
        DetOptions det_options;
        det_options.round_r_to_pow2 = strategy == Step4Strategy::squaring;

        if (mode == "field") {
            const auto trace = det_randomized(ring, a, env.seed, flags.retries, det_options);
            env.det = ring.to_string(trace.det);
            if (command != "det") {
                AdjointOptions options;
                options.strategy = strategy;
                options.inverse = command == "inverse";
                options.threads = flags.threads;
                env.matrix = render_rows(ring, adjoint(ring, trace, options));
            }
            return;
        }
        DivisionFreeOptions options;
        options.strategy = strategy;
        options.threads = flags.threads;
        options.det = det_options;
        const auto setup = default_setup(a.rows());
        const auto result = command == "det" ? det_division_free(ring, a, setup, options)
                                             : adjoint_division_free(ring, a, setup, options);
        env.det = ring.to_string(result.det);
        env.guard = std::string(result.guard.pass() ? "pass" : "fail") + " ("
                  + std::to_string(result.guard.events.size()) + " series inversions)";
        if (command == "adjoint") {
            env.matrix = render_rows(ring, result.adjoint);
        } else if (command == "inverse") {
            if (!ring.is_unit(result.det)) {
                throw SingularInput("matrix is singular (det = " + ring.to_string(result.det) + ")");
            }
            env.matrix = render_rows(ring, mat_scale(ring, result.adjoint, ring.inv(result.det)));
        }
    });
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    env.counters = counter.snapshot();
    if (!flags.no_timing) {
        env.timing_ms = ms;
    }
    return env;
}

struct CheckFlags {
    std::string against = "all";
    std::size_t n = 6;
    std::size_t trials = 20;
    std::optional<std::uint64_t> seed;
    std::string ring = "zp:10007";
    std::size_t retries = default_projection_retries;
};

struct Tally {
    std::size_t run = 0;
    std::size_t exact = 0;
    void record(bool ok)
    {
        ++run;
        exact += ok ? 1 : 0;
    }
};

int check(const CheckFlags& flags, std::ostream& out, std::ostream& err)
{
    const bool all = flags.against == "all";
    const bool cofactor = all || flags.against == "cofactor";
    const bool tape = all || flags.against == "tape";
    const bool dual = all || flags.against == "dual";
    if (!cofactor && !tape && !dual) {
        throw UsageError("unknown oracle '" + flags.against + "'");
    }
    if (flags.n == 0) {
        throw UsageError("--n must be positive");
    }
    if (cofactor && flags.n > cofactor_cap) {
        throw UsageError("cofactor oracle is limited to n <= " + std::to_string(cofactor_cap));
    }
    const RingSpec spec = parse_ring_spec(flags.ring);
    if (spec.kind != RingSpec::Kind::zp) {
        throw UsageError("check runs over zp:P");
    }
    const std::uint64_t seed = resolve_seed(flags.seed);
    out << "against: " << flags.against << "\n";
    out << "n: " << flags.n << "\n";
    out << "trials: " << flags.trials << "\n";
    out << "seed: " << seed << "\n";
    if (flags.trials == 0) {
        err << "warning: 0 trials, nothing was compared\n";
        out << "result: pass (vacuous)\n";
        return exit_ok;
    }

    const PrimeField field(spec.modulus);
    const IntegerRing zz;
    const DualRing<PrimeField> duals(field);
    std::mt19937_64 rng(seed);
    Tally t_cofactor, t_division_free, t_tape, t_dual;
    bool tape_bound = true;
    for (std::size_t trial = 0; trial < flags.trials; ++trial) {
        MatrixOf<PrimeField> a;
        do {
            a = random_matrix(field, flags.n, flags.n, rng);
        } while (field.is_zero(oracle::det_elimination(field, a)));
        const auto trace = det_randomized(field, a, rng(), flags.retries);
        const auto adj = adjoint(field, trace);
        if (cofactor) {
            t_cofactor.record(mat_equal(field, adj, oracle::adjugate_cofactor(field, a)));
            MatrixOf<IntegerRing> ai(flags.n, flags.n, mpz_class(0));
            for (std::size_t r = 0; r < flags.n; ++r) {
                for (std::size_t c = 0; c < flags.n; ++c) {
                    ai(r, c) = std::uniform_int_distribution<int>(-9, 9)(rng);
                }
            }
            OpCounter counter;
            const CountingRing<IntegerRing> counted(zz, counter);
            const auto df = adjoint_division_free(counted, ai);
            t_division_free.record(mat_equal(zz, df.adjoint, oracle::adjugate_cofactor(zz, ai)) && df.guard.pass()
                                   && counter.snapshot().divs == 0);
        }
        if (tape) {
            const auto recorded = record_det(field, a, trace.u, trace.v);
            const auto sweep = reverse_sweep(field, recorded);
            t_tape.record(mat_equal(field, transpose<PrimeField>(sweep.derivatives), adj));
            tape_bound = tape_bound && total_ops(sweep.ops) <= 5 * sweep.length;
        }
        if (dual) {
            const auto i = std::uniform_int_distribution<std::size_t>(0, flags.n - 1)(rng);
            const auto j = std::uniform_int_distribution<std::size_t>(0, flags.n - 1)(rng);
            MatrixOf<DualRing<PrimeField>> ad(flags.n, flags.n, duals.zero());
            for (std::size_t r = 0; r < flags.n; ++r) {
                for (std::size_t c = 0; c < flags.n; ++c) {
                    ad(r, c) = duals.lift(a(r, c), r == i && c == j ? field.one() : field.zero());
                }
            }
            Vec<DualRing<PrimeField>> u, v;
            for (std::size_t k = 0; k < flags.n; ++k) {
                u.push_back(duals.lift(trace.u[k], field.zero()));
                v.push_back(duals.lift(trace.v[k], field.zero()));
            }
            const auto d = det_with_trace(duals, ad, u, v);
            t_dual.record(field.equal(d.det.eps, adj(j, i)));
        }
    }
    bool pass = true;
    auto report = [&](const char* name, const Tally& t) {
        if (t.run == 0) {
            return;
        }
        out << name << ": " << t.exact << "/" << t.run << " exact\n";
        pass = pass && t.exact == t.run;
    };
    report("cofactor", t_cofactor);
    report("division_free", t_division_free);
    report("tape", t_tape);
    if (tape) {
        out << "tape_ops_within_5L: " << (tape_bound ? "yes" : "no") << "\n";
        pass = pass && tape_bound;
    }
    report("dual", t_dual);
    out << "result: " << (pass ? "pass" : "fail") << "\n";
    return pass ? exit_ok : exit_failure;
}

struct BenchFlags {
    std::string sizes = "8,16,32";
    std::string mode = "division-free";
    std::string ring;
    std::string op;
    std::optional<std::uint64_t> seed;
    std::string strategy = "auto";
};

int bench(const BenchFlags& flags, std::ostream& out)
{
    const auto sizes = parse_sizes(flags.sizes);
    if (flags.mode != "field" && flags.mode != "division-free") {
        throw UsageError("unknown mode '" + flags.mode + "'");
    }
    const bool field_mode = flags.mode == "field";
    const RingSpec spec = parse_ring_spec(flags.ring.empty() ? (field_mode ? "zp:10007" : "int") : flags.ring);
    if (field_mode && spec.kind == RingSpec::Kind::integer) {
        throw UsageError("field mode needs a field ring");
    }
    const std::string op = flags.op.empty() ? (field_mode ? "det" : "adjoint") : flags.op;
    if (op != "det" && op != "adjoint") {
        throw UsageError("unknown op '" + op + "'");
    }
    const auto strategy = parse_strategy(flags.strategy);
    const std::uint64_t seed = resolve_seed(flags.seed);
    std::mt19937_64 rng(seed);

    out << "n,mode,adds,muls,divs,ms\n";
    std::vector<double> xs, ys;
    for (const auto n : sizes) {
        OpCounter counter;
        const auto start = std::chrono::steady_clock::now();
        with_ring(spec, [&](auto base) {
            using Base = decltype(base);
            const CountingRing<Base> ring(base, counter);
            const auto a = random_matrix(base, n, n, rng);
            DetOptions det_options;
            det_options.round_r_to_pow2 = strategy == Step4Strategy::squaring;
            if (field_mode) {
                const auto trace = det_randomized(ring, a, rng(), default_projection_retries, det_options);
                if (op == "adjoint" && !ring.is_zero(trace.det)) {
                    AdjointOptions options;
                    options.strategy = strategy;
                    (void)adjoint(ring, trace, options);
                }
                return;
            }
            DivisionFreeOptions options;
            options.strategy = strategy;
            options.det = det_options;
            const auto setup = default_setup(n);
            if (op == "det") {
                (void)det_division_free(ring, a, setup, options);
            } else {
                (void)adjoint_division_free(ring, a, setup, options);
            }
        });
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const auto c = counter.snapshot();
        out << n << "," << flags.mode << "," << c.adds << "," << c.muls << "," << c.divs << "," << std::fixed
            << std::setprecision(3) << ms << std::defaultfloat << "\n";
        xs.push_back(static_cast<double>(n));
        ys.push_back(static_cast<double>(c.muls));
    }
    if (xs.size() >= 2) {
        out << "# fitted exponent of muls (" << op << "): " << std::fixed << std::setprecision(3)
            << fit_loglog_exponent(xs, ys) << std::defaultfloat << "\n";
    } else {
        out << "# fitted exponent of muls (" << op << "): n/a\n";
    }
    return exit_ok;
}

} // namespace

std::string RingSpec::text() const
{
    switch (kind) {
    case Kind::integer:
        return "int";
    case Kind::rational:
        return "rational";
    case Kind::zp:
        break;
    }
    return "zp:" + std::to_string(modulus);
}

RingSpec parse_ring_spec(const std::string& text)
{
    RingSpec spec;
    if (text == "int") {
        spec.kind = RingSpec::Kind::integer;
    } else if (text == "rational") {
        spec.kind = RingSpec::Kind::rational;
    } else if (text.rfind("zp:", 0) == 0) {
        const std::string p = text.substr(3);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 10) {
            throw ParseError("bad modulus in '" + text + "'");
        }
        spec.modulus = std::stoull(p);
        if (spec.modulus >= (std::uint64_t{1} << 32) || !is_prime(spec.modulus)) {
            throw ParseError("modulus " + p + " is not a prime below 2^32");
        }
    } else {
        throw ParseError("unknown ring '" + text + "' (expected zp:P, int or rational)");
    }
    return spec;
}

std::vector<std::size_t> parse_sizes(const std::string& text)
{
    std::vector<std::size_t> sizes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 5
            || std::stoul(item) == 0) {
            throw ParseError("bad size '" + item + "'");
        }
        sizes.push_back(std::stoul(item));
    }
    if (sizes.empty()) {
        throw ParseError("empty size list");
    }
    return sizes;
}

double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_loglog_exponent: need at least two points");
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::string render_envelope(const Envelope& e)
{
    std::ostringstream out;
    out << "command: " << e.command << "\n";
    out << "mode: " << e.mode << "\n";
    out << "ring: " << e.ring << "\n";
    out << "n: " << e.n << "\n";
    out << "seed: " << e.seed << "\n";
    out << "strategy: " << e.strategy << "\n";
    out << "det: " << e.det << "\n";
    for (std::size_t i = 0; i < e.matrix.size(); ++i) {
        out << e.matrix_key << "[" << i << "]:";
        for (const auto& x : e.matrix[i]) {
            out << " " << x;
        }
        out << "\n";
    }
    out << "adds: " << e.counters.adds << "\n";
    out << "muls: " << e.counters.muls << "\n";
    out << "divs: " << e.counters.divs << "\n";
    out << "unit_divs: " << e.counters.unit_divs << "\n";
    if (e.guard) {
        out << "guard: " << *e.guard << "\n";
    }
    if (e.timing_ms) {
        out << "timing_ms: " << std::fixed << std::setprecision(3) << *e.timing_ms << "\n";
    }
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact determinants, adjoints and inverses by baby-steps/giant-steps Krylov methods", "adjx"};
    app.require_subcommand(1);

    ComputeFlags compute_flags;
    std::optional<std::uint64_t> compute_seed;
    std::string compute_command;
    for (const char* name : {"det", "adjoint", "inverse"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of the matrix in --in");
        sub->add_option("--in", compute_flags.in, "matrix file")->required();
        sub->add_option("--ring", compute_flags.ring, "zp:P, int or rational (default: int if all entries are integers)");
        sub->add_option("--mode", compute_flags.mode, "field or division-free (default: division-free for int)");
        sub->add_option("--seed", compute_seed, "projection seed (default: $ADJX_SEED, else 0)");
        sub->add_option("--strategy", compute_flags.strategy, "step iv*: auto, sum or squaring");
        sub->add_option("--retries", compute_flags.retries, "projection attempts before giving up");
        sub->add_option("--threads", compute_flags.threads, "workers for the step iv* sum");
        sub->add_flag("--no-timing", compute_flags.no_timing, "omit timing_ms");
        sub->callback([&, name] { compute_command = name; });
    }

    CheckFlags check_flags;
    std::optional<std::uint64_t> check_seed;
    auto* check_cmd = app.add_subcommand("check", "compare adjoint against independent oracles");
    check_cmd->add_option("--against", check_flags.against, "cofactor, tape, dual or all");
    check_cmd->add_option("--n", check_flags.n, "dimension");
    check_cmd->add_option("--trials", check_flags.trials, "random matrices");
    check_cmd->add_option("--seed", check_seed, "seed (default: $ADJX_SEED, else 0)");
    check_cmd->add_option("--ring", check_flags.ring, "zp:P");
    check_cmd->add_option("--retries", check_flags.retries, "projection attempts");

    BenchFlags bench_flags;
    std::optional<std::uint64_t> bench_seed;
    auto* bench_cmd = app.add_subcommand("bench", "counted ring operations per size, as CSV");
    bench_cmd->add_option("--sizes", bench_flags.sizes, "comma-separated sizes");
    bench_cmd->add_option("--mode", bench_flags.mode, "field or division-free");
    bench_cmd->add_option("--ring", bench_flags.ring, "zp:P, int or rational");
    bench_cmd->add_option("--op", bench_flags.op, "det or adjoint (default: det in field mode, else adjoint)");
    bench_cmd->add_option("--seed", bench_seed, "seed (default: $ADJX_SEED, else 0)");
    bench_cmd->add_option("--strategy", bench_flags.strategy, "step iv*: auto, sum or squaring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (!compute_command.empty()) {
            compute_flags.seed = compute_seed;
            out << render_envelope(compute(compute_command, compute_flags));
            return exit_ok;
        }
        if (check_cmd->parsed()) {
            check_flags.seed = check_seed;
            return check(check_flags, out, err);
        }
        bench_flags.seed = bench_seed;
        return bench(bench_flags, out);
    } catch (const DegenerateProjection& e) {
        err << "error: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const SingularInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_singular;
    } catch (const SetupInvariantViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_setup;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const NonUnit& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace adjx::cli
