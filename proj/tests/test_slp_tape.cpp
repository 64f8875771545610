#include <doctest.h>

#include <regex>
#include <sstream>

#include "adjx/adjoint.hpp"
#include "adjx/dual.hpp"
#include "adjx/oracle.hpp"
#include "adjx/slp_tape.hpp"
#include "support.hpp"

using namespace adjx;
using adjx::test::ints;
using adjx::test::mat;

namespace
{

struct Step {
    int op;
    std::size_t j, k;
    std::uint64_t c;
};

// A random program over `inputs` values; the last slot is the result.
std::vector<Step> random_program(std::size_t inputs, std::size_t length, std::mt19937_64& rng)
{
    std::vector<Step> prog;
    for (std::size_t i = 0; i < length; ++i) {
        const std::size_t live = inputs + i;
        prog.push_back({static_cast<int>(rng() % 5), rng() % live, rng() % live, 1 + rng() % 10006});
    }
    return prog;
}

template <CommutativeRing R>
element_t<R> run_program(const R& ring, std::vector<element_t<R>> slots, const std::vector<Step>& prog)
{
    for (const auto& s : prog) {
        const auto& a = slots[s.j];
        const auto& b = slots[s.k];
        switch (s.op) {
        case 0:
            slots.push_back(ring.add(a, b));
            break;
        case 1:
            slots.push_back(ring.sub(a, b));
            break;
        case 2:
            slots.push_back(ring.mul(a, b));
            break;
        case 3:
            slots.push_back(ring.is_unit(b) ? ring.mul(a, ring.inv(b)) : ring.add(a, b));
            break;
        default:
            slots.push_back(ring.from_int(static_cast<std::int64_t>(s.c)));
            break;
        }
    }
    return slots.back();
}

// Same as run_program but emits real div instructions on the tape.
std::size_t record_program(const TapeRing<PrimeField>& ring, std::vector<TapeSlot> slots, const std::vector<Step>& prog)
{
    for (const auto& s : prog) {
        const auto a = slots[s.j];
        const auto b = slots[s.k];
        switch (s.op) {
        case 0:
            slots.push_back(ring.add(a, b));
            break;
        case 1:
            slots.push_back(ring.sub(a, b));
            break;
        case 2:
            slots.push_back(ring.mul(a, b));
            break;
        case 3:
            slots.push_back(ring.is_unit(b) ? ring.div(a, b) : ring.add(a, b));
            break;
        default:
            slots.push_back(ring.from_int(static_cast<std::int64_t>(s.c)));
            break;
        }
    }
    return slots.back().index;
}

} // namespace

TEST_SUITE("slp_tape")
{
    TEST_CASE("one by one matrix")
    {
        const PrimeField f;
        const auto tape = record_det(f, mat(f, {{7}}), ints(f, {3}), ints(f, {5}));
        CHECK(tape.inputs == 1);
        CHECK(tape.length() < 40);
        CHECK(tape.result() == 7);
        const auto sweep = reverse_sweep(f, tape);
        CHECK(sweep.derivatives(0, 0) == 1);
    }

    TEST_CASE("worked instance")
    {
        const PrimeField f;
        const auto a = mat(f, {{1, 2}, {3, 4}});
        const auto u = ints(f, {1, 0}), v = ints(f, {1, 0});
        const auto tape = record_det(f, a, u, v);
        CHECK(tape.result() == f.from_int(-2));
        CHECK(tape.result() == det_with_trace(f, a, u, v).det);
        const auto sweep = reverse_sweep(f, tape);
        CHECK(mat_equal(f, transpose<PrimeField>(sweep.derivatives), mat(f, {{4, -2}, {-3, 1}})));
        CHECK(sweep.length == tape.length());
    }

    TEST_CASE("replay is deterministic and reproduces the log")
    {
        const PrimeField f;
        std::mt19937_64 rng(107);
        const auto a = random_matrix(f, 5, 5, rng);
        const auto t = det_randomized(f, a, 3);
        const auto tape = record_det(f, a, t.u, t.v);
        const auto first = replay(f, tape);
        CHECK(first == replay(f, tape));
        CHECK(first == tape.values);
        CHECK(first.back() == t.det);
    }

    TEST_CASE("sweep matches the cofactor oracle")
    {
        const PrimeField f;
        std::mt19937_64 rng(109);
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto a = random_matrix(f, n, n, rng);
            const auto t = det_randomized(f, a, rng());
            const auto sweep = reverse_sweep(f, record_det(f, a, t.u, t.v));
            CHECK(mat_equal(f, transpose<PrimeField>(sweep.derivatives), oracle::adjugate_cofactor(f, a)));
        }
    }

    TEST_CASE("sweep matches the adjoint and stays within 5L")
    {
        const PrimeField f;
        std::mt19937_64 rng(113);
        for (std::size_t n = 1; n <= 12; ++n) {
            for (bool pow2 : {false, true}) {
                const auto a = random_matrix(f, n, n, rng);
                const auto t = det_randomized(f, a, rng(), default_projection_retries, DetOptions{pow2});
                const auto tape = record_det(f, a, t.u, t.v, DetOptions{pow2});
                const auto sweep = reverse_sweep(f, tape);
                CHECK(mat_equal(f, transpose<PrimeField>(sweep.derivatives), adjoint(f, t)));
                CHECK(total_ops(sweep.ops) <= 5 * sweep.length);
            }
        }
    }

    TEST_CASE("instruction rules against dual numbers")
    {
        const PrimeField f;
        const DualRing<PrimeField> d(f);
        std::mt19937_64 rng(127);
        int divisions = 0;
        for (int t = 0; t < 50; ++t) {
            const std::size_t inputs = 1 + rng() % 4;
            const auto prog = random_program(inputs, 5 + rng() % 40, rng);
            auto tape = std::make_shared<SlpTape<PrimeField>>();
            const TapeRing<PrimeField> ring(f, tape);
            std::vector<std::uint64_t> x;
            std::vector<TapeSlot> slots;
            for (std::size_t i = 0; i < inputs; ++i) {
                x.push_back(1 + rng() % 10006);
                slots.push_back(ring.input(x.back()));
            }
            const auto result = record_program(ring, slots, prog);
            if (result < tape->inputs) {
                continue;
            }
            tape->truncate_after(result);
            for (const auto& in : tape->instrs) {
                divisions += in.op == SlpOp::div ? 1 : 0;
            }
            const auto grad = reverse_sweep_gradient(f, *tape);
            CHECK(total_ops(grad.ops) <= 5 * grad.length);
            for (std::size_t l = 0; l < inputs; ++l) {
                std::vector<DualNumber<PrimeField>> ds;
                for (std::size_t i = 0; i < inputs; ++i) {
                    ds.push_back(d.lift(x[i], i == l ? 1 : 0));
                }
                const auto out = run_program(d, ds, prog);
                CHECK(out.re == tape->result());
                CHECK(out.eps == grad.gradient[l]);
            }
        }
        CHECK(divisions > 0);
    }

    TEST_CASE("division by a recorded zero")
    {
        const PrimeField f;
        SlpTape<PrimeField> tape;
        tape.inputs = 2;
        tape.values = {3, 0, 0};
        tape.instrs = {{SlpOp::div, 0, 1}};
        CHECK_THROWS_AS(reverse_sweep_gradient(f, tape), DivisionInTapeAtZero);
        CHECK_THROWS_AS(replay(f, tape), DivisionInTapeAtZero);
    }

    TEST_CASE("dump format")
    {
        const PrimeField f;
        const auto tape = record_det(f, mat(f, {{1, 2}, {3, 4}}), ints(f, {1, 0}), ints(f, {1, 0}));
        std::ostringstream os;
        dump_tape(f, tape, os);
        const std::regex line(R"((-?\d+) := (const \d+|(-?\d+) [-+*/] (-?\d+)))");
        std::istringstream in(os.str());
        std::string s;
        long expected = 1;
        while (std::getline(in, s)) {
            std::smatch m;
            REQUIRE(std::regex_match(s, m, line));
            const long i = std::stol(m[1]);
            CHECK(i == expected++);
            if (m[3].matched) {
                CHECK(std::stol(m[3]) < i);
                CHECK(std::stol(m[4]) < i);
                CHECK(std::stol(m[3]) > -4);
            }
        }
        CHECK(expected - 1 == static_cast<long>(tape.length()));
    }

    TEST_CASE("tape invariants")
    {
        const PrimeField f;
        SlpTape<PrimeField> empty;
        CHECK_THROWS_AS(empty.result_slot(), std::logic_error);
        auto tape = std::make_shared<SlpTape<PrimeField>>();
        const TapeRing<PrimeField> ring(f, tape);
        const auto x = ring.input(2);
        ring.mul(x, x);
        CHECK_THROWS_AS(ring.input(3), std::logic_error);
        CHECK_THROWS_AS(tape->truncate_after(0), std::logic_error);
    }
}
