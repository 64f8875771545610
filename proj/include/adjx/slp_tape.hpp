#ifndef ADJX_SLP_TAPE_HPP
#define ADJX_SLP_TAPE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "adjx/error.hpp"
#include "adjx/krylov_det.hpp"
#include "adjx/matrix.hpp"
#include "adjx/ring.hpp"

namespace adjx
{

enum class SlpOp : std::uint8_t { add, sub, mul, div, constant };

// delta_i := delta_j op delta_k, or delta_i := c (the value is in the log).
struct SlpInstr {
    SlpOp op;
    std::size_t j = 0;
    std::size_t k = 0;
};

// Straight-line program with its forward value log. Slots are numbered
// internally from 0: the first `inputs` slots hold the matrix entries in
// row-major order, instruction i lives in slot inputs + i. The external
// numbering used by dump() puts inputs at -N+1..0 and instructions at 1..L.
template <CommutativeRing F>
struct SlpTape {
    std::size_t inputs = 0;
    std::vector<SlpInstr> instrs;
    std::vector<element_t<F>> values;

    std::size_t length() const noexcept
    {
        return instrs.size();
    }
    std::size_t result_slot() const
    {
        if (instrs.empty()) {
            throw std::logic_error("empty tape");
        }
        return values.size() - 1;
    }
    const element_t<F>& result() const
    {
        return values.at(result_slot());
    }
    long external_index(std::size_t slot) const noexcept
    {
        return static_cast<long>(slot) - static_cast<long>(inputs) + 1;
    }
    // Drops every instruction after `slot`; later instructions cannot feed it.
    void truncate_after(std::size_t slot)
    {
        if (slot < inputs) {
            throw std::logic_error("cannot end a tape on an input slot");
        }
        instrs.resize(slot - inputs + 1);
        values.resize(slot + 1);
    }
};

struct TapeSlot {
    std::size_t index = 0;
};

// A ring whose elements are tape slots. Every operation is executed in the
// base field and appended to the tape, so running the Det algorithm over it
// records the exact program that produced the determinant.
template <CommutativeRing F>
class TapeRing
{
public:
    using Element = TapeSlot;

    TapeRing(F base, std::shared_ptr<SlpTape<F>> tape) : base_(std::move(base)), tape_(std::move(tape)) {}

    const F& base() const noexcept
    {
        return base_;
    }
    SlpTape<F>& tape() const noexcept
    {
        return *tape_;
    }
    const element_t<F>& value(TapeSlot s) const
    {
        return tape_->values.at(s.index);
    }

    TapeSlot input(const element_t<F>& x) const
    {
        if (!tape_->instrs.empty()) {
            throw std::logic_error("inputs must precede instructions");
        }
        tape_->values.push_back(x);
        ++tape_->inputs;
        return {tape_->values.size() - 1};
    }
    TapeSlot constant(const element_t<F>& c) const
    {
        return push({SlpOp::constant, 0, 0}, c);
    }

    TapeSlot zero() const
    {
        return constant(base_.zero());
    }
    TapeSlot one() const
    {
        return constant(base_.one());
    }
    TapeSlot from_int(std::int64_t k) const
    {
        return constant(base_.from_int(k));
    }
    TapeSlot from_mpz(const mpz_class& z) const
    {
        return constant(base_.from_mpz(z));
    }
    TapeSlot from_rational(const mpq_class& q) const
    {
        return constant(base_.from_rational(q));
    }

    TapeSlot add(TapeSlot a, TapeSlot b) const
    {
        return push({SlpOp::add, a.index, b.index}, base_.add(value(a), value(b)));
    }
    TapeSlot sub(TapeSlot a, TapeSlot b) const
    {
        return push({SlpOp::sub, a.index, b.index}, base_.sub(value(a), value(b)));
    }
    TapeSlot neg(TapeSlot a) const
    {
        return sub(zero(), a);
    }
    TapeSlot mul(TapeSlot a, TapeSlot b) const
    {
        return push({SlpOp::mul, a.index, b.index}, base_.mul(value(a), value(b)));
    }
    TapeSlot div(TapeSlot a, TapeSlot b) const
    {
        return push({SlpOp::div, a.index, b.index}, base_.mul(value(a), base_.inv(value(b))));
    }
    TapeSlot inv(TapeSlot a) const
    {
        return div(one(), a);
    }

    bool is_zero(TapeSlot a) const
    {
        return base_.is_zero(value(a));
    }
    bool equal(TapeSlot a, TapeSlot b) const
    {
        return base_.equal(value(a), value(b));
    }
    bool is_unit(TapeSlot a) const
    {
        return base_.is_unit(value(a));
    }
    bool is_pm_one(TapeSlot a) const
    {
        return base_.is_pm_one(value(a));
    }
    std::string to_string(TapeSlot a) const
    {
        return base_.to_string(value(a));
    }
    TapeSlot random(std::mt19937_64& rng) const
    {
        return constant(base_.random(rng));
    }
    std::string name() const
    {
        return "tape(" + base_.name() + ")";
    }

private:
    TapeSlot push(SlpInstr ins, element_t<F> value) const
    {
        tape_->instrs.push_back(ins);
        tape_->values.push_back(std::move(value));
        return {tape_->values.size() - 1};
    }

    F base_;
    std::shared_ptr<SlpTape<F>> tape_;
};

// Runs the Det algorithm on (A, u, v) over a recording ring. The tape ends on the
// instruction that produced det A.
template <CommutativeRing F>
SlpTape<F> record_det(const F& field, const MatrixOf<F>& a, const Vec<F>& u, const Vec<F>& v,
                      DetOptions options = {})
{
    auto tape = std::make_shared<SlpTape<F>>();
    TapeRing<F> ring(field, tape);
    MatrixOf<TapeRing<F>> as(a.rows(), a.cols(), TapeSlot{});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            as(i, j) = ring.input(a(i, j));
        }
    }
    Vec<TapeRing<F>> us, vs;
    for (const auto& x : u) {
        us.push_back(ring.constant(x));
    }
    for (const auto& x : v) {
        vs.push_back(ring.constant(x));
    }
    const auto trace = det_with_trace(ring, as, us, vs, options);
    tape->truncate_after(trace.det.index);
    return std::move(*tape);
}

// Re-executes the instructions from the recorded inputs.
template <CommutativeRing F>
std::vector<element_t<F>> replay(const F& field, const SlpTape<F>& tape)
{
    std::vector<element_t<F>> vals(tape.values.begin(), tape.values.begin() + static_cast<long>(tape.inputs));
    vals.reserve(tape.values.size());
    for (std::size_t i = 0; i < tape.instrs.size(); ++i) {
        const auto& in = tape.instrs[i];
        switch (in.op) {
        case SlpOp::add:
            vals.push_back(field.add(vals[in.j], vals[in.k]));
            break;
        case SlpOp::sub:
            vals.push_back(field.sub(vals[in.j], vals[in.k]));
            break;
        case SlpOp::mul:
            vals.push_back(field.mul(vals[in.j], vals[in.k]));
            break;
        case SlpOp::div:
            if (field.is_zero(vals[in.k])) {
                throw DivisionInTapeAtZero("replay: division by zero at instruction "
                                           + std::to_string(tape.external_index(tape.inputs + i)));
            }
            vals.push_back(field.mul(vals[in.j], field.inv(vals[in.k])));
            break;
        case SlpOp::constant:
            vals.push_back(tape.values[tape.inputs + i]);
            break;
        }
    }
    return vals;
}

template <CommutativeRing F>
struct SweepResult {
    // gradient[l] = dDelta/d delta_l for the input slots, i.e. entry l of A
    // in row-major order.
    std::vector<element_t<F>> gradient;
    OpCounts ops;
    std::size_t length = 0;
};

// Backward recursion over the tape, starting from dDelta_L/d delta_L = 1:
//   add  delta_j + delta_k : bar_j += bar_i,          bar_k += bar_i
//   sub  delta_j - delta_k : bar_j += bar_i,          bar_k -= bar_i
//   mul  delta_j * delta_k : bar_j += bar_i delta_k,  bar_k += bar_i delta_j
//   div  delta_j / delta_k : w = bar_i / delta_k, bar_j += w, bar_k -= w delta_i
template <CommutativeRing F>
SweepResult<F> reverse_sweep_gradient(const F& field, const SlpTape<F>& tape)
{
    OpCounter counter;
    CountingRing<F> ring(field, counter);
    std::vector<element_t<F>> bar(tape.values.size(), field.zero());
    bar[tape.result_slot()] = field.one();
    for (std::size_t i = tape.instrs.size(); i-- > 0;) {
        const auto slot = tape.inputs + i;
        const auto& in = tape.instrs[i];
        const auto bi = bar[slot];
        switch (in.op) {
        case SlpOp::add:
            bar[in.j] = ring.add(bar[in.j], bi);
            bar[in.k] = ring.add(bar[in.k], bi);
            break;
        case SlpOp::sub:
            bar[in.j] = ring.add(bar[in.j], bi);
            bar[in.k] = ring.sub(bar[in.k], bi);
            break;
        case SlpOp::mul:
            bar[in.j] = ring.add(bar[in.j], ring.mul(bi, tape.values[in.k]));
            bar[in.k] = ring.add(bar[in.k], ring.mul(bi, tape.values[in.j]));
            break;
        case SlpOp::div: {
            if (field.is_zero(tape.values[in.k])) {
                throw DivisionInTapeAtZero("division by zero recorded at instruction "
                                           + std::to_string(tape.external_index(slot)));
            }
            const auto w = ring.mul(bi, ring.inv(tape.values[in.k]));
            bar[in.j] = ring.add(bar[in.j], w);
            bar[in.k] = ring.sub(bar[in.k], ring.mul(w, tape.values[slot]));
            break;
        }
        case SlpOp::constant:
            break;
        }
    }
    bar.resize(tape.inputs);
    return {std::move(bar), counter.snapshot(), tape.length()};
}

template <CommutativeRing F>
struct TapeAdjoint {
    MatrixOf<F> derivatives; // (i, j) -> dDelta / d a_{i,j}
    OpCounts ops;
    std::size_t length = 0;
};

// Sweep over a tape recorded from an n x n matrix. The transpose of
// `derivatives` is the adjugate.
template <CommutativeRing F>
TapeAdjoint<F> reverse_sweep(const F& field, const SlpTape<F>& tape)
{
    auto res = reverse_sweep_gradient(field, tape);
    std::size_t n = 0;
    while (n * n < tape.inputs) {
        ++n;
    }
    if (n * n != tape.inputs) {
        throw std::logic_error("tape inputs do not form a square matrix");
    }
    return {MatrixOf<F>(n, n, std::move(res.gradient)), res.ops, res.length};
}

inline std::uint64_t total_ops(const OpCounts& c) noexcept
{
    return c.adds + c.muls + c.divs + c.unit_divs;
}

// Debug dump: "i := j op k" and "i := const c", external numbering.
template <CommutativeRing F>
void dump_tape(const F& field, const SlpTape<F>& tape, std::ostream& os)
{
    for (std::size_t i = 0; i < tape.instrs.size(); ++i) {
        const auto slot = tape.inputs + i;
        const auto& in = tape.instrs[i];
        os << tape.external_index(slot) << " := ";
        if (in.op == SlpOp::constant) {
            os << "const " << field.to_string(tape.values[slot]) << '\n';
            continue;
        }
        static constexpr const char* symbols[] = {"+", "-", "*", "/"};
        os << tape.external_index(in.j) << ' ' << symbols[static_cast<int>(in.op)] << ' '
           << tape.external_index(in.k) << '\n';
    }
}

} // namespace adjx

#endif
