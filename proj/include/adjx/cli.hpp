#ifndef ADJX_CLI_HPP
#define ADJX_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "adjx/ring.hpp"

namespace adjx::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_degenerate = 2,
    exit_usage = 3,
    exit_singular = 4,
    exit_setup = 5,
};

struct RingSpec {
    enum class Kind { zp, integer, rational };
    Kind kind = Kind::zp;
    std::uint64_t modulus = 10007;

    std::string text() const;
};

// "zp:P", "int" or "rational"; throws ParseError.
RingSpec parse_ring_spec(const std::string& text);

// Comma-separated positive sizes; throws ParseError on an empty list.
std::vector<std::size_t> parse_sizes(const std::string& text);

// Least-squares slope of log y against log x.
double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y);

// Line-oriented result of det / adjoint / inverse, "key: value" per line in a
// fixed order.
struct Envelope {
    std::string command;
    std::string mode;
    std::string ring;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    std::string det;
    std::string matrix_key; // "adjoint" or "inverse", empty for det
    std::vector<std::vector<std::string>> matrix;
    OpCounts counters;
    std::optional<std::string> guard; // division-free runs only
    std::optional<double> timing_ms;
};

std::string render_envelope(const Envelope& e);

// Entry point of the adjx tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace adjx::cli

#endif
