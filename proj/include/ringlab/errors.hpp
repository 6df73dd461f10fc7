// Error and budget types shared across the library.
#ifndef RINGLAB_ERRORS_HPP
#define RINGLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (ring specs, polynomials, theory files).
struct parse_error : error {
    parse_error(const std::string& msg, int line = -1, int col = -1)
        : error(locate(msg, line, col)), line(line), col(col) {}
    int line;
    int col;

  private:
    static std::string locate(const std::string& msg, int line, int col) {
        if (line < 0) return msg;
        return msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")";
    }
};

// A configured search/computation cap was hit.  Exceeding a budget is a
// first-class outcome: callers either propagate it or map it to "unknown".
struct budget_error : error {
    using error::error;
};

// Precondition violations on public operations (modulus mismatch, unassigned
// variable, domain mismatch, ...).
struct invalid_argument_error : error {
    using error::error;
};

// Enumeration caps for point/hom searches.
struct EnumBudget {
    std::uint64_t max_tuples = 10'000'000;
};

// Caps for Groebner computations.  Exceeding any of them raises budget_error;
// a wrong basis is never returned.
struct GroebnerBudget {
    std::size_t max_basis = 512;
    int max_degree = 64;
    std::size_t max_coeff_bits = 8192;
    std::size_t max_pairs = 100'000;
};

}  // namespace ringlab

#endif
