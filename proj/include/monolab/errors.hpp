#pragma once

#include <stdexcept>
#include <string>

namespace monolab {

// Stable machine-readable error codes; the CLI maps them to exit status 1
// (bad input / violated precondition) or 2 (internal assertion, i.e. a
// theorem-shaped check failed and something is wrong with the code).
enum class errc {
    both_zero,
    degree_too_low,
    degree_too_high,
    field_mismatch,
    zero_division,
    not_a_generator,
    not_integral,
    congruence_fail,
    invalid_matrix,
    not_a_unit,
    reducible,
    not_s4,
    no_t_found,
    degenerate_member,
    box_too_large,
    precondition_failed,
    assertion_failed,
    not_squarefree,
    conjugates_collide,
    precision_exhausted,
    closure_overflow,
    cycle_detected,
    iteration_cap,
    parse_error,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::both_zero: return "BOTH_ZERO";
    case errc::degree_too_low: return "DEGREE_TOO_LOW";
    case errc::degree_too_high: return "DEGREE_TOO_HIGH";
    case errc::field_mismatch: return "FIELD_MISMATCH";
    case errc::zero_division: return "ZERO_DIVISION";
    case errc::not_a_generator: return "NOT_A_GENERATOR";
    case errc::not_integral: return "NOT_INTEGRAL";
    case errc::congruence_fail: return "CONGRUENCE_FAIL";
    case errc::invalid_matrix: return "INVALID_MATRIX";
    case errc::not_a_unit: return "NOT_A_UNIT";
    case errc::reducible: return "REDUCIBLE";
    case errc::not_s4: return "NOT_S4";
    case errc::no_t_found: return "NO_T_FOUND";
    case errc::degenerate_member: return "DEGENERATE_MEMBER";
    case errc::box_too_large: return "BOX_TOO_LARGE";
    case errc::precondition_failed: return "PRECONDITION_FAILED";
    case errc::assertion_failed: return "ASSERTION_FAILED";
    case errc::not_squarefree: return "NOT_SQUAREFREE";
    case errc::conjugates_collide: return "CONJUGATES_COLLIDE";
    case errc::precision_exhausted: return "PRECISION_EXHAUSTED";
    case errc::closure_overflow: return "CLOSURE_OVERFLOW";
    case errc::cycle_detected: return "CYCLE_DETECTED";
    case errc::iteration_cap: return "ITERATION_CAP";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::bad_input: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

// Internal invariant violations ("theorem says this cannot happen").
inline void require_internal(bool ok, const std::string& what) {
    if (!ok) raise(errc::assertion_failed, what);
}

} // namespace monolab
