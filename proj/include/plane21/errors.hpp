#ifndef PLANE21_ERRORS_HPP
#define PLANE21_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plane21 {

// Base for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (bad rotation system, bad file, ...).
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// A caller broke a documented precondition (out-of-range argument, ...).
struct argument_error : error {
    explicit argument_error(const std::string& msg) : error(msg) {}
};

// An internal contract was violated (stale configuration, impossible state).
struct contract_error : error {
    explicit contract_error(const std::string& msg) : error(msg) {}
};

// The graph satisfies none of the class hypotheses; carries a witness string
// describing one violation per case.
struct class_error : error {
    std::string witness;
    class_error(const std::string& msg, std::string w)
        : error(msg + "\n" + w), witness(std::move(w)) {}
};

// No reducible configuration was found on an in-class graph above the
// brute-force threshold.  The existence guarantee rules this out, so it
// signals a bug in the configuration tables or the search; the attached
// discharging report localizes negative-charge elements for debugging.
struct theorem_violation : error {
    std::string audit;
    theorem_violation(const std::string& msg, std::string report)
        : error(msg), audit(std::move(report)) {}
};

} // namespace plane21

#endif
