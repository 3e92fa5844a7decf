#ifndef KOSZUL_ERRORS_HPP
#define KOSZUL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koszul {

// Bad user input: unparsable files, schema violations, out-of-range options.
// Maps to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical gate failed: descent of a twisting map, a violated axiom,
// a refused build. Carries a witness in the message. Maps to exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// "Must never fire" consistency failures (e.g. a comultiplication that does
// not factor through the coring components).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace koszul

#endif
