#ifndef BORO_ERRORS_HPP
#define BORO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boro {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct ContextMismatch : std::runtime_error {
    explicit ContextMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroIdeal : std::runtime_error {
    explicit ZeroIdeal(const std::string& what) : std::runtime_error(what) {}
};

struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the Hilbert-Burch route when the ideal is not a 3-generated
// single-degree almost complete intersection.
struct NotThreeGenerated : std::runtime_error {
    explicit NotThreeGenerated(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateConstruction : std::runtime_error {
    explicit DegenerateConstruction(const std::string& what) : std::runtime_error(what) {}
};

struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ExponentOverflow : std::runtime_error {
    explicit ExponentOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boro

#endif
