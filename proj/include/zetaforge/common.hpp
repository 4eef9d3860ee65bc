#pragma once

// Shared error types and small utilities.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetaforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact_algebra
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero") : Error(w) {}
};
struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& w = "denominator vanishes under substitution") : Error(w) {}
};
struct EvalPole : Error {
    explicit EvalPole(const std::string& w = "evaluation at a pole") : Error(w) {}
};
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& w = "degenerate input") : Error(w) {}
};

// root_system / curve_zeta
struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string& w) : Error(w) {}
};
struct InvalidCounts : Error {
    explicit InvalidCounts(const std::string& w) : Error(w) {}
};

// period / group zeta
struct NearPole : Error {
    explicit NearPole(const std::string& w = "atom magnitude exceeds bound near a pole") : Error(w) {}
};
struct NonIsolatedPole : Error {
    explicit NonIsolatedPole(const std::string& w) : Error(w) {}
};
struct ClearingFailed : Error {
    explicit ClearingFailed(const std::string& w) : Error(w) {}
};

// bundle side
struct UnsupportedCensus : Error {
    explicit UnsupportedCensus(const std::string& w) : Error(w) {}
};
struct UnsupportedRank : Error {
    explicit UnsupportedRank(const std::string& w) : Error(w) {}
};
struct UnsupportedAlpha : Error {
    explicit UnsupportedAlpha(const std::string& w) : Error(w) {}
};
struct MissingTable : Error {
    explicit MissingTable(const std::string& w) : Error(w) {}
};

// CLI
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(w) {}
};
// An invariant tripped; always a bug, never a finding.
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& w) : Error(w) {}
};

} // namespace zetaforge
