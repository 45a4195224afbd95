#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracvar {

/// Base class for all library errors. CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument value is outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A precondition tying operations to regimes/sign rules is violated.
class ContractError : public Error {
public:
    using Error::Error;
};

/// b^n (or an enumeration/tolerance budget) exceeds what fits.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A vector does not have the required b^n+1 shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A file could not be parsed.
class FormatError : public Error {
public:
    using Error::Error;
};

/// The standing hypothesis psi(1/b) in (0,1) does not hold.
class UnsupportedSpecError : public Error {
public:
    using Error::Error;
};

/// A Z-based operation was requested under a non-constant sign rule.
class UnsupportedSignError : public ContractError {
public:
    using ContractError::ContractError;
};

/// The positivity hypothesis behind the non-degeneracy certificate fails.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Index estimation found no sign change of the fitted slope s(p).
/// Carries the (p, s(p)) table for diagnostics.
class NoBracketError : public Error {
public:
    NoBracketError(const std::string& what, std::vector<std::pair<double, double>> slopes)
        : Error(what), slopes(std::move(slopes)) {}

    std::vector<std::pair<double, double>> slopes;
};

} // namespace fracvar
