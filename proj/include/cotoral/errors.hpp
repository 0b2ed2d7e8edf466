#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cotoral {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag that the CLI copies into its error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Matrix or vector shape disagrees with the declared ambient rank.
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};

/// A lattice (or subgroup) was required to contain another and does not.
struct ContainmentError : Error {
    explicit ContainmentError(const std::string& m) : Error("containment", m) {}
};

/// Two operands live in tori of different rank.
struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& m) : Error("ambient_mismatch", m) {}
};

/// Malformed textual input (subgroup literals, wedge expressions, rationals).
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse", m) {}
};

/// Structurally well-formed input that violates a documented invariant.
struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error("validation", m) {}
};

}  // namespace cotoral
