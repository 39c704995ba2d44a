#pragma once

#include <stdexcept>
#include <string>

namespace slab {

/// Input outside the modeled domain. `field()` names the offending parameter.
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A closed-form denominator vanished.
class SingularConfiguration : public std::runtime_error {
public:
    SingularConfiguration(std::string subexpr, const std::string& what)
        : std::runtime_error(what + " [" + subexpr + "]"), subexpr_(std::move(subexpr)) {}
    const std::string& subexpression() const noexcept { return subexpr_; }

private:
    std::string subexpr_;
};

/// det S vanishes identically in K.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal self-check failed (certification, oracle mismatch).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotApplicable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requested null space at a K that is not a root.
class NoNullSpace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace slab
