#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace slp {

/// An argument lies outside the domain of an operation (order < 1, empty word, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on a value that violates its precondition,
/// e.g. expanding a grammar that does not validate.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Lower and upper bounds known at the point a search gave up.
struct Bracket {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// A configured budget (symbol cap, enumeration cap, node cap) was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what, std::optional<Bracket> bracket = std::nullopt)
        : std::runtime_error(what), bracket_(bracket) {}

    const std::optional<Bracket>& bracket() const noexcept { return bracket_; }

private:
    std::optional<Bracket> bracket_;
};

} // namespace slp
