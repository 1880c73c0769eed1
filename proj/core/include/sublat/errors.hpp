#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sublat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not admit the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Exact division by zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// A matrix failed projector validation.
class ProjectorError : public Error {
public:
    enum class Kind { NotSquare, NotSelfAdjoint, NotIdempotent };

    ProjectorError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A projector family failed maximal-context validation.
class ContextError : public Error {
public:
    enum class Kind { InvalidMember, ZeroMember, NonOrthogonalPair, SumNotIdentity };

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ContextError(Kind kind, const std::string& what, std::size_t first = npos,
                 std::size_t second = npos)
        : Error(what), kind_(kind), first_(first), second_(second) {}

    Kind kind() const { return kind_; }
    /// Index of the offending member (InvalidMember, ZeroMember) or the first
    /// member of the offending pair (NonOrthogonalPair).
    std::size_t first_index() const { return first_; }
    /// Second member of the offending pair (NonOrthogonalPair only).
    std::size_t second_index() const { return second_; }

private:
    Kind kind_;
    std::size_t first_;
    std::size_t second_;
};

/// A subspace family cannot be made into (or queried as) a bounded lattice.
class LatticeError : public Error {
public:
    enum class Kind {
        EmptyFamily,
        MissingBounds,
        NotClosed,
        MissingComplementMap,
        ElementNotInLattice,
    };

    LatticeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A subset selector does not belong to the context being queried.
class SelectorError : public Error {
public:
    using Error::Error;
};

/// The request falls outside the library's scope (e.g. irreducibility on a
/// one-dimensional space).
class OutOfScopeError : public Error {
public:
    using Error::Error;
};

} // namespace sublat
