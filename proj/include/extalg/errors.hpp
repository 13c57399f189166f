#pragma once

#include <stdexcept>
#include <string>

namespace extalg {

// Base for everything thrown by this library. Catching extalg::Error at the
// CLI boundary separates "input was bad" (exit 2) from a crash.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text: scalar expressions, identity strings, JSON catalog files.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& what) : Error(what), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An identity term multiplies the same variable twice, so it has no
// multilinear reading.
class MultilinearityError : public ParseError {
public:
    using ParseError::ParseError;
};

// Division by a rational function that is identically zero.
class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

// lim_{t->0} does not exist because t divides the reduced denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

// Substituting a concrete value makes a denominator vanish.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// A bilinear form offered as a cocycle fails the cocycle constraints.
class CocycleError : public Error {
public:
    using Error::Error;
};

// An operation's precondition on the input algebra fails (e.g. the base of a
// cohomology computation does not satisfy the identity); carries the
// counterexample found.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Catalog data files: missing entries, bad schema, duplicate names.
class CatalogError : public Error {
public:
    using Error::Error;
};

// Valid request outside the implemented range (identity degree != 3 for
// constraint extraction, unsupported finite-field prime, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace extalg
