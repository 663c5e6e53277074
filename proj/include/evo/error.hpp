#ifndef EVO_ERROR_HPP
#define EVO_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evo {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different coefficient fields (e.g. GF(5) vs GF(7)).
struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Operands belong to different ring contexts.
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// A stated precondition of an operation does not hold (x not in I,
/// codimension mismatch, unsupported module shape, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A Groebner computation exceeded its reduction-step budget.
struct BudgetExceededError : Error {
    uint64_t steps_used;
    BudgetExceededError(const std::string& what, uint64_t used)
        : Error(what), steps_used(used) {}
};

/// Positioned error from the text-format parsers.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace evo

#endif
