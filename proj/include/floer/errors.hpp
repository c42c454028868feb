// errors.hpp
// Error taxonomy for the floer library.  Every failure mode named by the
// module contracts gets its own type so callers (and the CLI exit-code
// mapping) can distinguish input errors from internal invariant failures.
#pragma once

#include <stdexcept>
#include <string>

namespace floer {

// Base for all library errors.  code() is a stable machine-readable tag.
class FloerError : public std::runtime_error {
public:
    FloerError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct NotCoprime : FloerError {
    int i, j;
    NotCoprime(int i_, int j_, const std::string& what)
        : FloerError("NotCoprime", what), i(i_), j(j_) {}
};

struct TooFewFibers : FloerError {
    explicit TooFewFibers(const std::string& what) : FloerError("TooFewFibers", what) {}
};

struct UnsupportedInput : FloerError {
    explicit UnsupportedInput(const std::string& what) : FloerError("Unsupported", what) {}
};

struct NoCongruenceSolution : FloerError {
    explicit NoCongruenceSolution(const std::string& what)
        : FloerError("NoCongruenceSolution", what) {}
};

struct PrecisionFailure : FloerError {
    explicit PrecisionFailure(const std::string& what) : FloerError("PrecisionFailure", what) {}
};

struct ForbiddenLevel : FloerError {
    explicit ForbiddenLevel(const std::string& what) : FloerError("ForbiddenLevel", what) {}
};

struct DifferentialIncomplete : FloerError {
    explicit DifferentialIncomplete(const std::string& what)
        : FloerError("DifferentialIncomplete", what) {}
};

struct DegreeMismatch : FloerError {
    explicit DegreeMismatch(const std::string& what) : FloerError("DegreeMismatch", what) {}
};

struct UnsupportedModel : FloerError {
    explicit UnsupportedModel(const std::string& what) : FloerError("UnsupportedModel", what) {}
};

struct MissingCover : FloerError {
    long long cover_index;
    MissingCover(long long i, const std::string& what)
        : FloerError("MissingCover", what), cover_index(i) {}
};

struct InsufficientAssumptions : FloerError {
    explicit InsufficientAssumptions(const std::string& what)
        : FloerError("InsufficientAssumptions", what) {}
};

// Arithmetic left the int64 range; exact computation refuses to continue.
struct OverflowError : FloerError {
    explicit OverflowError(const std::string& what) : FloerError("Overflow", what) {}
};

// Malformed text input (fractions, JSON job specs).
struct ParseError : FloerError {
    explicit ParseError(const std::string& what) : FloerError("ParseError", what) {}
};

// Broken internal invariant (e.g. the cs orbit-consistency assert).  Never a
// user error; reaching this means the library itself is wrong.
struct InternalCheckFailure : FloerError {
    explicit InternalCheckFailure(const std::string& what)
        : FloerError("InternalCheckFailure", what) {}
};

} // namespace floer
