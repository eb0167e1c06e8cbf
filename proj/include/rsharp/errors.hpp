#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsharp {

enum class ErrorKind {
    SyntaxError,
    UnknownVariable,
    NegativeExponent,
    DegreeCapExceeded,
    NotMixedHomogeneous,
    NonpositiveWeight,
    HypothesisViolation,
    InapplicableCondition,
    AdaptationRequired,
    IrrationalAdaptationRoot,
    DegenerateBox,
    UniquenessViolation,
    ConsistencyFailure,
};

const char* error_kind_name(ErrorKind k);

// User-facing errors map to exit code 2, ConsistencyFailure/UniquenessViolation to 3.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    bool is_internal() const {
        return kind_ == ErrorKind::ConsistencyFailure || kind_ == ErrorKind::UniquenessViolation;
    }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t offset, const std::string& msg)
        : Error(kind, msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void consistency_failure(const std::string& what) {
    throw Error(ErrorKind::ConsistencyFailure, "consistency check failed: " + what);
}

}  // namespace rsharp
