#pragma once

#include <stdexcept>
#include <string>

namespace polysft {

// Error categories shared with the C API status codes.
enum class ErrorCode {
    Usage = 1,            // bad argument to an operation
    Parse = 2,            // malformed JSON or text input
    GroupMismatch = 3,
    AlphabetMismatch = 4,
    Domain = 5,           // SupportOutOfDomain, DomainTooSmall, RadiusTooSmall
    Kind = 6,             // NotAQuotient, NotAnEmbedding, ChainTypeMismatch
    Relation = 7,         // RelationViolation, NonInjectiveOnSupport, ProjectionIncomplete
    Lattice = 8,          // LatticeNotPreserved, singular basis
    Unsupported = 9,
    Internal = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace polysft
