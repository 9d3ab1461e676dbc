#pragma once

#include <stdexcept>
#include <string>

namespace freeaut {

// Error categories, mapped to CLI exit codes in cli.cpp.
enum class Errc {
    ContextMismatch,
    MissingImage,
    NotXYLinear,
    ZeroInput,
    NonHomogeneous,
    NotInvertible,
    HypothesisViolated,
    IdentityInductionFailed,
    ShapeViolation,
    ResourceLimit,
    Parse,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace freeaut
