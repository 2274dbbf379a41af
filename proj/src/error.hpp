#pragma once

#include <stdexcept>
#include <string>

namespace deltavec {

/// Failure categories shared by every module. The C API maps these one to one
/// onto dv_status codes.
enum class ErrorCode {
    InvalidArgument,
    Parse,
    SingularMatrix,
    BudgetExceeded,
    IndexOutOfBounds,
    InvalidForm,
    DetMismatch,
    UnsupportedMass,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace deltavec
