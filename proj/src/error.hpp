#pragma once

#include <stdexcept>
#include <string>

namespace covsys {

enum class ErrorCode {
    InvalidArgument,
    FieldMismatch,
    ZeroIdeal,
    CapExceeded,
    Overflow,
    Unsupported,
    Parse,
    Domain,
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

} // namespace covsys
