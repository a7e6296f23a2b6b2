#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sct {

/// Error thrown by library operations. `code()` is a stable machine-readable
/// identifier (e.g. "NotAssociative", "NotSNormal"); `what()` adds a witness.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

/// Breach of an internal invariant that user input can never legitimately
/// trigger. Any sighting is a bug in this library.
[[noreturn]] inline void fail_internal(const std::string& message) {
    throw Error("InternalError", message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
    if (!cond) fail(code, message);
}

} // namespace sct
