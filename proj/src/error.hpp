#pragma once

#include <stdexcept>
#include <string>

namespace gm {

// Error taxonomy shared by the library, the C API and the CLI.
// `math` means an exact mathematical check failed on valid input,
// `input` means the input itself was rejected, `inconclusive` means a
// windowed check could not certify either way.
enum class ErrorKind {
    input,
    math,
    inconclusive,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void fail_math(const std::string& msg) { throw Error(ErrorKind::math, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

}  // namespace gm
