#pragma once

#include <stdexcept>
#include <string>

namespace bstab {

/// Failure categories; these map one-to-one onto the C API status codes.
enum class ErrorCode {
  InvalidArgument = 1,  ///< malformed value (bad rational, unknown kind, wrong basis size)
  Parse = 2,            ///< malformed JSON or class description
  Precondition = 3,     ///< well-formed input that violates an operation's precondition
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace bstab
