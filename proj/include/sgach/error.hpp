#pragma once

#include <stdexcept>
#include <string>

namespace sgach {

enum class ErrorCode {
  invalid_argument,  // unknown vertex, u == v, malformed witness, ...
  invalid_graph,     // loop, duplicate edge, digon at construction
  parse,             // malformed text input
  size_guard,        // input exceeds a configured search limit
  not_identifiable,  // merge requested on a non-identifiable pair
  invalid_solution,  // 3-partition solution does not solve the instance
  io,
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

}  // namespace sgach
