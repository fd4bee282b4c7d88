#pragma once

#include <stdexcept>
#include <string>

namespace mldp {

enum class Status {
  ok = 0,
  invalid_argument,
  parse_error,
  not_permutation,
  too_large,
  overflow,
};

/// Library failure. Carries a Status so bindings can map errors to codes
/// without matching on message text.
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace mldp
