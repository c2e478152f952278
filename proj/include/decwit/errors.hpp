#pragma once

#include <stdexcept>
#include <string>

namespace decwit {

// A violated internal invariant: either a bug in this library or a false
// assumption baked into a certified range.  The CLI maps this to exit code 3,
// as opposed to std::invalid_argument (bad user input, exit code 2).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A witness certificate failed one of its verification checks.  Carries the
// name of the failing check so callers can report it precisely.
struct check_failure : internal_error {
  std::string check;

  explicit check_failure(std::string check_name, const std::string& detail)
      : internal_error("witness check failed [" + check_name + "]: " + detail),
        check(std::move(check_name)) {}
};

}  // namespace decwit
