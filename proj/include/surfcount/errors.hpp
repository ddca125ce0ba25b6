#pragma once

#include <stdexcept>
#include <string>

namespace surfcount {

/// Malformed or unsupported user input (files, parameters). CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated internal invariant. CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void throw_internal(const char* file, int line, const std::string& what);

}  // namespace surfcount

#define SURFCOUNT_CHECK(cond, msg)                                   \
  do {                                                               \
    if (!(cond)) ::surfcount::throw_internal(__FILE__, __LINE__, (msg)); \
  } while (false)
