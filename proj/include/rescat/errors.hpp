#pragma once

#include <stdexcept>
#include <string>

namespace rescat {

// Exit codes follow the CLI contract: 1 internal invariant, 2 bad input or
// violated precondition, 3 resource cutoff.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 1; }
};

class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

class InvariantError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 1; }
};

// Upper bound on S-pair reductions in a single Groebner computation.
struct Limits {
  long max_pair_reductions = 4'000'000;
};
Limits& limits();

}  // namespace rescat
