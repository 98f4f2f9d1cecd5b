#pragma once

#include <stdexcept>
#include <string>

namespace ein {

// Base of everything this library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (bad parameters, bad range).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// (e,a,b,c) outside the admissible region; the message names the violated
// constraint, e.g. "b >= a violated".
class InvalidParams : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// An exact identity that must hold for valid input failed.
class VerificationError : public Error {
public:
  using Error::Error;
};

// random_monad ran out of retries.
class ConstructionError : public Error {
public:
  ConstructionError(const std::string& failing_check, int attempts)
      : Error("monad construction failed after " + std::to_string(attempts) +
              " attempts; last failing check: " + failing_check),
        failing_check_(failing_check) {}

  const std::string& failing_check() const noexcept { return failing_check_; }

private:
  std::string failing_check_;
};

}  // namespace ein
