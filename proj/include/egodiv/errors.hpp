#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egodiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or forbidden input (bad edge, bad CSV row, invalid config).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input failed to parse at a specific line of a text file.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Design matrix without full column rank.
class SingularDesignError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

/// A matching experiment cannot run (empty treatment or control group).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace egodiv
