#pragma once

#include <stdexcept>
#include <string>

namespace latbench {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration (bad lattice, bad key, ...). CLI exit code 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Global extents not divisible by the process grid, or local lattice below the floor.
class DecompositionError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

/// Parameter-file syntax or unknown-key error; carries the 1-based line number.
class ParseError : public ConfigError {
public:
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// API misuse between components (mismatched geometries, aliased fields, ...).
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Transport-level failure (mismatched collectives, dead worker).
class TransportError : public Error {
public:
  using Error::Error;
};

/// The CG solver hit its iteration cap; carries the best residual reached.
class NonConvergence : public Error {
public:
  NonConvergence(long iterations, double best_residual)
      : Error("cg failed to converge after " + std::to_string(iterations) +
              " iterations, best relative residual " + std::to_string(best_residual)),
        iterations_(iterations),
        best_residual_(best_residual) {}
  long iterations() const { return iterations_; }
  double best_residual() const { return best_residual_; }

private:
  long iterations_;
  double best_residual_;
};

}  // namespace latbench
