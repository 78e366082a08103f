// Error taxonomy shared by the library and the CLI exit codes.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace teleprobe {

// CLI exit codes: 0 success, 2 argument error, 3 numerical-integrity error,
// 4 insufficient statistics.
enum class ExitCode : int {
  ok = 0,
  argument = 2,
  numerical_integrity = 3,
  insufficient_statistics = 4,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, ExitCode code)
      : std::runtime_error(msg), code_(code) {}

  ExitCode exit_code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg)
      : Error(msg, ExitCode::argument) {}
};

// Dimension would exceed the configured qubit cap.
class ResourceError : public ArgumentError {
 public:
  explicit ResourceError(const std::string& msg) : ArgumentError(msg) {}
};

// Diagonal elements are read from populations, not teleported.
class DiagonalElementError : public ArgumentError {
 public:
  explicit DiagonalElementError(const std::string& msg)
      : ArgumentError(msg) {}
};

class NumericalIntegrityError : public Error {
 public:
  explicit NumericalIntegrityError(const std::string& msg)
      : Error(msg, ExitCode::numerical_integrity) {}
};

class InsufficientStatisticsError : public Error {
 public:
  InsufficientStatisticsError(const std::string& msg,
                              std::uint64_t accepted_shots)
      : Error(msg, ExitCode::insufficient_statistics),
        accepted_shots_(accepted_shots) {}

  std::uint64_t accepted_shots() const noexcept { return accepted_shots_; }

 private:
  std::uint64_t accepted_shots_;
};

// The element's population weight rho_mm + rho_nn vanishes; nothing can be
// teleported out of that subspace.
class UnmeasurableElementError : public InsufficientStatisticsError {
 public:
  explicit UnmeasurableElementError(const std::string& msg)
      : InsufficientStatisticsError(msg, 0) {}
};

// No population cleared the scan threshold.
class DegenerateStateError : public InsufficientStatisticsError {
 public:
  explicit DegenerateStateError(const std::string& msg)
      : InsufficientStatisticsError(msg, 0) {}
};

}  // namespace teleprobe
