#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svcplan {

// Exit codes reported by the CLI; library errors carry the code they map to.
enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  Validation = 2,
  NoEntry = 3,
  UnsatisfiableGoal = 4,
  UnreachableGoal = 5,
  NegativeCycle = 6,
};

class Error : public std::runtime_error {
public:
  Error(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ExitCode code() const noexcept { return code_; }

private:
  ExitCode code_;
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& message)
      : Error(ExitCode::Validation, message) {}
};

struct NoEntryError : Error {
  explicit NoEntryError(const std::string& message)
      : Error(ExitCode::NoEntry, message) {}
};

struct UnsatisfiableGoalError : Error {
  explicit UnsatisfiableGoalError(const std::string& message)
      : Error(ExitCode::UnsatisfiableGoal, message) {}
};

struct UnreachableGoalError : Error {
  explicit UnreachableGoalError(const std::string& message)
      : Error(ExitCode::UnreachableGoal, message) {}
};

struct NegativeCycleError : Error {
  NegativeCycleError(std::size_t vertex, const std::string& message)
      : Error(ExitCode::NegativeCycle, message), vertex(vertex) {}

  std::size_t vertex;
};

// Raised when a resolved plan violates its own structural guarantees.
struct PlanIntegrityError : Error {
  explicit PlanIntegrityError(const std::string& message)
      : Error(ExitCode::Validation, message) {}
};

}  // namespace svcplan
