#pragma once

#include <stdexcept>
#include <string>

namespace rydanneal {

// Invalid or inconsistent configuration. `path` names the offending field
// (dotted, e.g. "schedule.tau_us") when one is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A propagation or sampling step could not produce a trustworthy result.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two atoms closer than the Leroy radius of their species pair.
class SpacingError : public std::invalid_argument {
 public:
  SpacingError(int first, int second, double distance, double limit);

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

}  // namespace rydanneal
