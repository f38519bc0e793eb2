#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// Raised when an exact enumeration is asked to go beyond its hard cap.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a forced split finds no proper bipartition in the sample set.
class NoFeasibleSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed element-set input; carries the 1-based source line.
class TleParseError : public std::runtime_error {
 public:
  TleParseError(const std::string& message, int line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line_number_(line_number) {}

  int line_number() const { return line_number_; }

 private:
  int line_number_ = 0;
};

// Raised when a propagation request is too far from the element epoch.
class StaleEpochError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cforge
