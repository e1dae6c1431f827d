#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace realtoric {

// Bad arguments or malformed input data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A problem that parsed fine but is not a valid small cover. When the failure
// is attached to a particular maximal face, face() holds its vertex indices.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::vector<int> face = {})
      : std::runtime_error(what), face_(std::move(face)) {}

  const std::vector<int>& face() const noexcept { return face_; }

 private:
  std::vector<int> face_;
};

// Two computations that must agree did not. Always a bug, never bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace realtoric
