#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sidlab {

/// A documented precondition of an operation does not hold. `reasons`
/// lists every failed item, not just the first.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(std::vector<std::string> reasons)
      : std::invalid_argument(join(reasons)), reasons_(std::move(reasons)) {}

  const std::vector<std::string>& reasons() const { return reasons_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "precondition failed";
    for (const auto& r : items) out += "; " + r;
    return out;
  }
  std::vector<std::string> reasons_;
};

/// An iterative method hit its iteration limit.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sidlab
