#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace usdkit {

// Violation kinds reported by instance validation. One ValidationError
// carries every violation found, not just the first.
enum class ViolationKind {
  weight_sum,     // prior pair or weight vector: bad sum, negative or non-finite entry
  overlap_range,  // an overlap outside [0, 1] or non-finite
  parallel_norm,  // sum of squared overlaps >= 1 - EPS_SUM, interval degenerates
  prior_order,    // p1 > p2
  dominance,      // p1 * alpha_i > p2 * beta_i for some i
  mismatch,       // vector lengths disagree
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Operation failures. Each is its own type so callers can catch precisely.
struct ZeroPriorError : std::runtime_error {
  explicit ZeroPriorError(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct MismatchError : std::runtime_error {
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};
struct NormalizationError : std::runtime_error {
  explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroDenominatorError : std::runtime_error {
  explicit ZeroDenominatorError(const std::string& what) : std::runtime_error(what) {}
};
// Malformed sweep specifications and CLI argument combinations.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace usdkit
