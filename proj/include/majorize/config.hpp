#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majorize {

/// Thrown when an input violates an operation's precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical routine fails or an a-posteriori check rejects its own output.
class computation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical tolerances shared by the floating-point stack.
///
/// `sum` is scaled by the prefix length, `log` is absolute on natural-log
/// prefix sums, `sv`, `eig` and `recon` are relative to the operator norm of
/// the input.  Entries below `prod_floor` are treated as exact zeros whenever
/// products are accumulated in the log domain.
struct Tolerances {
  double sum = 1e-12;
  double log = 1e-10;
  double sv = 1e-9;
  double eig = 1e-8;
  double recon = 1e-10;
  double prod_floor = 1e-300;
};

/// Largest matrix dimension the dense layer accepts.
inline constexpr std::size_t kDeskLimit = 64;

inline void require(bool condition, const std::string& message) {
  if (!condition) throw input_error(message);
}

}  // namespace majorize
