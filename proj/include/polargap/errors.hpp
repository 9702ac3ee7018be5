#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polargap {

enum class ErrorCode {
  non_real_roots,
  unordered_roots,
  non_zero_sum,
  pole_proximity,
  non_real_result,
  non_positive_density,
  missing_derivative,
  denominator_zero,
  singular_system,
  no_linear_fit,
  zero_e_alpha,
  negative_g2,
  degenerate_branch,
  gamma_not_found,
  zero_denominator_constant,
  not_constant_product,
  not_a_cusp,
  poor_fit,
  integration_failure,
  wronskian_drift,
  edge_count_mismatch,
  range_too_small,
  no_convergence,
  invalid_argument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the message names the
/// violated precondition and the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polargap
