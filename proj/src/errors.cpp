#include "polargap/errors.hpp"

namespace polargap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_real_roots: return "NonRealRoots";
    case ErrorCode::unordered_roots: return "UnorderedRoots";
    case ErrorCode::non_zero_sum: return "NonZeroSum";
    case ErrorCode::pole_proximity: return "PoleProximity";
    case ErrorCode::non_real_result: return "NonRealResult";
    case ErrorCode::non_positive_density: return "NonPositiveDensity";
    case ErrorCode::missing_derivative: return "MissingDerivative";
    case ErrorCode::denominator_zero: return "DenominatorZero";
    case ErrorCode::singular_system: return "SingularSystem";
    case ErrorCode::no_linear_fit: return "NoLinearFit";
    case ErrorCode::zero_e_alpha: return "ZeroEalpha";
    case ErrorCode::negative_g2: return "NegativeG2";
    case ErrorCode::degenerate_branch: return "DegenerateBranch";
    case ErrorCode::gamma_not_found: return "GammaNotFound";
    case ErrorCode::zero_denominator_constant: return "ZeroDenominatorConstant";
    case ErrorCode::not_constant_product: return "NotConstantProduct";
    case ErrorCode::not_a_cusp: return "NotACusp";
    case ErrorCode::poor_fit: return "PoorFit";
    case ErrorCode::integration_failure: return "IntegrationFailure";
    case ErrorCode::wronskian_drift: return "WronskianDrift";
    case ErrorCode::edge_count_mismatch: return "EdgeCountMismatch";
    case ErrorCode::range_too_small: return "RangeTooSmall";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace polargap
