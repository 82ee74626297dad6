#pragma once

namespace gcfiber {

/// Numerical thresholds shared by every module.
struct ToleranceConfig {
  double eps_eq = 1e-8;     // snapping of near-equal triangle entries, relative to the spectrum spread
  double eps_spec = 1e-10;  // spectrum agreement
  double eps_rank = 1e-7;   // relative singular-value cutoff
  double eps_iso = 1e-8;    // isotropy residual bound

  /// Throws InvalidArgument unless all are positive and eps_rank > eps_spec.
  void validate() const;
};

/// Relative tolerance for grouping eigenvalues into clusters (commutant bases).
inline constexpr double kClusterTolerance = 1e-8;

}  // namespace gcfiber
