#pragma once

// Explicit points of a prescribed fiber, and a walk along it.

#include <vector>

#include "gcfiber/linalg.hpp"
#include "gcfiber/tolerance.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

/// Border data for [[A_k, x], [x^dagger, a]].
struct BorderedExtension {
  std::vector<Complex> x;        // ambient basis, length k
  double a = 0.0;
  std::vector<double> weights;   // |x|^2 on each retained eigenvalue of A_k
  HermitianMatrix matrix;
};

/// Interlacing slack accepted by bordered_extension, relative to max(1, |values|).
inline constexpr double kInterlacingSlack = 1e-12;
/// Relative distance under which a source and a target value are deflated.
inline constexpr double kDeflationTolerance = 1e-9;

BorderedExtension bordered_extension_data(const HermitianMatrix& a_k, const Spectrum& target,
                                          double eps_spec = ToleranceConfig{}.eps_spec);

/// (k+1) x (k+1) matrix with leading block exactly A_k and spectrum `target`.
/// Throws InterlacingViolation or SpectrumMismatch.
HermitianMatrix bordered_extension(const HermitianMatrix& a_k, const Spectrum& target,
                                   double eps_spec = ToleranceConfig{}.eps_spec);

struct CommutantBasis {
  int level = 0;
  std::vector<SkewHermitianMatrix> generators;
};

/// Real basis of {S skew-Hermitian : [S, A_k] = 0}, one block of m^2
/// generators per eigenvalue cluster of size m.
CommutantBasis commutant_basis(const HermitianMatrix& a_k, double eps = kClusterTolerance);

/// A point with momentum triangle t, randomized inside its fiber by `seed`.
HermitianMatrix base_point(const GCTriangle& t, RandomSeed seed,
                           double eps_spec = ToleranceConfig{}.eps_spec);

/// (U (+) I) A (U (+) I)^dagger with U = exp(S), S a random element of the
/// commutant of A_k. Leaves the momentum triangle unchanged.
HermitianMatrix fiber_step(const HermitianMatrix& a, int k, RandomSeed seed);
HermitianMatrix fiber_step(const HermitianMatrix& a, int k, std::mt19937_64& engine);

/// `count` points, each a walk of `steps_per_sample` fiber steps from the base
/// point with k cycling through 1..n.
std::vector<HermitianMatrix> sample_fiber(const GCTriangle& t, int count, int steps_per_sample, RandomSeed seed,
                                          double eps_spec = ToleranceConfig{}.eps_spec);

}  // namespace gcfiber
