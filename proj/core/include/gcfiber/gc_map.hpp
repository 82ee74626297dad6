#pragma once

// The Gelfand-Cetlin momentum map A -> (eigenvalues of every leading block)
// and its flag-side counterpart Gamma_lambda.

#include <vector>

#include "gcfiber/linalg.hpp"
#include "gcfiber/tolerance.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

using TriangleValues = std::vector<std::vector<double>>;

/// Leading k x k block, 1 <= k <= n.
HermitianMatrix leading_principal(const HermitianMatrix& a, int k);

/// Raw eigenvalues of A_1, ..., A_n, row k descending. No snapping.
TriangleValues momentum_values(const HermitianMatrix& a);

/// Entries closer than eps_eq * spread are merged into one exact value, then
/// interlacing is re-imposed by clamping from row n downwards.
GCTriangle snap_to_pattern(const TriangleValues& values, double eps_eq);

GCTriangle momentum_map(const HermitianMatrix& a, double eps_eq = ToleranceConfig{}.eps_eq);

/// Eigenvalues of the quadratic form diag(lambda) restricted to the flag
/// spanned by the leading columns of c_star. Requires lambda_n > 0.
TriangleValues gamma_lambda_values(const UnitaryMatrix& c_star, const Spectrum& lambda);

GCTriangle gamma_lambda(const UnitaryMatrix& c_star, const Spectrum& lambda,
                        double eps_eq = ToleranceConfig{}.eps_eq);

}  // namespace gcfiber
