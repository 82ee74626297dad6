#pragma once

// Numerical checks on fiber points: KKS pairing, tangent spaces from two
// independent constructions, ranks, isotropy and dim h'_k.

#include <string>
#include <vector>

#include "gcfiber/linalg.hpp"
#include "gcfiber/pattern.hpp"
#include "gcfiber/tolerance.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

struct TangentGenerator {
  int level = 0;
  SkewHermitianMatrix y;         // n x n, supported on the leading level x level block
  std::vector<double> vector;    // [Y, A] flattened, length n^2
};

/// (diagonal; sqrt(2) Re of the strict upper triangle; sqrt(2) Im of it),
/// an isometry from Hermitian matrices with the Frobenius norm onto R^{n^2}.
std::vector<double> flatten_hermitian(const ComplexMatrix& h);

/// omega_A([Y,A],[Z,A]) as -Im tr(A[Y,Z]).
double kks_pairing(const HermitianMatrix& a, const SkewHermitianMatrix& y, const SkewHermitianMatrix& z);

/// S (+) 0 for every commutant generator S of every leading block A_k.
std::vector<TangentGenerator> tangent_generators_commutant(const HermitianMatrix& a,
                                                           double cluster_eps = kClusterTolerance);

/// Per level k, a basis of the Y_k in u(k) with [A_k, Y_k] vanishing on the
/// leading (k-1) x (k-1) block and with no component of column k of [A_k, Y_k]
/// along an eigenspace of A_{k-1} that A_k keeps at full multiplicity.
std::vector<TangentGenerator> tangent_generators_border(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// Numeric rank of the stacked generator vectors. Singular values count when
/// above eps_rank * max(sigma_max, ||A||_max).
int generator_rank(const std::vector<TangentGenerator>& gens, double eps_rank, double scale);

int numeric_fiber_dim(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// max |kks(A, Y_i, Y_j)| / ((1 + ||A||_max) max(1, |v_i| |v_j|)) over
/// commutant generator pairs.
double isotropy_residual(const HermitianMatrix& a);
double isotropy_residual(const HermitianMatrix& a, const std::vector<TangentGenerator>& gens);

/// dim h'_k for k = 1..n: nullity on u(k-1) of [S, A_{k-1}] = 0, S x_k = 0.
std::vector<int> h_prime_dims_numeric(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// Everything measured at one point.
struct PointDiagnostics {
  int commutant_rank = 0;
  int border_rank = 0;
  int union_rank = 0;
  double isotropy = 0.0;
  std::vector<int> h_prime;
  bool rank_stable = true;  // commutant rank unchanged with eps_rank scaled by 10 and 1/10
};

PointDiagnostics diagnose_point(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

struct FiberReport {
  GCTriangle triangle;
  int regular_dim = 0;
  int u_lambda = 0;
  int dim_combinatorial = 0;
  int dim_groups = 0;
  int dim_numeric = 0;
  FiberClassification classification;
  TopologyDescriptor topology;
  std::vector<Chain> chains;
  double isotropy_residual = 0.0;
  std::vector<int> h_prime_dims;
  std::vector<int> g_dims;
  bool consistent = false;

  bool spans_agree = true;
  bool rank_stable = true;
  int samples = 0;
  int steps_per_sample = 0;
  RandomSeed seed;
  ToleranceConfig tolerances;
  std::vector<PointDiagnostics> points;
  std::vector<std::string> warnings;
};

/// Walk length between the base point and each report sample, per unit of n.
inline constexpr int kReportStepsPerLevel = 2;

FiberReport full_report(const GCTriangle& t, int samples, const ToleranceConfig& cfg, RandomSeed seed);

}  // namespace gcfiber
