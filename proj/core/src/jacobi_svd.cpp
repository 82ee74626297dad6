#include <algorithm>
#include <cmath>
#include <numeric>

#include "gcfiber/error.hpp"
#include "gcfiber/linalg.hpp"

namespace gcfiber {
namespace {

constexpr int kSvdSweepCap = 80;
constexpr double kOrthogonality = 1e-15;
// Column pairs whose inner product is this small relative to ||M||_F^2 are
// orthogonal for every purpose downstream; rotating them only chases noise.
constexpr double kNegligible = 1e-30;

}  // namespace

SingularValueDecomposition svd_jacobi(const RealMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Column-major working copies: u[j] is column j of the iterate, v[j] of V.
  std::vector<std::vector<double>> u(cols), v(cols, std::vector<double>(cols, 0.0));
  for (std::size_t j = 0; j < cols; ++j) {
    u[j] = m.column(j);
    v[j][j] = 1.0;
  }

  double total = 0.0;
  for (const auto& col : u)
    for (double x : col) total += x * x;
  const double orth = kOrthogonality * std::max(1.0, std::sqrt(static_cast<double>(rows)));
  const double floor = kNegligible * total;

  bool rotated = true;
  int sweep = 0;
  while (rotated) {
    if (sweep++ >= kSvdSweepCap) throw Error(ErrorCode::NonConvergence, "one-sided Jacobi SVD sweep cap reached");
    rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
          alpha += u[i][r] * u[i][r];
          beta += u[j][r] * u[j][r];
          gamma += u[i][r] * u[j][r];
        }
        const double scale = std::sqrt(alpha * beta);
        if (scale == 0.0 || std::abs(gamma) <= orth * scale || std::abs(gamma) <= floor) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const double ui = u[i][r];
          const double uj = u[j][r];
          u[i][r] = c * ui - s * uj;
          u[j][r] = s * ui + c * uj;
        }
        for (std::size_t r = 0; r < cols; ++r) {
          const double vi = v[i][r];
          const double vj = v[j][r];
          v[i][r] = c * vi - s * vj;
          v[j][r] = s * vi + c * vj;
        }
      }
    }
  }

  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (double x : u[j]) s += x * x;
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  SingularValueDecomposition out{std::vector<double>(cols), RealMatrix(cols, cols)};
  for (std::size_t c = 0; c < cols; ++c) {
    out.singular_values[c] = sigma[order[c]];
    for (std::size_t r = 0; r < cols; ++r) out.right_vectors(r, c) = v[order[c]][r];
  }
  return out;
}

std::size_t numeric_rank(std::span<const double> singular_values, double rel_cutoff, double scale) {
  double top = scale;
  for (double s : singular_values) top = std::max(top, s);
  const double cutoff = rel_cutoff * top;
  return static_cast<std::size_t>(
      std::count_if(singular_values.begin(), singular_values.end(), [&](double s) { return s > cutoff; }));
}

std::size_t numeric_rank(const RealMatrix& m, double rel_cutoff, double scale) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Rank is transpose-invariant; orthogonalize the shorter side.
  const auto svd = m.rows() < m.cols() ? svd_jacobi(m.transpose()) : svd_jacobi(m);
  return numeric_rank(svd.singular_values, rel_cutoff, scale);
}

RealMatrix nullspace(const RealMatrix& m, double rel_cutoff, double scale) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) {
    RealMatrix basis(cols, cols);
    for (std::size_t i = 0; i < cols; ++i) basis(i, i) = 1.0;
    return basis;
  }
  const auto svd = svd_jacobi(m);
  const std::size_t rank = numeric_rank(svd.singular_values, rel_cutoff, scale);
  RealMatrix basis(cols, cols - rank);
  for (std::size_t c = rank; c < cols; ++c)
    for (std::size_t r = 0; r < cols; ++r) basis(r, c - rank) = svd.right_vectors(r, c);
  return basis;
}

}  // namespace gcfiber
