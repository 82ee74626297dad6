// Cyclic Jacobi eigensolver for complex Hermitian matrices.
//
// Each rotation first removes the phase of a_pq with a diagonal unitary and
// then applies the classical real symmetric Jacobi rotation, so the combined
// 2x2 transform is V = diag(1, e^{-i phi}) * [[c, s], [-s, c]].

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gcfiber/error.hpp"
#include "gcfiber/linalg.hpp"

namespace gcfiber {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void rotate(ComplexMatrix& a, ComplexMatrix& q, std::size_t p, std::size_t r) {
  const Complex apr = a(p, r);
  const double mag = std::abs(apr);
  if (mag == 0.0) return;
  const Complex phase = apr / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double arr = a(r, r).real();
  const double theta = (arr - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex v_pp = c;
  const Complex v_pr = s;
  const Complex v_rp = -s * std::conj(phase);
  const Complex v_rr = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akr = a(k, r);
    a(k, p) = akp * v_pp + akr * v_rp;
    a(k, r) = akp * v_pr + akr * v_rr;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex ark = a(r, k);
    a(p, k) = std::conj(v_pp) * apk + std::conj(v_rp) * ark;
    a(r, k) = std::conj(v_pr) * apk + std::conj(v_rr) * ark;
  }
  a(p, p) = app - t * mag;
  a(r, r) = arr + t * mag;
  a(p, r) = 0.0;
  a(r, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex qkp = q(k, p);
    const Complex qkr = q(k, r);
    q(k, p) = qkp * v_pp + qkr * v_rp;
    q(k, r) = qkp * v_pr + qkr * v_rr;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& input) {
  const std::size_t n = input.size();
  ComplexMatrix a = input.matrix();
  ComplexMatrix q = ComplexMatrix::identity(n);

  const double threshold = kJacobiOffDiagonalThreshold * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= kJacobiSweepCap)
      throw Error(ErrorCode::NonConvergence, "Jacobi sweep cap reached for n=" + std::to_string(n));
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) rotate(a, q, p, r);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  std::vector<double> values(n);
  ComplexMatrix sorted(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) sorted(r, c) = q(r, order[c]);
  }
  return EigenDecomposition{Spectrum(std::move(values)), UnitaryMatrix(std::move(sorted))};
}

Spectrum eigenvalues(const HermitianMatrix& a) { return eig_hermitian(a).values; }

}  // namespace gcfiber
