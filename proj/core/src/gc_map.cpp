#include "gcfiber/gc_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gcfiber/error.hpp"

namespace gcfiber {

void ToleranceConfig::validate() const {
  if (!(eps_eq > 0 && eps_spec > 0 && eps_rank > 0 && eps_iso > 0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  if (!(eps_rank > eps_spec)) throw Error(ErrorCode::InvalidArgument, "eps_rank must exceed eps_spec");
}

HermitianMatrix leading_principal(const HermitianMatrix& a, int k) {
  if (k < 1 || k > static_cast<int>(a.size()))
    throw Error(ErrorCode::InvalidArgument, "leading_principal: k=" + std::to_string(k) + " out of range");
  const auto kk = static_cast<std::size_t>(k);
  return HermitianMatrix(a.matrix().block(0, 0, kk, kk));
}

TriangleValues momentum_values(const HermitianMatrix& a) {
  TriangleValues rows;
  const int n = static_cast<int>(a.size());
  rows.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) rows.push_back(eigenvalues(leading_principal(a, k)).values());
  return rows;
}

GCTriangle snap_to_pattern(const TriangleValues& values, double eps_eq) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw Error(ErrorCode::InvalidTriangle, "empty triangle");
  const auto& top = values.back();
  const double spread = top.front() - top.back();
  const double scale = spread > 0.0 ? spread : std::max(1.0, std::abs(top.front()));
  const double tol = eps_eq * scale;

  struct Entry {
    double value;
    int i, k;
  };
  std::vector<Entry> entries;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) entries.push_back({values[k - 1][i - 1], i, k});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.value < b.value; });

  TriangleValues snapped = values;
  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t end = start + 1;
    while (end < entries.size() && entries[end].value - entries[end - 1].value <= tol) ++end;
    if (end - start > 1) {
      double sum = 0.0;
      for (std::size_t j = start; j < end; ++j) sum += entries[j].value;
      const double mean = sum / static_cast<double>(end - start);
      for (std::size_t j = start; j < end; ++j) snapped[entries[j].k - 1][entries[j].i - 1] = mean;
    }
    start = end;
  }

  for (int k = n - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) {
      const double hi = snapped[k][i - 1];
      const double lo = snapped[k][i];
      snapped[k - 1][i - 1] = std::clamp(snapped[k - 1][i - 1], lo, hi);
    }
  }
  return GCTriangle::from_doubles(snapped);
}

GCTriangle momentum_map(const HermitianMatrix& a, double eps_eq) { return snap_to_pattern(momentum_values(a), eps_eq); }

TriangleValues gamma_lambda_values(const UnitaryMatrix& c_star, const Spectrum& lambda) {
  const std::size_t n = lambda.size();
  if (c_star.size() != n) throw Error(ErrorCode::SizeMismatch, "gamma_lambda: sizes differ");
  if (n == 0 || !(lambda[n - 1] > 0.0))
    throw Error(ErrorCode::InvalidArgument, "gamma_lambda requires a positive spectrum");

  TriangleValues rows;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gram matrix of the ellipsoid form x^dagger D x on span(c*_1..c*_k).
    ComplexMatrix form(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        Complex s{};
        for (std::size_t j = 0; j < n; ++j) s += std::conj(c_star(j, a)) * lambda[j] * c_star(j, b);
        form(a, b) = s;
      }
    rows.push_back(eigenvalues(HermitianMatrix(form)).values());
  }
  return rows;
}

GCTriangle gamma_lambda(const UnitaryMatrix& c_star, const Spectrum& lambda, double eps_eq) {
  return snap_to_pattern(gamma_lambda_values(c_star, lambda), eps_eq);
}

}  // namespace gcfiber
