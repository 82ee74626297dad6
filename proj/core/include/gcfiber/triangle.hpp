#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gcfiber/exact.hpp"
#include "gcfiber/linalg.hpp"

namespace gcfiber {

/// Entry lambda_{i,k}: the i-th largest eigenvalue of the leading k x k block.
/// One-based, 1 <= i <= k <= n.
struct TrianglePosition {
  int i = 1;
  int k = 1;

  friend auto operator<=>(const TrianglePosition&, const TrianglePosition&) = default;
};

std::string to_string(TrianglePosition p);

/// Gelfand-Cetlin triangle. Row k (1-based) holds k values in non-increasing
/// order; row n is the orbit spectrum and rows 1..n-1 are the momentum value.
///
/// Construction checks only the shape. Inequalities are the business of
/// validate_triangle, since callers need diagnostics rather than an exception.
class GCTriangle {
 public:
  GCTriangle() = default;
  explicit GCTriangle(std::vector<std::vector<Exact>> rows);

  /// lambda first, then rows 1..n-1 (the layout of the JSON document).
  static GCTriangle from_parts(std::vector<Exact> lambda, std::vector<std::vector<Exact>> momentum_rows);
  static GCTriangle from_doubles(const std::vector<std::vector<double>>& rows);

  int n() const noexcept { return static_cast<int>(rows_.size()); }
  const Exact& at(TrianglePosition p) const { return rows_[p.k - 1][p.i - 1]; }
  const Exact& at(int i, int k) const { return rows_[k - 1][i - 1]; }
  const std::vector<Exact>& row(int k) const { return rows_[k - 1]; }
  const std::vector<std::vector<Exact>>& rows() const noexcept { return rows_; }
  const std::vector<Exact>& lambda() const { return rows_.back(); }

  std::vector<double> row_values(int k) const;
  std::vector<std::vector<double>> to_doubles() const;
  Spectrum spectrum() const;

  /// Every position, row by row from the bottom (k = 1) up.
  std::vector<TrianglePosition> positions() const;

  friend bool operator==(const GCTriangle&, const GCTriangle&) = default;

 private:
  std::vector<std::vector<Exact>> rows_;
};

struct TriangleViolation {
  TrianglePosition upper;  // the entry that should be the larger one
  TrianglePosition lower;
  double amount = 0.0;     // value(lower) - value(upper) > tol
};

struct TriangleValidation {
  bool ok = true;
  std::vector<TriangleViolation> violations;

  explicit operator bool() const noexcept { return ok; }
  std::string describe() const;
};

/// Row monotonicity and interlacing lambda_{i,k+1} >= lambda_{i,k} >= lambda_{i+1,k+1},
/// each allowed to fail by at most `tol`. Exact comparisons are used, so tol = 0
/// is the exact-input mode.
TriangleValidation validate_triangle(const GCTriangle& t, double tol);

/// max |t_ik - values_ik| over all entries; shapes must agree.
double max_deviation(const GCTriangle& t, const std::vector<std::vector<double>>& values);

}  // namespace gcfiber
