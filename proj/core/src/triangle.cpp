#include "gcfiber/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gcfiber/error.hpp"

namespace gcfiber {

std::string to_string(TrianglePosition p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.k) + ")"; }

GCTriangle::GCTriangle(std::vector<std::vector<Exact>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::InvalidTriangle, "triangle needs at least one row");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k + 1)
      throw Error(ErrorCode::InvalidTriangle, "row " + std::to_string(k + 1) + " has " +
                                                  std::to_string(rows_[k].size()) + " entries, expected " +
                                                  std::to_string(k + 1));
  }
}

GCTriangle GCTriangle::from_parts(std::vector<Exact> lambda, std::vector<std::vector<Exact>> momentum_rows) {
  momentum_rows.push_back(std::move(lambda));
  return GCTriangle(std::move(momentum_rows));
}

GCTriangle GCTriangle::from_doubles(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<Exact>> exact;
  exact.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Exact> r;
    r.reserve(row.size());
    for (double v : row) r.push_back(from_double(v));
    exact.push_back(std::move(r));
  }
  return GCTriangle(std::move(exact));
}

std::vector<double> GCTriangle::row_values(int k) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  for (const auto& v : row(k)) out.push_back(to_double(v));
  return out;
}

std::vector<std::vector<double>> GCTriangle::to_doubles() const {
  std::vector<std::vector<double>> out;
  for (int k = 1; k <= n(); ++k) out.push_back(row_values(k));
  return out;
}

Spectrum GCTriangle::spectrum() const { return Spectrum(row_values(n())); }

std::vector<TrianglePosition> GCTriangle::positions() const {
  std::vector<TrianglePosition> out;
  for (int k = 1; k <= n(); ++k)
    for (int i = 1; i <= k; ++i) out.push_back({i, k});
  return out;
}

std::string TriangleValidation::describe() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << "entry " << to_string(v.lower) << " exceeds " << to_string(v.upper) << " by " << v.amount << "\n";
  return os.str();
}

TriangleValidation validate_triangle(const GCTriangle& t, double tol) {
  TriangleValidation result;
  const Exact slack = from_double(tol);
  auto check = [&](TrianglePosition upper, TrianglePosition lower) {
    const Exact excess = t.at(lower) - t.at(upper);
    if (excess > slack) {
      result.ok = false;
      result.violations.push_back({upper, lower, to_double(excess)});
    }
  };
  for (int k = 1; k <= t.n(); ++k) {
    for (int i = 1; i < k; ++i) check({i, k}, {i + 1, k});
    if (k == t.n()) continue;
    for (int i = 1; i <= k; ++i) {
      check({i, k + 1}, {i, k});
      check({i, k}, {i + 1, k + 1});
    }
  }
  return result;
}

double max_deviation(const GCTriangle& t, const std::vector<std::vector<double>>& values) {
  if (static_cast<int>(values.size()) != t.n()) throw Error(ErrorCode::SizeMismatch, "max_deviation: row count");
  double m = 0.0;
  for (int k = 1; k <= t.n(); ++k) {
    const auto& row = values[static_cast<std::size_t>(k - 1)];
    if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::SizeMismatch, "max_deviation: row length");
    for (int i = 1; i <= k; ++i) m = std::max(m, std::abs(to_double(t.at(i, k)) - row[static_cast<std::size_t>(i - 1)]));
  }
  return m;
}

}  // namespace gcfiber
