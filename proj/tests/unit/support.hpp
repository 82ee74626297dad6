#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <vector>

#include "gcfiber/pattern.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

inline void PrintTo(const GCTriangle& t, std::ostream* os) {
  for (int k = 1; k <= t.n(); ++k) {
    *os << (k > 1 ? " ; " : "");
    for (std::size_t i = 0; i < t.row(k).size(); ++i) *os << (i ? "," : "") << to_decimal_string(t.row(k)[i]);
  }
}

}  // namespace gcfiber

namespace gcfiber::testing {

/// Rows 1..n as decimal strings; the last row is lambda.
inline GCTriangle triangle(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Exact>> out;
  for (const auto& r : rows) {
    std::vector<Exact> row;
    for (const char* v : r) row.push_back(parse_decimal(v));
    out.push_back(std::move(row));
  }
  return GCTriangle(std::move(out));
}

/// Entrywise within tol and with the same equality pattern.
inline bool same_fiber(const GCTriangle& a, const GCTriangle& b, double tol = 1e-10) {
  return a.n() == b.n() && max_deviation(a, b.to_doubles()) <= tol &&
         extract_pattern(a).equal_pairs == extract_pattern(b).equal_pairs;
}

/// dim h'_k at a generic fiber point, read off the triangle: a value of
/// multiplicity m in row k-1 contributes (m-1)^2 when row k holds it m-1
/// times, and m^2 otherwise.
inline std::vector<int> h_prime_from_rows(const GCTriangle& t) {
  std::vector<int> out{0};
  for (int k = 2; k <= t.n(); ++k) {
    std::map<Exact, int> lower, upper;
    for (const auto& v : t.row(k - 1)) ++lower[v];
    for (const auto& v : t.row(k)) ++upper[v];
    int h = 0;
    for (const auto& [v, m] : lower) {
      const auto it = upper.find(v);
      const int up = it == upper.end() ? 0 : it->second;
      h += up == m - 1 ? (m - 1) * (m - 1) : m * m;
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace gcfiber::testing
