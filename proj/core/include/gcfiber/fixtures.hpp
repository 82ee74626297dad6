#pragma once

// Triangles with a prescribed equality pattern, and the regression corpus
// built from them.

#include <optional>
#include <string>
#include <vector>

#include "gcfiber/pattern.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

using PositionGroup = std::vector<TrianglePosition>;

/// Diamond of side l with its lowest vertex at (p, q): row q + j covers
/// indices p + max(0, j - l + 1) .. p + min(j, l - 1), j = 0..2l-2.
PositionGroup diamond_positions(int p, int q, int l);

/// {(p + s, q + s + t) : 0 <= s < b, 0 <= t < a}. a = b gives the diamond.
PositionGroup parallelogram_positions(int p, int q, int a, int b);

/// Triangle over `lambda` in which each group is exactly one chain of equal
/// values and no other entries are equal, apart from entries pinned by
/// repeated values of lambda. Exact arithmetic throughout.
/// Throws UnrealizablePattern when the groups cannot be realized this way.
GCTriangle realize_pattern(const std::vector<Exact>& lambda, const std::vector<PositionGroup>& groups);

/// (n, n-1, ..., 1)
std::vector<Exact> generic_lambda(int n);

struct FixtureExpectation {
  int dimension = 0;
  FiberKind kind = FiberKind::Regular;
  bool lagrangian = true;
  std::optional<TopologyDescriptor> topology;
  std::optional<std::vector<int>> g_dims;
  std::optional<std::vector<int>> h_prime_dims;
};

struct Fixture {
  std::string name;
  std::string family;
  GCTriangle triangle;
  FixtureExpectation expected;
};

/// (2) ; (2,2) over (3,2,1): the fiber is a 3-sphere.
Fixture spherical_fixture();

/// Two 3x3 diamonds sharing their middle, n = 7, lambda = (7,...,1).
Fixture overlapping_diamonds_fixture();

/// Every family for 2 <= n <= n_max: regular interiors, elliptic pairs,
/// diamonds, parallelograms, overlapping diamonds, and regular points of
/// orbits with a repeated eigenvalue. `seed` drives the random regular points.
std::vector<Fixture> build_corpus(int n_max, RandomSeed seed);

}  // namespace gcfiber
