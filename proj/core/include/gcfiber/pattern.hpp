#pragma once

// Combinatorics of a Gelfand-Cetlin triangle: which adjacent entries are
// equal, how they group into chains, and what that says about the fiber.

#include <set>
#include <string_view>
#include <vector>

#include "gcfiber/triangle.hpp"

namespace gcfiber {

/// Two adjacent positions carrying the same value. Adjacency is horizontal
/// (i,k)-(i+1,k) or diagonal (i,k)-(i,k+1), (i,k)-(i+1,k+1).
struct EqualPair {
  TrianglePosition a;
  TrianglePosition b;

  friend auto operator<=>(const EqualPair&, const EqualPair&) = default;
};

struct EqualityPattern {
  int n = 0;
  std::vector<EqualPair> equal_pairs;  // sorted, a < b
  /// Positions pinned by the spectrum alone: lambda_i == lambda_{i+n-k}.
  /// Every row-n position is forced.
  std::set<TrianglePosition> forced;

  bool is_forced(TrianglePosition p) const { return forced.contains(p); }
};

struct RowInterval {
  int k = 0;
  int first_i = 0;
  int last_i = 0;
};

/// Connected component of equal adjacent entries.
struct Chain {
  std::vector<TrianglePosition> positions;  // sorted by (i, k)
  Exact value;
  int first_row = 0;
  std::vector<int> row_counts;          // l_1..l_s over consecutive rows from first_row
  std::vector<RowInterval> intervals;   // one per row, same order as row_counts
  bool all_forced = false;              // every position pinned by the spectrum

  /// Sum of l_a over consecutive rows with l_a == l_{a-1}.
  int dimension_deficit() const;
  bool has_repeated_count() const;
  /// Row counts 1,2,..,l,..,2,1 (l >= 2) with intervals widening by one
  /// position per row then shrinking, as in a diamond of equalities.
  bool is_perfect_diamond() const;
  /// l for a perfect diamond, 0 otherwise.
  int diamond_size() const;
};

enum class FiberKind { Regular, Elliptic, Diamond, MultiDiamond, SymmetricOverlapping, GeneralDegenerate };

std::string_view to_string(FiberKind kind) noexcept;

struct FiberClassification {
  FiberKind kind = FiberKind::Regular;
  bool lagrangian = true;
};

struct TopologyDescriptor {
  std::vector<int> su_factors;  // SU(l) factors, l >= 2
  int torus_dim = 0;
  bool certified = false;

  /// sum (l^2 - 1) + torus_dim
  int dimension() const;
};

/// sum of m^2 over multiplicities m of the distinct values.
int sum_squared_multiplicities(const std::vector<Exact>& values);
int sum_squared_multiplicities(const Spectrum& values);

/// N = (n^2 - sum m_j^2) / 2, half the orbit dimension.
int regular_fiber_dim(const Spectrum& lambda);
int regular_fiber_dim(const std::vector<Exact>& lambda);

/// dim U_lambda = sum m_j^2.
int u_lambda_dim(const Spectrum& lambda);
int u_lambda_dim(const std::vector<Exact>& lambda);

/// True when lambda has no repeated values.
bool is_generic_spectrum(const std::vector<Exact>& lambda);

EqualityPattern extract_pattern(const GCTriangle& t);

/// Components of equal-valued adjacent positions. Positions without an equal
/// neighbour are not chains. Throws NonContiguousChain if a chain meets a row
/// in a non-contiguous index set.
std::vector<Chain> chains(const EqualityPattern& p, const GCTriangle& t);

/// N minus the deficits of all chains.
int fiber_dimension(const GCTriangle& t);

FiberClassification classify(const GCTriangle& t);

TopologyDescriptor topology(const GCTriangle& t);

/// sum m^2 over the multiplicities in row k, for k = 1..n.
std::vector<int> g_k_dims(const GCTriangle& t);

/// Everything the combinatorial side knows about a triangle, computed once.
struct PatternAnalysis {
  int n = 0;
  int regular_dim = 0;  // N
  int dimension = 0;
  EqualityPattern pattern;
  std::vector<Chain> chains;
  FiberClassification classification;
  TopologyDescriptor topology;
  std::vector<int> g_dims;
  int u_lambda = 0;
};

PatternAnalysis analyze_pattern(const GCTriangle& t);

}  // namespace gcfiber
