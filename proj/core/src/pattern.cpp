#include "gcfiber/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcfiber/error.hpp"

namespace gcfiber {
namespace {

template <typename Range>
int squared_multiplicities(const Range& values) {
  // Inputs are non-increasing, so equal values are adjacent.
  int total = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i]) ++j;
    const int m = static_cast<int>(j - i);
    total += m * m;
    i = j;
  }
  return total;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t flat_index(TrianglePosition p) {
  return static_cast<std::size_t>(p.k * (p.k - 1) / 2 + (p.i - 1));
}

FiberClassification classify_from(const std::vector<Chain>& all, int dimension, int regular) {
  std::vector<const Chain*> singular;
  for (const auto& c : all)
    if (!c.all_forced) singular.push_back(&c);

  FiberClassification out;
  out.lagrangian = dimension == regular;
  if (singular.empty()) {
    out.kind = FiberKind::Regular;
    return out;
  }
  auto every = [&](auto pred) { return std::all_of(singular.begin(), singular.end(), pred); };
  if (every([](const Chain* c) {
        return std::all_of(c->row_counts.begin(), c->row_counts.end(), [](int l) { return l == 1; });
      })) {
    out.kind = FiberKind::Elliptic;
  } else if (every([](const Chain* c) { return c->is_perfect_diamond(); })) {
    out.kind = singular.size() == 1 ? FiberKind::Diamond : FiberKind::MultiDiamond;
  } else if (every([](const Chain* c) { return !c->has_repeated_count(); })) {
    out.kind = FiberKind::SymmetricOverlapping;
  } else {
    out.kind = FiberKind::GeneralDegenerate;
  }
  return out;
}

TopologyDescriptor topology_from(const std::vector<Chain>& all, FiberKind kind, int dimension, int regular) {
  TopologyDescriptor out;
  out.torus_dim = dimension;
  switch (kind) {
    case FiberKind::Regular:
      out.torus_dim = regular;
      out.certified = true;
      break;
    case FiberKind::Elliptic:
      out.certified = true;
      break;
    case FiberKind::Diamond:
    case FiberKind::MultiDiamond: {
      int su_dim = 0;
      for (const auto& c : all) {
        if (c.all_forced) continue;
        const int l = c.diamond_size();
        out.su_factors.push_back(l);
        su_dim += l * l - 1;
      }
      out.torus_dim = regular - su_dim;
      out.certified = true;
      break;
    }
    case FiberKind::SymmetricOverlapping:
    case FiberKind::GeneralDegenerate:
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(FiberKind kind) noexcept {
  switch (kind) {
    case FiberKind::Regular: return "Regular";
    case FiberKind::Elliptic: return "Elliptic";
    case FiberKind::Diamond: return "Diamond";
    case FiberKind::MultiDiamond: return "MultiDiamond";
    case FiberKind::SymmetricOverlapping: return "SymmetricOverlapping";
    case FiberKind::GeneralDegenerate: return "GeneralDegenerate";
  }
  return "Unknown";
}

int TopologyDescriptor::dimension() const {
  int d = torus_dim;
  for (int l : su_factors) d += l * l - 1;
  return d;
}

int Chain::dimension_deficit() const {
  int deficit = 0;
  for (std::size_t a = 1; a < row_counts.size(); ++a)
    if (row_counts[a] == row_counts[a - 1]) deficit += row_counts[a];
  return deficit;
}

bool Chain::has_repeated_count() const {
  for (std::size_t a = 1; a < row_counts.size(); ++a)
    if (row_counts[a] == row_counts[a - 1]) return true;
  return false;
}

int Chain::diamond_size() const {
  const auto s = static_cast<int>(row_counts.size());
  if (s < 3 || s % 2 == 0) return 0;
  const int l = (s + 1) / 2;
  const int base = intervals.front().first_i;
  for (int j = 0; j < s; ++j) {
    const int expected_first = base + std::max(0, j - (l - 1));
    const int expected_last = base + std::min(j, l - 1);
    const auto& iv = intervals[static_cast<std::size_t>(j)];
    if (iv.first_i != expected_first || iv.last_i != expected_last) return 0;
  }
  return l;
}

bool Chain::is_perfect_diamond() const { return diamond_size() >= 2; }

int sum_squared_multiplicities(const std::vector<Exact>& values) { return squared_multiplicities(values); }
int sum_squared_multiplicities(const Spectrum& values) { return squared_multiplicities(values.values()); }

int regular_fiber_dim(const Spectrum& lambda) {
  const int n = static_cast<int>(lambda.size());
  return (n * n - sum_squared_multiplicities(lambda)) / 2;
}

int regular_fiber_dim(const std::vector<Exact>& lambda) {
  const int n = static_cast<int>(lambda.size());
  return (n * n - sum_squared_multiplicities(lambda)) / 2;
}

int u_lambda_dim(const Spectrum& lambda) { return sum_squared_multiplicities(lambda); }
int u_lambda_dim(const std::vector<Exact>& lambda) { return sum_squared_multiplicities(lambda); }

bool is_generic_spectrum(const std::vector<Exact>& lambda) {
  return sum_squared_multiplicities(lambda) == static_cast<int>(lambda.size());
}

EqualityPattern extract_pattern(const GCTriangle& t) {
  EqualityPattern p;
  p.n = t.n();
  const int n = t.n();
  const auto& lambda = t.lambda();
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      if (lambda[static_cast<std::size_t>(i - 1)] == lambda[static_cast<std::size_t>(i + n - k - 1)])
        p.forced.insert({i, k});

  auto consider = [&](TrianglePosition a, TrianglePosition b) {
    if (t.at(a) == t.at(b)) p.equal_pairs.push_back({std::min(a, b), std::max(a, b)});
  };
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i < k; ++i) consider({i, k}, {i + 1, k});
    if (k == n) continue;
    for (int i = 1; i <= k; ++i) {
      consider({i, k}, {i, k + 1});
      consider({i, k}, {i + 1, k + 1});
    }
  }
  std::sort(p.equal_pairs.begin(), p.equal_pairs.end());
  return p;
}

std::vector<Chain> chains(const EqualityPattern& p, const GCTriangle& t) {
  const int n = t.n();
  if (p.n != n) throw Error(ErrorCode::SizeMismatch, "pattern and triangle sizes differ");
  const auto total = static_cast<std::size_t>(n * (n + 1) / 2);
  DisjointSets sets(total);
  std::vector<bool> paired(total, false);
  for (const auto& pair : p.equal_pairs) {
    sets.unite(flat_index(pair.a), flat_index(pair.b));
    paired[flat_index(pair.a)] = paired[flat_index(pair.b)] = true;
  }

  std::map<std::size_t, std::vector<TrianglePosition>> groups;
  for (const auto& pos : t.positions())
    if (paired[flat_index(pos)]) groups[sets.find(flat_index(pos))].push_back(pos);

  std::vector<Chain> out;
  for (auto& [root, members] : groups) {
    Chain c;
    c.value = t.at(members.front());
    std::map<int, std::vector<int>> by_row;
    c.all_forced = true;
    for (const auto& pos : members) {
      by_row[pos.k].push_back(pos.i);
      if (!p.is_forced(pos)) c.all_forced = false;
    }
    c.first_row = by_row.begin()->first;
    int expected_row = c.first_row;
    for (auto& [k, indices] : by_row) {
      if (k != expected_row)
        throw Error(ErrorCode::NonContiguousChain, "chain skips row " + std::to_string(expected_row));
      std::sort(indices.begin(), indices.end());
      if (indices.back() - indices.front() + 1 != static_cast<int>(indices.size()))
        throw Error(ErrorCode::NonContiguousChain,
                    "chain with value " + to_decimal_string(c.value) + " is not contiguous in row " +
                        std::to_string(k));
      c.row_counts.push_back(static_cast<int>(indices.size()));
      c.intervals.push_back({k, indices.front(), indices.back()});
      ++expected_row;
    }
    c.positions = std::move(members);
    std::sort(c.positions.begin(), c.positions.end(),
              [](TrianglePosition a, TrianglePosition b) { return a.k != b.k ? a.k < b.k : a.i < b.i; });
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return a.positions.front().k != b.positions.front().k ? a.positions.front().k < b.positions.front().k
                                                          : a.positions.front().i < b.positions.front().i;
  });
  return out;
}

int fiber_dimension(const GCTriangle& t) {
  int dim = regular_fiber_dim(t.lambda());
  for (const auto& c : chains(extract_pattern(t), t)) dim -= c.dimension_deficit();
  return dim;
}

FiberClassification classify(const GCTriangle& t) { return analyze_pattern(t).classification; }

TopologyDescriptor topology(const GCTriangle& t) { return analyze_pattern(t).topology; }

std::vector<int> g_k_dims(const GCTriangle& t) {
  std::vector<int> out;
  for (int k = 1; k <= t.n(); ++k) out.push_back(sum_squared_multiplicities(t.row(k)));
  return out;
}

PatternAnalysis analyze_pattern(const GCTriangle& t) {
  PatternAnalysis a;
  a.n = t.n();
  a.regular_dim = regular_fiber_dim(t.lambda());
  a.pattern = extract_pattern(t);
  a.chains = chains(a.pattern, t);
  a.dimension = a.regular_dim;
  for (const auto& c : a.chains) a.dimension -= c.dimension_deficit();
  a.classification = classify_from(a.chains, a.dimension, a.regular_dim);
  a.topology = topology_from(a.chains, a.classification.kind, a.dimension, a.regular_dim);
  a.g_dims = g_k_dims(t);
  a.u_lambda = u_lambda_dim(t.lambda());
  return a;
}

}  // namespace gcfiber
