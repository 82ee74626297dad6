#include "gcfiber/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gcfiber/error.hpp"
#include "gcfiber/gc_map.hpp"

namespace gcfiber {
namespace {

const Exact& lam(const std::vector<Exact>& lambda, int i) { return lambda[static_cast<std::size_t>(i - 1)]; }

/// Positions q with value(q) <= value(p) forced by interlacing alone.
std::set<TrianglePosition> below(TrianglePosition p, int n) {
  std::set<TrianglePosition> seen{p};
  std::vector<TrianglePosition> stack{p};
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    const TrianglePosition next[] = {{c.i, c.k - 1}, {c.i + 1, c.k + 1}, {c.i + 1, c.k}};
    for (const auto& q : next) {
      if (q.k < 1 || q.k > n || q.i < 1 || q.i > q.k) continue;
      if (seen.insert(q).second) stack.push_back(q);
    }
  }
  return seen;
}

bool adjacent(TrianglePosition a, TrianglePosition b) {
  if (a.k == b.k) return std::abs(a.i - b.i) == 1;
  if (a.k > b.k) std::swap(a, b);
  return b.k == a.k + 1 && (b.i == a.i || b.i == a.i + 1);
}

Exact pick_between(const Exact& lo, const Exact& hi, const std::vector<Exact>& avoid) {
  static const std::pair<int, int> fractions[] = {{1, 2}, {1, 4}, {3, 4}, {2, 5}, {3, 5}, {1, 5}, {4, 5}};
  for (const auto& [num, den] : fractions) {
    const Exact v = lo + (hi - lo) * Exact(num, den);
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) return v;
  }
  throw Error(ErrorCode::UnrealizablePattern, "no free value between group bounds");
}

Exact rounded(double x) {
  constexpr long long kScale = 1000000000;
  return Exact(static_cast<long long>(std::llround(x * static_cast<double>(kScale))), kScale);
}

int n_of(const std::vector<Exact>& lambda) { return static_cast<int>(lambda.size()); }

}  // namespace

PositionGroup diamond_positions(int p, int q, int l) { return parallelogram_positions(p, q, l, l); }

PositionGroup parallelogram_positions(int p, int q, int a, int b) {
  PositionGroup out;
  for (int s = 0; s < b; ++s)
    for (int t = 0; t < a; ++t) out.push_back({p + s, q + s + t});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exact> generic_lambda(int n) {
  std::vector<Exact> out;
  for (int v = n; v >= 1; --v) out.emplace_back(v);
  return out;
}

GCTriangle realize_pattern(const std::vector<Exact>& lambda, const std::vector<PositionGroup>& groups) {
  const int n = n_of(lambda);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "realize_pattern: empty spectrum");
  for (int i = 1; i < n; ++i)
    if (lam(lambda, i) < lam(lambda, i + 1)) throw Error(ErrorCode::InvalidArgument, "spectrum must be non-increasing");

  std::map<TrianglePosition, std::size_t> owner;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw Error(ErrorCode::InvalidArgument, "empty position group");
    for (const auto& p : groups[g]) {
      if (p.k < 1 || p.k > n || p.i < 1 || p.i > p.k)
        throw Error(ErrorCode::InvalidArgument, "position " + to_string(p) + " outside the triangle");
      if (!owner.emplace(p, g).second)
        throw Error(ErrorCode::InvalidArgument, "position " + to_string(p) + " belongs to two groups");
    }
  }

  std::vector<Exact> gamma;
  for (const auto& group : groups) {
    std::optional<Exact> pinned;
    Exact lo = lam(lambda, n), hi = lam(lambda, 1);
    for (const auto& p : group) {
      if (p.k == n) {
        if (pinned && *pinned != lam(lambda, p.i))
          throw Error(ErrorCode::UnrealizablePattern, "group meets row n at unequal values");
        pinned = lam(lambda, p.i);
      }
      lo = std::max(lo, lam(lambda, p.i + n - p.k));
      hi = std::min(hi, lam(lambda, p.i));
    }
    if (lo > hi || (pinned && (*pinned < lo || *pinned > hi)))
      throw Error(ErrorCode::UnrealizablePattern, "group positions admit no common value");
    if (pinned) {
      gamma.push_back(*pinned);
    } else if (lo == hi) {
      gamma.push_back(lo);
    } else {
      std::vector<Exact> avoid(lambda.begin(), lambda.end());
      avoid.insert(avoid.end(), gamma.begin(), gamma.end());
      gamma.push_back(pick_between(lo, hi, avoid));
    }
  }

  std::vector<std::vector<Exact>> rows(static_cast<std::size_t>(n));
  rows.back() = lambda;
  for (int k = n - 1; k >= 1; --k) {
    auto& row = rows[static_cast<std::size_t>(k - 1)];
    const auto& up = rows[static_cast<std::size_t>(k)];
    row.resize(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
      const TrianglePosition p{i, k};
      auto& slot = row[static_cast<std::size_t>(i - 1)];
      if (const auto it = owner.find(p); it != owner.end()) {
        slot = gamma[it->second];
        continue;
      }
      Exact lo = up[static_cast<std::size_t>(i)];
      Exact hi = up[static_cast<std::size_t>(i - 1)];
      const auto under = below(p, n);
      for (const auto& [q, g] : owner) {
        if (under.contains(q)) lo = std::max(lo, gamma[g]);
        if (below(q, n).contains(p)) hi = std::min(hi, gamma[g]);
      }
      if (lo > hi) throw Error(ErrorCode::UnrealizablePattern, "no room for " + to_string(p));
      slot = (lo + hi) / 2;
    }
  }

  GCTriangle t(std::move(rows));
  const auto check = validate_triangle(t, 0.0);
  if (!check) throw Error(ErrorCode::UnrealizablePattern, "realized values break interlacing: " + check.describe());

  // Each group must come out as exactly one chain, with nothing else singular.
  std::set<std::set<TrianglePosition>> wanted;
  for (const auto& g : groups) wanted.emplace(g.begin(), g.end());
  std::set<std::set<TrianglePosition>> got;
  for (const auto& c : chains(extract_pattern(t), t))
    if (!c.all_forced) got.emplace(c.positions.begin(), c.positions.end());
  if (wanted != got) throw Error(ErrorCode::UnrealizablePattern, "realized triangle has a different equality pattern");
  return t;
}

Fixture spherical_fixture() {
  Fixture f;
  f.name = "n3_diamond_l2_p1_q1";
  f.family = "diamond";
  f.triangle = realize_pattern(generic_lambda(3), {diamond_positions(1, 1, 2)});
  f.expected.dimension = 3;
  f.expected.kind = FiberKind::Diamond;
  f.expected.lagrangian = true;
  f.expected.topology = TopologyDescriptor{{2}, 0, true};
  f.expected.h_prime_dims = std::vector<int>{0, 1, 1};
  return f;
}

Fixture overlapping_diamonds_fixture() {
  auto group = diamond_positions(1, 1, 3);
  for (const auto& p : diamond_positions(2, 3, 3))
    if (std::find(group.begin(), group.end(), p) == group.end()) group.push_back(p);
  std::sort(group.begin(), group.end());
  Fixture f;
  f.name = "n7_overlapping_diamonds_l3";
  f.family = "overlapping";
  f.triangle = realize_pattern(generic_lambda(7), {group});
  f.expected.dimension = 21;
  f.expected.kind = FiberKind::SymmetricOverlapping;
  f.expected.lagrangian = true;
  f.expected.topology = TopologyDescriptor{{}, 21, false};
  f.expected.g_dims = std::vector<int>{1, 4, 9, 6, 11, 8, 7};
  f.expected.h_prime_dims = std::vector<int>{0, 1, 4, 4, 4, 4, 1};
  return f;
}

std::vector<Fixture> build_corpus(int n_max, RandomSeed seed) {
  if (n_max < 2 || n_max > 8) throw Error(ErrorCode::InvalidArgument, "corpus n-max must lie in 2..8");
  std::vector<Fixture> out;

  auto add = [&](std::string name, std::string family, const std::vector<Exact>& lambda,
                 const std::vector<PositionGroup>& groups, FixtureExpectation expected) {
    try {
      out.push_back({std::move(name), std::move(family), realize_pattern(lambda, groups), std::move(expected)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnrealizablePattern) throw;
    }
  };
  auto torus = [](int d) { return TopologyDescriptor{{}, d, true}; };

  for (int n = 2; n <= n_max; ++n) {
    const auto lambda = generic_lambda(n);
    const int big_n = n * (n - 1) / 2;
    const std::string prefix = "n" + std::to_string(n) + "_";

    add(prefix + "regular_midpoint", "regular", lambda, {},
        {big_n, FiberKind::Regular, true, torus(big_n), {}, {}});

    {
      std::vector<double> spec;
      for (const auto& v : lambda) spec.push_back(to_double(v));
      const auto a = random_orbit_point(Spectrum(spec), RandomSeed{seed.value + static_cast<std::uint64_t>(n)});
      const auto values = momentum_values(a);
      std::vector<std::vector<Exact>> rows;
      for (int k = 1; k < n; ++k) {
        std::vector<Exact> row;
        for (double v : values[static_cast<std::size_t>(k - 1)]) row.push_back(rounded(v));
        rows.push_back(std::move(row));
      }
      rows.push_back(lambda);
      GCTriangle t(std::move(rows));
      if (validate_triangle(t, 0.0) && chains(extract_pattern(t), t).empty())
        out.push_back({prefix + "regular_random", "regular", std::move(t),
                       {big_n, FiberKind::Regular, true, torus(big_n), {}, {}}});
    }

    // Single diagonal equalities.
    std::vector<PositionGroup> pairs;
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        pairs.push_back({{i, k}, {i, k + 1}});
        pairs.push_back({{i, k}, {i + 1, k + 1}});
      }
    for (const auto& pr : pairs) {
      const std::string tag = "elliptic_" + std::to_string(pr[0].i) + "_" + std::to_string(pr[0].k) + "_to_" +
                              std::to_string(pr[1].i) + "_" + std::to_string(pr[1].k);
      add(prefix + tag, "elliptic", lambda, {pr},
          {big_n - 1, FiberKind::Elliptic, false, torus(big_n - 1), {}, {}});
    }

    // Several separated diagonal equalities.
    for (int count = 2; count <= 3; ++count) {
      std::vector<PositionGroup> chosen;
      for (const auto& pr : pairs) {
        const bool clear = std::all_of(chosen.begin(), chosen.end(), [&](const PositionGroup& c) {
          for (const auto& a : c)
            for (const auto& b : pr)
              if (a == b || adjacent(a, b)) return false;
          return true;
        });
        if (clear) chosen.push_back(pr);
        if (static_cast<int>(chosen.size()) == count) break;
      }
      if (static_cast<int>(chosen.size()) != count) continue;
      add(prefix + "elliptic_multi_" + std::to_string(count), "elliptic", lambda, chosen,
          {big_n - count, FiberKind::Elliptic, false, torus(big_n - count), {}, {}});
    }

    // Diamonds and parallelograms anchored at every admissible lowest vertex.
    for (int q = 1; q <= n; ++q)
      for (int p = 1; p <= q; ++p)
        for (int a = 1; q + a - 1 <= n; ++a)
          for (int b = 1; q + a + b - 2 <= n; ++b) {
            if (a * b <= 2) continue;  // single positions and the elliptic pairs above
            const std::string where = "_p" + std::to_string(p) + "_q" + std::to_string(q);
            const auto group = parallelogram_positions(p, q, a, b);
            if (a == b) {
              const int l = a;
              if (n == 3 && p == 1 && q == 1 && l == 2) {
                out.push_back(spherical_fixture());
                continue;
              }
              add(prefix + "diamond_l" + std::to_string(l) + where, "diamond", lambda, {group},
                  {big_n, FiberKind::Diamond, true, TopologyDescriptor{{l}, big_n - (l * l - 1), true}, {}, {}});
              continue;
            }
            const int dim = big_n - std::min(a, b) * std::abs(a - b);
            const bool thin = std::min(a, b) == 1;
            add(prefix + "parallelogram_" + std::to_string(a) + "x" + std::to_string(b) + where, "parallelogram",
                lambda, {group},
                {dim, thin ? FiberKind::Elliptic : FiberKind::GeneralDegenerate, dim == big_n,
                 thin ? std::optional<TopologyDescriptor>(torus(dim)) : std::optional<TopologyDescriptor>(TopologyDescriptor{{}, dim, false}),
                 {}, {}});
          }

    if (n >= 5) {
      auto group = diamond_positions(1, 1, 2);
      for (const auto& p : diamond_positions(2, 3, 2))
        if (std::find(group.begin(), group.end(), p) == group.end()) group.push_back(p);
      add(prefix + "overlapping_diamonds_l2", "overlapping", lambda, {group},
          {big_n, FiberKind::SymmetricOverlapping, true, TopologyDescriptor{{}, big_n, false}, {}, {}});
    }
    if (n == 7) out.push_back(overlapping_diamonds_fixture());

    // A doubled top eigenvalue: some entries are pinned, the fiber stays regular.
    std::vector<Exact> doubled = lambda;
    doubled[1] = doubled[0];
    const int doubled_n = (n * n - (n - 2) - 4) / 2;
    add(prefix + "nongeneric_regular", "nongeneric", doubled, {},
        {doubled_n, FiberKind::Regular, true, torus(doubled_n), {}, {}});
  }
  return out;
}

}  // namespace gcfiber
