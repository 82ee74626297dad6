// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "gcfiber/fiber_build.hpp"
#include "gcfiber/fixtures.hpp"
#include "gcfiber/gc_map.hpp"
#include "gcfiber/json_io.hpp"
#include "gcfiber/pattern.hpp"
#include "gcfiber/symplectic_check.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gcfiber;

namespace {

constexpr double kIsoBound = 1e-8;
constexpr double kBorderedBound = 1e-10;
constexpr double kDriftBound = 1e-9;
constexpr double kDualityBound = 1e-11;
constexpr int kCorpusNMax = 7;
constexpr int kCorpusSamples = 10;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] C%-2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

struct Verified {
  std::string name;
  std::string family;
  int n = 0;
  int exit_code = 0;
  json report;
};

std::vector<Verified> verify_corpus(const fs::path& dir) {
  std::ostringstream out, err;
  if (cli::run({"--seed", "0", "corpus", "--n-max", std::to_string(kCorpusNMax), "--out-dir", dir.string()}, out,
               err) != cli::kOk)
    throw std::runtime_error("corpus generation failed: " + err.str());
  std::vector<Verified> result;
  const auto summary = json::parse(out.str());
  for (const auto& file : summary["files"]) {
    const auto path = dir / file.get<std::string>();
    std::ifstream in(path);
    const auto fixture = json::parse(in);
    std::ostringstream vout, verr;
    Verified v;
    v.name = fixture["name"];
    v.family = fixture["family"];
    v.n = static_cast<int>(fixture["lambda"].size());
    v.exit_code = cli::run({"--samples", std::to_string(kCorpusSamples), "verify", path.string()}, vout, verr);
    v.report = json::parse(vout.str());
    result.push_back(std::move(v));
  }
  return result;
}

int count_from_name(const std::string& name, const std::string& tag) {
  const auto at = name.find(tag);
  return at == std::string::npos ? 0 : std::stoi(name.substr(at + tag.size()));
}

void criterion_regular() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> gap(0.3, 2.0);
  int cases = 0, bad = 0;
  double worst_iso = 0.0;
  for (int n = 3; n <= 6; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> lambda(static_cast<std::size_t>(n));
      double v = 1.0;
      for (int i = n - 1; i >= 0; --i) lambda[static_cast<std::size_t>(i)] = v += gap(rng);
      const auto a = random_orbit_point(Spectrum(lambda), RandomSeed{rng()});
      auto raw = momentum_values(a);
      raw.back() = lambda;
      const auto t = GCTriangle::from_doubles(raw);
      const auto r = full_report(t, kCorpusSamples, {}, RandomSeed{rng()});
      const int big_n = n * (n - 1) / 2;
      ++cases;
      worst_iso = std::max(worst_iso, r.isotropy_residual);
      if (r.dim_combinatorial != big_n || r.dim_numeric != big_n || r.dim_groups != big_n ||
          r.classification.kind != FiberKind::Regular || r.isotropy_residual >= kIsoBound || !r.consistent)
        ++bad;
    }
  report(1, "regular fibers n=3..6", bad == 0,
         std::to_string(cases - bad) + "/" + std::to_string(cases) + " with dim N in all ledgers, max isotropy " +
             sci(worst_iso) + " < " + sci(kIsoBound));
}

void criterion_spherical() {
  const auto f = spherical_fixture();
  const auto r = full_report(f.triangle, 100, {}, RandomSeed{2});
  double worst = 0.0;
  for (const auto& p : r.points) worst = std::max(worst, p.isotropy);
  const bool ok = r.dim_combinatorial == 3 && r.dim_groups == 3 && r.dim_numeric == 3 &&
                  r.classification.kind == FiberKind::Diamond && r.topology.su_factors == std::vector<int>{2} &&
                  r.topology.torus_dim == 0 && r.h_prime_dims == std::vector<int>{0, 1, 1} &&
                  r.points.size() == 100 && worst < kIsoBound;
  report(2, "spherical fiber", ok,
         "dims (" + std::to_string(r.dim_combinatorial) + "," + std::to_string(r.dim_groups) + "," +
             std::to_string(r.dim_numeric) + "), " + std::string(to_string(r.classification.kind)) +
             ", max isotropy over 100 points " + sci(worst));
}

bool ledgers_equal(const json& r, int d) {
  return r["dim_combinatorial"] == d && r["dim_groups"] == d && r["dim_numeric"] == d;
}

void criterion_diamonds(const std::vector<Verified>& corpus) {
  int cases = 0, bad = 0;
  for (const auto& v : corpus) {
    if (v.family != "diamond" || v.n > 6) continue;
    ++cases;
    const int big_n = v.n * (v.n - 1) / 2;
    const int l = count_from_name(v.name, "diamond_l");
    const auto& topo = v.report["topology"];
    if (!ledgers_equal(v.report, big_n) || topo["su"] != json::array({l}) || topo["torus"] != big_n - l * l + 1 ||
        v.report["lagrangian"] != true)
      ++bad;
  }
  report(3, "diamond family n<=6", bad == 0 && cases > 0,
         std::to_string(cases - bad) + "/" + std::to_string(cases) + " diamonds with dim N and SU(l) x T^(N-l^2+1)");
}

void criterion_parallelograms(const std::vector<Verified>& corpus) {
  int cases = 0, bad = 0;
  for (const auto& v : corpus) {
    if (v.family != "parallelogram" || v.n > 6) continue;
    ++cases;
    const auto at = v.name.find("parallelogram_") + 14;
    const int a = std::stoi(v.name.substr(at));
    const int b = std::stoi(v.name.substr(v.name.find('x', at) + 1));
    const int expected = v.n * (v.n - 1) / 2 - std::min(a, b) * std::abs(a - b);
    if (v.report["dim_combinatorial"] != expected || v.report["dim_numeric"] != expected) ++bad;
  }
  report(4, "parallelogram formula n<=6", bad == 0 && cases > 0,
         std::to_string(cases - bad) + "/" + std::to_string(cases) + " match N - min(a,b)|a-b| combinatorially and numerically");
}

void criterion_overlapping() {
  const auto f = overlapping_diamonds_fixture();
  const auto r = full_report(f.triangle, kCorpusSamples, {}, RandomSeed{7});
  int sum = 0;
  for (std::size_t k = 0; k < r.g_dims.size(); ++k) sum += r.g_dims[k] - r.h_prime_dims[k];
  const bool ok = r.g_dims == std::vector<int>{1, 4, 9, 6, 11, 8, 7} &&
                  r.h_prime_dims == std::vector<int>{0, 1, 4, 4, 4, 4, 1} && sum == 28 && r.dim_combinatorial == 21 &&
                  r.dim_groups == 21 && r.dim_numeric == 21 && r.regular_dim == 21;
  report(5, "overlapping diamonds n=7 ledger", ok,
         "sum(g - h') = " + std::to_string(sum) + ", dims (" + std::to_string(r.dim_combinatorial) + "," +
             std::to_string(r.dim_groups) + "," + std::to_string(r.dim_numeric) + ")");
}

void criterion_elliptic(const std::vector<Verified>& corpus) {
  int cases = 0, bad = 0;
  for (const auto& v : corpus) {
    if (v.family != "elliptic") continue;
    ++cases;
    const int pairs = v.name.find("multi_") != std::string::npos ? count_from_name(v.name, "multi_") : 1;
    const int expected = v.n * (v.n - 1) / 2 - pairs;
    const auto& topo = v.report["topology"];
    if (!ledgers_equal(v.report, expected) || v.report["classification"] != "Elliptic" || !topo["su"].empty() ||
        topo["torus"] != expected)
      ++bad;
  }
  report(6, "elliptic case", bad == 0 && cases > 0,
         std::to_string(cases - bad) + "/" + std::to_string(cases) + " with dim N - #equalities and torus descriptor");
}

void criterion_isotropy(const std::vector<Verified>& corpus) {
  double worst = 0.0;
  int points = 0, thin = 0, not_ok = 0;
  for (const auto& v : corpus) {
    if (v.report["points"].size() < static_cast<std::size_t>(kCorpusSamples)) ++thin;
    if (v.exit_code != cli::kOk) ++not_ok;
    for (const auto& p : v.report["points"]) {
      worst = std::max(worst, p["isotropy"].get<double>());
      ++points;
    }
  }
  report(7, "isotropy over corpus", worst < kIsoBound && thin == 0 && not_ok == 0,
         std::to_string(corpus.size()) + " fixtures, " + std::to_string(points) + " points, max residual " + sci(worst) +
             " < " + sci(kIsoBound) + ", verify exit 0 on " + std::to_string(corpus.size() - not_ok));
}

void criterion_bordered() {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> grid(-6, 6);
  std::uniform_int_distribution<int> pick(0, 3);
  double worst = 0.0;
  int exact_blocks = 0, deflated = 0;
  constexpr int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 7);
    std::vector<double> target(k + 1);
    for (auto& v : target) v = 0.5 * grid(rng);
    std::sort(target.rbegin(), target.rend());
    std::vector<double> source(k);
    bool collision = false;
    for (std::size_t i = 0; i < k; ++i) {
      const int c = pick(rng);
      source[i] = c == 0 ? target[i] : c == 1 ? target[i + 1] : 0.5 * (target[i] + target[i + 1]);
      collision = collision || source[i] == target[i] || source[i] == target[i + 1];
    }
    deflated += collision;
    const auto a_k = random_orbit_point(Spectrum(source), RandomSeed{rng()});
    const auto m = bordered_extension(a_k, Spectrum(target));
    const auto got = eigenvalues(m);
    for (std::size_t i = 0; i <= k; ++i) worst = std::max(worst, std::abs(got[i] - target[i]));
    exact_blocks += m.matrix().block(0, 0, k, k) == a_k.matrix();
  }
  report(8, "bordered extension kernel", worst <= kBorderedBound && exact_blocks == kTrials,
         std::to_string(kTrials) + " instances (" + std::to_string(deflated) + " with collisions), max spectrum error " +
             sci(worst) + " <= " + sci(kBorderedBound) + ", exact leading block " + std::to_string(exact_blocks));
}

void criterion_sampler(const std::vector<Fixture>& fixtures) {
  constexpr int kTotal = 10000;
  std::mt19937_64 engine(909);
  double worst = 0.0;
  int steps = 0;
  const int per_fixture = (kTotal + static_cast<int>(fixtures.size()) - 1) / static_cast<int>(fixtures.size());
  for (std::size_t j = 0; j < fixtures.size() && steps < kTotal; ++j) {
    const auto& t = fixtures[j].triangle;
    auto a = base_point(t, RandomSeed{j});
    for (int s = 0; s < per_fixture && steps < kTotal; ++s, ++steps) {
      a = fiber_step(a, 1 + s % t.n(), engine);
      worst = std::max(worst, max_deviation(t, momentum_values(a)));
    }
  }
  report(9, "sampler soundness", worst <= kDriftBound && steps == kTotal,
         std::to_string(steps) + " fiber steps, max momentum drift " + sci(worst) + " <= " + sci(kDriftBound));
}

// Eigenvalues of the form x^dagger D x on span(c*_1..c*_k), as squared singular
// values of D^{1/2} [c*_1 .. c*_k] through its real 2n x 2k embedding.
std::vector<std::vector<double>> gamma_by_svd(const UnitaryMatrix& c_star, const std::vector<double>& lambda) {
  const std::size_t n = lambda.size();
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<double>> real(2 * n, std::vector<double>(2 * k));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < k; ++a) {
        const Complex z = std::sqrt(lambda[j]) * c_star(j, a);
        real[j][a] = z.real();
        real[j][a + k] = -z.imag();
        real[j + n][a] = z.imag();
        real[j + n][a + k] = z.real();
      }
    const auto sv = svd_jacobi(RealMatrix::from_rows(real, 2 * k)).singular_values;
    std::vector<double> row;
    for (std::size_t a = 0; a < k; ++a) row.push_back(sv[2 * a] * sv[2 * a]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void criterion_duality() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> gap(0.2, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<double> lambda(static_cast<std::size_t>(n));
    double v = 0.0;
    for (int i = n - 1; i >= 0; --i) lambda[static_cast<std::size_t>(i)] = v += gap(rng);
    const Spectrum spec(lambda);
    const auto c_star = haar_unitary(static_cast<std::size_t>(n), RandomSeed{rng()});
    const auto oracle = gamma_by_svd(c_star, lambda);
    const auto gamma = gamma_lambda_values(c_star, spec);
    const auto momentum = momentum_values(conjugate(c_star.adjoint(), HermitianMatrix::diagonal(lambda)));
    for (std::size_t k = 0; k < oracle.size(); ++k)
      for (std::size_t i = 0; i < oracle[k].size(); ++i)
        worst = std::max({worst, std::abs(gamma[k][i] - oracle[k][i]), std::abs(momentum[k][i] - oracle[k][i])});
  }
  report(10, "duality diagram", worst <= kDualityBound,
         "100 pairs n=2..7, Gamma and F against an SVD oracle, max deviation " + sci(worst) + " <= " +
             sci(kDualityBound));
}

void criterion_tangent(const std::vector<Verified>& corpus) {
  int points = 0, bad = 0;
  for (const auto& v : corpus)
    for (const auto& p : v.report["points"]) {
      ++points;
      if (p["union_rank"] != p["commutant_rank"] || p["border_rank"] != p["commutant_rank"]) ++bad;
    }
  report(11, "tangent-construction equivalence", bad == 0,
         std::to_string(points - bad) + "/" + std::to_string(points) + " points with equal commutant, border, union ranks");
}

void criterion_bound(const std::vector<Verified>& corpus) {
  int points = 0, bad = 0;
  for (const auto& v : corpus) {
    const int big_n = v.report["N"];
    for (const auto& p : v.report["points"]) {
      ++points;
      if (p["commutant_rank"].get<int>() > big_n) ++bad;
    }
  }
  report(12, "dimension bound", bad == 0,
         std::to_string(points - bad) + "/" + std::to_string(points) + " points with numeric rank <= N");
}

}  // namespace

int main() {
  const auto dir = fs::temp_directory_path() / "gcfiber_acceptance_corpus";
  fs::remove_all(dir);
  try {
    criterion_regular();
    criterion_spherical();
    const auto corpus = verify_corpus(dir);
    criterion_diamonds(corpus);
    criterion_parallelograms(corpus);
    criterion_overlapping();
    criterion_elliptic(corpus);
    criterion_isotropy(corpus);
    criterion_bordered();
    criterion_sampler(build_corpus(kCorpusNMax, RandomSeed{0}));
    criterion_duality();
    criterion_tangent(corpus);
    criterion_bound(corpus);
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    ++failures;
  }
  fs::remove_all(dir);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
