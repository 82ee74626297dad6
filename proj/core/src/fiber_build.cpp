#include "gcfiber/fiber_build.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gcfiber/error.hpp"
#include "gcfiber/gc_map.hpp"

namespace gcfiber {
namespace {

double magnitude(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 1.0;
  for (double v : a) m = std::max(m, std::abs(v));
  for (double v : b) m = std::max(m, std::abs(v));
  return m;
}

void check_interlacing(const std::vector<double>& source, const std::vector<double>& target, double scale) {
  const double slack = kInterlacingSlack * scale;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] > target[i] + slack || source[i] < target[i + 1] - slack)
      throw Error(ErrorCode::InterlacingViolation,
                  "eigenvalue " + std::to_string(source[i]) + " of the leading block is outside [" +
                      std::to_string(target[i + 1]) + ", " + std::to_string(target[i]) + "]");
  }
}

}  // namespace

BorderedExtension bordered_extension_data(const HermitianMatrix& a_k, const Spectrum& target, double eps_spec) {
  const std::size_t k = a_k.size();
  if (target.size() != k + 1)
    throw Error(ErrorCode::SizeMismatch, "target spectrum must have length " + std::to_string(k + 1));

  const auto eig = eig_hermitian(a_k);
  const auto& mu_all = eig.values.values();
  const auto& nu_all = target.values();
  const double scale = magnitude(mu_all, nu_all);
  check_interlacing(mu_all, nu_all, scale);

  // Deflation: a source value matched by a target value passes straight through.
  std::vector<bool> target_used(k + 1, false);
  std::vector<std::size_t> retained;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t best = k + 1;
    double best_gap = kDeflationTolerance * scale;
    for (std::size_t j = 0; j <= k; ++j) {
      if (target_used[j]) continue;
      const double gap = std::abs(nu_all[j] - mu_all[i]);
      if (gap <= best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best <= k)
      target_used[best] = true;
    else
      retained.push_back(i);
  }
  std::vector<double> nu;
  for (std::size_t j = 0; j <= k; ++j)
    if (!target_used[j]) nu.push_back(nu_all[j]);

  BorderedExtension out;
  out.x.assign(k, Complex{});
  double trace = 0.0;
  for (std::size_t i = 0; i < k; ++i) trace += a_k(i, i).real();
  double target_sum = 0.0;
  for (double v : nu_all) target_sum += v;
  out.a = target_sum - trace;

  for (std::size_t idx = 0; idx < retained.size(); ++idx) {
    const double m = mu_all[retained[idx]];
    double num = -1.0;
    for (double v : nu) num *= m - v;
    double den = 1.0;
    for (std::size_t l = 0; l < retained.size(); ++l)
      if (l != idx) den *= m - mu_all[retained[l]];
    const double w = std::max(0.0, num / den);
    out.weights.push_back(w);
    const double amp = std::sqrt(w);
    const auto& q = eig.vectors.matrix();
    for (std::size_t r = 0; r < k; ++r) out.x[r] += amp * q(r, retained[idx]);
  }

  ComplexMatrix m(k + 1, k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m(r, c) = a_k(r, c);
    m(r, k) = out.x[r];
    m(k, r) = std::conj(out.x[r]);
  }
  m(k, k) = out.a;
  out.matrix = HermitianMatrix(m);

  const auto got = eigenvalues(out.matrix);
  double err = 0.0;
  for (std::size_t j = 0; j <= k; ++j) err = std::max(err, std::abs(got[j] - nu_all[j]));
  double target_scale = 1.0;
  for (double v : nu_all) target_scale = std::max(target_scale, std::abs(v));
  if (err > eps_spec * target_scale)
    throw Error(ErrorCode::SpectrumMismatch,
                "bordered extension misses its target spectrum by " + std::to_string(err));
  return out;
}

HermitianMatrix bordered_extension(const HermitianMatrix& a_k, const Spectrum& target, double eps_spec) {
  return bordered_extension_data(a_k, target, eps_spec).matrix;
}

CommutantBasis commutant_basis(const HermitianMatrix& a_k, double eps) {
  const std::size_t k = a_k.size();
  CommutantBasis out;
  out.level = static_cast<int>(k);
  if (k == 0) return out;
  const auto eig = eig_hermitian(a_k);
  const auto& w = eig.values.values();
  double scale = 1.0;
  for (double v : w) scale = std::max(scale, std::abs(v));

  std::vector<std::vector<std::size_t>> clusters{{0}};
  for (std::size_t i = 1; i < k; ++i) {
    if (std::abs(w[i] - w[clusters.back().back()]) < eps * scale)
      clusters.back().push_back(i);
    else
      clusters.push_back({i});
  }

  const ComplexMatrix& q = eig.vectors.matrix();
  const ComplexMatrix qh = q.adjoint();
  const Complex I{0.0, 1.0};
  for (const auto& c : clusters) {
    for (std::size_t a : c) {
      for (std::size_t b : c) {
        ComplexMatrix e(k, k);
        if (a == b) {
          e(a, a) = I;
        } else if (a < b) {
          e(a, b) = 1.0;
          e(b, a) = -1.0;
        } else {
          e(a, b) = I;
          e(b, a) = I;
        }
        out.generators.emplace_back(q * e * qh);
      }
    }
  }
  return out;
}

HermitianMatrix fiber_step(const HermitianMatrix& a, int k, std::mt19937_64& engine) {
  const int n = static_cast<int>(a.size());
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "fiber_step: level " + std::to_string(k) + " out of range");
  const auto basis = commutant_basis(leading_principal(a, k));
  std::uniform_real_distribution<double> coef(-std::numbers::pi, std::numbers::pi);
  const auto kk = static_cast<std::size_t>(k);
  ComplexMatrix s(kk, kk);
  for (const auto& g : basis.generators) s += g.matrix() * Complex{coef(engine), 0.0};
  const auto u = expm(SkewHermitianMatrix(s));

  ComplexMatrix full = ComplexMatrix::identity(a.size());
  for (std::size_t r = 0; r < kk; ++r)
    for (std::size_t c = 0; c < kk; ++c) full(r, c) = u(r, c);
  return conjugate(UnitaryMatrix(std::move(full)), a);
}

HermitianMatrix fiber_step(const HermitianMatrix& a, int k, RandomSeed seed) {
  auto engine = make_engine(seed);
  return fiber_step(a, k, engine);
}

HermitianMatrix base_point(const GCTriangle& t, RandomSeed seed, double eps_spec) {
  const auto check = validate_triangle(t, 0.0);
  if (!check) throw Error(ErrorCode::InvalidTriangle, check.describe());
  auto engine = make_engine(seed);
  const int n = t.n();
  const double first = to_double(t.at(1, 1));
  HermitianMatrix a(ComplexMatrix::diagonal(std::span<const double>(&first, 1)));
  for (int k = 1; k < n; ++k) {
    a = bordered_extension(a, Spectrum(t.row_values(k + 1)), eps_spec);
    // The border sits in a fixed gauge; a level-k commutant rotation frees it.
    a = fiber_step(a, k, engine);
  }
  return a;
}

std::vector<HermitianMatrix> sample_fiber(const GCTriangle& t, int count, int steps_per_sample, RandomSeed seed,
                                          double eps_spec) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "sample_fiber: count must be at least 1");
  if (steps_per_sample < 0) throw Error(ErrorCode::InvalidArgument, "sample_fiber: negative step count");
  const auto base = base_point(t, seed, eps_spec);
  const int n = t.n();
  std::vector<HermitianMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    auto engine = make_engine(seed, static_cast<std::uint64_t>(j) + 1);
    HermitianMatrix a = base;
    for (int s = 0; s < steps_per_sample; ++s) a = fiber_step(a, s % n + 1, engine);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace gcfiber
