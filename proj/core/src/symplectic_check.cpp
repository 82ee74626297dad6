#include "gcfiber/symplectic_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gcfiber/error.hpp"
#include "gcfiber/fiber_build.hpp"
#include "gcfiber/gc_map.hpp"

namespace gcfiber {
namespace {

const Complex kI{0.0, 1.0};

/// Standard real basis of u(k): i E_aa, E_ab - E_ba (a < b), i (E_ab + E_ba) (a > b).
std::vector<ComplexMatrix> skew_basis(std::size_t k) {
  std::vector<ComplexMatrix> out;
  out.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      ComplexMatrix e(k, k);
      if (a == b) {
        e(a, a) = kI;
      } else if (a < b) {
        e(a, b) = 1.0;
        e(b, a) = -1.0;
      } else {
        e(a, b) = kI;
        e(b, a) = kI;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

TangentGenerator make_generator(int level, const ComplexMatrix& block, const HermitianMatrix& a) {
  TangentGenerator g;
  g.level = level;
  g.y = embed_block(SkewHermitianMatrix(block), a.size());
  g.vector = flatten_hermitian(commutator(g.y.matrix(), a.matrix()));
  return g;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Groups of indices into a descending list whose consecutive gaps are below tol.
std::vector<std::vector<std::size_t>> clusters_of(const std::vector<double>& w, double tol) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!out.empty() && std::abs(w[i] - w[out.back().back()]) < tol)
      out.back().push_back(i);
    else
      out.push_back({i});
  }
  return out;
}

double max_abs_value(const std::vector<double>& w) {
  double m = 1.0;
  for (double v : w) m = std::max(m, std::abs(v));
  return m;
}

RealMatrix stack(const std::vector<TangentGenerator>& gens) {
  std::vector<std::vector<double>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(g.vector);
  const std::size_t width = gens.empty() ? 0 : gens.front().vector.size();
  return RealMatrix::from_rows(rows, width);
}

}  // namespace

std::vector<double> flatten_hermitian(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<double> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(h(i, i).real());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(std::numbers::sqrt2 * h(i, j).real());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(std::numbers::sqrt2 * h(i, j).imag());
  return out;
}

double kks_pairing(const HermitianMatrix& a, const SkewHermitianMatrix& y, const SkewHermitianMatrix& z) {
  if (a.size() != y.size() || a.size() != z.size())
    throw Error(ErrorCode::SizeMismatch, "kks_pairing: operands differ in size");
  return -(a.matrix() * commutator(y.matrix(), z.matrix())).trace().imag();
}

std::vector<TangentGenerator> tangent_generators_commutant(const HermitianMatrix& a, double cluster_eps) {
  std::vector<TangentGenerator> out;
  const int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k)
    for (const auto& s : commutant_basis(leading_principal(a, k), cluster_eps).generators)
      out.push_back(make_generator(k, s.matrix(), a));
  return out;
}

std::vector<TangentGenerator> tangent_generators_border(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  std::vector<TangentGenerator> out;
  const int n = static_cast<int>(a.size());
  const double scale = a.max_abs();
  for (int k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const auto basis = skew_basis(kk);
    if (k == 1) {
      out.push_back(make_generator(1, basis.front(), a));
      continue;
    }
    const auto a_k = leading_principal(a, k);
    const auto lower = eig_hermitian(leading_principal(a, k - 1));
    const auto upper = eigenvalues(a_k).values();
    const auto& w = lower.values.values();
    const double tol = kClusterTolerance * max_abs_value(w);

    // Eigenspaces of A_{k-1} whose multiplicity survives in A_k.
    std::vector<ComplexMatrix> kept;
    for (const auto& c : clusters_of(w, tol)) {
      const double v = w[c.front()];
      const auto m_up = std::count_if(upper.begin(), upper.end(), [&](double u) { return std::abs(u - v) < tol; });
      if (static_cast<std::size_t>(m_up) < c.size()) continue;
      ComplexMatrix p(kk - 1, c.size());
      for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t r = 0; r + 1 < kk; ++r) p(r, j) = lower.vectors(r, c[j]);
      kept.push_back(p.adjoint());
    }

    std::vector<std::vector<double>> columns;
    columns.reserve(basis.size());
    for (const auto& e : basis) {
      const ComplexMatrix cf = commutator(a_k.matrix(), e);
      std::vector<double> col;
      for (std::size_t r = 0; r + 1 < kk; ++r)
        for (std::size_t c = 0; c + 1 < kk; ++c) {
          col.push_back(cf(r, c).real());
          col.push_back(cf(r, c).imag());
        }
      const ComplexMatrix border_col = cf.block(0, kk - 1, kk - 1, 1);
      for (const auto& ph : kept) {
        const ComplexMatrix proj = ph * border_col;
        for (std::size_t r = 0; r < proj.rows(); ++r) {
          col.push_back(proj(r, 0).real());
          col.push_back(proj(r, 0).imag());
        }
      }
      columns.push_back(std::move(col));
    }
    const RealMatrix system = RealMatrix::from_rows(columns, columns.front().size()).transpose();
    const RealMatrix sols = nullspace(system, cfg.eps_rank, scale);
    for (std::size_t s = 0; s < sols.cols(); ++s) {
      ComplexMatrix y(kk, kk);
      for (std::size_t j = 0; j < basis.size(); ++j) y += basis[j] * Complex{sols(j, s), 0.0};
      out.push_back(make_generator(k, y, a));
    }
  }
  return out;
}

int generator_rank(const std::vector<TangentGenerator>& gens, double eps_rank, double scale) {
  if (gens.empty()) return 0;
  return static_cast<int>(numeric_rank(stack(gens), eps_rank, scale));
}

int numeric_fiber_dim(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  return generator_rank(tangent_generators_commutant(a), cfg.eps_rank, a.max_abs());
}

double isotropy_residual(const HermitianMatrix& a, const std::vector<TangentGenerator>& gens) {
  // tr(A[Y,Z]) = tr([A,Y] Z), so one commutator per generator suffices.
  const std::size_t n = a.size();
  std::vector<ComplexMatrix> ay;
  std::vector<double> norms;
  ay.reserve(gens.size());
  for (const auto& g : gens) {
    ay.push_back(commutator(a.matrix(), g.y.matrix()));
    norms.push_back(norm2(g.vector));
  }
  const double a_scale = 1.0 + a.max_abs();
  double worst = 0.0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const ComplexMatrix& z = gens[j].y.matrix();
      Complex tr{};
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) tr += ay[i](r, c) * z(c, r);
      const double pairing = std::abs(tr.imag());
      worst = std::max(worst, pairing / (a_scale * std::max(1.0, norms[i] * norms[j])));
    }
  }
  return worst;
}

double isotropy_residual(const HermitianMatrix& a) { return isotropy_residual(a, tangent_generators_commutant(a)); }

std::vector<int> h_prime_dims_numeric(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const int n = static_cast<int>(a.size());
  const double scale = a.max_abs();
  std::vector<int> out{0};
  for (int k = 2; k <= n; ++k) {
    const auto m = static_cast<std::size_t>(k - 1);
    const auto a_prev = leading_principal(a, k - 1).matrix();
    const ComplexMatrix x = a.matrix().block(0, m, m, 1);
    const auto basis = skew_basis(m);
    std::vector<std::vector<double>> columns;
    for (const auto& e : basis) {
      const ComplexMatrix c = commutator(a_prev, e);
      const ComplexMatrix ex = e * x;
      std::vector<double> col;
      for (const Complex& v : c.data()) {
        col.push_back(v.real());
        col.push_back(v.imag());
      }
      for (const Complex& v : ex.data()) {
        col.push_back(v.real());
        col.push_back(v.imag());
      }
      columns.push_back(std::move(col));
    }
    const RealMatrix system = RealMatrix::from_rows(columns, columns.front().size());
    out.push_back(static_cast<int>(basis.size() - numeric_rank(system, cfg.eps_rank, scale)));
  }
  return out;
}

PointDiagnostics diagnose_point(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  PointDiagnostics d;
  const double scale = a.max_abs();
  const auto comm = tangent_generators_commutant(a);
  const auto border = tangent_generators_border(a, cfg);

  const RealMatrix comm_stack = stack(comm);
  const auto svd = comm_stack.rows() < comm_stack.cols() ? svd_jacobi(comm_stack.transpose())
                                                         : svd_jacobi(comm_stack);
  d.commutant_rank = static_cast<int>(numeric_rank(svd.singular_values, cfg.eps_rank, scale));
  const auto loose = numeric_rank(svd.singular_values, cfg.eps_rank * 10.0, scale);
  const auto tight = numeric_rank(svd.singular_values, cfg.eps_rank / 10.0, scale);
  d.rank_stable = static_cast<int>(loose) == d.commutant_rank && static_cast<int>(tight) == d.commutant_rank;

  d.border_rank = generator_rank(border, cfg.eps_rank, scale);
  std::vector<TangentGenerator> both = comm;
  both.insert(both.end(), border.begin(), border.end());
  d.union_rank = generator_rank(both, cfg.eps_rank, scale);
  d.isotropy = isotropy_residual(a, comm);
  d.h_prime = h_prime_dims_numeric(a, cfg);
  return d;
}

FiberReport full_report(const GCTriangle& t, int samples, const ToleranceConfig& cfg, RandomSeed seed) {
  cfg.validate();
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "full_report: samples must be at least 1");
  const auto pattern = analyze_pattern(t);

  FiberReport r;
  r.triangle = t;
  r.regular_dim = pattern.regular_dim;
  r.u_lambda = pattern.u_lambda;
  r.dim_combinatorial = pattern.dimension;
  r.classification = pattern.classification;
  r.topology = pattern.topology;
  r.chains = pattern.chains;
  r.g_dims = pattern.g_dims;
  r.samples = samples;
  r.steps_per_sample = kReportStepsPerLevel * t.n();
  r.seed = seed;
  r.tolerances = cfg;

  const auto points = sample_fiber(t, samples, r.steps_per_sample, seed, cfg.eps_spec);
  for (const auto& p : points) {
    auto d = diagnose_point(p, cfg);
    r.dim_numeric = std::max(r.dim_numeric, d.commutant_rank);
    r.isotropy_residual = std::max(r.isotropy_residual, d.isotropy);
    if (r.h_prime_dims.empty()) {
      r.h_prime_dims = d.h_prime;
    } else {
      for (std::size_t k = 0; k < d.h_prime.size(); ++k) r.h_prime_dims[k] = std::min(r.h_prime_dims[k], d.h_prime[k]);
    }
    if (d.union_rank != d.commutant_rank || d.border_rank != d.commutant_rank) r.spans_agree = false;
    if (!d.rank_stable) r.rank_stable = false;
    r.points.push_back(std::move(d));
  }

  int g_total = 0, h_total = 0;
  for (int g : r.g_dims) g_total += g;
  for (int h : r.h_prime_dims) h_total += h;
  r.dim_groups = g_total - h_total - r.u_lambda;

  const bool dims_agree = r.dim_combinatorial == r.dim_groups && r.dim_groups == r.dim_numeric;
  r.consistent = dims_agree && r.isotropy_residual <= cfg.eps_iso;
  if (!dims_agree)
    r.warnings.push_back("dimension ledgers disagree: combinatorial " + std::to_string(r.dim_combinatorial) +
                         ", groups " + std::to_string(r.dim_groups) + ", numeric " + std::to_string(r.dim_numeric));
  if (r.isotropy_residual > cfg.eps_iso)
    r.warnings.push_back("isotropy residual " + std::to_string(r.isotropy_residual) + " exceeds bound");
  if (!r.spans_agree) r.warnings.push_back("commutant and border tangent spans differ at some sample");
  if (!r.rank_stable) r.warnings.push_back("numeric rank changes when eps_rank is scaled by 10");
  if (r.dim_numeric > r.regular_dim) r.warnings.push_back("numeric rank exceeds half the orbit dimension");
  return r;
}

}  // namespace gcfiber
