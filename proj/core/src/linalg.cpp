#include "gcfiber/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcfiber/error.hpp"

namespace gcfiber {

std::mt19937_64 make_engine(RandomSeed seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::SizeMismatch, "block out of range");
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::SizeMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::SizeMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::SizeMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

// ---------------------------------------------------------------------------
// Structured matrices

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m.rows(), m.cols()) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "Hermitian matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = Complex{m(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  return HermitianMatrix(ComplexMatrix::diagonal(entries));
}

SkewHermitianMatrix::SkewHermitianMatrix(const ComplexMatrix& m) : m_(m.rows(), m.cols()) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "skew-Hermitian matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = Complex{0.0, m(i, i).imag()};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) - std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = -std::conj(v);
    }
  }
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(ErrorCode::SizeMismatch, "unitary matrix must be square");
  const double err = unitarity_error();
  if (!(err <= tol))
    throw Error(ErrorCode::InvalidArgument, "matrix is not unitary (error " + std::to_string(err) + ")");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n) { return UnitaryMatrix(ComplexMatrix::identity(n), Unchecked{}); }

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint(), Unchecked{}); }

double UnitaryMatrix::unitarity_error() const {
  return max_abs_diff(m_ * m_.adjoint(), ComplexMatrix::identity(m_.rows()));
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (!(values_[i] >= values_[i + 1]))
      throw Error(ErrorCode::InvalidArgument, "spectrum must be non-increasing at index " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// Operations

UnitaryMatrix haar_unitary(std::size_t n, RandomSeed seed) {
  auto engine = make_engine(seed);
  return haar_unitary(n, engine);
}

UnitaryMatrix haar_unitary(std::size_t n, std::mt19937_64& engine) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "haar_unitary requires n >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double re = normal(engine);
      const double im = normal(engine);
      a(r, c) = Complex{re, im};
    }

  // Householder QR; q accumulates H_0 H_1 ... H_{n-1}.
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> r_diag(n);
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    double norm_x = 0.0;
    for (std::size_t i = j; i < n; ++i) norm_x += std::norm(a(i, j));
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) {
      r_diag[j] = 1.0;
      continue;
    }
    const Complex x0 = a(j, j);
    const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0, 0.0} : x0 / std::abs(x0);
    const Complex alpha = -phase * norm_x;
    r_diag[j] = alpha;

    double vnorm = 0.0;
    for (std::size_t i = j; i < n; ++i) {
      v[i] = a(i, j) - (i == j ? alpha : Complex{});
      vnorm += std::norm(v[i]);
    }
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = j; i < n; ++i) v[i] /= vnorm;

    // a <- (I - 2 v v^dagger) a on rows j..n-1
    for (std::size_t c = j; c < n; ++c) {
      Complex dot{};
      for (std::size_t i = j; i < n; ++i) dot += std::conj(v[i]) * a(i, c);
      for (std::size_t i = j; i < n; ++i) a(i, c) -= 2.0 * v[i] * dot;
    }
    // q <- q (I - 2 v v^dagger)
    for (std::size_t r = 0; r < n; ++r) {
      Complex dot{};
      for (std::size_t i = j; i < n; ++i) dot += q(r, i) * v[i];
      for (std::size_t i = j; i < n; ++i) q(r, i) -= 2.0 * dot * std::conj(v[i]);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Complex ph = r_diag[c] / std::abs(r_diag[c]);
    for (std::size_t r = 0; r < n; ++r) q(r, c) *= ph;
  }
  return UnitaryMatrix(std::move(q));
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw Error(ErrorCode::SizeMismatch, "commutator needs equal square sizes");
  return x * y - y * x;
}

SkewHermitianMatrix embed_block(const SkewHermitianMatrix& s, std::size_t n) {
  const std::size_t k = s.size();
  if (k > n) throw Error(ErrorCode::InvalidArgument, "embed_block: block larger than target");
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = s(r, c);
  return SkewHermitianMatrix(out);
}

HermitianMatrix conjugate(const UnitaryMatrix& u, const HermitianMatrix& a) {
  return HermitianMatrix(u.matrix() * a.matrix() * u.matrix().adjoint());
}

UnitaryMatrix expm(const SkewHermitianMatrix& s) {
  // S = -i H with H = iS Hermitian, so exp(S) = Q diag(exp(-i h)) Q^dagger.
  const HermitianMatrix h(Complex{0.0, 1.0} * s.matrix());
  const auto eig = eig_hermitian(h);
  const std::size_t n = s.size();
  ComplexMatrix scaled = eig.vectors.matrix();
  for (std::size_t c = 0; c < n; ++c) {
    const Complex ph = std::polar(1.0, -eig.values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= ph;
  }
  return UnitaryMatrix(scaled * eig.vectors.matrix().adjoint());
}

HermitianMatrix random_orbit_point(const Spectrum& lambda, RandomSeed seed) {
  if (lambda.empty()) throw Error(ErrorCode::InvalidArgument, "random_orbit_point: empty spectrum");
  if (lambda.spread() == 0.0) return HermitianMatrix::diagonal(lambda.values());
  const auto c = haar_unitary(lambda.size(), seed);
  return conjugate(c, HermitianMatrix::diagonal(lambda.values()));
}

// ---------------------------------------------------------------------------
// RealMatrix

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> RealMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RealMatrix RealMatrix::from_rows(std::span<const std::vector<double>> rows, std::size_t width) {
  RealMatrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw Error(ErrorCode::SizeMismatch, "from_rows: ragged input");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace gcfiber
