#pragma once

// Dense complex linear algebra sized for Gelfand-Cetlin work (n up to ~32).
// Everything here is a value type; operations are pure functions of their
// inputs plus an explicit seed.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gcfiber {

using Complex = std::complex<double>;

/// Seed for every randomized routine. Identical seeds give bit-identical output.
struct RandomSeed {
  std::uint64_t value = 0;
};

/// Deterministic engine derived from a seed and an optional stream index.
std::mt19937_64 make_engine(RandomSeed seed, std::uint64_t stream = 0);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max |a_ij - b_ij|; sizes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// A = A^dagger, held exactly: construction averages with the adjoint and
/// zeroes the imaginary part of the diagonal.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix diagonal(std::span<const double> entries);

  std::size_t size() const noexcept { return m_.rows(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double max_abs() const { return m_.max_abs(); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  ComplexMatrix m_;
};

/// Y + Y^dagger = 0 exactly, diagonal purely imaginary.
class SkewHermitianMatrix {
 public:
  SkewHermitianMatrix() = default;
  explicit SkewHermitianMatrix(const ComplexMatrix& m);

  std::size_t size() const noexcept { return m_.rows(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitaryMatrix() = default;
  /// Throws InvalidArgument when ||U U^dagger - I||_max exceeds `tol`.
  explicit UnitaryMatrix(ComplexMatrix m, double tol = kTolerance);

  static UnitaryMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return m_.rows(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  UnitaryMatrix adjoint() const;

  /// ||U U^dagger - I||_max
  double unitarity_error() const;

 private:
  struct Unchecked {};
  UnitaryMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Real values in non-increasing order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double spread() const noexcept { return empty() ? 0.0 : values_.front() - values_.back(); }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> values_;
};

struct EigenDecomposition {
  Spectrum values;
  UnitaryMatrix vectors;  // A = vectors * diag(values) * vectors^dagger
};

/// Cyclic Jacobi sweeps on the complex Hermitian input.
inline constexpr int kJacobiSweepCap = 50;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;

EigenDecomposition eig_hermitian(const HermitianMatrix& a);

/// Eigenvalues only, descending.
Spectrum eigenvalues(const HermitianMatrix& a);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
UnitaryMatrix haar_unitary(std::size_t n, RandomSeed seed);
UnitaryMatrix haar_unitary(std::size_t n, std::mt19937_64& engine);

/// XY - YX. Throws SizeMismatch on differing or non-square shapes.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// S in the upper-left block of an n x n zero matrix.
SkewHermitianMatrix embed_block(const SkewHermitianMatrix& s, std::size_t n);

/// U A U^dagger
HermitianMatrix conjugate(const UnitaryMatrix& u, const HermitianMatrix& a);

/// exp(S) for skew-Hermitian S, through the spectral decomposition of iS.
UnitaryMatrix expm(const SkewHermitianMatrix& s);

/// C diag(lambda) C^dagger with C Haar. A constant spectrum returns c*I exactly.
HermitianMatrix random_orbit_point(const Spectrum& lambda, RandomSeed seed);

// ---------------------------------------------------------------------------
// Real dense matrices, used for ranks and nullspaces of linear constraints.

class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RealMatrix transpose() const;
  std::vector<double> column(std::size_t c) const;

  /// Matrix whose rows are the given equally-sized vectors.
  static RealMatrix from_rows(std::span<const std::vector<double>> rows, std::size_t width);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SingularValueDecomposition {
  std::vector<double> singular_values;  // descending, one per column of the input
  RealMatrix right_vectors;             // cols x cols; column j pairs with singular_values[j]
};

/// One-sided (Hestenes) Jacobi SVD.
SingularValueDecomposition svd_jacobi(const RealMatrix& m);

/// Count of singular values strictly above rel_cutoff * max(sigma_max, scale).
/// `scale` is the magnitude below which a matrix is treated as numerically zero
/// regardless of its own largest singular value.
std::size_t numeric_rank(std::span<const double> singular_values, double rel_cutoff, double scale);
std::size_t numeric_rank(const RealMatrix& m, double rel_cutoff, double scale);

/// Orthonormal basis (as columns) of the right nullspace of m, using the same
/// cutoff rule as numeric_rank.
RealMatrix nullspace(const RealMatrix& m, double rel_cutoff, double scale);

}  // namespace gcfiber
