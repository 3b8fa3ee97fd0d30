#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomean {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct SingularError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(check_dim(dim)), a_(static_cast<size_t>(dim) * dim) {}
  Matrix(int dim, std::vector<cplx> entries) : dim_(check_dim(dim)), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(dim_) * dim_)
      throw DimensionError("Matrix: entry count does not match dim*dim");
  }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  const std::vector<cplx>& storage() const { return a_; }
  std::vector<cplx>& storage() { return a_; }

 private:
  static int check_dim(int dim) {
    if (dim < 1) throw DimensionError("Matrix: dim must be >= 1");
    return dim;
  }
  int dim_ = 0;
  std::vector<cplx> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(cplx s, const Matrix& x);
Matrix operator*(double s, const Matrix& x);

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

double frobenius_norm(const Matrix& m);
double max_abs_entry(const Matrix& m);

/// Hermitian matrix; symmetrized on construction so entries(i,j) == conj(entries(j,i))
/// holds exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Builds (m + m*)/2. Idempotent on Hermitian input.
  explicit HermitianMatrix(const Matrix& m);

  static HermitianMatrix identity(int dim) { return HermitianMatrix(Matrix::identity(dim)); }
  static HermitianMatrix zero(int dim) { return HermitianMatrix(Matrix(dim)); }
  static HermitianMatrix diag(const std::vector<double>& d);

  int dim() const { return m_.dim(); }
  cplx operator()(int i, int j) const { return m_(i, j); }
  const Matrix& mat() const { return m_; }

  double trace() const;

 private:
  Matrix m_;
};

/// (M + M*)/2 as a HermitianMatrix. Errors on non-square input happen at Matrix level.
inline HermitianMatrix symmetrize(const Matrix& m) { return HermitianMatrix(m); }

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator*(double s, const HermitianMatrix& x);

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y, const char* where);

/// symmetrize(C* A C). Preserves PSD-ness for any square C of matching dim.
HermitianMatrix congruence(const Matrix& c, const HermitianMatrix& a);

}  // namespace lomean
