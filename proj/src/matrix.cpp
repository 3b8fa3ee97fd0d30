#include "lomean/matrix.hpp"

#include <cmath>

namespace lomean {

namespace {
void require_same(const Matrix& x, const Matrix& y, const char* where) {
  if (x.dim() != y.dim())
    throw DimensionError(std::string(where) + ": dimension mismatch (" + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()) + ")");
}
}  // namespace

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same(x, y, "operator+");
  Matrix r = x;
  for (size_t i = 0; i < r.storage().size(); ++i) r.storage()[i] += y.storage()[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same(x, y, "operator-");
  Matrix r = x;
  for (size_t i = 0; i < r.storage().size(); ++i) r.storage()[i] -= y.storage()[i];
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  require_same(x, y, "operator*");
  const int n = x.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx xik = x(i, k);
      if (xik == cplx{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

Matrix operator*(cplx s, const Matrix& x) {
  Matrix r = x;
  for (auto& v : r.storage()) v *= s;
  return r;
}

Matrix operator*(double s, const Matrix& x) { return cplx(s, 0.0) * x; }

Matrix adjoint(const Matrix& m) {
  const int n = m.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const auto& v : m.storage()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_entry(const Matrix& m) {
  double s = 0.0;
  for (const auto& v : m.storage()) s = std::max(s, std::abs(v));
  return s;
}

HermitianMatrix::HermitianMatrix(const Matrix& m) : m_(m.dim()) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    m_(i, i) = cplx(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix HermitianMatrix::diag(const std::vector<double>& d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return HermitianMatrix(m);
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim(); ++i) t += m_(i, i).real();
  return t;
}

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
  return HermitianMatrix(x.mat() + y.mat());
}

HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
  return HermitianMatrix(x.mat() - y.mat());
}

HermitianMatrix operator*(double s, const HermitianMatrix& x) {
  return HermitianMatrix(s * x.mat());
}

void require_same_dim(const HermitianMatrix& x, const HermitianMatrix& y, const char* where) {
  if (x.dim() != y.dim())
    throw DimensionError(std::string(where) + ": dimension mismatch (" + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()) + ")");
}

HermitianMatrix congruence(const Matrix& c, const HermitianMatrix& a) {
  if (c.dim() != a.dim()) throw DimensionError("congruence: dimension mismatch");
  return symmetrize(adjoint(c) * (a.mat() * c));
}

}  // namespace lomean
