#include "sixv/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace sixv {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string("shape mismatch in ") + op + ": " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cx(1.0, 0.0);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Cx scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

CMatrix operator-(CMatrix lhs, const CMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("inner dimension mismatch in matrix product: " +
                         std::to_string(lhs.cols()) + " vs " +
                         std::to_string(rhs.rows()));
  }
  CMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Cx likk = lhs(i, k);
      if (likk == Cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out(i, j) += likk * rhs(k, j);
      }
    }
  }
  return out;
}

CMatrix operator*(Cx scale, CMatrix m) {
  m *= scale;
  return m;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.size()) {
    throw DimensionError("matrix-vector dimension mismatch: " +
                         std::to_string(m.cols()) + " vs " +
                         std::to_string(v.size()));
  }
  CVector out(m.rows(), Cx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Cx acc(0.0, 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.rows() == 0 || a.cols() == 0 || b.rows() == 0 || b.cols() == 0) {
    throw DimensionError("kron needs nonempty operands");
  }
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cx aij = a(i, j);
      if (aij == Cx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

double max_abs(const CVector& v) {
  double best = 0.0;
  for (const auto& x : v) best = std::max(best, std::abs(x));
  return best;
}

Cx matrix_element(const CVector& bra, const CMatrix& m, const CVector& ket) {
  const CVector mv = m * ket;
  if (bra.size() != mv.size()) {
    throw DimensionError("bra dimension mismatch in matrix_element");
  }
  Cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < bra.size(); ++i) acc += bra[i] * mv[i];
  return acc;
}

namespace {

double normalised(double diff, double scale) {
  if (scale < 1e-14) return diff;  // absolute fallback near zero
  return diff / scale;
}

}  // namespace

double pair_residual(const CMatrix& lhs, const CMatrix& rhs) {
  require_same_shape(lhs, rhs, "pair_residual");
  return normalised(max_abs(lhs - rhs), std::max(max_abs(lhs), max_abs(rhs)));
}

double pair_residual(const CVector& lhs, const CVector& rhs) {
  if (lhs.size() != rhs.size()) {
    throw DimensionError("vector dimension mismatch in pair_residual");
  }
  double diff = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
  }
  return normalised(diff, std::max(max_abs(lhs), max_abs(rhs)));
}

double pair_residual(Cx lhs, Cx rhs) {
  return normalised(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

Cx ipow(Cx base, std::size_t n) {
  Cx out(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) out *= base;
  return out;
}

}  // namespace sixv
