#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sixv/errors.hpp"

namespace sixv {

using Cx = std::complex<double>;
using CVector = std::vector<Cx>;

// dense row-major complex matrix; dimensions stay small (<= 4*2^L with L <= 6)
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Cx(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Cx>& data() const { return data_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Cx scale);

 private:
  std::size_t rows_, cols_;
  std::vector<Cx> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(Cx scale, CMatrix m);
CVector operator*(const CMatrix& m, const CVector& v);

CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
double max_abs(const CVector& v);

// bilinear pairing <bra| m |ket>, no conjugation
Cx matrix_element(const CVector& bra, const CMatrix& m, const CVector& ket);

// max-abs difference normalised by the larger operand scale; absolute
// fallback when both sides are below 1e-14
double pair_residual(const CMatrix& lhs, const CMatrix& rhs);
double pair_residual(const CVector& lhs, const CVector& rhs);
double pair_residual(Cx lhs, Cx rhs);

// integer power by repeated multiplication, exact for the small exponents used
Cx ipow(Cx base, std::size_t n);

}  // namespace sixv
