// Copyright 2026 The Precoding Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace precoding {

using cplx = std::complex<double>;

struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using EigenCMat =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenCVec = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

// Dense complex matrix, double precision, row-major. Immutable by convention:
// every operation returns a fresh value. Problem sizes in this toolkit stay
// below 64x64, so no attempt is made at sparse or blocked storage.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("ComplexMatrix: rows*cols != entry count");
    }
    for (const cplx& v : entries_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
      }
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
  }

  static ComplexMatrix from_eigen(const Eigen::Ref<const EigenCMat>& e) {
    ComplexMatrix m(static_cast<std::size_t>(e.rows()),
                    static_cast<std::size_t>(e.cols()));
    Eigen::Map<EigenCMat>(m.entries_.data(), e.rows(), e.cols()) = e;
    m.check_finite();
    return m;
  }

  Eigen::Map<const EigenCMat> eigen() const {
    return {entries_.data(), static_cast<Eigen::Index>(rows_),
            static_cast<Eigen::Index>(cols_)};
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<cplx>& entries() const { return entries_; }

  cplx& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  ComplexMatrix adjoint() const { return from_eigen(eigen().adjoint()); }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
    }
    return from_eigen(eigen() * rhs.eigen());
  }

  ComplexMatrix scaled(double s) const { return from_eigen(eigen() * s); }

  double frobenius_norm() const { return eigen().norm(); }
  double squared_norm() const { return eigen().squaredNorm(); }

  bool operator==(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  void check_finite() const {
    for (const cplx& v : entries_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
      }
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> entries_;
};

// Solves A X = B for Hermitian positive-definite A via Cholesky, with one step
// of iterative refinement so the relative residual stays below 1e-10 even for
// moderately ill-conditioned systems.
//
// Throws NotPositiveDefinite when the factorization hits a nonpositive pivot,
// std::invalid_argument when A is not Hermitian within 1e-10.
inline ComplexMatrix hermitian_solve(const ComplexMatrix& A,
                                     const ComplexMatrix& B) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("hermitian_solve: A must be square");
  }
  if (A.rows() != B.rows()) {
    throw std::invalid_argument("hermitian_solve: A and B row mismatch");
  }
  const auto a = A.eigen();
  const double scale = a.cwiseAbs().maxCoeff();
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + scale)) {
    throw std::invalid_argument("hermitian_solve: A not Hermitian within 1e-10");
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("hermitian_solve: nonpositive Cholesky pivot");
  }
  Eigen::MatrixXcd x = llt.solve(B.eigen());
  x += llt.solve(B.eigen() - a * x);  // refinement step
  return ComplexMatrix::from_eigen(x);
}

// Moore-Penrose pseudo-inverse of a wide full-row-rank matrix (K <= N), via
// SVD. tol is relative to the largest singular value; defaulted by callers to
// 1e-10 * sigma_max.
inline ComplexMatrix pseudo_inverse(const ComplexMatrix& H,
                                    double tol = 1e-10) {
  if (H.rows() > H.cols()) {
    throw std::invalid_argument("pseudo_inverse: expects K <= N");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      H.eigen(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  if (s(s.size() - 1) < tol * smax) {
    throw RankDeficient("pseudo_inverse: smallest singular value below tol");
  }
  Eigen::VectorXd inv = s.cwiseInverse();
  return ComplexMatrix::from_eigen(svd.matrixV() * inv.asDiagonal() *
                                   svd.matrixU().adjoint());
}

}  // namespace precoding
