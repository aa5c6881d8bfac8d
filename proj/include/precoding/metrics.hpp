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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "precoding/complex_matrix.hpp"

namespace precoding {

// SINR_k = |h_k w_k|^2 / (sum_{j!=k} |h_k w_j|^2 + sigma2), for H (K x N) and
// W (N x K).
inline std::vector<double> per_user_sinr(const ComplexMatrix& H,
                                         const ComplexMatrix& W,
                                         double sigma2) {
  const auto h = H.eigen();
  const auto w = W.eigen();
  const Eigen::MatrixXcd hw = h * w;  // K x K, (k, j) = h_k w_j
  const std::size_t K = H.rows();
  std::vector<double> sinr(K);
  for (std::size_t k = 0; k < K; ++k) {
    double interference = 0.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(hw.cols()); ++j) {
      if (j != k) interference += std::norm(hw(k, j));
    }
    sinr[k] = std::norm(hw(k, k)) / (interference + sigma2);
  }
  return sinr;
}

inline double sum_rate(const std::vector<double>& sinr) {
  double r = 0.0;
  for (double s : sinr) r += std::log2(1.0 + s);
  return r;
}

// Unnormalized CI margin of a transmit vector x against PSK symbols: for each
// user, distance of the rotated noiseless receive point y_k = (h_k x) e^{-j
// arg(s_k)} from its order-M decision boundaries,
//   margin_k = Re(y_k) sin(pi/M) - |Im(y_k)| cos(pi/M).
// The minimum over users is returned. Positive means every user's symbol is
// received inside its constructive region. sigma-free on purpose: the
// optimizers work on this quantity, so their decisions are invariant to noise
// scaling and normalized margins scale exactly with 1/sigma.
inline double ci_margin_min(const ComplexMatrix& H, const ComplexMatrix& x,
                            const ComplexMatrix& symbols, std::size_t M) {
  const Eigen::MatrixXcd y = H.eigen() * x.eigen();  // K x 1
  const double sin_b = std::sin(M_PI / static_cast<double>(M));
  const double cos_b = std::cos(M_PI / static_cast<double>(M));
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < H.rows(); ++k) {
    const cplx rotated = y(k, 0) * std::conj(symbols(k, 0));
    const double m = rotated.real() * sin_b - std::abs(rotated.imag()) * cos_b;
    min_margin = std::min(min_margin, m);
  }
  return min_margin;
}

// Per-user variant, needed by solvers that track which user binds.
inline std::vector<double> ci_margins(const ComplexMatrix& H,
                                      const ComplexMatrix& x,
                                      const ComplexMatrix& symbols,
                                      std::size_t M) {
  const Eigen::MatrixXcd y = H.eigen() * x.eigen();
  const double sin_b = std::sin(M_PI / static_cast<double>(M));
  const double cos_b = std::cos(M_PI / static_cast<double>(M));
  std::vector<double> margins(H.rows());
  for (std::size_t k = 0; k < H.rows(); ++k) {
    const cplx rotated = y(k, 0) * std::conj(symbols(k, 0));
    margins[k] = rotated.real() * sin_b - std::abs(rotated.imag()) * cos_b;
  }
  return margins;
}

// Multicast secrecy rate: min_k [log2(1+|h_k w|^2/sigma2) - log2(1+|h_e w|^2/sigma2)]^+.
inline double secrecy_rate(const ComplexMatrix& H, const ComplexMatrix& h_eve,
                           const ComplexMatrix& w, double sigma2) {
  const Eigen::MatrixXcd yw = H.eigen() * w.eigen();
  const double eve_rate =
      std::log2(1.0 + std::norm((h_eve.eigen() * w.eigen())(0, 0)) / sigma2);
  double min_rate = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < H.rows(); ++k) {
    min_rate = std::min(min_rate, std::log2(1.0 + std::norm(yw(k, 0)) / sigma2));
  }
  return std::max(0.0, min_rate - eve_rate);
}

// Aggregate interference power inflicted on the primary-user link g by the
// beamformer columns.
inline double primary_interference(const ComplexMatrix& g,
                                   const ComplexMatrix& W) {
  return (g.eigen() * W.eigen()).squaredNorm();
}

// Worst-case interference bound under a CSI-error ball of radius epsilon:
// sum_k (|g w_k| + epsilon ||w_k||)^2.
inline double robust_primary_interference(const ComplexMatrix& g,
                                          const ComplexMatrix& W,
                                          double epsilon) {
  const auto gw = g.eigen() * W.eigen();  // 1 x K
  const auto w = W.eigen();
  double total = 0.0;
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const double term = std::abs(gw(0, k)) + epsilon * w.col(k).norm();
    total += term * term;
  }
  return total;
}

}  // namespace precoding
