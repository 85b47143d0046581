#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace clp {

// Dense row-major matrix of doubles. Small sizes only; no BLAS needed at
// this scale.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dims");
  }

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

inline double logsumexp(const double* z, int n) {
  double m = z[0];
  for (int i = 1; i < n; ++i) m = std::max(m, z[i]);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(z[i] - m);
  return m + std::log(s);
}

// Row-wise softmax of a logits matrix, computed with max-subtraction.
inline Matrix softmax_rows(const Matrix& z) {
  Matrix p(z.rows, z.cols);
  for (int r = 0; r < z.rows; ++r) {
    const double lse = logsumexp(z.row(r), z.cols);
    for (int c = 0; c < z.cols; ++c) p.at(r, c) = std::exp(z.at(r, c) - lse);
  }
  return p;
}

// Row-wise log-softmax.
inline Matrix log_softmax_rows(const Matrix& z) {
  Matrix lp(z.rows, z.cols);
  for (int r = 0; r < z.rows; ++r) {
    const double lse = logsumexp(z.row(r), z.cols);
    for (int c = 0; c < z.cols; ++c) lp.at(r, c) = z.at(r, c) - lse;
  }
  return lp;
}

// Max over rows of the per-row total-variation distance between two
// row-stochastic matrices.
inline double total_variation(const Matrix& p, const Matrix& q) {
  if (!p.same_shape(q)) throw std::invalid_argument("total_variation: shape mismatch");
  double worst = 0.0;
  for (int r = 0; r < p.rows; ++r) {
    double tv = 0.0;
    for (int c = 0; c < p.cols; ++c) tv += std::abs(p.at(r, c) - q.at(r, c));
    worst = std::max(worst, 0.5 * tv);
  }
  return worst;
}

}  // namespace clp
