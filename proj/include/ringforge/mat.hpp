#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ringforge/errors.hpp"

namespace ringforge {

/// Dense row-major matrix of doubles. This is the plain value type used for
/// features, parameters and embeddings; differentiable computation wraps it
/// in tensor.hpp. Zero-row matrices are legal (a complex with no 2-cells has
/// an empty feature block of nonzero width).
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), a_(std::move(values)) {
    if (a_.size() != rows_ * cols_) {
      throw ShapeError("Mat: value count " + std::to_string(a_.size()) + " does not match " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }

  double& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  double operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  double* row(std::size_t r) { return a_.data() + r * cols_; }
  const double* row(std::size_t r) const { return a_.data() + r * cols_; }

  std::vector<double>& data() { return a_; }
  const std::vector<double>& data() const { return a_; }

  void fill(double v) { std::fill(a_.begin(), a_.end(), v); }

  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  bool all_finite() const {
    for (double v : a_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

inline Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + a.shape_str() + " * " + b.shape_str());
  }
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.row(k);
      double* crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

}  // namespace ringforge
