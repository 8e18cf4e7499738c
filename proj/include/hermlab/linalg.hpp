#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hermlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Dense rank-3 component array, square in every index, row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int i, int j, int k) {
    return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  double operator()(int i, int j, int k) const {
    return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<double>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Dense rank-4 component array, square in every index, row-major.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int i, int j, int k, int l) {
    return a_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double max_abs_diff(const Tensor4& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Tensor4: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
  }

  Tensor4& axpy(double c, const Tensor4& o) {
    if (o.n_ != n_) throw std::invalid_argument("Tensor4: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * o.a_[i];
    return *this;
  }

  Tensor4& scale(double c) {
    for (double& v : a_) v *= c;
    return *this;
  }

  const std::vector<double>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Dense rank-5 component array (direction index first), row-major.
class Tensor5 {
 public:
  Tensor5() = default;
  explicit Tensor5(int n)
      : n_(n), a_(static_cast<std::size_t>(n) * n * n * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int d, int i, int j, int k, int l) {
    return a_[(((static_cast<std::size_t>(d) * n_ + i) * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(int d, int i, int j, int k, int l) const {
    return a_[(((static_cast<std::size_t>(d) * n_ + i) * n_ + j) * n_ + k) * n_ + l];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<double>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace hermlab
