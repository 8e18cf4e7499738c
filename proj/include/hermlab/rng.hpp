#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hermlab/linalg.hpp"

namespace hermlab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic, splittable random stream. Children derived with split() are
/// statistically independent of the parent and of each other, so per-sample
/// streams give identical results in serial and parallel sampling loops.
/// Gaussian deviates use Box-Muller on explicit 53-bit uniforms rather than
/// std::normal_distribution, whose output sequence is implementation-defined.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(mix_seed(seed)) {}

  SampleStream split(std::uint64_t index) const {
    std::uint64_t s = state_ ^ (0x94d049bb133111ebULL * (index + 1));
    return SampleStream(s);
  }

  std::uint64_t next_bits() { return detail::splitmix64(state_); }

  /// Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(next_bits() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    double u = uniform();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  Vec gaussian_vec(int n) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = gaussian();
    return x;
  }

  Mat gaussian_mat(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }

 private:
  static std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t s = seed ^ 0xd1b54a32d192ed03ULL;
    detail::splitmix64(s);
    return s;
  }

  std::uint64_t state_;
};

}  // namespace hermlab
