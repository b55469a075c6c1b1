#pragma once

#include <cstdint>

#include "curvrank/matrix.hpp"

namespace curvrank {

/// Deterministic splitmix64 generator. A generator is keyed by (seed, stream);
/// fork() derives an independent stream without disturbing the parent, so the
/// draw sequence of one consumer never depends on what other consumers do.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = mix(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    state_ = mix(state_ ^ 0xBF58476D1CE4E5B9ULL);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform integer in [lo, hi], endpoints included.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (next_u64() & 1) != 0; }

  /// Rational with numerator in [-num_bound, num_bound] and denominator in [1, den_bound].
  Rational small_rational(long num_bound, long den_bound) {
    long n = int_in(-num_bound, num_bound);
    long d = int_in(1, den_bound);
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  Vec rational_vec(std::size_t n, long num_bound, long den_bound) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = small_rational(num_bound, den_bound);
    return v;
  }

  Mat rational_mat(std::size_t rows, std::size_t cols, long num_bound, long den_bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(num_bound, den_bound);
    return m;
  }

  Rng fork(std::uint64_t stream) const {
    Rng child(mix(state_ ^ (0xD1B54A32D192ED03ULL * (stream + 1))), stream);
    return child;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace curvrank
