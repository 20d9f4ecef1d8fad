#pragma once

// Seeded generators for small-height exact test data. A Sampler is derived
// from (seed, stream name) so every check draws from its own stream.

#include <cstdint>
#include <random>
#include <string_view>

#include "g2forge/exterior.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

/// FNV-1a; stable across platforms, unlike std::hash.
constexpr std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::string_view stream = {}) {
    const std::uint64_t h = stable_hash(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    rng_.seed(seq);
  }

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= height, 1 <= q <= height.
  Rational rational(long height = 5) {
    const long p = integer(-height, height);
    const long q = integer(1, height);
    return Rational(p, q);
  }

  Rational nonzero_rational(long height = 5) {
    for (;;) {
      Rational r = rational(height);
      if (!r.is_zero()) return r;
    }
  }

  /// Each blade present with probability `density`.
  Form<Rational> form(int grade, double density = 0.6, long height = 4) {
    Form<Rational> f(grade);
    std::bernoulli_distribution keep(density);
    for (const Blade& b : blades_of_grade(grade))
      if (keep(rng_)) f.add_term(b.mask, rational(height));
    return f;
  }

  Form<Rational> vector(long height = 4) { return form(1, 1.0, height); }

  Matrix<Rational> symmetric(bool traceless, long height = 4) {
    Matrix<Rational> s(kDim, kDim);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i; j < kDim; ++j) {
        s(i, j) = rational(height);
        s(j, i) = s(i, j);
      }
    if (traceless) {
      const Rational t = s.trace() / Rational(kDim);
      for (std::size_t i = 0; i < kDim; ++i) s(i, i) -= t;
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace g2forge
