#pragma once

#include <random>

#include "cevian/operators.hpp"

namespace cevian::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Complex complex(double r) { return {real(-r, r), real(-r, r)}; }
  Complex unit() { return std::polar(1.0, real(0.0, 2.0 * std::numbers::pi)); }

  /// Random triple whose area is at least 2% of scale².
  TriangleTriple triple() {
    while (true) {
      const auto t = TriangleTriple::unchecked(complex(1.0), complex(1.0), complex(1.0));
      const double s = t.scale();
      if (s > 1e-3 && area_shoelace(t) >= 0.02 * s * s) return t;
    }
  }

  TriangleTriple positive_triple() {
    const auto t = triple();
    return orientation(t) == Orientation::Positive ? t : TriangleTriple::unchecked(t.a(), t.c(), t.b());
  }

  /// Valid pair with |1 − pq| bounded away from zero.
  PQPair pq(double r = 2.0) {
    while (true) {
      const Complex p = complex(r), q = complex(r);
      if (std::abs(1.0 - p * q) > 0.1) return PQPair(p, q);
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close(const TriangleTriple& x, const TriangleTriple& y, double tol) {
  const double s = std::max(1.0, x.scale());
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(x.vertices()[i] - y.vertices()[i]) > tol * s) return false;
  }
  return true;
}

inline bool close(const CirculantOperator& x, const CirculantOperator& y, double tol) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!close(x.coefficients()[i], y.coefficients()[i], tol)) return false;
  }
  return true;
}

}  // namespace cevian::testing
