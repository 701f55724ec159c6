#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace cevian {

using Complex = std::complex<double>;

/// Relative tolerance for every geometric predicate (degeneracy, chart
/// holes, unit-circle membership).
inline constexpr double kEps = 1e-9;

inline constexpr double kSqrt3 = std::numbers::sqrt3;

/// Primitive cube root of unity e^{2πi/3}.
inline const Complex kOmega{-0.5, kSqrt3 / 2.0};
/// ω² = ω⁻¹ = conj(ω).
inline const Complex kOmega2{-0.5, -kSqrt3 / 2.0};
/// Primitive sixth root of unity e^{2πi/6}.
inline const Complex kRho{0.5, kSqrt3 / 2.0};
/// ρ⁻¹ = conj(ρ).
inline const Complex kRhoInv{0.5, -kSqrt3 / 2.0};

enum class ErrorKind {
  CoincidentVertices,
  DegenerateTriangle,
  IndeterminateValue,
  InvalidParameters,
  DerivedParameterUndefined,
  ExcludedPoint,
  ConicChartFailure,
  PoleAtInput,
  AngleConstraintViolated,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline bool is_negligible(Complex z, double scale = 1.0) {
  return std::abs(z) <= kEps * scale;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A point of the Riemann sphere ℂ ∪ {∞}.
class SphereValue {
 public:
  SphereValue() = default;  // 0
  SphereValue(Complex z) : value_(z) {}  // NOLINT(google-explicit-constructor)

  static SphereValue infinity() {
    SphereValue s;
    s.value_.reset();
    return s;
  }

  /// num/den on the sphere. A denominator within tol of zero yields ∞ unless
  /// the numerator is negligible too, which is the indeterminate form 0/0.
  static SphereValue ratio(Complex num, Complex den, double tol = kEps) {
    if (std::abs(den) <= tol) {
      if (std::abs(num) <= tol) {
        throw Error(ErrorKind::IndeterminateValue, "0/0 on the Riemann sphere");
      }
      return infinity();
    }
    return SphereValue(num / den);
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Finite value; throws when called on ∞.
  Complex value() const {
    if (!value_) throw Error(ErrorKind::IndeterminateValue, "finite value requested from infinity");
    return *value_;
  }

  /// |z|, with +inf for the point at infinity.
  double magnitude() const noexcept {
    return value_ ? std::abs(*value_) : std::numeric_limits<double>::infinity();
  }

  friend bool operator==(const SphereValue&, const SphereValue&) = default;

 private:
  std::optional<Complex> value_{Complex{}};
};

/// True when both are ∞, or both finite and within tol relative to
/// max(1, |a|).
bool near(const SphereValue& a, const SphereValue& b, double tol);

/// Chordal distance on the Riemann sphere, in [0, 1].
double chordal_distance(const SphereValue& a, const SphereValue& b);

std::string to_string(const SphereValue& s);

/// Möbius map z ↦ (az + b)/(cz + d) on the sphere, ad − bc ≠ 0.
SphereValue mobius(Complex a, Complex b, Complex c, Complex d, const SphereValue& z);

}  // namespace cevian
