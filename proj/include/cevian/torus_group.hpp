#pragma once

#include <vector>

#include "cevian/numeric.hpp"

namespace cevian {

/// A point of T(ℂ) = ℙ¹ − {ρ, ρ⁻¹}. ∞ is a legitimate element.
class TorusElement {
 public:
  /// Throws ExcludedPoint at ρ or ρ⁻¹.
  explicit TorusElement(SphereValue t);
  explicit TorusElement(Complex t) : TorusElement(SphereValue(t)) {}

  static TorusElement zero() { return TorusElement(Complex{}); }
  static TorusElement infinity() { return TorusElement(SphereValue::infinity()); }

  const SphereValue& t() const noexcept { return t_; }

 private:
  SphereValue t_;
};

/// ψ(t) = (1 + tω)/(1 + tω²), an isomorphism T(ℂ) → 𝔾_m(ℂ).
SphereValue psi(const TorusElement& t);

/// Inverse of ψ. Throws ExcludedPoint for ξ ∈ {0, ∞}.
TorusElement psi_inv(const SphereValue& xi);

/// t [+] t', computed as ψ⁻¹(ψ(t)ψ(t')).
TorusElement add(const TorusElement& t1, const TorusElement& t2);

/// (t + t' − tt')/(1 − tt'), finite inputs only, sphere-valued.
SphereValue add_formula(Complex t1, Complex t2);

/// Inverse element, computed as ψ⁻¹(1/ψ(t)). Equals t/(t − 1).
TorusElement neg(const TorusElement& t);

/// [N]t, computed as ψ⁻¹(ψ(t)^N).
TorusElement nmul(long long n, const TorusElement& t);

/// ((1+ωt)^N − (1+ω⁻¹t)^N)/(ρ(1+ωt)^N − ρ⁻¹(1+ω⁻¹t)^N); ∞ is handled by
/// its leading coefficients.
SphereValue nmul_closed_form(long long n, const TorusElement& t);

/// The N-division points sin(πk/N)/sin(π(k/N + 1/3)) for k = 0..N−1. The
/// point with 3k = 2N is ∞.
std::vector<TorusElement> division_points(long long n);

/// Point of the affine conic u² + uv + v² = 1.
struct ConicPoint {
  Complex u;
  Complex v;
};

double conic_residual(const ConicPoint& c);

/// u = (1−t²)/(t²−t+1), v = t(t−2)/(t²−t+1); ∞ maps to (−1, 1).
ConicPoint to_conic(const TorusElement& t);

/// Inverse of to_conic, t = −v/(1+u). Throws ConicChartFailure when v = 0,
/// or when the point is off the conic.
TorusElement from_conic(const ConicPoint& c);

}  // namespace cevian
