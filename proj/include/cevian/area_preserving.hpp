#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cevian/operators.hpp"

namespace cevian {

/// Exact angle num/den in ℝ/ℤ, reduced and normalized to [0, 1).
class RationalAngle {
 public:
  RationalAngle() = default;
  /// Throws InvalidParameters when den = 0.
  RationalAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double turns() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// e^{2πiθ}
  Complex unit() const;

  friend RationalAngle operator+(const RationalAngle& x, const RationalAngle& y);
  friend RationalAngle operator-(const RationalAngle& x, const RationalAngle& y);
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const RationalAngle& a);

/// Parses "p/q" or a decimal integer; anything else (e.g. "0.25") is a
/// ParseError.
RationalAngle parse_rational_angle(const std::string& text);

/// S_ap(θx, θy, θy') = S[e^{2πiθy}, e^{2πiθy'}] with θx = θy − θy'.
struct ApOperator {
  RationalAngle theta_x;
  RationalAngle theta_y;
  RationalAngle theta_yp;
};

/// Throws AngleConstraintViolated unless θx ≡ θy − θy' (mod 1).
ApOperator make_ap(const RationalAngle& theta_x, const RationalAngle& theta_y,
                   const RationalAngle& theta_yp);

CirculantOperator to_operator(const ApOperator& ap);

/// Least N with η^N = η'^N = 1: lcm of the reduced denominators.
std::int64_t period(const ApOperator& ap);

/// steps + 1 triples starting at t, each the image of the previous one.
std::vector<TriangleTriple> orbit(const ApOperator& ap, const TriangleTriple& t, int steps);

/// 𝐩(x,y) = p(y, y/x) = ρ(xy+x+y)/(xy+2ρx+ρ²y). Throws PoleAtInput.
Complex bp(Complex x, Complex y);
/// 𝐪(x,y) = q(y, y/x) = ρ⁻¹(xy−ρx−ρ⁻¹y)/(xy−2x+y). Throws PoleAtInput.
Complex bq(Complex x, Complex y);

/// R(x,y) = (2xy−x−y)/(√3(y−x)).
SphereValue r_function(Complex x, Complex y);
/// Q(x,y) = i(𝐪(x,y) − 1/2).
SphereValue q_function(Complex x, Complex y);

/// (1/2)(√3R − 1)/(R + √3), the Q value predicted from R.
SphereValue q_from_r(const SphereValue& r);

/// (x, y) with |x| = |y| = 1.
class TorusPoint {
 public:
  /// Throws InvalidParameters off the torus.
  TorusPoint(Complex x, Complex y);
  static TorusPoint from_turns(double theta_x, double theta_y);

  Complex x() const noexcept { return x_; }
  Complex y() const noexcept { return y_; }

 private:
  Complex x_;
  Complex y_;
};

/// |LHS − RHS| per identity; nullopt where a function hits its pole.
struct FunctionalResiduals {
  std::optional<double> p_from_q;       // 𝐩(x,y) = 𝐪(ωx⁻¹, ω²x⁻¹y)
  std::optional<double> q_from_p;       // 𝐪(x,y) = 𝐩(ωx⁻¹, ω²x⁻¹y)
  std::optional<double> p_swap;         // 𝐩(y,x) in terms of 𝐩(x,y), 𝐪(x,y)
  std::optional<double> q_swap;         // 𝐪(y,x) = (𝐪−1)/((1+ρ)𝐪−1)
  std::optional<double> p_reflection;   // 𝐩(x,y) + conj 𝐩(ω²x⁻¹, ωy⁻¹) = 1
  std::optional<double> q_reflection;   // 𝐪(x,y) + conj 𝐪(x⁻¹, y⁻¹) = 1
  std::optional<double> r_antisymmetry; // R(x,y) + R(y,x) = 0
  std::optional<double> r_conjugation;  // R(x⁻¹,y⁻¹) = conj R(x,y)
  std::optional<double> q_r_bridge;     // Q = (1/2)(√3R−1)/(R+√3)

  /// Largest residual present; 0 when all are poles.
  double max() const;
};

FunctionalResiduals functional_equation_residuals(const TorusPoint& pt);

/// 𝐪 on the torus reconstructed from its values on the fundamental triangle
/// 0 < θ < 2π, 0 ≤ φ ≤ θ, θ + φ ≤ 2π via the swap and inversion symmetries.
Complex bq_from_fundamental_region(const TorusPoint& pt);

}  // namespace cevian
