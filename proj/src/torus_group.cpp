#include "cevian/torus_group.hpp"

#include <algorithm>

namespace cevian {
namespace {

Complex ipow(Complex z, long long n) {
  Complex result = 1.0;
  Complex base = n < 0 ? 1.0 / z : z;
  for (unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : n; e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace

TorusElement::TorusElement(SphereValue t) : t_(t) {
  if (t.is_finite()) {
    const Complex z = t.value();
    if (!is_finite(z)) throw Error(ErrorKind::InvalidParameters, "torus coordinate must be finite or ∞");
    if (is_negligible(z - kRho) || is_negligible(z - kRhoInv)) {
      throw Error(ErrorKind::ExcludedPoint, "ρ and ρ⁻¹ are not in T(ℂ)");
    }
  }
}

SphereValue psi(const TorusElement& t) { return mobius(kOmega, 1.0, kOmega2, 1.0, t.t()); }

TorusElement psi_inv(const SphereValue& xi) {
  if (xi.is_infinite() || is_negligible(xi.value())) {
    throw Error(ErrorKind::ExcludedPoint, "ξ ∈ {0, ∞} pulls back to ρ or ρ⁻¹");
  }
  // ξ(1 + tω²) = 1 + tω  ⇒  t = (1 − ξ)/(ξω² − ω)
  return TorusElement(mobius(-1.0, 1.0, kOmega2, -kOmega, xi));
}

TorusElement add(const TorusElement& t1, const TorusElement& t2) {
  return psi_inv(psi(t1).value() * psi(t2).value());
}

SphereValue add_formula(Complex t1, Complex t2) {
  const Complex num = t1 + t2 - t1 * t2;
  const Complex den = 1.0 - t1 * t2;
  return SphereValue::ratio(num, den, kEps * std::max({1.0, std::abs(num), std::abs(den)}));
}

TorusElement neg(const TorusElement& t) { return psi_inv(1.0 / psi(t).value()); }

TorusElement nmul(long long n, const TorusElement& t) {
  return psi_inv(ipow(psi(t).value(), n));
}

SphereValue nmul_closed_form(long long n, const TorusElement& t) {
  Complex a, b;
  if (t.t().is_infinite()) {
    a = ipow(kOmega, n);
    b = ipow(kOmega2, n);
  } else {
    const Complex z = t.t().value();
    a = ipow(1.0 + kOmega * z, n);
    b = ipow(1.0 + kOmega2 * z, n);
  }
  const Complex num = a - b;
  const Complex den = kRho * a - kRhoInv * b;
  return SphereValue::ratio(num, den, kEps * std::max({1.0, std::abs(a), std::abs(b)}));
}

std::vector<TorusElement> division_points(long long n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "division points need N ≥ 1");
  std::vector<TorusElement> out;
  out.reserve(static_cast<std::size_t>(n));
  const double pi = std::numbers::pi;
  for (long long k = 0; k < n; ++k) {
    if (3 * k == 2 * n) {
      out.push_back(TorusElement::infinity());
      continue;
    }
    const double x = static_cast<double>(k) / static_cast<double>(n);
    out.emplace_back(Complex{std::sin(pi * x) / std::sin(pi * (x + 1.0 / 3.0))});
  }
  return out;
}

double conic_residual(const ConicPoint& c) {
  return std::abs(c.u * c.u + c.u * c.v + c.v * c.v - 1.0);
}

ConicPoint to_conic(const TorusElement& t) {
  if (t.t().is_infinite()) return {-1.0, 1.0};
  const Complex z = t.t().value();
  const Complex den = z * z - z + 1.0;
  return {(1.0 - z * z) / den, z * (z - 2.0) / den};
}

TorusElement from_conic(const ConicPoint& c) {
  const double size = std::max({1.0, std::norm(c.u), std::norm(c.v)});
  if (conic_residual(c) > kEps * size) {
    throw Error(ErrorKind::ConicChartFailure, "point is not on u² + uv + v² = 1");
  }
  if (is_negligible(c.v)) {
    throw Error(ErrorKind::ConicChartFailure, "v = 0 is outside the chart");
  }
  return TorusElement(SphereValue::ratio(-c.v, 1.0 + c.u, kEps * std::max(1.0, std::abs(c.u))));
}

}  // namespace cevian
