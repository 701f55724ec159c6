#include "cevian/numeric.hpp"

#include <cstdio>
#include <algorithm>

namespace cevian {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CoincidentVertices: return "CoincidentVertices";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::IndeterminateValue: return "IndeterminateValue";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::DerivedParameterUndefined: return "DerivedParameterUndefined";
    case ErrorKind::ExcludedPoint: return "ExcludedPoint";
    case ErrorKind::ConicChartFailure: return "ConicChartFailure";
    case ErrorKind::PoleAtInput: return "PoleAtInput";
    case ErrorKind::AngleConstraintViolated: return "AngleConstraintViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool near(const SphereValue& a, const SphereValue& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  const Complex za = a.value();
  return std::abs(za - b.value()) <= tol * std::max(1.0, std::abs(za));
}

double chordal_distance(const SphereValue& a, const SphereValue& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 1.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinite()) return 1.0 / std::sqrt(1.0 + std::norm(a.value()));
  const Complex z = a.value(), w = b.value();
  return std::abs(z - w) / (std::sqrt(1.0 + std::norm(z)) * std::sqrt(1.0 + std::norm(w)));
}

std::string to_string(const SphereValue& s) {
  if (s.is_infinite()) return "inf";
  char buf[96];
  const Complex z = s.value();
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

SphereValue mobius(Complex a, Complex b, Complex c, Complex d, const SphereValue& z) {
  if (z.is_infinite()) return SphereValue::ratio(a, c, 0.0);
  const Complex w = z.value();
  const Complex num = a * w + b;
  const Complex den = c * w + d;
  const double tol = kEps * std::max({1.0, std::abs(num), std::abs(den)});
  return SphereValue::ratio(num, den, tol);
}

}  // namespace cevian
