#include "cevian/geom_core.hpp"

#include <algorithm>

namespace cevian {

double TriangleTriple::scale() const noexcept {
  return std::max({std::abs(v_[0] - v_[1]), std::abs(v_[1] - v_[2]), std::abs(v_[2] - v_[0])});
}

TriangleTriple TriangleTriple::conj() const {
  return TriangleTriple(std::conj(v_[0]), std::conj(v_[1]), std::conj(v_[2]));
}

bool has_coincident_vertices(const TriangleTriple& t) {
  const double tol = kEps * t.scale();
  const auto& v = t.vertices();
  return std::abs(v[0] - v[1]) <= tol || std::abs(v[1] - v[2]) <= tol ||
         std::abs(v[2] - v[0]) <= tol;
}

TriangleTriple make_triple(Complex a, Complex b, Complex c) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw Error(ErrorKind::InvalidParameters, "triangle vertices must be finite");
  }
  auto t = TriangleTriple::unchecked(a, b, c);
  if (has_coincident_vertices(t)) {
    throw Error(ErrorKind::CoincidentVertices, "two vertices coincide");
  }
  return t;
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Positive: return "positive";
    case Orientation::Negative: return "negative";
    case Orientation::Degenerate: return "degenerate";
  }
  return "unknown";
}

Orientation orientation(const TriangleTriple& t) {
  const Complex den = t.c() - t.b();
  if (std::abs(den) <= kEps * t.scale()) return Orientation::Degenerate;
  const double im = ((t.a() - t.b()) / den).imag();
  if (std::abs(im) <= kEps) return Orientation::Degenerate;
  return im > 0 ? Orientation::Positive : Orientation::Negative;
}

FourierVector fourier(const TriangleTriple& t) {
  const Complex a = t.a(), b = t.b(), c = t.c();
  return {(a + b + c) / 3.0, (a + b * kOmega2 + c * kOmega) / 3.0,
          (a + b * kOmega + c * kOmega2) / 3.0};
}

TriangleTriple inverse_fourier_unchecked(const FourierVector& psi) {
  auto eval = [&](Complex x) { return psi.psi0 + psi.psi1 * x + psi.psi2 * x * x; };
  return TriangleTriple::unchecked(eval(1.0), eval(kOmega), eval(kOmega2));
}

TriangleTriple inverse_fourier(const FourierVector& psi) {
  const auto t = inverse_fourier_unchecked(psi);
  return make_triple(t.a(), t.b(), t.c());
}

Complex centroid(const TriangleTriple& t) { return (t.a() + t.b() + t.c()) / 3.0; }

double area_shoelace(const TriangleTriple& t) {
  const Complex ab = t.b() - t.a();
  const Complex ac = t.c() - t.a();
  return std::abs((ab * std::conj(ac)).imag()) / 2.0;
}

double area_fourier(const FourierVector& psi) {
  return 3.0 * kSqrt3 / 4.0 * std::abs(std::norm(psi.psi1) - std::norm(psi.psi2));
}

double area_fourier(const TriangleTriple& t) { return area_fourier(fourier(t)); }

SphereValue modulus_phi(const TriangleTriple& t) {
  const FourierVector psi = fourier(t);
  const SphereValue ratio = SphereValue::ratio(psi.psi2, psi.psi1, kEps * t.scale());
  if (ratio.is_infinite()) return ratio;
  const Complex z = ratio.value();
  return SphereValue(z * z * z);
}

double brocard_cot(const TriangleTriple& t) {
  const double s = t.scale();
  if (area_shoelace(t) <= kEps * s * s) {
    throw Error(ErrorKind::DegenerateTriangle, "Brocard angle of a degenerate triangle");
  }
  const FourierVector psi = fourier(t);
  const double m1 = std::abs(psi.psi1), m2 = std::abs(psi.psi2);
  // r = |φ|^{1/3}, taken inside the disk for either orientation
  const double r = std::min(m1, m2) / std::max(m1, m2);
  return kSqrt3 * (1.0 + r * r) / (1.0 - r * r);
}

double brocard_cot_sides(const TriangleTriple& t) {
  const double s = t.scale();
  const double a = area_shoelace(t);
  if (a <= kEps * s * s) {
    throw Error(ErrorKind::DegenerateTriangle, "Brocard angle of a degenerate triangle");
  }
  const double sum = std::norm(t.b() - t.a()) + std::norm(t.c() - t.b()) + std::norm(t.a() - t.c());
  return sum / (4.0 * a);
}

}  // namespace cevian
