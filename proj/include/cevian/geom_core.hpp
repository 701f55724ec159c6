#pragma once

#include <array>

#include "cevian/numeric.hpp"

namespace cevian {

/// Ordered vertex triple (a, b, c) of a labeled triangle.
///
/// make_triple() is the validating entry point and guarantees pairwise
/// distinct vertices. Operator images are built with unchecked() because an
/// image may legitimately collapse; callers that need the invariant re-check
/// with has_coincident_vertices().
class TriangleTriple {
 public:
  static TriangleTriple unchecked(Complex a, Complex b, Complex c) { return TriangleTriple(a, b, c); }

  Complex a() const noexcept { return v_[0]; }
  Complex b() const noexcept { return v_[1]; }
  Complex c() const noexcept { return v_[2]; }
  const std::array<Complex, 3>& vertices() const noexcept { return v_; }

  /// Largest pairwise vertex distance.
  double scale() const noexcept;

  TriangleTriple conj() const;

  friend bool operator==(const TriangleTriple&, const TriangleTriple&) = default;

 private:
  TriangleTriple(Complex a, Complex b, Complex c) : v_{a, b, c} {}
  std::array<Complex, 3> v_;
};

bool has_coincident_vertices(const TriangleTriple& t);

/// Throws Error{CoincidentVertices} when two points coincide relative to the
/// triple's scale, or Error{InvalidParameters} on non-finite input.
TriangleTriple make_triple(Complex a, Complex b, Complex c);

/// Coefficients of Ψ(T) = ψ0 + ψ1·T + ψ2·T² with Ψ(1)=a, Ψ(ω)=b, Ψ(ω²)=c.
struct FourierVector {
  Complex psi0;
  Complex psi1;
  Complex psi2;
};

enum class Orientation { Positive, Negative, Degenerate };

const char* to_string(Orientation o);

Orientation orientation(const TriangleTriple& t);

FourierVector fourier(const TriangleTriple& t);

/// Evaluates Ψ at 1, ω, ω². Throws CoincidentVertices if the result is not a
/// valid triple.
TriangleTriple inverse_fourier(const FourierVector& psi);

/// inverse_fourier without the validity check.
TriangleTriple inverse_fourier_unchecked(const FourierVector& psi);

Complex centroid(const TriangleTriple& t);

double area_shoelace(const TriangleTriple& t);
double area_fourier(const TriangleTriple& t);
double area_fourier(const FourierVector& psi);

/// Default area: shoelace.
inline double area(const TriangleTriple& t) { return area_shoelace(t); }

/// Similarity modulus φ = (ψ2/ψ1)³. Lies in the open unit disk for positive
/// triples, on the unit circle for degenerate ones and outside for negative
/// ones. ψ1 = 0 gives ∞.
SphereValue modulus_phi(const TriangleTriple& t);

/// cot of the Brocard angle from the modulus: √3(1+r²)/(1−r²), r = |φ|^{1/3}.
/// Throws DegenerateTriangle on zero area.
double brocard_cot(const TriangleTriple& t);

/// cot of the Brocard angle from side lengths: (|AB|²+|BC|²+|CA|²)/(4·area).
double brocard_cot_sides(const TriangleTriple& t);

}  // namespace cevian
