#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cevian/geom_core.hpp"
#include "support.hpp"

using namespace cevian;
using cevian::testing::close;
using cevian::testing::Rng;

namespace {

const Complex I{0.0, 1.0};

TriangleTriple equilateral() { return make_triple(1.0, kOmega, kOmega2); }

}  // namespace

TEST_CASE("sphere values") {
  CHECK(SphereValue::ratio(1.0, 0.0).is_infinite());
  CHECK(SphereValue::ratio(2.0, 4.0).value() == Complex(0.5));
  CHECK_THROWS_AS(SphereValue::ratio(0.0, 0.0), Error);
  try {
    SphereValue::ratio(1e-12, 1e-13);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndeterminateValue);
  }
  CHECK_THROWS_AS(SphereValue::infinity().value(), Error);
  CHECK(SphereValue::infinity().magnitude() == std::numeric_limits<double>::infinity());

  CHECK(chordal_distance(SphereValue::infinity(), SphereValue::infinity()) == 0.0);
  CHECK(chordal_distance(Complex(0.0), SphereValue::infinity()) == doctest::Approx(1.0));
  CHECK(chordal_distance(Complex(1e12), SphereValue::infinity()) < 1e-11);
  CHECK(to_string(SphereValue::infinity()) == "inf");

  // z ↦ 1/z swaps 0 and ∞
  CHECK(mobius(0.0, 1.0, 1.0, 0.0, Complex(0.0)).is_infinite());
  CHECK(mobius(0.0, 1.0, 1.0, 0.0, SphereValue::infinity()) == SphereValue(0.0));
  CHECK(mobius(2.0, 0.0, 1.0, 1.0, SphereValue::infinity()) == SphereValue(2.0));
}

TEST_CASE("make_triple") {
  CHECK_NOTHROW(make_triple(0.0, 1.0, I));
  CHECK_NOTHROW(make_triple(0.0, 1.0, 2.0));
  try {
    make_triple(1.0, 1.0, I);
    FAIL("coincident vertices accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoincidentVertices);
  }
  // coincidence is judged relative to the triple's size
  CHECK_THROWS_AS(make_triple(1e6, 1e6 + 1e-6, 0.0), Error);
  CHECK_NOTHROW(make_triple(1e-6, 2e-6, Complex(0.0, 1e-6)));
  CHECK_THROWS_AS(make_triple(std::nan(""), 1.0, I), Error);
}

TEST_CASE("orientation") {
  CHECK(orientation(make_triple(0.0, 1.0, I)) == Orientation::Positive);
  CHECK(orientation(make_triple(0.0, 1.0, 2.0)) == Orientation::Degenerate);
  CHECK(orientation(make_triple(0.0, I, 1.0)) == Orientation::Negative);
  CHECK(orientation(equilateral()) == Orientation::Positive);
}

TEST_CASE("fourier transform") {
  const FourierVector f0 = fourier(equilateral());
  CHECK(std::abs(f0.psi0) < 1e-15);
  CHECK(close(f0.psi1, 1.0, 1e-15));
  CHECK(std::abs(f0.psi2) < 1e-15);

  const FourierVector f1 = fourier(make_triple(1.0, kOmega2, kOmega));
  CHECK(std::abs(f1.psi0) < 1e-15);
  CHECK(std::abs(f1.psi1) < 1e-15);
  CHECK(close(f1.psi2, 1.0, 1e-15));

  SUBCASE("psi evaluated at the cube roots of unity gives the vertices") {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
      const auto t = rng.triple();
      const auto [p0, p1, p2] = fourier(t);
      auto psi = [&](Complex z) { return p0 + p1 * z + p2 * z * z; };
      CHECK(close(psi(1.0), t.a(), 1e-14));
      CHECK(close(psi(kOmega), t.b(), 1e-14));
      CHECK(close(psi(kOmega2), t.c(), 1e-14));
      CHECK(close(inverse_fourier(fourier(t)), t, 1e-14));
    }
  }

  CHECK_THROWS_AS(inverse_fourier({1.0, 0.0, 0.0}), Error);
  CHECK_NOTHROW(inverse_fourier_unchecked({1.0, 0.0, 0.0}));
}

TEST_CASE("centroid") {
  CHECK(std::abs(centroid(equilateral())) < 1e-15);
  CHECK(close(centroid(make_triple(0.0, 1.0, I)), Complex(1.0, 1.0) / 3.0, 1e-15));
  CHECK(centroid(make_triple(0.0, 1.0, I)) == fourier(make_triple(0.0, 1.0, I)).psi0);
}

TEST_CASE("area") {
  CHECK(area(equilateral()) == doctest::Approx(3.0 * kSqrt3 / 4.0).epsilon(1e-14));
  CHECK(area(make_triple(0.0, 1.0, 2.0)) == 0.0);
  CHECK(area(make_triple(0.0, 1.0, I)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(area_fourier(make_triple(0.0, 1.0, I)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(area(make_triple(0.0, I, 1.0)) == doctest::Approx(0.5).epsilon(1e-15));

  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto t = rng.triple();
    CHECK(area_fourier(t) == doctest::Approx(area_shoelace(t)).epsilon(1e-10));
  }
}

TEST_CASE("modulus") {
  CHECK(modulus_phi(equilateral()).magnitude() < 1e-30);
  CHECK(modulus_phi(make_triple(1.0, kOmega2, kOmega)).is_infinite());
  const SphereValue line = modulus_phi(make_triple(0.0, 1.0, 2.0));
  REQUIRE(line.is_finite());
  CHECK(std::abs(line.value()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orientation agrees with the modulus") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto t = rng.triple();
    const auto f = fourier(t);
    const SphereValue phi = modulus_phi(t);
    if (orientation(t) == Orientation::Positive) {
      CHECK(std::abs(f.psi2) < std::abs(f.psi1));
      CHECK(phi.magnitude() < 1.0);
    } else {
      CHECK(orientation(t) == Orientation::Negative);
      CHECK(std::abs(f.psi2) > std::abs(f.psi1));
      CHECK(phi.magnitude() > 1.0);
    }
  }
}

TEST_CASE("modulus is a similarity invariant") {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto t = rng.positive_triple();
    Complex lambda = rng.complex(3.0);
    if (std::abs(lambda) < 0.1) lambda = 1.0;
    const Complex mu = rng.complex(10.0);
    const auto moved = make_triple(lambda * t.a() + mu, lambda * t.b() + mu, lambda * t.c() + mu);
    CHECK(close(modulus_phi(moved).value(), modulus_phi(t).value(), 1e-12));
    // conjugation reverses orientation and sends φ to 1/conj(φ)
    CHECK(close(modulus_phi(t.conj()).value(), 1.0 / std::conj(modulus_phi(t).value()), 1e-9));
  }
}

TEST_CASE("brocard angle") {
  CHECK(brocard_cot(equilateral()) == doctest::Approx(kSqrt3).epsilon(1e-14));
  CHECK(brocard_cot_sides(equilateral()) == doctest::Approx(kSqrt3).epsilon(1e-14));
  CHECK_THROWS_AS(brocard_cot(make_triple(0.0, 1.0, 2.0)), Error);
  CHECK_THROWS_AS(brocard_cot_sides(make_triple(0.0, 1.0, 2.0)), Error);

  double previous = 0.0;
  for (double h : {1.0, 0.1, 0.01, 0.001}) {
    const double cot = brocard_cot(make_triple(0.0, 1.0, Complex(0.5, h)));
    CHECK(cot > previous);
    previous = cot;
  }
  CHECK(previous > 100.0);

  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto t = rng.positive_triple();
    CHECK(brocard_cot(t) == doctest::Approx(brocard_cot_sides(t)).epsilon(1e-9));
  }
}
