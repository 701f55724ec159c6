#include "cevian/area_preserving.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace cevian {

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidParameters, "angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Complex RationalAngle::unit() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns());
}

RationalAngle operator+(const RationalAngle& x, const RationalAngle& y) {
  const std::int64_t l = std::lcm(x.den_, y.den_);
  return {x.num_ * (l / x.den_) + y.num_ * (l / y.den_), l};
}

RationalAngle operator-(const RationalAngle& x, const RationalAngle& y) {
  const std::int64_t l = std::lcm(x.den_, y.den_);
  return {x.num_ * (l / x.den_) - y.num_ * (l / y.den_), l};
}

std::string to_string(const RationalAngle& a) {
  if (a.den() == 1) return std::to_string(a.num());
  return std::to_string(a.num()) + "/" + std::to_string(a.den());
}

namespace {

std::int64_t parse_int(std::string_view s, std::size_t offset, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::ParseError, "expected an integer at position " + std::to_string(offset) +
                                           " in \"" + whole + "\" (angles take p/q or integer literals)");
  }
  return v;
}

}  // namespace

RationalAngle parse_rational_angle(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  const auto end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw Error(ErrorKind::ParseError, "empty angle literal");
  const std::string_view body(text.data() + begin, end - begin + 1);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return {parse_int(body, begin, text), 1};
  const std::int64_t num = parse_int(body.substr(0, slash), begin, text);
  const std::int64_t den = parse_int(body.substr(slash + 1), begin + slash + 1, text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
  return {num, den};
}

ApOperator make_ap(const RationalAngle& theta_x, const RationalAngle& theta_y,
                   const RationalAngle& theta_yp) {
  if (theta_x != theta_y - theta_yp) {
    throw Error(ErrorKind::AngleConstraintViolated,
                "theta_x = " + to_string(theta_x) + " but theta_y - theta_yp = " +
                    to_string(theta_y - theta_yp));
  }
  return {theta_x, theta_y, theta_yp};
}

CirculantOperator to_operator(const ApOperator& ap) {
  return from_eta({ap.theta_y.unit(), ap.theta_yp.unit()});
}

std::int64_t period(const ApOperator& ap) {
  return std::lcm(ap.theta_y.den(), ap.theta_yp.den());
}

std::vector<TriangleTriple> orbit(const ApOperator& ap, const TriangleTriple& t, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidParameters, "orbit length must be non-negative");
  const CirculantOperator op = to_operator(ap);
  std::vector<TriangleTriple> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(t);
  for (int n = 0; n < steps; ++n) out.push_back(apply(op, out.back()).image);
  return out;
}

Complex bp(Complex x, Complex y) {
  const Complex den = x * y + 2.0 * kRho * x + kRho * kRho * y;
  if (is_negligible(den, std::max({1.0, std::abs(x * y), std::abs(x), std::abs(y)}))) {
    throw Error(ErrorKind::PoleAtInput, "p(x,y) has a pole here");
  }
  return kRho * (x * y + x + y) / den;
}

Complex bq(Complex x, Complex y) {
  const Complex den = x * y - 2.0 * x + y;
  if (is_negligible(den, std::max({1.0, std::abs(x * y), std::abs(x), std::abs(y)}))) {
    throw Error(ErrorKind::PoleAtInput, "q(x,y) has a pole here");
  }
  return kRhoInv * (x * y - kRho * x - kRhoInv * y) / den;
}

SphereValue r_function(Complex x, Complex y) {
  const Complex num = 2.0 * x * y - x - y;
  const Complex den = kSqrt3 * (y - x);
  return SphereValue::ratio(num, den, kEps * std::max({1.0, std::abs(x), std::abs(y)}));
}

SphereValue q_function(Complex x, Complex y) {
  // i(ρ⁻¹N/D − 1/2) = i(2ρ⁻¹N − D)/(2D)
  const Complex num = x * y - kRho * x - kRhoInv * y;
  const Complex den = x * y - 2.0 * x + y;
  const double scale = std::max({1.0, std::abs(x * y), std::abs(x), std::abs(y)});
  return SphereValue::ratio(Complex{0.0, 1.0} * (2.0 * kRhoInv * num - den), 2.0 * den, kEps * scale);
}

SphereValue q_from_r(const SphereValue& r) {
  if (r.is_infinite()) return SphereValue(kSqrt3 / 2.0);
  const Complex z = r.value();
  return SphereValue::ratio(kSqrt3 * z - 1.0, 2.0 * (z + kSqrt3), kEps * std::max(1.0, std::abs(z)));
}

TorusPoint::TorusPoint(Complex x, Complex y) : x_(x), y_(y) {
  if (std::abs(std::abs(x) - 1.0) > kEps || std::abs(std::abs(y) - 1.0) > kEps) {
    throw Error(ErrorKind::InvalidParameters, "torus points need |x| = |y| = 1");
  }
}

TorusPoint TorusPoint::from_turns(double theta_x, double theta_y) {
  return {std::polar(1.0, 2.0 * std::numbers::pi * theta_x),
          std::polar(1.0, 2.0 * std::numbers::pi * theta_y)};
}

double FunctionalResiduals::max() const {
  double m = 0.0;
  for (const auto& r : {p_from_q, q_from_p, p_swap, q_swap, p_reflection, q_reflection,
                        r_antisymmetry, r_conjugation, q_r_bridge}) {
    if (r) m = std::max(m, *r);
  }
  return m;
}

namespace {

template <typename F>
std::optional<double> residual(F&& f) {
  try {
    const double r = f();
    return std::isnan(r) ? std::nullopt : std::optional<double>(r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PoleAtInput || e.kind() == ErrorKind::IndeterminateValue) {
      return std::nullopt;
    }
    throw;
  }
}

double sphere_distance(const SphereValue& a, const SphereValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(a.value() - b.value());
}

Complex q_swap_map(Complex q) { return (q - 1.0) / ((1.0 + kRho) * q - 1.0); }

}  // namespace

FunctionalResiduals functional_equation_residuals(const TorusPoint& pt) {
  const Complex x = pt.x(), y = pt.y();
  const Complex xi = 1.0 / x, yi = 1.0 / y;
  FunctionalResiduals out;
  out.p_from_q = residual([&] { return std::abs(bp(x, y) - bq(kOmega * xi, kOmega2 * xi * y)); });
  out.q_from_p = residual([&] { return std::abs(bq(x, y) - bp(kOmega * xi, kOmega2 * xi * y)); });
  out.p_swap = residual([&] {
    const Complex p = bp(x, y), q = bq(x, y);
    return std::abs(bp(y, x) - p * (q - 1.0) / (kRho * (p - 1.0) * q - (p - q)));
  });
  out.q_swap = residual([&] { return std::abs(bq(y, x) - q_swap_map(bq(x, y))); });
  out.p_reflection =
      residual([&] { return std::abs(bp(x, y) + std::conj(bp(kOmega2 * xi, kOmega * yi)) - 1.0); });
  out.q_reflection = residual([&] { return std::abs(bq(x, y) + std::conj(bq(xi, yi)) - 1.0); });
  out.r_antisymmetry = residual([&] {
    const SphereValue a = r_function(x, y), b = r_function(y, x);
    if (a.is_infinite() && b.is_infinite()) return 0.0;  // ∞ = −∞ on the sphere
    return std::abs(a.value() + b.value());
  });
  out.r_conjugation = residual([&] {
    const SphereValue a = r_function(xi, yi), b = r_function(x, y);
    return b.is_infinite() ? sphere_distance(a, b) : sphere_distance(a, std::conj(b.value()));
  });
  out.q_r_bridge = residual([&] { return sphere_distance(q_function(x, y), q_from_r(r_function(x, y))); });
  return out;
}

Complex bq_from_fundamental_region(const TorusPoint& pt) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto angle = [&](Complex z) {
    const double a = std::arg(z);
    return a < 0.0 ? a + two_pi : a;
  };
  const double theta = angle(pt.x()), phi = angle(pt.y());
  const Complex x = pt.x(), y = pt.y();
  const bool below_diagonal = phi <= theta;
  const bool inside_anti = theta + phi <= two_pi;

  if (below_diagonal && inside_anti) return bq(x, y);
  if (inside_anti) return q_swap_map(bq(y, x));                  // (φ, θ) lies in the region
  if (!below_diagonal) return 1.0 - std::conj(bq(1.0 / x, 1.0 / y));  // (−θ, −φ)
  return 1.0 - std::conj(q_swap_map(bq(1.0 / y, 1.0 / x)));      // (−φ, −θ)
}

}  // namespace cevian
