#include "cevian/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace cevian {
namespace {

double magnitude_scale(std::initializer_list<Complex> zs) {
  double s = 1.0;
  for (Complex z : zs) s = std::max(s, std::abs(z));
  return s;
}

ChartComponent chart_ratio(Complex num, Complex den, double scale) {
  const double tol = kEps * scale;
  if (std::abs(den) <= tol) {
    return {std::abs(num) <= tol ? ChartOutcome::Indeterminate : ChartOutcome::ChartEscape, {}};
  }
  return {ChartOutcome::Determinate, num / den};
}

bool near_coefficients(const CirculantOperator& op, Complex a, Complex b, Complex c) {
  return coefficient_distance(op, CirculantOperator(a, b, c)) <= kEps;
}

}  // namespace

PQPair::PQPair(Complex p, Complex q) : p_(p), q_(q) {
  if (!is_finite(p) || !is_finite(q)) {
    throw Error(ErrorKind::InvalidParameters, "p and q must be finite");
  }
  if (is_negligible(1.0 - p * q, magnitude_scale({p, q}))) {
    throw Error(ErrorKind::InvalidParameters, "pq = 1");
  }
  if (is_negligible(p - 1.0) && is_negligible(q - 1.0)) {
    throw Error(ErrorKind::InvalidParameters, "(p, q) = (1, 1) is a point of indeterminacy");
  }
}

CirculantOperator::CirculantOperator(Complex alpha, Complex beta, Complex gamma) {
  const Complex residual = alpha + beta + gamma - 1.0;
  if (!is_finite(residual) || !is_negligible(residual, magnitude_scale({alpha, beta, gamma}))) {
    throw Error(ErrorKind::InvalidParameters, "coefficients must sum to 1");
  }
  const Complex share = residual / 3.0;
  c_ = {alpha - share, beta - share, gamma - share};
}

std::array<std::array<Complex, 3>, 3> CirculantOperator::matrix() const {
  const auto& [a, b, c] = c_;
  return {{{a, b, c}, {c, a, b}, {b, c, a}}};
}

double coefficient_distance(const CirculantOperator& x, const CirculantOperator& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(x.coefficients()[i] - y.coefficients()[i]));
  return d;
}

CirculantOperator from_pq(const PQPair& pq) {
  const Complex p = pq.p(), q = pq.q();
  const Complex den = 1.0 - p * q;
  return {p * (1.0 - q) / den, q * (1.0 - p) / den, (1.0 - p) * (1.0 - q) / den};
}

CirculantOperator from_eta(const EtaPair& e) {
  const Complex y = e.eta, yp = e.etap;
  return {(1.0 + y + yp) / 3.0, (1.0 + kOmega * y + kOmega2 * yp) / 3.0,
          (1.0 + kOmega2 * y + kOmega * yp) / 3.0};
}

EtaPair eta_of(const CirculantOperator& op) {
  const Complex a = op.alpha(), b = op.beta(), c = op.gamma();
  return {a + kOmega2 * b + kOmega * c, a + kOmega * b + kOmega2 * c};
}

EtaPair eta_of_pq(const PQPair& pq) {
  const Complex p = pq.p(), q = pq.q();
  const Complex num_t = (p - 1.0) * (2.0 * q - 1.0);
  const Complex den = 1.0 - p * q;
  return {((p - q) + num_t * kOmega) / den, ((p - q) + num_t * kOmega2) / den};
}

TXi t_xi_of(Complex p, Complex q) {
  const Complex num = (p - 1.0) * (2.0 * q - 1.0);
  const Complex den = p - q;
  const SphereValue t = SphereValue::ratio(num, den, kEps * magnitude_scale({p, q}));
  return {t, mobius(kOmega, 1.0, kOmega2, 1.0, t)};
}

const char* to_string(ChartOutcome o) {
  switch (o) {
    case ChartOutcome::Determinate: return "determinate";
    case ChartOutcome::ChartEscape: return "chart-escape";
    case ChartOutcome::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

PQPair PqChart::pair() const {
  if (!p.determinate() || !q.determinate()) {
    throw Error(ErrorKind::InvalidParameters,
                std::string("no (p,q) chart value: p is ") + to_string(p.outcome) + ", q is " +
                    to_string(q.outcome));
  }
  return PQPair(p.value, q.value);
}

PqChart pq_of(const EtaPair& e) {
  const Complex y = e.eta, yp = e.etap;
  const double scale = magnitude_scale({y, yp});
  return {chart_ratio(1.0 + y + yp, 2.0 - kOmega * y - kOmega2 * yp, scale),
          chart_ratio(1.0 + kOmega * y + kOmega2 * yp, 2.0 - y - yp, scale)};
}

namespace {

Application finish(TriangleTriple image) {
  const bool degenerate =
      has_coincident_vertices(image) || orientation(image) == Orientation::Degenerate;
  return {image, degenerate};
}

}  // namespace

Application apply(const CirculantOperator& op, const TriangleTriple& t) {
  const Complex al = op.alpha(), be = op.beta(), ga = op.gamma();
  const Complex a = t.a(), b = t.b(), c = t.c();
  return finish(TriangleTriple::unchecked(al * a + be * b + ga * c, al * b + be * c + ga * a,
                                          al * c + be * a + ga * b));
}

Application apply_fourier(const CirculantOperator& op, const TriangleTriple& t) {
  const EtaPair e = eta_of(op);
  const FourierVector psi = fourier(t);
  return finish(inverse_fourier_unchecked({psi.psi0, e.etap * psi.psi1, e.eta * psi.psi2}));
}

CirculantOperator compose(const CirculantOperator& op1, const CirculantOperator& op2) {
  // J³ = I, so the coefficients multiply as a cyclic convolution.
  const auto& x = op1.coefficients();
  const auto& y = op2.coefficients();
  return {x[0] * y[0] + x[1] * y[2] + x[2] * y[1], x[0] * y[1] + x[1] * y[0] + x[2] * y[2],
          x[0] * y[2] + x[1] * y[1] + x[2] * y[0]};
}

PqChart compose_pq(const PQPair& pq1, const PQPair& pq2) {
  const Complex p1 = pq1.p(), q1 = pq1.q(), p2 = pq2.p(), q2 = pq2.q();
  const Complex l1 = 1.0 - (1.0 - 2.0 * (1.0 - p1) * (1.0 - p2)) * (1.0 - 2.0 * (1.0 - q1) * (1.0 - q2));
  const Complex l2 =
      1.0 - 2.0 * (1.0 - p1 * p2) - (1.0 - 2.0 * (1.0 - p1) * q2) * (1.0 - 2.0 * (1.0 - p2) * q1);
  const Complex l3 = (1.0 - p1 * q1) * (1.0 - p2 * q2);
  const double scale = magnitude_scale({l1, l2, l3});
  return {chart_ratio(l2 + 2.0 * l3, l1, scale), chart_ratio(l1 - 2.0 * l3, l2, scale)};
}

Classification classify(const CirculantOperator& op) {
  Classification out;
  out.eta = eta_of(op);
  out.is_identity = near_coefficients(op, 1.0, 0.0, 0.0);
  out.is_cyclic_permutation =
      near_coefficients(op, 0.0, 1.0, 0.0) || near_coefficients(op, 0.0, 0.0, 1.0);

  const Complex y = out.eta.eta, yp = out.eta.etap;
  try {
    out.xi = SphereValue::ratio(y, yp, kEps * magnitude_scale({y, yp}));
  } catch (const Error&) {
    return out;  // η = η' = 0: no moduli action
  }
  // t = ψ⁻¹(ξ)
  out.t = mobius(-1.0, 1.0, kOmega2, -kOmega, *out.xi);

  const double m = out.xi->magnitude();
  out.is_regular = m <= 1.0 + kEps;
  out.is_normal = std::abs(m - 1.0) <= kEps;
  out.is_area_preserving =
      out.is_normal && std::abs(std::abs(y) - 1.0) <= kEps && std::abs(std::abs(yp) - 1.0) <= kEps;
  out.collapses_moduli = m <= kEps;
  return out;
}

bool regularity_geometric(const PQPair& pq) {
  const Complex p = pq.p(), q = pq.q();
  if (is_negligible(p - q, magnitude_scale({p, q}))) {
    return !is_negligible(p - 0.5);
  }
  const Complex t = (p - 1.0) * (2.0 * q - 1.0) / (p - q);
  return t.imag() >= -kEps * std::max(1.0, std::abs(t));
}

ReflectionParams reflection_params(const TriangleTriple& t) {
  if (orientation(t) == Orientation::Degenerate) {
    throw Error(ErrorKind::DegenerateTriangle, "reflection parameters need a non-degenerate triple");
  }
  const Complex a = t.a(), b = t.b(), c = t.c();
  return {PQPair((c - a) / (b - a), (a - c) / (b - c)), PQPair((b - c) / (a - c), (c - b) / (a - b)),
          PQPair((a - b) / (c - b), (b - a) / (c - a))};
}

bool is_reflection_param(Complex p, Complex q) {
  const double scale = magnitude_scale({p, q, p * q});
  return is_negligible(p * q - (p + q), scale) && !is_negligible(1.0 - p * q, scale);
}

CirculantOperator weighted_mean(Complex r, const CirculantOperator& a, const CirculantOperator& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  return {(1.0 - r) * x[0] + r * y[0], (1.0 - r) * x[1] + r * y[1], (1.0 - r) * x[2] + r * y[2]};
}

namespace {

PQPair derived_pair(Complex p, Complex q, const char* which) {
  try {
    return PQPair(p, q);
  } catch (const Error& e) {
    throw Error(ErrorKind::DerivedParameterUndefined, std::string(which) + ": " + e.what());
  }
}

Complex derived_ratio(Complex num, Complex den, double scale, const char* which) {
  if (is_negligible(den, scale)) {
    throw Error(ErrorKind::DerivedParameterUndefined, std::string(which) + " has a vanishing denominator");
  }
  return num / den;
}

}  // namespace

StructuralPairs structural_identities(const PQPair& pq) {
  const Complex p = pq.p(), q = pq.q();
  const double scale = magnitude_scale({p, q, p * q});
  const Complex d = 2.0 * p * q - p - q;
  const Complex j1p = derived_ratio(q * (p - 1.0), d, scale, "j1");
  const Complex j2q = derived_ratio(p * (q - 1.0), d, scale, "j2");
  const Complex ap = derived_ratio(2.0 - 3.0 * p + p * q, 1.0 + 3.0 * q - 4.0 * p * q, scale, "antipode");
  const Complex aq = derived_ratio(2.0 - 3.0 * q + p * q, 1.0 + 3.0 * p - 4.0 * p * q, scale, "antipode");

  StructuralPairs out{derived_pair(q, p, "swap"), derived_pair(j1p, 1.0 - p, "j1"),
                      derived_pair(1.0 - q, j2q, "j2"), derived_pair(ap, aq, "antipode")};

  // S_{p,q} + S_{p',q'} must be (2/3)(I + J + J²).
  const auto x = from_pq(pq).coefficients();
  const auto y = from_pq(out.antipode).coefficients();
  const double tol = kEps * magnitude_scale({x[0], x[1], x[2], y[0], y[1], y[2]});
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(x[i] + y[i] - 2.0 / 3.0) > tol) {
      throw std::logic_error("antipodal pair failed the coefficient-sum identity");
    }
  }
  return out;
}

double area_ratio_real(const PQPair& pq) {
  const Complex p = pq.p(), q = pq.q();
  if (std::abs(p.imag()) > kEps || std::abs(q.imag()) > kEps) {
    throw Error(ErrorKind::InvalidParameters, "real-parameter area ratio needs real p and q");
  }
  // (p−q)(1 + tω²) with t's denominator (p−q) cancelled
  const Complex factor = ((p - q) + (p - 1.0) * (2.0 * q - 1.0) * kOmega2) / (1.0 - p * q);
  return std::norm(factor);
}

double area_ratio(const EtaPair& e, const FourierVector& psi) {
  const double before = std::norm(psi.psi1) - std::norm(psi.psi2);
  const double after = std::norm(e.etap * psi.psi1) - std::norm(e.eta * psi.psi2);
  return std::abs(after / before);
}

}  // namespace cevian
