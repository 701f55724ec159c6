#include "cevian/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>

#include "cevian/area_preserving.hpp"
#include "cevian/torus_group.hpp"

namespace cevian::verify {
namespace {

/// Tracks the worst residual of one family of checks against its tolerance.
class Check {
 public:
  Check(std::string label, double tol) : label_(std::move(label)), tol_(tol) {}

  void observe(double residual) {
    ++count_;
    if (!(residual <= tol_)) ++failures_;  // NaN counts as a failure
    if (std::isnan(residual) || residual > worst_) worst_ = residual;
  }
  void require(bool ok) { observe(ok ? 0.0 : std::numeric_limits<double>::infinity()); }

  bool ok() const { return failures_ == 0 && count_ > 0; }

  std::string summary() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: worst %.3g (tol %.0e, n=%d%s)", label_.c_str(), worst_, tol_,
                  count_, failures_ ? (", " + std::to_string(failures_) + " failed").c_str() : "");
    return buf;
  }

 private:
  std::string label_;
  double tol_;
  double worst_ = 0.0;
  int count_ = 0;
  int failures_ = 0;
};

struct Outcome {
  std::deque<Check> checks;

  Check& add(std::string label, double tol) { return checks.emplace_back(std::move(label), tol); }
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex_in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  /// Well-conditioned random triple: area at least 2% of scale².
  TriangleTriple triple() {
    while (true) {
      const auto t = TriangleTriple::unchecked(complex_in_box(1.0), complex_in_box(1.0), complex_in_box(1.0));
      const double s = t.scale();
      if (s > 1e-3 && area_shoelace(t) >= 0.02 * s * s) return t;
    }
  }

  TriangleTriple positive_triple() {
    const auto t = triple();
    if (orientation(t) == Orientation::Positive) return t;
    return TriangleTriple::unchecked(t.a(), t.c(), t.b());
  }

  Complex torus_coordinate(double r) {
    while (true) {
      const Complex z = complex_in_box(r);
      if (std::abs(z - kRho) > 1e-2 && std::abs(z - kRhoInv) > 1e-2) return z;
    }
  }

 private:
  std::mt19937_64 rng_;
};

double rel(double value, double expected) { return std::abs(value - expected) / std::max(1e-300, std::abs(expected)); }

double coeff_gap(const CirculantOperator& x, const CirculantOperator& y) {
  double scale = 1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    scale = std::max({scale, std::abs(x.coefficients()[i]), std::abs(y.coefficients()[i])});
  }
  return coefficient_distance(x, y) / scale;
}

double triple_gap(const TriangleTriple& x, const TriangleTriple& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(x.vertices()[i] - y.vertices()[i]));
  return d / std::max(x.scale(), 1e-300);
}

// 1
void routh(Outcome& out) {
  Sampler s(101);
  auto& c = out.add("area ratio vs 1/7 (rel)", 1e-12);
  const auto op1 = from_pq(PQPair(1.0 / 3.0, 2.0 / 3.0));
  const auto op2 = from_pq(PQPair(2.0 / 3.0, 1.0 / 3.0));
  for (int i = 0; i < 100; ++i) {
    const auto t = s.triple();
    const double a = area_shoelace(t);
    c.observe(rel(area_shoelace(apply(op1, t).image) / a, 1.0 / 7.0));
    c.observe(rel(area_shoelace(apply(op2, t).image) / a, 1.0 / 7.0));
  }
}

// 2
void napoleon(Outcome& out) {
  Sampler s(202);
  auto& c = out.add("|psi2(image)|/scale", 1e-12);
  auto& eq = out.add("image sides equal (rel)", 1e-9);
  const auto op = from_pq(PQPair(0.0, (1.0 - kOmega2) / 3.0));
  for (int i = 0; i < 100; ++i) {
    const auto t = s.triple();
    const auto img = apply(op, t).image;
    c.observe(std::abs(fourier(img).psi2) / t.scale());
    const double ab = std::abs(img.a() - img.b()), bc = std::abs(img.b() - img.c()),
                 ca = std::abs(img.c() - img.a());
    eq.observe(std::max({std::abs(ab - bc), std::abs(bc - ca)}) / std::max(ab, 1e-300));
  }
}

// 3
void orbit_periods(Outcome& out) {
  struct Case {
    RationalAngle x, y, yp;
    std::int64_t expected;
  };
  const Case cases[] = {{{1, 4}, {1, 5}, {19, 20}, 20}, {{1, 4}, {1, 7}, {25, 28}, 28}};
  const auto start = make_triple(0.0, 1.0, {0.7, 0.8});
  auto& lcm = out.add("lcm period == expected", 0.0);
  auto& closure = out.add("orbit closes at N (rel)", 1e-9);
  auto& early = out.add("no earlier closure", 0.0);
  auto& power = out.add("N-th power == identity", 1e-12);
  for (const Case& k : cases) {
    const ApOperator ap = make_ap(k.x, k.y, k.yp);
    lcm.require(period(ap) == k.expected);
    const auto path = orbit(ap, start, static_cast<int>(k.expected));
    closure.observe(triple_gap(path.back(), path.front()));
    bool closed_early = false;
    for (std::size_t n = 1; n + 1 < path.size(); ++n) {
      if (triple_gap(path[n], path.front()) <= 1e-9) closed_early = true;
    }
    early.require(!closed_early);
    auto acc = CirculantOperator::identity();
    const auto op = to_operator(ap);
    for (std::int64_t n = 0; n < k.expected; ++n) acc = compose(acc, op);
    power.observe(coefficient_distance(acc, CirculantOperator::identity()));
  }
}

// 4
void area_formula(Outcome& out) {
  Sampler s(404);
  auto& fa = out.add("Fourier vs shoelace area (rel)", 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const auto t = s.triple();
    fa.observe(rel(area_fourier(t), area_shoelace(t)));
  }
  auto& gr = out.add("general ratio formula vs measured (rel)", 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const EtaPair e{s.complex_in_box(1.5), s.complex_in_box(1.5)};
    const auto t = s.triple();
    const double measured = area_shoelace(apply(from_eta(e), t).image) / area_shoelace(t);
    const double predicted = area_ratio(e, fourier(t));
    gr.observe(std::abs(measured - predicted) / std::max(1.0, predicted));
  }
}

// 5
void moduli_action(Outcome& out) {
  Sampler s(505);
  auto& c = out.add("|phi(S D) - xi^3 phi(D)|", 1e-10);
  int done = 0;
  while (done < 500) {
    const Complex p = s.complex_in_box(2.0), q = s.complex_in_box(2.0);
    if (std::abs(1.0 - p * q) < 0.1 || std::abs(p - q) < 1e-3) continue;
    const PQPair pq(p, q);
    const auto op = from_pq(pq);
    const TXi tx = t_xi_of(pq);
    if (!classify(op).is_regular || tx.xi.is_infinite()) continue;
    const auto t = s.positive_triple();
    const auto img = apply(op, t);
    if (img.degenerate_output) continue;
    const SphereValue before = modulus_phi(t), after = modulus_phi(img.image);
    if (before.is_infinite() || after.is_infinite()) {
      c.require(false);
    } else {
      const Complex xi = tx.xi.value();
      c.observe(std::abs(after.value() - xi * xi * xi * before.value()));
    }
    ++done;
  }
}

// 6
void group_law(Outcome& out) {
  Sampler s(606);
  auto& assoc = out.add("associativity (chordal)", 1e-10);
  auto& assoc_formula = out.add("associativity, rational formula (chordal)", 1e-10);
  auto& ident = out.add("identity (chordal)", 1e-10);
  auto& inv = out.add("inverse (chordal)", 1e-10);
  auto& hom = out.add("psi homomorphism (chordal)", 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const TorusElement a(s.torus_coordinate(3.0)), b(s.torus_coordinate(3.0)), c(s.torus_coordinate(3.0));
    assoc.observe(chordal_distance(add(add(a, b), c).t(), add(a, add(b, c)).t()));
    const SphereValue ab = add_formula(a.t().value(), b.t().value());
    const SphereValue bc = add_formula(b.t().value(), c.t().value());
    if (ab.is_finite() && bc.is_finite()) {
      assoc_formula.observe(chordal_distance(add_formula(ab.value(), c.t().value()),
                                             add_formula(a.t().value(), bc.value())));
    }
    ident.observe(chordal_distance(add(a, TorusElement::zero()).t(), a.t()));
    inv.observe(chordal_distance(add(a, neg(a)).t(), SphereValue(0.0)));
    hom.observe(chordal_distance(psi(add(a, b)), SphereValue(psi(a).value() * psi(b).value())));
  }
  auto& nm = out.add("[N]t closed form vs repeated [+] (chordal)", 1e-10);
  for (int i = 0; i < 100; ++i) {
    // |ψ(t)| in [1/2, 2] keeps every multiple out of the excluded band around ρ, ρ⁻¹
    const TorusElement t = psi_inv(std::polar(std::exp(s.uniform(-std::log(2.0), std::log(2.0))),
                                              s.uniform(0.0, 2.0 * std::numbers::pi)));
    TorusElement acc = TorusElement::zero();
    for (long long n = 1; n <= 12; ++n) {
      acc = add(acc, t);
      nm.observe(chordal_distance(nmul_closed_form(n, t), acc.t()));
      nm.observe(chordal_distance(nmul(n, t).t(), acc.t()));
    }
  }
  auto& dp = out.add("|psi(t)^N - 1| over division points", 1e-10);
  for (long long n = 1; n <= 12; ++n) {
    const auto pts = division_points(n);
    dp.require(static_cast<long long>(pts.size()) == n);
    for (const auto& t : pts) dp.observe(std::abs(std::pow(psi(t).value(), static_cast<int>(n)) - 1.0));
  }
}

// 7
void structural(Outcome& out) {
  Sampler s(707);
  const auto J = CirculantOperator::cyclic();
  const auto J2 = CirculantOperator::cyclic_squared();
  const auto I = CirculantOperator::identity();
  auto& sym = out.add("symm (i)(ii)(iii) (rel coeff)", 1e-12);
  auto& mean = out.add("weighted-mean decompositions (rel coeff)", 1e-12);
  auto& comp = out.add("lambda composition vs matrix product (rel)", 1e-12);
  int done = 0;
  while (done < 300) {
    const Complex p = s.complex_in_box(1.5), q = s.complex_in_box(1.5);
    if (std::abs(1.0 - p * q) < 0.2 || std::abs(2.0 * p * q - p - q) < 0.2 ||
        std::abs(1.0 + 3.0 * q - 4.0 * p * q) < 0.2 || std::abs(1.0 + 3.0 * p - 4.0 * p * q) < 0.2) {
      continue;
    }
    StructuralPairs sp{PQPair(0, 0), PQPair(0, 0), PQPair(0, 0), PQPair(0, 0)};
    try {
      sp = structural_identities(PQPair(p, q));
    } catch (const Error&) {
      continue;
    }
    const auto op = from_pq(PQPair(p, q));
    const EtaPair e = eta_of(op);
    sym.observe(coeff_gap(from_pq(sp.swap), from_eta({e.etap * kOmega2, e.eta * kOmega})));
    sym.observe(coeff_gap(from_pq(sp.swap), compose(J, from_eta({e.etap, e.eta}))));
    sym.observe(coeff_gap(op, compose(J, from_pq(sp.j1))));
    sym.observe(coeff_gap(op, compose(J2, from_pq(sp.j2))));
    const auto& x = op.coefficients();
    const auto y = from_pq(sp.antipode).coefficients();
    for (std::size_t k = 0; k < 3; ++k) {
      sym.observe(std::abs(x[k] + y[k] - 2.0 / 3.0) / std::max({1.0, std::abs(x[k]), std::abs(y[k])}));
    }
    const EtaPair ea = eta_of(from_pq(sp.antipode));
    sym.observe(std::abs(ea.eta + e.eta) / std::max(1.0, std::abs(e.eta)));
    sym.observe(std::abs(ea.etap + e.etap) / std::max(1.0, std::abs(e.etap)));

    mean.observe(coeff_gap(op, weighted_mean((1.0 - q) / (1.0 - p * q), J, weighted_mean(p, J2, I))));
    mean.observe(coeff_gap(op, weighted_mean((1.0 - p) / (1.0 - p * q), I, weighted_mean(q, J2, J))));

    const Complex p2 = s.complex_in_box(1.5), q2 = s.complex_in_box(1.5);
    if (std::abs(1.0 - p2 * q2) > 0.2) {
      const PqChart c = compose_pq(PQPair(p, q), PQPair(p2, q2));
      const auto product = compose(op, from_pq(PQPair(p2, q2)));
      if (c.determinate() && std::abs(1.0 - c.p.value * c.q.value) > 1e-3) {
        comp.observe(coeff_gap(from_pq(c.pair()), product));
      }
    }
    ++done;
  }

  auto& inst = out.add("documented instances (coeff)", 1e-12);
  // Routh operators through J and J².
  const auto r1 = from_pq(PQPair(1.0 / 3, 2.0 / 3));
  inst.observe(coeff_gap(r1, compose(J, from_pq(PQPair(4.0 / 5, 2.0 / 3)))));
  inst.observe(coeff_gap(r1, compose(J2, from_pq(PQPair(1.0 / 3, 1.0 / 5)))));
  const auto r2 = from_pq(PQPair(2.0 / 3, 1.0 / 3));
  inst.observe(coeff_gap(r2, compose(J, from_pq(PQPair(1.0 / 5, 1.0 / 3)))));
  inst.observe(coeff_gap(r2, compose(J2, from_pq(PQPair(2.0 / 3, 4.0 / 5)))));
  // Point-symmetric pairs: the antipode of (p, q) is (q, p).
  for (auto [p, q] : {std::pair{1.0 / 3, 3.0 / 5}, std::pair{2.0 / 5, 4.0 / 7}}) {
    const auto a = structural_identities(PQPair(p, q)).antipode;
    inst.observe(std::abs(a.p() - q) + std::abs(a.q() - p));
    inst.observe(std::abs(4 * p * q - 3 * p - 3 * q + 2));
  }
  {
    const auto a = structural_identities(PQPair(1.0 / 3, 2.0 / 3)).antipode;
    inst.require(std::abs(a.p() - 2.0 / 3) + std::abs(a.q() - 1.0 / 3) > 1e-3);
  }
  // Composition whose product leaves the (p,q) chart but is J in the η chart.
  const PQPair a(1.0 / 3, 1.0 / 4), b(-7.0 / 8, -1.0 / 9);
  inst.observe(coeff_gap(compose(from_pq(a), from_pq(b)), J));
  const EtaPair ea = eta_of(from_pq(a)), eb = eta_of(from_pq(b));
  inst.observe(std::abs(ea.eta - (1.0 + 4.0 * kOmega) / 11.0) + std::abs(ea.etap + (3.0 + 4.0 * kOmega) / 11.0));
  inst.observe(std::abs(eb.eta - 11.0 / 13 * (3.0 * kOmega - 1.0)) +
               std::abs(eb.etap - 11.0 / 13 * (3.0 * kOmega2 - 1.0)));
  inst.observe(std::abs(ea.eta * eb.eta - kOmega2) + std::abs(ea.etap * eb.etap - kOmega));

  auto& degen = out.add("lambda-chart degeneracies", 0.0);
  const PqChart both_vanish = compose_pq(a, b);
  degen.require(both_vanish.p.outcome == ChartOutcome::Indeterminate);
  const PqChart escape = compose_pq(a, PQPair(-7.0 / 2, 1.0 / 5));
  degen.require(escape.p.outcome == ChartOutcome::ChartEscape);
  const PqChart literal = compose_pq(a, PQPair(-2.0 / 7, 1.0 / 5));
  degen.require(literal.p.determinate() && std::abs(literal.p.value - 17.0 / 30) < 1e-12);
}

// 8
void torus_equations(Outcome& out) {
  Sampler s(808);
  auto& c = out.add("functional-equation |LHS - RHS|", 1e-10);
  int done = 0;
  while (done < 1000) {
    const TorusPoint pt = TorusPoint::from_turns(s.uniform(0.0, 1.0), s.uniform(0.0, 1.0));
    const FunctionalResiduals r = functional_equation_residuals(pt);
    const std::optional<double> all[] = {r.p_from_q, r.q_from_p, r.p_swap, r.q_swap, r.p_reflection,
                                         r.q_reflection, r.r_antisymmetry, r.r_conjugation, r.q_r_bridge};
    if (std::any_of(std::begin(all), std::end(all), [](const auto& v) { return !v; })) continue;
    for (const auto& v : all) c.observe(*v);
    ++done;
  }
}

// 9
void regularity(Outcome& out) {
  Sampler s(909);
  auto& agree = out.add("geometric test == |xi| <= 1 (disagreements)", 0.0);
  int strata_count[4] = {0, 0, 0, 0};
  int i = 0;
  while (strata_count[0] + strata_count[1] + strata_count[2] + strata_count[3] < 1000) {
    const int stratum = i++ % 4;
    if (strata_count[stratum] >= 250) continue;
    const Complex p = s.complex_in_box(2.0);
    Complex q;
    if (stratum == 0) {
      q = p;
    } else {
      const double re = s.uniform(-3.0, 3.0);
      const double im = stratum == 1 ? 0.0 : (stratum == 2 ? s.uniform(0.01, 3.0) : -s.uniform(0.01, 3.0));
      const Complex t{re, im};
      // solve t = (p−1)(2q−1)/(p−q) for q
      const Complex den = t + 2.0 * (p - 1.0);
      if (std::abs(den) < 1e-3) continue;
      q = ((p - 1.0) + t * p) / den;
    }
    try {
      const PQPair pq(p, q);
      if (std::abs(1.0 - p * q) < 1e-3) continue;
      agree.require(regularity_geometric(pq) == classify(from_pq(pq)).is_regular);
      ++strata_count[stratum];
    } catch (const Error&) {
      continue;
    }
  }
  // p = q = 1/2 has no t at all; both tests must reject it.
  const PQPair half(0.5, 0.5);
  agree.require(!regularity_geometric(half) && !classify(from_pq(half)).is_regular);
}

// 10
void conic(Outcome& out) {
  Sampler s(1010);
  auto& member = out.add("|u^2+uv+v^2-1|", 1e-10);
  auto& trip = out.add("from_conic(to_conic(t)) == t (chordal)", 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const TorusElement t(s.torus_coordinate(3.0));
    const ConicPoint c = to_conic(t);
    member.observe(conic_residual(c));
    if (std::abs(c.v) > 1e-6) trip.observe(chordal_distance(from_conic(c).t(), t.t()));
  }
  const ConicPoint at_infinity = to_conic(TorusElement::infinity());
  member.observe(conic_residual(at_infinity));
  trip.observe(chordal_distance(from_conic(at_infinity).t(), SphereValue::infinity()));
}

// 11
void brocard(Outcome& out) {
  Sampler s(1111);
  auto& c = out.add("modulus vs side-length cot (rel)", 1e-9);
  for (int i = 0; i < 500; ++i) {
    const auto t = s.positive_triple();
    const double sides = brocard_cot_sides(t);
    c.observe(std::abs(brocard_cot(t) - sides) / std::max(1.0, sides));
  }
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "routh-one-seventh", 1.0, routh},
      {2, "napoleon-equilateral", 1.0, napoleon},
      {3, "orbit-periods-20-28", 1.0, orbit_periods},
      {4, "area-formulas", 5.0, area_formula},
      {5, "moduli-action", 2.0, moduli_action},
      {6, "torus-group-law", 5.0, group_law},
      {7, "structural-identities", 2.0, structural},
      {8, "torus-functional-equations", 2.0, torus_equations},
      {9, "regularity-equivalence", 1.0, regularity},
      {10, "conic-model", 1.0, conic},
      {11, "brocard-cross-check", 1.0, brocard},
  };
  return all;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "routh") return Suite::Routh;
  if (name == "napoleon") return Suite::Napoleon;
  if (name == "identities") return Suite::Identities;
  if (name == "torus") return Suite::Torus;
  if (name == "area") return Suite::Area;
  if (name == "orbits") return Suite::Orbits;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Routh: return "routh";
    case Suite::Napoleon: return "napoleon";
    case Suite::Identities: return "identities";
    case Suite::Torus: return "torus";
    case Suite::Area: return "area";
    case Suite::Orbits: return "orbits";
    case Suite::All: return "all";
  }
  return "unknown";
}

std::vector<int> suite_criteria(Suite s) {
  switch (s) {
    case Suite::Routh: return {1};
    case Suite::Napoleon: return {2};
    case Suite::Orbits: return {3};
    case Suite::Area: return {4, 11};
    case Suite::Identities: return {5, 7, 9};
    case Suite::Torus: return {6, 8, 10};
    case Suite::All: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  }
  return {};
}

CriterionResult run_criterion(int id) {
  const auto& all = criteria();
  const auto it = std::find_if(all.begin(), all.end(), [id](const Criterion& c) { return c.id == id; });
  if (it == all.end()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));

  Outcome outcome;
  std::string error;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->body(outcome);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool passed = error.empty() && seconds < it->time_limit && !outcome.checks.empty();
  std::string detail;
  for (const auto& c : outcome.checks) {
    passed = passed && c.ok();
    if (!detail.empty()) detail += "; ";
    detail += c.summary();
  }
  if (!error.empty()) detail += (detail.empty() ? "" : "; ") + std::string("exception: ") + error;
  return {id, it->name, passed, detail, seconds, it->time_limit};
}

std::vector<CriterionResult> run_suite(Suite s) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(s)) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof(head), "%s [%2d] %-28s (%.3f s / %g s) ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.time_limit);
  return head + r.detail;
}

}  // namespace cevian::verify
