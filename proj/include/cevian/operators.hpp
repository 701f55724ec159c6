#pragma once

#include <array>
#include <optional>

#include "cevian/geom_core.hpp"

namespace cevian {

/// Cevian parameters (p, q) with pq ≠ 1 and (p, q) ≠ (1, 1).
class PQPair {
 public:
  /// Throws InvalidParameters outside the domain.
  PQPair(Complex p, Complex q);

  Complex p() const noexcept { return p_; }
  Complex q() const noexcept { return q_; }

 private:
  Complex p_;
  Complex q_;
};

/// The two nontrivial eigenvalues of a circulant operator: η acts on ψ2 and
/// η' acts on ψ1.
struct EtaPair {
  Complex eta;
  Complex etap;
};

/// αI + βJ + γJ² with α + β + γ = 1, where J cyclically shifts (a,b,c) to
/// (b,c,a). Every member of the family, in either chart, is stored in this
/// form.
class CirculantOperator {
 public:
  /// Throws InvalidParameters when the coefficients do not sum to 1 within
  /// kEps; the remaining rounding residual is spread evenly.
  CirculantOperator(Complex alpha, Complex beta, Complex gamma);

  static CirculantOperator identity() { return {1.0, 0.0, 0.0}; }
  /// J: (a,b,c) ↦ (b,c,a).
  static CirculantOperator cyclic() { return {0.0, 1.0, 0.0}; }
  /// J²: (a,b,c) ↦ (c,a,b).
  static CirculantOperator cyclic_squared() { return {0.0, 0.0, 1.0}; }

  Complex alpha() const noexcept { return c_[0]; }
  Complex beta() const noexcept { return c_[1]; }
  Complex gamma() const noexcept { return c_[2]; }
  const std::array<Complex, 3>& coefficients() const noexcept { return c_; }

  /// Row-major 3×3 matrix acting on column vectors (a,b,c)ᵀ.
  std::array<std::array<Complex, 3>, 3> matrix() const;

 private:
  std::array<Complex, 3> c_;
};

/// Largest coefficient difference.
double coefficient_distance(const CirculantOperator& x, const CirculantOperator& y);

CirculantOperator from_pq(const PQPair& pq);
CirculantOperator from_eta(const EtaPair& e);
EtaPair eta_of(const CirculantOperator& op);

/// η_{p,q} = (1+tω)(p−q)/(1−pq) and η'_{p,q} = (1+tω²)(p−q)/(1−pq), with the
/// factor (p−q) multiplied through so that p = q needs no limit.
EtaPair eta_of_pq(const PQPair& pq);

struct TXi {
  SphereValue t;
  SphereValue xi;
};

/// t = (p−1)(2q−1)/(p−q), ξ = (1+tω)/(1+tω²). Throws IndeterminateValue at
/// (1,1) and (1/2,1/2). pq = 1 is allowed here.
TXi t_xi_of(Complex p, Complex q);
inline TXi t_xi_of(const PQPair& pq) { return t_xi_of(pq.p(), pq.q()); }

/// Result of evaluating one rational chart coordinate.
enum class ChartOutcome { Determinate, ChartEscape, Indeterminate };

const char* to_string(ChartOutcome o);

struct ChartComponent {
  ChartOutcome outcome = ChartOutcome::Determinate;
  Complex value{};  // meaningful only when Determinate

  bool determinate() const noexcept { return outcome == ChartOutcome::Determinate; }
};

struct PqChart {
  ChartComponent p;
  ChartComponent q;

  bool determinate() const noexcept { return p.determinate() && q.determinate(); }
  /// Throws InvalidParameters unless both components are determinate and
  /// form a valid pair.
  PQPair pair() const;
};

/// p(η,η') = (1+η+η')/(2−ωη−ω²η'), q(η,η') = (1+ωη+ω²η')/(2−η−η').
PqChart pq_of(const EtaPair& e);
inline PqChart pq_of(const CirculantOperator& op) { return pq_of(eta_of(op)); }

struct Application {
  TriangleTriple image;
  /// Set when the image is collinear or has coincident vertices.
  bool degenerate_output = false;
};

/// a' = αa + βb + γc, b' = αb + βc + γa, c' = αc + βa + γb.
Application apply(const CirculantOperator& op, const TriangleTriple& t);

/// Same map through the Fourier side: ψ ↦ (ψ0, η'ψ1, ηψ2).
Application apply_fourier(const CirculantOperator& op, const TriangleTriple& t);

/// Matrix product op1·op2 (commutative on this family).
CirculantOperator compose(const CirculantOperator& op1, const CirculantOperator& op2);

/// Composition in the (p,q) chart through λ1, λ2, λ3. p fails when λ1
/// vanishes (Indeterminate if λ2+2λ3 vanishes too, ChartEscape otherwise);
/// q likewise with λ2 and λ1−2λ3.
PqChart compose_pq(const PQPair& pq1, const PQPair& pq2);

struct Classification {
  bool is_identity = false;
  bool is_cyclic_permutation = false;
  bool is_regular = false;
  bool is_normal = false;
  bool is_area_preserving = false;
  /// ξ = 0 (t = ρ): every positive triple is sent to a positive equilateral
  /// one, so the whole moduli disk collapses to its center.
  bool collapses_moduli = false;
  EtaPair eta;
  /// Unset when η = η' = 0 (ξ is 0/0).
  std::optional<SphereValue> xi;
  std::optional<SphereValue> t;
};

Classification classify(const CirculantOperator& op);

/// Regularity test on the parameters themselves: p = q ≠ 1/2, or
/// t = (p−1)(2q−1)/(p−q) in ℝ ∪ ℋ⁺.
bool regularity_geometric(const PQPair& pq);

/// Pairs realizing (a,c,b), (b,a,c) and (c,b,a) for this triple.
struct ReflectionParams {
  PQPair swap_bc;
  PQPair swap_ab;
  PQPair swap_ac;
};

/// Throws DegenerateTriangle on collinear input, InvalidParameters if a pair
/// leaves the domain.
ReflectionParams reflection_params(const TriangleTriple& t);

/// pq = p + q and pq ≠ 1.
bool is_reflection_param(Complex p, Complex q);

/// μ_r(A, B) = (1−r)A + rB.
CirculantOperator weighted_mean(Complex r, const CirculantOperator& a, const CirculantOperator& b);

/// Parameter pairs related to (p, q) by the J-symmetries of the family.
struct StructuralPairs {
  /// (q, p); its operator equals J·S[η',η].
  PQPair swap;
  /// S_{p,q} = J·S_{j1}.
  PQPair j1;
  /// S_{p,q} = J²·S_{j2}.
  PQPair j2;
  /// S_{p,q} + S_{antipode} = (2/3)(I + J + J²); its eigenvalues are (−η, −η').
  PQPair antipode;
};

/// Throws DerivedParameterUndefined when 2pq−p−q, 1+3q−4pq or 1+3p−4pq
/// vanishes, or a derived pair leaves the domain.
StructuralPairs structural_identities(const PQPair& pq);

/// Area ratio for real (p, q): |((p−q)/(1−pq))(1+tω²)|².
double area_ratio_real(const PQPair& pq);

/// area(S[η,η']Δ)/area(Δ) = ||η'ψ1|²−|ηψ2|²| / ||ψ1|²−|ψ2|²|.
double area_ratio(const EtaPair& e, const FourierVector& psi);

}  // namespace cevian
