#pragma once

#include <optional>

#include "rb/algebra.hpp"
#include "rb/bialgebra.hpp"
#include "rb/rota_baxter.hpp"

namespace rb {

/// r in A (x) A; antisymmetric when r = -sigma(r).
using RElement = Tensor2;

/// Delta(a) = (id (x) L(a) - R(a) (x) id)(r).
Coalgebra coboundary_delta(const Algebra& a, const RElement& r);

/// r12 r13 + r13 r23 - r23 r12.
Tensor3 aybe_residual(const Algebra& a, const RElement& r);

/// The five coboundary conditions on ((A, P), Delta_r, Q): balance of r + sigma(r),
/// the coassociativity condition, the co-Rota-Baxter condition and the two dual
/// admissibility conditions. A pass is cross-checked against check_rb_asi_bialgebra
/// on the assembled quintuple; disagreement throws Inconsistent. Throws
/// NotQAdmissible unless (A, P) is a Rota-Baxter algebra with Q admissible.
CheckReport coboundary_conditions(const RBAlgebra& base, const Matrix& Q, const RElement& r);
/// ((A, P), Delta_r, Q).
RBASIBialgebra coboundary_bialgebra(const RBAlgebra& base, const Matrix& Q, const RElement& r);

/// (P (x) id - id (x) Q)(r) = 0 and (Q (x) id - id (x) P)(r) = 0. For antisymmetric
/// r the two verdicts must agree; otherwise throws Inconsistent.
CheckReport admissibility_conditions(const RElement& r, const Matrix& P, const Matrix& Q);

/// AYBE residual plus admissibility_conditions.
CheckReport admissible_aybe(const RBAlgebra& base, const Matrix& Q, const RElement& r);

/// r(a*)r(b*) = r(R*(r(a*))b* + a*L*(r(b*))) on dual basis pairs and P r = r Q*.
/// Throws NotAntisymmetric, and Inconsistent if the verdict differs from admissible_aybe.
CheckReport operator_form_check(const RBAlgebra& base, const Matrix& Q, const RElement& r);

/// Antisymmetry and w(ab, c) + w(bc, a) + w(ca, b) = 0 on basis triples.
CheckReport connes_check(const BilinearForm& omega, const Algebra& a);
/// w(a, b) = <r^-1(a), b>. Throws SingularMatrix.
BilinearForm omega_from_r(const RElement& r);
/// Verdicts: r solves the Q-admissible AYBE; w is a Connes cocycle with adjoint of P equal to Q.
/// Throws NotAntisymmetric, SingularMatrix, Inconsistent.
EquivalenceReport connes_correspondence(const RBAlgebra& base, const Matrix& Q, const RElement& r);

/// P_r = r phi.
Matrix p_r(const FrobeniusData& f, const RElement& r);
/// Verdicts: r solves the P-hat-admissible AYBE; P_r is a weight-zero Rota-Baxter
/// operator commuting with P. Throws NotWeightZero, NotAntisymmetric, InvalidArgument
/// for a non-symmetric or non-Frobenius form, Inconsistent.
EquivalenceReport frobenius_rb_correspondence(const FrobeniusData& f, const RElement& r);
/// r_P(a*) = P(phi^-1(a*)). Throws SingularMatrix, NotWeightZero; Inconsistent if
/// P-hat = -P but r_P is not antisymmetric.
RElement r_from_P(const FrobeniusData& f);
/// ((A, P), Delta_{r_P}, -P). Throws InvalidArgument unless P-hat = -P.
RBASIBialgebra frobenius_bialgebra(const FrobeniusData& f);

/// T: V -> A with (V, l, r, alpha) over (A, P); rep.alpha must be set.
struct OOperatorData {
  RBAlgebra base;
  Representation rep;
  Matrix T;
};

/// T(u)T(v) = T(l(T(u))v + u r(T(v))) and P T = T alpha, without validation.
CheckReport weak_o_residuals(const OOperatorData& d);
/// Throws NotABimodule.
CheckReport check_weak_o_operator(const OOperatorData& d);
/// Weak identities plus the Rota-Baxter representation identities. Throws NotABimodule.
CheckReport check_o_operator(const OOperatorData& d);

/// Verdicts: (a) Q + beta admissible to (A x V, P + alpha); (b) Q + alpha* admissible
/// to (A x V*, P + beta*); (c) representation, admissibility of Q, admissible quadruple
/// and the two mixed identities. Throws NotABimodule, InvalidArgument unless (A, P) is
/// a Rota-Baxter algebra, Inconsistent if the verdicts differ.
EquivalenceReport semidirect_dual_admissibility(const RBAlgebra& base, const Representation& rep, const Matrix& Q,
                                                const Matrix& alpha, const Matrix& beta);

struct LiftResult {
  /// (A x_{r*, l*} V*, P + beta*).
  RBAlgebra algebra;
  /// Q + alpha*.
  Matrix Q;
  /// T - sigma(T).
  RElement r;
  /// Antisymmetry, admissible AYBE and weak O-operator verdicts.
  CheckReport solution;
  /// Hypotheses of the bialgebra assembly; bialgebra is set iff this passes.
  CheckReport bialgebra_conditions;
  std::optional<RBASIBialgebra> bialgebra;
};

/// Throws LiftPreconditionFailed unless (V, l, r, beta) is an admissible quadruple
/// and T beta = Q T; Inconsistent if the solution verdicts disagree or an
/// assembled bialgebra fails check_rb_asi_bialgebra.
LiftResult lift_o_operator(const OOperatorData& d, const Matrix& Q, const Matrix& beta);

/// Pi in {theta x (theta = +-1), -x + theta (theta != 0), theta x^-1 (theta != 0)}.
struct PiSpec {
  enum class Kind { ScalarX, NegXPlusTheta, ThetaXInverse };
  Kind kind;
  Scalar theta;

  /// Throws InvalidArgument for theta outside the allowed set.
  static PiSpec scalar_x(const Scalar& theta);
  static PiSpec neg_x_plus_theta(const Scalar& theta);
  static PiSpec theta_x_inverse(const Scalar& theta);

  /// Pi(X). Throws NotInvertible for theta x^-1 on a singular X.
  Matrix apply(const Matrix& x) const;
};

/// The Pi-admissible equations for (V, l, r, alpha) over (A, P). The verdict is
/// cross-checked against semidirect_dual_admissibility with beta = Pi(alpha),
/// Q = Pi(P); disagreement throws Inconsistent. Throws NotInvertible for theta x^-1
/// when P or alpha is singular.
CheckReport pi_admissible_check(const PiSpec& pi, const RBAlgebra& base, const Representation& rep);

/// lift_o_operator with beta = -alpha - lambda id, Q = -P - lambda id.
/// Throws LiftPreconditionFailed unless d is an O-operator.
RBASIBialgebra cons2_bialgebra(const OOperatorData& d);

}  // namespace rb
