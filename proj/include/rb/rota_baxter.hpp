#pragma once

#include "rb/algebra.hpp"
#include "rb/report.hpp"

namespace rb {

/// Whether a construction validates its inputs first.
enum class Validation { Checked, Unchecked };

struct RBAlgebra {
  Algebra algebra;
  Matrix P;
  Scalar weight;

  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
};

struct RBCoalgebra {
  Coalgebra coalgebra;
  Matrix Q;
  Scalar weight;
};

/// (V, l, r, alpha) over (A, P); rep.alpha must be set.
struct RBRepresentation {
  RBAlgebra base;
  Representation rep;
};

/// (V, l, r, beta) over (A, P).
struct AdmissibleQuadruple {
  RBAlgebra base;
  Representation rep;
  Matrix beta;
};

/// P(a)P(b) = P(aP(b)) + P(P(a)b) + lambda P(ab) on basis pairs.
CheckReport check_rb_algebra(const Algebra& a, const Matrix& P, const Scalar& weight);
inline CheckReport check_rb_algebra(const RBAlgebra& a) { return check_rb_algebra(a.algebra, a.P, a.weight); }

/// (Q (x) Q)Delta = (Q (x) id)Delta Q + (id (x) Q)Delta Q + lambda Delta Q on basis elements.
CheckReport check_rb_coalgebra(const Coalgebra& c, const Matrix& Q, const Scalar& weight);

/// Compatibility of alpha with the two actions. Throws NotABimodule.
CheckReport check_rb_representation(const RBAlgebra& base, const Representation& rep);
/// Same residuals without validating the bimodule.
CheckReport rb_representation_residuals(const RBAlgebra& base, const Representation& rep);

/// beta admissible to (A, P) on (V, l, r). Evaluates both the direct
/// identities and the dual route ((V*, r*, l*, beta*) is a representation of
/// (A, P)); throws Inconsistent if they disagree and NotABimodule if rep is not one.
CheckReport check_admissible(const RBAlgebra& base, const Representation& rep, const Matrix& beta);
/// Direct identities only, no validation.
CheckReport admissibility_residuals(const RBAlgebra& base, const Representation& rep, const Matrix& beta);
/// Q admissible to (A, P) on the adjoint representation.
CheckReport check_q_admissible(const RBAlgebra& base, const Matrix& Q);

/// phi invertible and intertwining l, r and alpha.
CheckReport check_equivalence(const RBAlgebra& base, const Representation& r1, const Representation& r2,
                              const Matrix& phi);

/// A + V with (a+u)(b+v) = ab + l(a)v + u r(b).
Algebra semidirect_algebra(const Algebra& a, const Representation& rep);
/// (A x V, P + alpha). Checked mode throws NotARBRepresentation.
RBAlgebra semidirect_product(const RBAlgebra& base, const Representation& rep,
                             Validation validation = Validation::Checked);

}  // namespace rb
