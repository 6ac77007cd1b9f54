#pragma once

#include <optional>
#include <utility>

#include "rb/algebra.hpp"
#include "rb/rota_baxter.hpp"

namespace rb {

struct ASIBialgebra {
  Algebra algebra;
  Coalgebra coproduct;
};

/// ((A, P), Delta, Q) with one shared weight.
struct RBASIBialgebra {
  Algebra algebra;
  Coalgebra coproduct;
  Matrix P;
  Matrix Q;
  Scalar weight;

  std::size_t dim() const { return algebra.dim(); }
  RBAlgebra rb_algebra() const { return {algebra, P, weight}; }
};

/// Algebras A, B acting on each other: on_b holds (l_A, r_A) acting on B,
/// on_a holds (l_B, r_B) acting on A. PA, PB give the Rota-Baxter refinement.
struct MatchedPairData {
  Algebra A;
  Algebra B;
  Representation on_b;
  Representation on_a;
  std::optional<Matrix> PA;
  std::optional<Matrix> PB;
  Scalar weight;

  bool has_operators() const { return PA.has_value() && PB.has_value(); }
};

struct FrobeniusData {
  RBAlgebra base;
  BilinearForm form;
};

/// Associativity, coassociativity and the cocycle and antisymmetry identities.
CheckReport check_asi_bialgebra(const ASIBialgebra& b);
/// Sub-reports: asi, rb-algebra, rb-coalgebra, compatibility. The
/// compatibility identities are also evaluated as the two admissibility
/// conditions (Q on (A, P), P* on (A*, Q*)); disagreement throws Inconsistent.
CheckReport check_rb_asi_bialgebra(const RBASIBialgebra& b);
/// The four compatibility identities coupling P, Q, the product and Delta.
CheckReport compatibility_residuals(const RBASIBialgebra& b);

CheckReport check_matched_pair(const MatchedPairData& m);
/// A + B with the matched-pair product; operator PA + PB when both are given.
Algebra build_matched_algebra(const MatchedPairData& m);
RBAlgebra build_matched_product(const MatchedPairData& m);

/// (A, A*, R*, L*, R'*, L'*) for an algebra A and an algebra A' on A*.
MatchedPairData dual_matched_pair(const RBAlgebra& a, const RBAlgebra& astar);

/// Invariance, declared symmetry, nondegeneracy; Rota-Baxter identity of the base operator.
CheckReport check_frobenius(const FrobeniusData& f);
/// P-hat with B(P(a), b) = B(a, P-hat(b)): gram^-1 P^T gram. Throws SingularMatrix.
Matrix adjoint_operator(const BilinearForm& form, const Matrix& P);
inline Matrix adjoint_operator(const FrobeniusData& f) { return adjoint_operator(f.form, f.base.P); }
/// phi: A -> A*, phi(a) = B(a, -).
Matrix frobenius_map(const BilinearForm& form);
/// B(a, b) = <phi(a), b> for an equivalence phi: A -> A*.
BilinearForm form_from_equivalence(const Matrix& phi);

/// The pairing form on A + A*: gram [[0, I], [I, 0]].
BilinearForm double_form(const Field& field, std::size_t n);
/// Throws NotAMatchedPair unless the induced sextuple is a matched pair of
/// Rota-Baxter algebras. astar is (A*, o, Q*).
FrobeniusData build_double_construction(const RBAlgebra& a, const RBAlgebra& astar,
                                        Validation validation = Validation::Checked);
/// The double-construction conditions on the matched product: associativity,
/// invariance of the pairing form, and the Rota-Baxter identity of P + Q*.
CheckReport check_double_construction(const RBAlgebra& a, const RBAlgebra& astar);

/// The quintuple (A, ., Delta, P, Q) with Delta dual to o and Q = (Q*)^T.
RBASIBialgebra bialgebra_from_dual(const RBAlgebra& a, const RBAlgebra& astar);
/// (A*, o, Q*) from a quintuple.
RBAlgebra dual_rb_algebra(const RBASIBialgebra& b);

/// Verdicts: matched pair, double construction, Rota-Baxter ASI bialgebra.
EquivalenceReport check_triple_equivalence(const RBAlgebra& a, const RBAlgebra& astar);

/// ((A*, Q*), -delta, P*). Throws NotABialgebra.
RBASIBialgebra dual_bialgebra(const RBASIBialgebra& b, Validation validation = Validation::Checked);
/// Structure on A + A* from r = sum e_i (x) e^i with operator P + Q* and co-operator Q + P*.
RBASIBialgebra double_bialgebra(const RBASIBialgebra& b, Validation validation = Validation::Checked);

/// Block [begin, begin + count) is closed under the product and the coproduct
/// and invariant under P and Q.
CheckReport check_block_closed(const RBASIBialgebra& b, std::size_t begin, std::size_t count);
/// Restriction to a block; meaningful when check_block_closed passes.
RBASIBialgebra restrict_block(const RBASIBialgebra& b, std::size_t begin, std::size_t count);

/// Direct sum with component operations.
ASIBialgebra direct_sum(const ASIBialgebra& a, const ASIBialgebra& b);

/// B(ab, c) = B(a, bc) on basis triples.
CheckReport check_invariance(const Algebra& a, const BilinearForm& form);

}  // namespace rb
