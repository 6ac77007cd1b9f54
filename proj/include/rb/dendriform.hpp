#pragma once

#include <array>

#include "rb/bialgebra.hpp"
#include "rb/yang_baxter.hpp"

namespace rb {

/// (A, prec, succ) with both products stored as structure tables.
struct DendriformAlgebra {
  Algebra prec;
  Algebra succ;

  const Field& field() const { return prec.field(); }
  std::size_t dim() const { return prec.dim(); }
  static DendriformAlgebra zero(Field field, std::size_t dim) { return {Algebra(field, dim), Algebra(field, dim)}; }
};

struct RBDendriform {
  DendriformAlgebra dend;
  Matrix P;
  Scalar weight;
};

/// The three dendriform axioms on basis triples.
CheckReport check_dendriform(const DendriformAlgebra& d);
/// a * b = a prec b + a succ b. Throws NotDendriform.
Algebra associated_algebra(const DendriformAlgebra& d);
/// (A, L_succ, R_prec) over (A, *). Throws NotDendriform.
Representation dendriform_rep(const DendriformAlgebra& d);

/// The Rota-Baxter identity for both products. A pass is cross-checked against
/// check_rb_algebra on (A, *, P); disagreement throws Inconsistent. Throws NotDendriform.
CheckReport check_rb_dendriform(const RBDendriform& r);
/// a succ b = P(a)b, a prec b = aP(b). Throws NotWeightZero.
RBDendriform induced_dendriform(const RBAlgebra& a);

/// B(a * b, c) = B(b, c prec a) + B(a, b succ c) on basis triples, plus symmetry of B.
CheckReport check_two_cocycle(const BilinearForm& b, const DendriformAlgebra& d);
/// B(a prec b, c) = B(a, b succ c) on basis triples.
CheckReport check_sharp_identity(const BilinearForm& b, const DendriformAlgebra& d);

/// Manin triple (A + A*, A, A*) with A the first half of the basis: both halves are
/// dendriform subalgebras and isotropic, B is a nondegenerate 2-cocycle.
CheckReport check_manin_triple(const DendriformAlgebra& d, const BilinearForm& b);
/// Restriction to the block [begin, begin + count); meaningful when the block is closed.
DendriformAlgebra restrict_block(const DendriformAlgebra& d, std::size_t begin, std::size_t count);

struct DendriformManinTriple {
  DendriformAlgebra dend;
  BilinearForm form;
};

/// x succ y = (P + Q*)(x) y, x prec y = x (P + Q*)(y) on the double A + A*, with the
/// pairing form. Throws NotWeightZero.
DendriformManinTriple manin_triple_from_bialgebra(const RBASIBialgebra& b);
/// The two blocks of the Manin triple equal the dendriform algebras induced by
/// (A, P) and (A*, Q*).
CheckReport check_manin_restrictions(const RBASIBialgebra& b, const DendriformManinTriple& m);

/// The bialgebra on A x_{R_prec*, L_succ*} A* from id as an O-operator on (A, *, P).
/// Throws NotDendriform unless r passes check_rb_dendriform.
RBASIBialgebra dendriform_bialgebra(const RBDendriform& r);
/// Semidirect actions (R*, L*) with r = P - sigma(P), then (R*, 0), (0, L*) and
/// ((RP)*, (LP)*) with r = sum e_i (x) e^i - e^i (x) e_i. Throws NotWeightZero.
std::array<RBASIBialgebra, 4> four_bialgebras(const RBAlgebra& a);

}  // namespace rb
