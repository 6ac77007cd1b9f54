#include "rb/dendriform.hpp"

#include "rb/error.hpp"

namespace rb {

namespace {

void require_dendriform(const DendriformAlgebra& d, const char* what) {
  CheckReport r = check_dendriform(d);
  if (!r.passed()) throw Error(ErrorKind::NotDendriform, std::string(what) + ": not a dendriform algebra\n" + r.to_string());
}

Algebra sum(const Algebra& a, const Algebra& b) {
  Algebra s(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) s.c(i, j, k) = a.c(i, j, k) + b.c(i, j, k);
  return s;
}

Algebra restrict_algebra(const Algebra& a, std::size_t begin, std::size_t count) {
  Algebra s(a.field(), count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) s.c(i, j, k) = a.c(begin + i, begin + j, begin + k);
  return s;
}

void expect_block_closed(CheckReport& report, const Algebra& a, const char* product, std::size_t begin,
                         std::size_t count) {
  for (std::size_t i = begin; i < begin + count; ++i)
    for (std::size_t j = begin; j < begin + count; ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if ((k < begin || k >= begin + count) && !a.c(i, j, k).is_zero())
          report.fail(std::string(product) + " stays in block", {i, j, k}, a.c(i, j, k).to_string());
}

}  // namespace

CheckReport check_dendriform(const DendriformAlgebra& d) {
  if (d.succ.dim() != d.prec.dim() || d.succ.field() != d.prec.field())
    throw Error(ErrorKind::DimensionMismatch, "dendriform products differ in shape");
  const Algebra& pr = d.prec;
  const Algebra& su = d.succ;
  const Algebra star = sum(pr, su);
  CheckReport report("dendriform");
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = pr.basis(i), c = pr.basis(k);
        report.expect_zero("(a < b) < c = a < (b < c + b > c)", {i, j, k},
                           pr.mul(pr.mul_basis(i, j), c) - pr.mul(a, star.mul_basis(j, k)));
        report.expect_zero("(a > b) < c = a > (b < c)", {i, j, k},
                           pr.mul(su.mul_basis(i, j), c) - su.mul(a, pr.mul_basis(j, k)));
        report.expect_zero("(a < b + a > b) > c = a > (b > c)", {i, j, k},
                           su.mul(star.mul_basis(i, j), c) - su.mul(a, su.mul_basis(j, k)));
      }
  return report;
}

Algebra associated_algebra(const DendriformAlgebra& d) {
  require_dendriform(d, "associated algebra");
  return sum(d.prec, d.succ);
}

Representation dendriform_rep(const DendriformAlgebra& d) {
  require_dendriform(d, "dendriform representation");
  Representation v = Representation::zero(d.field(), d.dim(), d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    v.ell[i] = d.succ.left(i);
    v.right[i] = d.prec.right(i);
  }
  return v;
}

CheckReport check_rb_dendriform(const RBDendriform& r) {
  require_dendriform(r.dend, "Rota-Baxter dendriform");
  CheckReport report("rb-dendriform");
  CheckReport prec("prec"), succ("succ");
  prec.add(check_rb_algebra(r.dend.prec, r.P, r.weight));
  succ.add(check_rb_algebra(r.dend.succ, r.P, r.weight));
  report.add(std::move(prec));
  report.add(std::move(succ));
  if (report.passed()) {
    CheckReport assoc = check_rb_algebra(sum(r.dend.prec, r.dend.succ), r.P, r.weight);
    if (!assoc.passed())
      throw Error(ErrorKind::Inconsistent, "associated Rota-Baxter algebra fails\n" + assoc.to_string());
  }
  return report;
}

RBDendriform induced_dendriform(const RBAlgebra& a) {
  if (!a.weight.is_zero()) throw Error(ErrorKind::NotWeightZero, "induced dendriform needs weight zero");
  const std::size_t n = a.dim();
  DendriformAlgebra d = DendriformAlgebra::zero(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
          if (!a.P(m, i).is_zero()) d.succ.c(i, j, k) += a.P(m, i) * a.algebra.c(m, j, k);
          if (!a.P(m, j).is_zero()) d.prec.c(i, j, k) += a.P(m, j) * a.algebra.c(i, m, k);
        }
  return {std::move(d), a.P, a.weight};
}

CheckReport check_two_cocycle(const BilinearForm& b, const DendriformAlgebra& d) {
  if (b.dim() != d.dim()) throw Error(ErrorKind::DimensionMismatch, "form does not match the dendriform dimension");
  const Algebra star = sum(d.prec, d.succ);
  CheckReport report("two-cocycle");
  BilinearForm sym{b.gram, Symmetry::Symmetric};
  report.add(check_symmetry(sym));
  CheckReport cocycle("cocycle");
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = b(star.mul_basis(i, j), star.basis(k)) - b(star.basis(j), d.prec.mul_basis(k, i)) -
                   b(star.basis(i), d.succ.mul_basis(j, k));
        if (!s.is_zero()) cocycle.fail("B(a * b, c) = B(b, c < a) + B(a, b > c)", {i, j, k}, s.to_string());
      }
  report.add(std::move(cocycle));
  return report;
}

CheckReport check_sharp_identity(const BilinearForm& b, const DendriformAlgebra& d) {
  if (b.dim() != d.dim()) throw Error(ErrorKind::DimensionMismatch, "form does not match the dendriform dimension");
  CheckReport report("sharp-identity");
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = b(d.prec.mul_basis(i, j), d.prec.basis(k)) - b(d.prec.basis(i), d.succ.mul_basis(j, k));
        if (!s.is_zero()) report.fail("B(a < b, c) = B(a, b > c)", {i, j, k}, s.to_string());
      }
  return report;
}

CheckReport check_manin_triple(const DendriformAlgebra& d, const BilinearForm& b) {
  if (d.dim() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "Manin triple needs an even dimension");
  if (b.dim() != d.dim()) throw Error(ErrorKind::DimensionMismatch, "form does not match the dendriform dimension");
  const std::size_t n = d.dim() / 2;
  CheckReport report("manin-triple");
  report.add(check_dendriform(d));
  CheckReport sub("subalgebras");
  for (std::size_t begin : {std::size_t{0}, n}) {
    expect_block_closed(sub, d.prec, "prec", begin, n);
    expect_block_closed(sub, d.succ, "succ", begin, n);
  }
  report.add(std::move(sub));
  CheckReport iso("isotropic");
  for (std::size_t begin : {std::size_t{0}, n})
    for (std::size_t i = begin; i < begin + n; ++i)
      for (std::size_t j = begin; j < begin + n; ++j)
        if (!b.gram(i, j).is_zero()) iso.fail("B vanishes on each block", {i, j}, b.gram(i, j).to_string());
  report.add(std::move(iso));
  report.add(check_two_cocycle(b, d));
  CheckReport nondeg("nondegenerate");
  std::size_t rk = rank(b.gram);
  nondeg.expect(rk == b.dim(), "B nondegenerate", "rank " + std::to_string(rk));
  report.add(std::move(nondeg));
  return report;
}

DendriformAlgebra restrict_block(const DendriformAlgebra& d, std::size_t begin, std::size_t count) {
  if (begin + count > d.dim()) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  return {restrict_algebra(d.prec, begin, count), restrict_algebra(d.succ, begin, count)};
}

DendriformManinTriple manin_triple_from_bialgebra(const RBASIBialgebra& b) {
  if (!b.weight.is_zero()) throw Error(ErrorKind::NotWeightZero, "Manin triple needs weight zero");
  MatchedPairData m = dual_matched_pair(b.rb_algebra(), dual_rb_algebra(b));
  RBAlgebra dbl{build_matched_algebra(m), Matrix::block_diagonal(b.P, transpose(b.Q)), b.weight};
  return {induced_dendriform(dbl).dend, double_form(b.algebra.field(), b.dim())};
}

CheckReport check_manin_restrictions(const RBASIBialgebra& b, const DendriformManinTriple& m) {
  const std::size_t n = b.dim();
  CheckReport report("manin-restrictions");
  DendriformAlgebra on_a = induced_dendriform(b.rb_algebra()).dend;
  DendriformAlgebra on_dual = induced_dendriform(dual_rb_algebra(b)).dend;
  DendriformAlgebra ra = restrict_block(m.dend, 0, n), rd = restrict_block(m.dend, n, n);
  report.expect(ra.prec == on_a.prec && ra.succ == on_a.succ, "A block is induced by P");
  report.expect(rd.prec == on_dual.prec && rd.succ == on_dual.succ, "A* block is induced by Q*");
  return report;
}

RBASIBialgebra dendriform_bialgebra(const RBDendriform& r) {
  CheckReport c = check_rb_dendriform(r);
  if (!c.passed()) throw Error(ErrorKind::NotDendriform, "not a Rota-Baxter dendriform algebra\n" + c.to_string());
  Representation rep = dendriform_rep(r.dend);
  rep.alpha = r.P;
  RBAlgebra base{associated_algebra(r.dend), r.P, r.weight};
  return cons2_bialgebra({base, rep, Matrix::identity(r.dend.field(), r.dend.dim())});
}

std::array<RBASIBialgebra, 4> four_bialgebras(const RBAlgebra& a) {
  if (!a.weight.is_zero()) throw Error(ErrorKind::NotWeightZero, "four bialgebras need weight zero");
  const std::size_t n = a.dim();
  const Matrix I = Matrix::identity(a.field(), n);
  Representation adj = Representation::adjoint(a.algebra);
  adj.alpha = a.P;
  Representation right_only = Representation::zero(a.field(), n, n), left_only = right_only;
  for (std::size_t i = 0; i < n; ++i) {
    right_only.right[i] = adj.right[i];
    left_only.ell[i] = adj.ell[i];
  }
  right_only.alpha = a.P;
  left_only.alpha = a.P;
  return {cons2_bialgebra({a, adj, a.P}), cons2_bialgebra({a, right_only, I}), cons2_bialgebra({a, left_only, I}),
          dendriform_bialgebra(induced_dendriform(a))};
}

}  // namespace rb
