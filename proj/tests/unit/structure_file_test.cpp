#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "expect.hpp"
#include "rb/structure_file.hpp"

namespace rb {
namespace {

using namespace testing;

const std::string kHeader = "format 1\nfield Q\n";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_message(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(Parse, MinimalUnitAlgebra) {
  const StructureFile s = parse_structure(kHeader + "\nalgebra E dim 1\n  mul 1 1 1 = 1\nend\n");
  EXPECT_EQ(s.field, Field::rationals());
  ASSERT_EQ(s.objects.size(), 1u);
  EXPECT_EQ(std::get<Algebra>(s.get("E").value), unit_algebra(Field::rationals()));
}

TEST(Parse, PrimeField) {
  const StructureFile s = parse_structure("format 1\nfield p 3\n\noperator M dim 1 1\n  1 1 = 2\nend\n");
  EXPECT_EQ(s.field, Field::prime(3));
  EXPECT_EQ(std::get<Matrix>(s.get("M").value)(0, 0), Field::prime(3).from_int(2));
}

TEST(Parse, NonPrimeModulusRejected) {
  EXPECT_RB_ERROR(parse_structure("format 1\nfield p 4\n"), ErrorKind::ParseError);
  EXPECT_NE(error_message("format 1\nfield p 4\n").find("line 2"), std::string::npos);
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  const std::string text = kHeader + "\nalgebra E dim 1\n  mul 1 2 1 = 1\nend\n";
  EXPECT_RB_ERROR(parse_structure(text), ErrorKind::ParseError);
  const std::string msg = error_message(text);
  EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Parse, Rejections) {
  const std::vector<std::string> bad = {
      "format 2\nfield Q\n",
      "format 1\n",
      kHeader + "\nwidget W dim 1\nend\n",
      kHeader + "\nalgebra E dim 1\n  mul 1 1 1 = 1\n  mul 1 1 1 = 1\nend\n",
      kHeader + "\nalgebra E dim 1\nend\n\nalgebra E dim 1\nend\n",
      kHeader + "\nalgebra E dim 1\n  mul 1 1 1 = x\nend\n",
      kHeader + "\nalgebra E dim 1\n  mul 1 1 1 = 1\n",
      kHeader + "\nalgebra E dim 1\nend\n\nbundle B kind rb-algebra\n  algebra E\n  colour red\nend\n",
      kHeader + "\nbundle B kind rb-widget\nend\n",
      kHeader + "\nform F dim 1 skew\nend\n",
      "format 1\nfield p 3\n\noperator M dim 1 1\n  1 1 = 5\nend\n",
  };
  for (const std::string& text : bad) EXPECT_RB_ERROR(parse_structure(text), ErrorKind::ParseError) << text;
}

TEST(Parse, MissingBundleKey) {
  const std::string text = kHeader +
                           "\nalgebra E dim 1\nend\n\nbundle B kind rb-algebra\n  algebra E\n  weight 0\nend\n";
  EXPECT_RB_ERROR(parse_structure(text), ErrorKind::ParseError);
}

TEST(Parse, ResolutionErrors) {
  const std::string dangling = kHeader +
                               "\nalgebra E dim 1\nend\n\nbundle B kind rb-algebra\n  algebra E\n  P missing\n  weight 0\nend\n";
  EXPECT_RB_ERROR(parse_structure(dangling), ErrorKind::ResolutionError);
  const std::string mistyped = kHeader +
                               "\nalgebra E dim 1\nend\n\nbundle B kind rb-algebra\n  algebra E\n  P E\n  weight 0\nend\n";
  EXPECT_RB_ERROR(parse_structure(mistyped), ErrorKind::ResolutionError);
  const std::string rep = kHeader + "\nrepresentation V algebra nowhere dim 1\nend\n";
  EXPECT_RB_ERROR(parse_structure(rep), ErrorKind::ResolutionError);
}

TEST(Emit, CanonicalizesScalarsAndOrder) {
  const std::string text = kHeader + "# note\n\noperator M dim 2 2\n  2 2 = 6/4\n  1 1 = 0\n  1 2 = -3\nend\n";
  EXPECT_EQ(emit_structure(parse_structure(text)), kHeader + "\noperator M dim 2 2\n  1 2 = -3\n  2 2 = 3/2\nend\n");
}

TEST(Emit, GoldenFilesRoundTrip) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(RB_SOURCE_DIR) / "tests/golden")) {
    if (entry.path().extension() != ".rb") continue;
    const std::string text = read_file(entry.path());
    EXPECT_EQ(emit_structure(parse_structure(text)), text) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 5u);
}

TEST(Emit, ProgrammaticRoundTrip) {
  StructureFile s;
  s.field = Field::prime(3);
  const Algebra a = upper_triangular(s.field);
  s.add("A", a);
  s.add("C", dualize_algebra(a));
  s.add("r", make_tensor(s.field, 3, {0, 1, 2, 2, 0, 1, 1, 2, 0}));
  s.add("B", BilinearForm{Matrix::identity(s.field, 3), Symmetry::Symmetric});
  s.add("D", induced_dendriform({truncated_poly(s.field, 3), make_matrix(s.field, 3, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0}),
                                 s.field.zero()})
                 .dend);
  EXPECT_RB_ERROR(s.add("A", a), ErrorKind::InvalidArgument);
  const std::string text = emit_structure(s);
  const StructureFile back = parse_structure(text);
  EXPECT_EQ(emit_structure(back), text);
  EXPECT_EQ(std::get<Algebra>(back.get("A").value), a);
  EXPECT_EQ(std::get<Coalgebra>(back.get("C").value), dualize_algebra(a));
  EXPECT_EQ(digest(back), digest(s));
}

TEST(Digest, IgnoresCertificatesAndTracksContent) {
  const std::string base = kHeader + "\noperator M dim 1 1\n  1 1 = 2\nend\n";
  const StructureFile s = parse_structure(base);
  EXPECT_EQ(digest(s).size(), 16u);
  StructureFile with_cert = s;
  with_cert.add("M.cert", Certificate{"x", "M", true, 0, digest(s), {}});
  EXPECT_EQ(digest(with_cert), digest(s));
  EXPECT_NE(digest(parse_structure(kHeader + "\noperator M dim 1 1\n  1 1 = 3\nend\n")), digest(s));
}

TEST(Certificate, WitnessesRoundTrip) {
  StructureFile s = parse_structure(kHeader + "\nalgebra N dim 2\n  mul 1 1 2 = 1\n  mul 2 1 1 = 1\nend\n");
  const CheckReport r = check_associativity(std::get<Algebra>(s.get("N").value));
  ASSERT_FALSE(r.passed());
  const Certificate c = make_certificate(s, "associativity", "N", r);
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.failures, r.total_failures());
  EXPECT_EQ(c.digest, digest(s));
  EXPECT_FALSE(c.witnesses.empty());
  s.add("N.cert", c);
  const std::string text = emit_structure(s);
  const StructureFile back = parse_structure(text);
  const Certificate& d = std::get<Certificate>(back.get("N.cert").value);
  EXPECT_EQ(d.check, "associativity");
  EXPECT_EQ(d.failures, c.failures);
  EXPECT_EQ(d.witnesses.size(), c.witnesses.size());
  EXPECT_EQ(emit_structure(back), text);
}

TEST(Certificate, FlattenPrefixesPartPath) {
  CheckReport outer("outer");
  CheckReport inner("inner");
  inner.fail("cond", {0, 1}, "r");
  outer.add(inner);
  const std::vector<Witness> w = flatten_witnesses(outer);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].condition.find("outer/inner: cond"), std::string::npos) << w[0].condition;
}

TEST(Refs, LoadBundles) {
  const StructureFile s = parse_structure_file(std::string(RB_SOURCE_DIR) + "/tests/golden/scalar-operator.rb");
  const auto& b = std::get<Bundle>(s.get("T.bialgebra").value);
  const RBASIBialgebra bi = load_rb_asi_bialgebra(s, b);
  EXPECT_EQ(bi.weight, Field::rationals().parse("-2/7"));
  EXPECT_TRUE(check_rb_asi_bialgebra(bi).passed());
  EXPECT_RB_ERROR(tensor_ref(s, b, "algebra"), ErrorKind::ResolutionError);
}

}  // namespace
}  // namespace rb
