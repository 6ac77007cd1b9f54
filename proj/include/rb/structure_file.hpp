#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rb/algebra.hpp"
#include "rb/bialgebra.hpp"
#include "rb/dendriform.hpp"
#include "rb/rota_baxter.hpp"
#include "rb/yang_baxter.hpp"

namespace rb {

/// A representation block: the algebra it acts over and an optional alpha reference.
struct RepresentationEntry {
  std::string algebra;
  Representation rep;
  std::optional<std::string> alpha;
};

/// Named references and scalars grouped under a kind, e.g. rb-algebra = {algebra, P, weight}.
struct Bundle {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* get(const std::string& key) const;
};

struct Certificate {
  std::string check;
  std::string object;
  bool passed = false;
  std::size_t failures = 0;
  std::string digest;
  std::vector<Witness> witnesses;
};

using ObjectValue = std::variant<Algebra, Coalgebra, Matrix, Tensor2, BilinearForm, RepresentationEntry,
                                 DendriformAlgebra, Bundle, Certificate>;

struct Object {
  std::string name;
  ObjectValue value;
};

/// Kind keyword of an object: algebra, coalgebra, operator, tensor2, form,
/// representation, dendriform, bundle or certificate.
std::string_view kind_of(const ObjectValue& v);

struct StructureFile {
  Field field = Field::rationals();
  std::vector<Object> objects;

  const Object* find(const std::string& name) const;
  const Object& get(const std::string& name) const;
  /// Appends; throws InvalidArgument on a duplicate name.
  void add(std::string name, ObjectValue value);
};

/// Throws ParseError with line and column, ResolutionError for dangling names.
StructureFile parse_structure(const std::string& text);
StructureFile parse_structure_file(const std::string& path);
/// Canonical text: objects in order, entries sorted, zero entries omitted.
std::string emit_structure(const StructureFile& s);
void emit_structure_file(const StructureFile& s, const std::string& path);
/// FNV-1a 64 of the canonical text without certificate blocks, as 16 hex digits.
std::string digest(const StructureFile& s);

/// Typed views of bundle entries. Throw ResolutionError for missing or mistyped entries.
const Algebra& algebra_ref(const StructureFile& s, const Bundle& b, const std::string& key);
const Coalgebra& coalgebra_ref(const StructureFile& s, const Bundle& b, const std::string& key);
const Matrix& operator_ref(const StructureFile& s, const Bundle& b, const std::string& key);
std::optional<Matrix> optional_operator_ref(const StructureFile& s, const Bundle& b, const std::string& key);
const Tensor2& tensor_ref(const StructureFile& s, const Bundle& b, const std::string& key);
const BilinearForm& form_ref(const StructureFile& s, const Bundle& b, const std::string& key);
/// Representation with alpha resolved.
Representation representation_ref(const StructureFile& s, const Bundle& b, const std::string& key);
const DendriformAlgebra& dendriform_ref(const StructureFile& s, const Bundle& b, const std::string& key);
Scalar scalar_entry(const StructureFile& s, const Bundle& b, const std::string& key);

RBAlgebra load_rb_algebra(const StructureFile& s, const Bundle& b);
RBASIBialgebra load_rb_asi_bialgebra(const StructureFile& s, const Bundle& b);

/// Certificate for a report against the digest of s.
Certificate make_certificate(const StructureFile& s, const std::string& check, const std::string& object,
                             const CheckReport& report);
/// Witnesses of a report tree, depth first, capped at CheckReport::kMaxWitnesses,
/// with the part path prefixed to each condition.
std::vector<Witness> flatten_witnesses(const CheckReport& report);

}  // namespace rb
