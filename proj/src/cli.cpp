#include "rb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include "rb/bialgebra.hpp"
#include "rb/dendriform.hpp"
#include "rb/error.hpp"
#include "rb/rota_baxter.hpp"
#include "rb/search.hpp"
#include "rb/yang_baxter.hpp"

namespace rb::cli {

namespace {

using Runner = std::function<CheckReport(const StructureFile&, const Object&)>;

struct CheckEntry {
  const char* name;
  std::vector<std::string> kinds;
  Runner run;
};

std::string kind_key(const Object& o) {
  if (const auto* b = std::get_if<Bundle>(&o.value)) return b->kind;
  return std::string(kind_of(o.value));
}

const Bundle& bundle_of(const Object& o) { return std::get<Bundle>(o.value); }

CheckReport as_report(const EquivalenceReport& e) {
  CheckReport r(e.name());
  for (const CheckReport& part : e.reports()) r.add(part);
  return r;
}

Representation rep_with_alpha(const StructureFile& s, const Bundle& b) {
  Representation rep = representation_ref(s, b, "rep");
  if (!rep.alpha) throw Error(ErrorKind::InvalidArgument, "representation '" + *b.get("rep") + "' has no alpha");
  return rep;
}

OOperatorData o_operator(const StructureFile& s, const Bundle& b) {
  return {load_rb_algebra(s, b), rep_with_alpha(s, b), operator_ref(s, b, "T")};
}

FrobeniusData frobenius(const StructureFile& s, const Bundle& b) {
  return {load_rb_algebra(s, b), form_ref(s, b, "form")};
}

RBAlgebra dual_side(const StructureFile& s, const Bundle& b) {
  return {algebra_ref(s, b, "dual-algebra"), operator_ref(s, b, "dual-P"), scalar_entry(s, b, "weight")};
}

MatchedPairData matched_pair(const StructureFile& s, const Bundle& b) {
  return {algebra_ref(s, b, "A"),
          algebra_ref(s, b, "B"),
          representation_ref(s, b, "on-B"),
          representation_ref(s, b, "on-A"),
          optional_operator_ref(s, b, "PA"),
          optional_operator_ref(s, b, "PB"),
          scalar_entry(s, b, "weight")};
}

PiSpec pi_spec(const StructureFile& s, const Bundle& b) {
  const std::string& kind = *b.get("pi");
  Scalar theta = scalar_entry(s, b, "theta");
  if (kind == "scalar-x") return PiSpec::scalar_x(theta);
  if (kind == "neg-x-plus-theta") return PiSpec::neg_x_plus_theta(theta);
  if (kind == "theta-x-inverse") return PiSpec::theta_x_inverse(theta);
  throw Error(ErrorKind::InvalidArgument, "unknown pi '" + kind + "'");
}

RBDendriform rb_dendriform(const StructureFile& s, const Bundle& b) {
  return {dendriform_ref(s, b, "dendriform"), operator_ref(s, b, "P"), scalar_entry(s, b, "weight")};
}

const std::vector<std::string> kRBKinds = {"rb-algebra",  "rb-representation", "admissible-quadruple", "q-admissible",
                                          "frobenius",   "coboundary",        "frobenius-r",          "o-operator",
                                          "lift",        "pi-admissible",     "dual-pair",            "rb-asi-bialgebra"};

const std::vector<CheckEntry>& checks() {
  static const std::vector<CheckEntry> table = {
      {"associativity", {"algebra"},
       [](const StructureFile&, const Object& o) { return check_associativity(std::get<Algebra>(o.value)); }},
      {"coassociativity", {"coalgebra"},
       [](const StructureFile&, const Object& o) { return check_coassociativity(std::get<Coalgebra>(o.value)); }},
      {"bimodule", {"representation"},
       [](const StructureFile& s, const Object& o) {
         const auto& e = std::get<RepresentationEntry>(o.value);
         return check_bimodule(std::get<Algebra>(s.get(e.algebra).value), e.rep);
       }},
      {"dendriform", {"dendriform"},
       [](const StructureFile&, const Object& o) { return check_dendriform(std::get<DendriformAlgebra>(o.value)); }},
      {"rb-algebra", kRBKinds,
       [](const StructureFile& s, const Object& o) { return check_rb_algebra(load_rb_algebra(s, bundle_of(o))); }},
      {"rb-coalgebra", {"rb-coalgebra", "rb-asi-bialgebra"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         const char* key = b.kind == "rb-coalgebra" ? "coalgebra" : "coproduct";
         return check_rb_coalgebra(coalgebra_ref(s, b, key), operator_ref(s, b, "Q"), scalar_entry(s, b, "weight"));
       }},
      {"rb-representation", {"rb-representation", "o-operator", "lift", "pi-admissible"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_rb_representation(load_rb_algebra(s, b), rep_with_alpha(s, b));
       }},
      {"admissible", {"admissible-quadruple", "lift"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_admissible(load_rb_algebra(s, b), representation_ref(s, b, "rep"), operator_ref(s, b, "beta"));
       }},
      {"q-admissible", {"q-admissible", "coboundary", "rb-asi-bialgebra"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_q_admissible(load_rb_algebra(s, b), operator_ref(s, b, "Q"));
       }},
      {"asi-bialgebra", {"asi-bialgebra", "rb-asi-bialgebra"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_asi_bialgebra({algebra_ref(s, b, "algebra"), coalgebra_ref(s, b, "coproduct")});
       }},
      {"rb-asi-bialgebra", {"rb-asi-bialgebra"},
       [](const StructureFile& s, const Object& o) {
         return check_rb_asi_bialgebra(load_rb_asi_bialgebra(s, bundle_of(o)));
       }},
      {"matched-pair", {"matched-pair"},
       [](const StructureFile& s, const Object& o) { return check_matched_pair(matched_pair(s, bundle_of(o))); }},
      {"triple-equivalence", {"dual-pair"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return as_report(check_triple_equivalence(load_rb_algebra(s, b), dual_side(s, b)));
       }},
      {"double-construction", {"dual-pair"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_double_construction(load_rb_algebra(s, b), dual_side(s, b));
       }},
      {"frobenius", {"frobenius", "frobenius-r"},
       [](const StructureFile& s, const Object& o) { return check_frobenius(frobenius(s, bundle_of(o))); }},
      {"coboundary", {"coboundary"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return coboundary_conditions(load_rb_algebra(s, b), operator_ref(s, b, "Q"), tensor_ref(s, b, "r"));
       }},
      {"admissible-aybe", {"coboundary"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return admissible_aybe(load_rb_algebra(s, b), operator_ref(s, b, "Q"), tensor_ref(s, b, "r"));
       }},
      {"operator-form", {"coboundary"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return operator_form_check(load_rb_algebra(s, b), operator_ref(s, b, "Q"), tensor_ref(s, b, "r"));
       }},
      {"connes", {"coboundary"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return as_report(connes_correspondence(load_rb_algebra(s, b), operator_ref(s, b, "Q"), tensor_ref(s, b, "r")));
       }},
      {"frobenius-correspondence", {"frobenius-r"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return as_report(frobenius_rb_correspondence(frobenius(s, b), tensor_ref(s, b, "r")));
       }},
      {"weak-o-operator", {"o-operator", "lift"},
       [](const StructureFile& s, const Object& o) { return check_weak_o_operator(o_operator(s, bundle_of(o))); }},
      {"o-operator", {"o-operator", "lift"},
       [](const StructureFile& s, const Object& o) { return check_o_operator(o_operator(s, bundle_of(o))); }},
      {"semidirect-dual-admissibility", {"lift"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         Representation rep = rep_with_alpha(s, b);
         return as_report(semidirect_dual_admissibility(load_rb_algebra(s, b), rep, operator_ref(s, b, "Q"),
                                                        *rep.alpha, operator_ref(s, b, "beta")));
       }},
      {"pi-admissible", {"pi-admissible"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return pi_admissible_check(pi_spec(s, b), load_rb_algebra(s, b), rep_with_alpha(s, b));
       }},
      {"rb-dendriform", {"rb-dendriform"},
       [](const StructureFile& s, const Object& o) { return check_rb_dendriform(rb_dendriform(s, bundle_of(o))); }},
      {"two-cocycle", {"dendriform-form"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_two_cocycle(form_ref(s, b, "form"), dendriform_ref(s, b, "dendriform"));
       }},
      {"sharp-identity", {"dendriform-form"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_sharp_identity(form_ref(s, b, "form"), dendriform_ref(s, b, "dendriform"));
       }},
      {"manin-triple", {"dendriform-form"},
       [](const StructureFile& s, const Object& o) {
         const Bundle& b = bundle_of(o);
         return check_manin_triple(dendriform_ref(s, b, "dendriform"), form_ref(s, b, "form"));
       }},
  };
  return table;
}

// Builds derived objects under a common prefix and records which checks certify them.
class Builder {
 public:
  explicit Builder(const StructureFile& input) {
    file_.field = input.field;
    for (const Object& o : input.objects)
      if (!std::holds_alternative<Certificate>(o.value)) file_.objects.push_back(o);
  }

  std::string add(const std::string& name, ObjectValue v) {
    file_.add(name, std::move(v));
    return name;
  }

  std::string add_bundle(const std::string& name, const std::string& kind,
                         std::vector<std::pair<std::string, std::string>> entries) {
    return add(name, Bundle{kind, std::move(entries)});
  }

  std::string rb_algebra(const std::string& prefix, const RBAlgebra& a) {
    std::string alg = add(prefix + ".algebra", a.algebra);
    std::string P = add(prefix + ".P", a.P);
    return add_bundle(prefix, "rb-algebra", {{"algebra", alg}, {"P", P}, {"weight", a.weight.to_string()}});
  }

  std::string bialgebra(const std::string& prefix, const RBASIBialgebra& b) {
    std::string alg = add(prefix + ".algebra", b.algebra);
    std::string co = add(prefix + ".coproduct", b.coproduct);
    std::string P = add(prefix + ".P", b.P);
    std::string Q = add(prefix + ".Q", b.Q);
    return add_bundle(prefix, "rb-asi-bialgebra",
                      {{"algebra", alg}, {"coproduct", co}, {"P", P}, {"Q", Q}, {"weight", b.weight.to_string()}});
  }

  void certify(const std::string& object, const std::string& check) { pending_.emplace_back(object, check); }

  Derived finish() {
    Derived out{file_, {}};
    for (const auto& [object, check] : pending_) {
      CheckReport r = run_check(file_, object, check);
      std::string name = object + ".cert." + check;
      out.file.add(name, make_certificate(file_, check, object, r));
      out.certificates.push_back(name);
    }
    return out;
  }

 private:
  StructureFile file_;
  std::vector<std::pair<std::string, std::string>> pending_;
};

struct Construction {
  const char* name;
  std::vector<std::string> kinds;
  std::function<void(Builder&, const StructureFile&, const std::string&, const Bundle&)> run;
};

const std::vector<Construction>& constructions() {
  static const std::vector<Construction> table = {
      {"semidirect", {"rb-representation"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         RBAlgebra r = semidirect_product(load_rb_algebra(s, b), rep_with_alpha(s, b));
         out.certify(out.rb_algebra(name + ".semidirect", r), "rb-algebra");
       }},
      {"matched-product", {"matched-pair"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         MatchedPairData m = matched_pair(s, b);
         CheckReport c = check_matched_pair(m);
         if (!c.passed()) throw Error(ErrorKind::NotAMatchedPair, "matched product: input fails\n" + c.to_string());
         if (m.has_operators()) {
           out.certify(out.rb_algebra(name + ".product", build_matched_product(m)), "rb-algebra");
         } else {
           out.certify(out.add(name + ".product", build_matched_algebra(m)), "associativity");
         }
       }},
      {"double-construction", {"dual-pair"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         FrobeniusData f = build_double_construction(load_rb_algebra(s, b), dual_side(s, b));
         const std::string prefix = name + ".double";
         std::string alg = out.add(prefix + ".algebra", f.base.algebra);
         std::string P = out.add(prefix + ".P", f.base.P);
         std::string form = out.add(prefix + ".form", f.form);
         out.certify(out.add_bundle(prefix, "frobenius",
                                    {{"algebra", alg}, {"P", P}, {"weight", f.base.weight.to_string()}, {"form", form}}),
                     "frobenius");
       }},
      {"dual-bialgebra", {"rb-asi-bialgebra"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         out.certify(out.bialgebra(name + ".dual", dual_bialgebra(load_rb_asi_bialgebra(s, b))), "rb-asi-bialgebra");
       }},
      {"double-bialgebra", {"rb-asi-bialgebra"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         out.certify(out.bialgebra(name + ".double", double_bialgebra(load_rb_asi_bialgebra(s, b))),
                     "rb-asi-bialgebra");
       }},
      {"coboundary-delta", {"coboundary"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         RBASIBialgebra r = coboundary_bialgebra(load_rb_algebra(s, b), operator_ref(s, b, "Q"), tensor_ref(s, b, "r"));
         out.certify(out.bialgebra(name + ".coboundary", r), "rb-asi-bialgebra");
       }},
      {"lift-o-operator", {"lift"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         LiftResult lift = lift_o_operator(o_operator(s, b), operator_ref(s, b, "Q"), operator_ref(s, b, "beta"));
         const std::string prefix = name + ".lift";
         std::string alg = out.add(prefix + ".algebra", lift.algebra.algebra);
         std::string P = out.add(prefix + ".P", lift.algebra.P);
         std::string Q = out.add(prefix + ".Q", lift.Q);
         std::string r = out.add(prefix + ".r", lift.r);
         out.certify(out.add_bundle(prefix, "coboundary",
                                    {{"algebra", alg},
                                     {"P", P},
                                     {"Q", Q},
                                     {"r", r},
                                     {"weight", lift.algebra.weight.to_string()}}),
                     "admissible-aybe");
         if (lift.bialgebra) out.certify(out.bialgebra(prefix + ".bialgebra", *lift.bialgebra), "rb-asi-bialgebra");
       }},
      {"cons2", {"o-operator"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         out.certify(out.bialgebra(name + ".cons2", cons2_bialgebra(o_operator(s, b))), "rb-asi-bialgebra");
       }},
      {"induced-dendriform", {"rb-algebra"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         RBDendriform d = induced_dendriform(load_rb_algebra(s, b));
         const std::string prefix = name + ".dendriform";
         std::string dend = out.add(prefix + ".dendriform", d.dend);
         std::string P = out.add(prefix + ".P", d.P);
         out.certify(out.add_bundle(prefix, "rb-dendriform",
                                    {{"dendriform", dend}, {"P", P}, {"weight", d.weight.to_string()}}),
                     "rb-dendriform");
       }},
      {"four-bialgebras", {"rb-algebra"},
       [](Builder& out, const StructureFile& s, const std::string& name, const Bundle& b) {
         auto four = four_bialgebras(load_rb_algebra(s, b));
         for (std::size_t i = 0; i < four.size(); ++i)
           out.certify(out.bialgebra(name + ".bialgebra" + std::to_string(i + 1), four[i]), "rb-asi-bialgebra");
       }},
  };
  return table;
}

template <class T>
const T& lookup(const std::vector<T>& table, const std::string& name, const char* what) {
  for (const T& e : table)
    if (name == e.name) return e;
  throw Error(ErrorKind::UnknownCheck, std::string("unknown ") + what + " '" + name + "'");
}

bool accepts(const std::vector<std::string>& kinds, const std::string& kind) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const std::string& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

const Object& base_algebra(const StructureFile& s, const std::optional<std::string>& object) {
  if (object) {
    const Object& o = s.get(*object);
    if (!std::holds_alternative<Algebra>(o.value))
      throw Error(ErrorKind::KindMismatch, "'" + *object + "' is not an algebra");
    return o;
  }
  for (const Object& o : s.objects)
    if (std::holds_alternative<Algebra>(o.value)) return o;
  throw Error(ErrorKind::ResolutionError, "file declares no algebra");
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::InvalidArgument, "bad budget '" + text + "'");
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : checks()) out.emplace_back(c.name);
  return out;
}

std::vector<std::string> construction_names() {
  std::vector<std::string> out;
  for (const auto& c : constructions()) out.emplace_back(c.name);
  return out;
}

CheckReport run_check(const StructureFile& s, const std::string& object, const std::string& check) {
  const CheckEntry& entry = lookup(checks(), check, "check");
  const Object& o = s.get(object);
  const std::string kind = kind_key(o);
  if (!accepts(entry.kinds, kind))
    throw Error(ErrorKind::KindMismatch,
                "check " + check + " needs one of {" + join(entry.kinds) + "}, '" + object + "' is " + kind);
  return entry.run(s, o);
}

bool Derived::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [&](const std::string& n) { return std::get<Certificate>(file.get(n).value).passed; });
}

Derived derive(const std::string& construction, const StructureFile& s, const std::optional<std::string>& object) {
  const Construction& c = lookup(constructions(), construction, "construction");
  const Object* target = nullptr;
  if (object) {
    target = &s.get(*object);
  } else {
    for (const Object& o : s.objects)
      if (std::holds_alternative<Bundle>(o.value) && accepts(c.kinds, bundle_of(o).kind)) {
        target = &o;
        break;
      }
    if (!target)
      throw Error(ErrorKind::ResolutionError,
                  "no bundle of kind {" + join(c.kinds) + "} for " + std::string(c.name));
  }
  const std::string kind = kind_key(*target);
  if (!accepts(c.kinds, kind))
    throw Error(ErrorKind::KindMismatch,
                std::string(c.name) + " needs one of {" + join(c.kinds) + "}, '" + target->name + "' is " + kind);
  Builder out(s);
  c.run(out, s, target->name, bundle_of(*target));
  return out.finish();
}

std::uint64_t resolve_budget(const std::optional<std::string>& flag, const char* env) {
  if (flag) return parse_budget(*flag);
  if (env && *env) return parse_budget(env);
  return kDefaultBudget;
}

StructureFile search(const std::string& space, const StructureFile& s, const std::string& weight,
                     std::uint64_t budget, const std::optional<std::string>& object, unsigned threads) {
  const Object& base = base_algebra(s, object);
  const Algebra& a = std::get<Algebra>(base.value);
  const Scalar w = s.field.parse(weight);
  StructureFile out;
  out.field = s.field;
  out.add(base.name, a);
  std::size_t count = 0;
  if (space == "rb-operators") {
    for (Matrix& P : search_rb_operators(a, w, budget, threads))
      out.add(base.name + ".P" + std::to_string(++count), std::move(P));
  } else if (space == "antisym-aybe") {
    for (RElement& r : search_antisym_aybe(a, budget, threads))
      out.add(base.name + ".r" + std::to_string(++count), std::move(r));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown search space '" + space + "'");
  }
  out.add(base.name + ".search", Bundle{"search-result",
                                        {{"space", space},
                                         {"base", base.name},
                                         {"weight", w.to_string()},
                                         {"count", std::to_string(count)}}});
  return out;
}

std::vector<CertificateStatus> verify_certificates(const StructureFile& s) {
  std::vector<CertificateStatus> out;
  const std::string d = digest(s);
  for (const Object& o : s.objects) {
    const auto* c = std::get_if<Certificate>(&o.value);
    if (!c) continue;
    CheckReport r = run_check(s, c->object, c->check);
    bool same = r.passed() == c->passed && r.total_failures() == c->failures && flatten_witnesses(r) == c->witnesses;
    out.push_back({o.name, c, c->digest == d, same});
  }
  return out;
}

int cmd_check(const std::string& path, const std::string& object, const std::string& check, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    StructureFile s = parse_structure_file(path);
    CheckReport r = run_check(s, object, check);
    StructureFile cert;
    cert.field = s.field;
    cert.add(object + ".cert." + check, make_certificate(s, check, object, r));
    std::string text = emit_structure(cert);
    out << text.substr(text.find("\n\n") + 2);
    return r.passed() ? kPass : kFail;
  });
}

int cmd_derive(const std::string& construction, const std::string& path, const std::optional<std::string>& out_path,
               const std::optional<std::string>& object, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Derived d = derive(construction, parse_structure_file(path), object);
    const std::string text = emit_structure(d.file);
    StructureFile reread = parse_structure(text);
    for (const CertificateStatus& st : verify_certificates(reread))
      if (!st.digest_matches || !st.reproduced)
        throw Error(ErrorKind::Inconsistent, "certificate " + st.name + " does not reproduce from the emitted file");
    if (out_path) {
      write_file(*out_path, text);
    } else {
      out << text;
    }
    for (const std::string& name : d.certificates) {
      const auto& c = std::get<Certificate>(d.file.get(name).value);
      err << name << ": " << (c.passed ? "pass" : "fail") << "\n";
    }
    return d.all_pass() ? kPass : kFail;
  });
}

int cmd_search(const std::string& space, const std::string& path, const std::string& weight,
               const std::optional<std::string>& budget, const std::optional<std::string>& object,
               const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::uint64_t b = resolve_budget(budget, std::getenv("RB_BUDGET"));
    StructureFile result = search(space, parse_structure_file(path), weight, b, object);
    const std::string text = emit_structure(result);
    if (out_path) {
      write_file(*out_path, text);
      const Bundle& summary = std::get<Bundle>(result.objects.back().value);
      out << "count " << *summary.get("count") << "\n";
    } else {
      out << text;
    }
    return kPass;
  });
}

int cmd_report(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    StructureFile s = parse_structure_file(path);
    out << "field " << s.field.name() << "\n";
    out << "digest " << digest(s) << "\n";
    for (const Object& o : s.objects) out << kind_key(o) << " " << o.name << "\n";
    bool ok = true;
    for (const CertificateStatus& st : verify_certificates(s)) {
      const Certificate& c = *st.certificate;
      out << "certificate " << st.name << ": " << c.check << " on " << c.object << " "
          << (c.passed ? "pass" : "fail") << ", " << c.failures << " failures, "
          << (!st.digest_matches ? "digest mismatch" : st.reproduced ? "reproduced" : "not reproduced") << "\n";
      ok = ok && c.passed && st.digest_matches && st.reproduced;
    }
    return ok ? kPass : kFail;
  });
}

}  // namespace rb::cli
