#include "rb/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rb/error.hpp"

namespace rb {

namespace {

enum class Slot { Algebra, Coalgebra, Operator, Tensor, Form, Representation, Dendriform, Scalar, Word };

struct Key {
  const char* name;
  Slot slot;
  bool optional = false;
};

struct Schema {
  const char* kind;
  std::vector<Key> keys;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = {
      {"rb-algebra", {{"algebra", Slot::Algebra}, {"P", Slot::Operator}, {"weight", Slot::Scalar}}},
      {"rb-coalgebra", {{"coalgebra", Slot::Coalgebra}, {"Q", Slot::Operator}, {"weight", Slot::Scalar}}},
      {"rb-representation",
       {{"algebra", Slot::Algebra}, {"P", Slot::Operator}, {"weight", Slot::Scalar}, {"rep", Slot::Representation}}},
      {"admissible-quadruple",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"weight", Slot::Scalar},
        {"rep", Slot::Representation},
        {"beta", Slot::Operator}}},
      {"q-admissible", {{"algebra", Slot::Algebra}, {"P", Slot::Operator}, {"Q", Slot::Operator}, {"weight", Slot::Scalar}}},
      {"asi-bialgebra", {{"algebra", Slot::Algebra}, {"coproduct", Slot::Coalgebra}}},
      {"rb-asi-bialgebra",
       {{"algebra", Slot::Algebra},
        {"coproduct", Slot::Coalgebra},
        {"P", Slot::Operator},
        {"Q", Slot::Operator},
        {"weight", Slot::Scalar}}},
      {"matched-pair",
       {{"A", Slot::Algebra},
        {"B", Slot::Algebra},
        {"on-B", Slot::Representation},
        {"on-A", Slot::Representation},
        {"PA", Slot::Operator, true},
        {"PB", Slot::Operator, true},
        {"weight", Slot::Scalar}}},
      {"dual-pair",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"dual-algebra", Slot::Algebra},
        {"dual-P", Slot::Operator},
        {"weight", Slot::Scalar}}},
      {"frobenius", {{"algebra", Slot::Algebra}, {"P", Slot::Operator}, {"weight", Slot::Scalar}, {"form", Slot::Form}}},
      {"coboundary",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"Q", Slot::Operator},
        {"r", Slot::Tensor},
        {"weight", Slot::Scalar}}},
      {"frobenius-r",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"weight", Slot::Scalar},
        {"form", Slot::Form},
        {"r", Slot::Tensor}}},
      {"o-operator",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"weight", Slot::Scalar},
        {"rep", Slot::Representation},
        {"T", Slot::Operator}}},
      {"lift",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"weight", Slot::Scalar},
        {"rep", Slot::Representation},
        {"T", Slot::Operator},
        {"Q", Slot::Operator},
        {"beta", Slot::Operator}}},
      {"pi-admissible",
       {{"algebra", Slot::Algebra},
        {"P", Slot::Operator},
        {"weight", Slot::Scalar},
        {"rep", Slot::Representation},
        {"pi", Slot::Word},
        {"theta", Slot::Scalar}}},
      {"rb-dendriform", {{"dendriform", Slot::Dendriform}, {"P", Slot::Operator}, {"weight", Slot::Scalar}}},
      {"dendriform-form", {{"dendriform", Slot::Dendriform}, {"form", Slot::Form}}},
      {"search-result", {{"space", Slot::Word}, {"base", Slot::Algebra}, {"weight", Slot::Scalar, true}, {"count", Slot::Word}}},
  };
  return table;
}

const Schema* find_schema(const std::string& kind) {
  for (const auto& s : schemas())
    if (kind == s.kind) return &s;
  return nullptr;
}

std::string_view slot_kind(Slot s) {
  switch (s) {
    case Slot::Algebra: return "algebra";
    case Slot::Coalgebra: return "coalgebra";
    case Slot::Operator: return "operator";
    case Slot::Tensor: return "tensor2";
    case Slot::Form: return "form";
    case Slot::Representation: return "representation";
    case Slot::Dendriform: return "dendriform";
    case Slot::Scalar: return "scalar";
    case Slot::Word: return "word";
  }
  return "";
}

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string raw;
  std::vector<Token> tokens;
};

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, raw, {}};
    std::size_t limit = raw.size();
    bool witness = false;
    std::size_t i = 0;
    while (i < limit) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#' && !witness) break;
      std::size_t start = i;
      while (i < limit && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
      if (line.tokens.size() == 1 && line.tokens[0].text == "witness") witness = true;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_index(const Token& t, std::size_t line, std::size_t bound) {
  std::size_t v = 0;
  if (t.text.empty() || t.text.size() > 9) parse_error(line, t.column, "bad index '" + t.text + "'");
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_error(line, t.column, "bad index '" + t.text + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v < 1 || v > bound)
    parse_error(line, t.column, "index " + t.text + " out of range 1.." + std::to_string(bound));
  return v - 1;
}

std::size_t parse_dim(const Token& t, std::size_t line) {
  std::size_t v = parse_index(t, line, 1000000);
  return v + 1;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  if (t.text == "0") return 0;
  return parse_dim(t, line);
}

Scalar parse_scalar(const Field& f, const Token& t, std::size_t line) {
  try {
    return f.parse(t.text);
  } catch (const Error& e) {
    parse_error(line, t.column, e.what());
  }
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

void expect_tokens(const Line& l, std::size_t n, const std::string& shape) {
  if (l.tokens.size() != n) parse_error(l.number, l.tokens.front().column, "expected '" + shape + "'");
}

// Entry "i j ... = v" beginning at token offset; returns indices and the scalar.
std::pair<std::vector<std::size_t>, Scalar> parse_entry(const Field& f, const Line& l, std::size_t offset,
                                                        const std::vector<std::size_t>& bounds,
                                                        const std::string& shape) {
  if (l.tokens.size() != offset + bounds.size() + 2 || l.tokens[offset + bounds.size()].text != "=")
    parse_error(l.number, l.tokens.front().column, "expected '" + shape + "'");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(parse_index(l.tokens[offset + k], l.number, bounds[k]));
  return {idx, parse_scalar(f, l.tokens.back(), l.number)};
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  StructureFile run() {
    if (lines_.empty()) parse_error(1, 1, "empty file");
    const Line& fmt = lines_[0];
    if (fmt.tokens.size() != 2 || fmt.tokens[0].text != "format" || fmt.tokens[1].text != "1")
      parse_error(fmt.number, 1, "expected 'format 1'");
    if (lines_.size() < 2) parse_error(fmt.number + 1, 1, "expected field declaration");
    parse_field(lines_[1]);
    pos_ = 2;
    while (pos_ < lines_.size()) parse_block();
    return std::move(file_);
  }

 private:
  void parse_field(const Line& l) {
    if (l.tokens[0].text != "field") parse_error(l.number, 1, "expected 'field Q' or 'field p <prime>'");
    if (l.tokens.size() == 2 && l.tokens[1].text == "Q") {
      file_.field = Field::rationals();
      return;
    }
    if (l.tokens.size() == 3 && l.tokens[1].text == "p") {
      const Token& t = l.tokens[2];
      std::size_t p = parse_dim(t, l.number);
      try {
        file_.field = Field::prime(static_cast<std::uint32_t>(p));
      } catch (const Error& e) {
        parse_error(l.number, t.column, e.what());
      }
      return;
    }
    parse_error(l.number, 1, "expected 'field Q' or 'field p <prime>'");
  }

  const Line& next() {
    if (pos_ >= lines_.size()) parse_error(lines_.back().number + 1, 1, "unexpected end of file, missing 'end'");
    return lines_[pos_++];
  }

  std::string block_name(const Line& l) {
    if (l.tokens.size() < 2 || !valid_name(l.tokens[1].text))
      parse_error(l.number, l.tokens.size() < 2 ? 1 : l.tokens[1].column, "expected an object name");
    const std::string& name = l.tokens[1].text;
    if (file_.find(name)) parse_error(l.number, l.tokens[1].column, "duplicate name '" + name + "'");
    return name;
  }

  // Consumes body lines until 'end', calling f on each.
  template <class F>
  void body(F&& f) {
    for (;;) {
      const Line& l = next();
      if (l.tokens[0].text == "end") {
        if (l.tokens.size() != 1) parse_error(l.number, l.tokens[1].column, "unexpected text after 'end'");
        return;
      }
      f(l);
    }
  }

  void no_duplicate(std::set<std::vector<std::size_t>>& seen, const std::vector<std::size_t>& idx, const Line& l) {
    if (!seen.insert(idx).second) parse_error(l.number, l.tokens.front().column, "duplicate entry");
  }

  void parse_block() {
    const Line& head = next();
    const std::string& kw = head.tokens[0].text;
    const Field& f = file_.field;
    if (kw == "algebra" || kw == "coalgebra") {
      std::string name = block_name(head);
      if (head.tokens.size() != 4 || head.tokens[2].text != "dim")
        parse_error(head.number, 1, "expected '" + kw + " NAME dim n'");
      std::size_t n = parse_dim(head.tokens[3], head.number);
      Tensor3 t(f, n);
      const std::string entry = kw == "algebra" ? "mul" : "co";
      std::set<std::vector<std::size_t>> seen;
      body([&](const Line& l) {
        if (l.tokens[0].text != entry) parse_error(l.number, 1, "unknown key '" + l.tokens[0].text + "'");
        auto [idx, v] = parse_entry(f, l, 1, {n, n, n}, entry + " i j k = v");
        no_duplicate(seen, idx, l);
        t(idx[0], idx[1], idx[2]) = v;
      });
      if (kw == "algebra") {
        Algebra a(f, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.c(i, j, k) = t(i, j, k);
        file_.add(name, std::move(a));
      } else {
        Coalgebra c(f, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c.d(i, j, k) = t(i, j, k);
        file_.add(name, std::move(c));
      }
    } else if (kw == "operator") {
      std::string name = block_name(head);
      if (head.tokens.size() != 5 || head.tokens[2].text != "dim")
        parse_error(head.number, 1, "expected 'operator NAME dim rows cols'");
      std::size_t r = parse_dim(head.tokens[3], head.number), c = parse_dim(head.tokens[4], head.number);
      Matrix m(f, r, c);
      std::set<std::vector<std::size_t>> seen;
      body([&](const Line& l) {
        auto [idx, v] = parse_entry(f, l, 0, {r, c}, "i j = v");
        no_duplicate(seen, idx, l);
        m(idx[0], idx[1]) = v;
      });
      file_.add(name, std::move(m));
    } else if (kw == "tensor2") {
      std::string name = block_name(head);
      if (head.tokens.size() != 4 || head.tokens[2].text != "dim")
        parse_error(head.number, 1, "expected 'tensor2 NAME dim n'");
      std::size_t n = parse_dim(head.tokens[3], head.number);
      Tensor2 t(f, n);
      std::set<std::vector<std::size_t>> seen;
      body([&](const Line& l) {
        auto [idx, v] = parse_entry(f, l, 0, {n, n}, "i j = v");
        no_duplicate(seen, idx, l);
        t(idx[0], idx[1]) = v;
      });
      file_.add(name, std::move(t));
    } else if (kw == "form") {
      std::string name = block_name(head);
      if (head.tokens.size() != 5 || head.tokens[2].text != "dim")
        parse_error(head.number, 1, "expected 'form NAME dim n symmetric|antisymmetric|none'");
      std::size_t n = parse_dim(head.tokens[3], head.number);
      const std::string& sym = head.tokens[4].text;
      Symmetry s = sym == "symmetric" ? Symmetry::Symmetric
                   : sym == "antisymmetric" ? Symmetry::Antisymmetric
                   : sym == "none" ? Symmetry::None
                                   : (parse_error(head.number, head.tokens[4].column, "unknown symmetry '" + sym + "'"),
                                      Symmetry::None);
      Matrix g(f, n, n);
      std::set<std::vector<std::size_t>> seen;
      body([&](const Line& l) {
        auto [idx, v] = parse_entry(f, l, 0, {n, n}, "i j = v");
        no_duplicate(seen, idx, l);
        g(idx[0], idx[1]) = v;
      });
      file_.add(name, BilinearForm{std::move(g), s});
    } else if (kw == "representation") {
      std::string name = block_name(head);
      if (head.tokens.size() != 6 || head.tokens[2].text != "algebra" || head.tokens[4].text != "dim")
        parse_error(head.number, 1, "expected 'representation NAME algebra A dim m'");
      const Token& alg = head.tokens[3];
      const Object* a = file_.find(alg.text);
      if (!a) throw Error(ErrorKind::ResolutionError, "line " + std::to_string(head.number) + ": unknown algebra '" + alg.text + "'");
      if (!std::holds_alternative<Algebra>(a->value))
        throw Error(ErrorKind::ResolutionError, "line " + std::to_string(head.number) + ": '" + alg.text + "' is not an algebra");
      std::size_t n = std::get<Algebra>(a->value).dim();
      std::size_t m = parse_dim(head.tokens[5], head.number);
      RepresentationEntry e{alg.text, Representation::zero(f, n, m), std::nullopt};
      std::set<std::vector<std::size_t>> seen;
      std::size_t alpha_line = 0;
      body([&](const Line& l) {
        const std::string& k = l.tokens[0].text;
        if (k == "alpha") {
          expect_tokens(l, 2, "alpha NAME");
          if (e.alpha) parse_error(l.number, 1, "duplicate alpha");
          e.alpha = l.tokens[1].text;
          alpha_line = l.number;
          return;
        }
        if (k != "left" && k != "right") parse_error(l.number, 1, "unknown key '" + k + "'");
        auto [idx, v] = parse_entry(f, l, 1, {n, m, m}, k + " a i j = v");
        std::vector<std::size_t> key = idx;
        key.push_back(k == "left" ? 0 : 1);
        no_duplicate(seen, key, l);
        (k == "left" ? e.rep.ell : e.rep.right)[idx[0]](idx[1], idx[2]) = v;
      });
      if (e.alpha) {
        const Object* o = file_.find(*e.alpha);
        if (!o || !std::holds_alternative<Matrix>(o->value))
          throw Error(ErrorKind::ResolutionError,
                      "line " + std::to_string(alpha_line) + ": unknown operator '" + *e.alpha + "'");
        const Matrix& al = std::get<Matrix>(o->value);
        if (al.rows() != m || al.cols() != m)
          throw Error(ErrorKind::ResolutionError, "line " + std::to_string(alpha_line) + ": alpha has the wrong shape");
        e.rep.alpha = al;
      }
      file_.add(name, std::move(e));
    } else if (kw == "dendriform") {
      std::string name = block_name(head);
      if (head.tokens.size() != 4 || head.tokens[2].text != "dim")
        parse_error(head.number, 1, "expected 'dendriform NAME dim n'");
      std::size_t n = parse_dim(head.tokens[3], head.number);
      DendriformAlgebra d = DendriformAlgebra::zero(f, n);
      std::set<std::vector<std::size_t>> seen;
      body([&](const Line& l) {
        const std::string& k = l.tokens[0].text;
        if (k != "prec" && k != "succ") parse_error(l.number, 1, "unknown key '" + k + "'");
        auto [idx, v] = parse_entry(f, l, 1, {n, n, n}, k + " i j k = v");
        std::vector<std::size_t> key = idx;
        key.push_back(k == "prec" ? 0 : 1);
        no_duplicate(seen, key, l);
        (k == "prec" ? d.prec : d.succ).c(idx[0], idx[1], idx[2]) = v;
      });
      file_.add(name, std::move(d));
    } else if (kw == "bundle") {
      std::string name = block_name(head);
      if (head.tokens.size() != 4 || head.tokens[2].text != "kind")
        parse_error(head.number, 1, "expected 'bundle NAME kind KIND'");
      const Schema* schema = find_schema(head.tokens[3].text);
      if (!schema) parse_error(head.number, head.tokens[3].column, "unknown bundle kind '" + head.tokens[3].text + "'");
      Bundle b{schema->kind, {}};
      std::size_t end_line = head.number;
      body([&](const Line& l) {
        expect_tokens(l, 2, "key value");
        const std::string& k = l.tokens[0].text;
        auto key = std::find_if(schema->keys.begin(), schema->keys.end(), [&](const Key& x) { return k == x.name; });
        if (key == schema->keys.end()) parse_error(l.number, 1, "unknown key '" + k + "' for " + schema->kind);
        if (b.get(k)) parse_error(l.number, 1, "duplicate key '" + k + "'");
        const Token& v = l.tokens[1];
        resolve(*key, v, l.number);
        b.entries.emplace_back(k, v.text);
        end_line = l.number + 1;
      });
      for (const Key& k : schema->keys)
        if (!k.optional && !b.get(k.name))
          parse_error(end_line, 1, std::string("missing key '") + k.name + "' for " + schema->kind);
      file_.add(name, std::move(b));
    } else if (kw == "certificate") {
      std::string name = block_name(head);
      expect_tokens(head, 2, "certificate NAME");
      Certificate c;
      std::set<std::string> seen;
      body([&](const Line& l) {
        const std::string& k = l.tokens[0].text;
        if (k == "witness") {
          parse_witness(l, c);
          return;
        }
        expect_tokens(l, 2, k + " value");
        if (!seen.insert(k).second) parse_error(l.number, 1, "duplicate key '" + k + "'");
        const std::string& v = l.tokens[1].text;
        if (k == "check") c.check = v;
        else if (k == "object") c.object = v;
        else if (k == "verdict") {
          if (v != "pass" && v != "fail") parse_error(l.number, l.tokens[1].column, "verdict must be pass or fail");
          c.passed = v == "pass";
        } else if (k == "failures") c.failures = parse_count(l.tokens[1], l.number);
        else if (k == "digest") c.digest = v;
        else parse_error(l.number, 1, "unknown key '" + k + "'");
      });
      for (const char* k : {"check", "object", "verdict", "failures", "digest"})
        if (!seen.count(k)) parse_error(head.number, 1, std::string("certificate missing '") + k + "'");
      file_.add(name, std::move(c));
    } else {
      parse_error(head.number, 1, "unknown block '" + kw + "'");
    }
  }

  void parse_witness(const Line& l, Certificate& c) {
    // witness i j k ; condition ; residual
    std::string rest = l.raw.substr(l.raw.find("witness") + 7);
    std::size_t a = rest.find(" ; ");
    std::size_t b = a == std::string::npos ? std::string::npos : rest.find(" ; ", a + 3);
    if (b == std::string::npos) parse_error(l.number, 1, "expected 'witness i j ; condition ; residual'");
    Witness w;
    std::istringstream idx(rest.substr(0, a));
    std::string t;
    while (idx >> t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit) || t == "0")
        parse_error(l.number, 1, "bad witness index '" + t + "'");
      w.indices.push_back(std::stoul(t) - 1);
    }
    w.condition = rest.substr(a + 3, b - a - 3);
    w.residual = rest.substr(b + 3);
    c.witnesses.push_back(std::move(w));
  }

  void resolve(const Key& key, const Token& v, std::size_t line) {
    if (key.slot == Slot::Scalar) {
      parse_scalar(file_.field, v, line);
      return;
    }
    if (key.slot == Slot::Word) return;
    const Object* o = file_.find(v.text);
    if (!o) throw Error(ErrorKind::ResolutionError, "line " + std::to_string(line) + ": unknown name '" + v.text + "'");
    if (kind_of(o->value) != slot_kind(key.slot))
      throw Error(ErrorKind::ResolutionError, "line " + std::to_string(line) + ": '" + v.text + "' is a " +
                                                  std::string(kind_of(o->value)) + ", expected " +
                                                  std::string(slot_kind(key.slot)));
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  StructureFile file_;
};

std::string entry(const std::vector<std::size_t>& idx, const Scalar& v) {
  std::string s;
  for (std::size_t i : idx) s += std::to_string(i + 1) + " ";
  return s + "= " + v.to_string();
}

void emit_object(std::string& out, const Object& o) {
  const std::string& name = o.name;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Algebra> || std::is_same_v<T, Coalgebra>) {
          constexpr bool alg = std::is_same_v<T, Algebra>;
          const std::size_t n = v.dim();
          out += std::string(alg ? "algebra " : "coalgebra ") + name + " dim " + std::to_string(n) + "\n";
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < n; ++k) {
                const Scalar* px;
                if constexpr (alg) px = &v.c(i, j, k);
                else px = &v.d(i, j, k);
                const Scalar& x = *px;
                if (!x.is_zero()) out += std::string(alg ? "  mul " : "  co ") + entry({i, j, k}, x) + "\n";
              }
        } else if constexpr (std::is_same_v<T, Matrix>) {
          out += "operator " + name + " dim " + std::to_string(v.rows()) + " " + std::to_string(v.cols()) + "\n";
          for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j)
              if (!v(i, j).is_zero()) out += "  " + entry({i, j}, v(i, j)) + "\n";
        } else if constexpr (std::is_same_v<T, Tensor2>) {
          out += "tensor2 " + name + " dim " + std::to_string(v.dim()) + "\n";
          for (std::size_t i = 0; i < v.dim(); ++i)
            for (std::size_t j = 0; j < v.dim(); ++j)
              if (!v(i, j).is_zero()) out += "  " + entry({i, j}, v(i, j)) + "\n";
        } else if constexpr (std::is_same_v<T, BilinearForm>) {
          out += "form " + name + " dim " + std::to_string(v.dim()) + " " + std::string(to_string(v.symmetry)) + "\n";
          for (std::size_t i = 0; i < v.dim(); ++i)
            for (std::size_t j = 0; j < v.dim(); ++j)
              if (!v.gram(i, j).is_zero()) out += "  " + entry({i, j}, v.gram(i, j)) + "\n";
        } else if constexpr (std::is_same_v<T, RepresentationEntry>) {
          const Representation& r = v.rep;
          out += "representation " + name + " algebra " + v.algebra + " dim " + std::to_string(r.dim) + "\n";
          for (std::size_t a = 0; a < r.algebra_dim; ++a)
            for (std::size_t i = 0; i < r.dim; ++i)
              for (std::size_t j = 0; j < r.dim; ++j)
                if (!r.ell[a](i, j).is_zero()) out += "  left " + entry({a, i, j}, r.ell[a](i, j)) + "\n";
          for (std::size_t a = 0; a < r.algebra_dim; ++a)
            for (std::size_t i = 0; i < r.dim; ++i)
              for (std::size_t j = 0; j < r.dim; ++j)
                if (!r.right[a](i, j).is_zero()) out += "  right " + entry({a, i, j}, r.right[a](i, j)) + "\n";
          if (v.alpha) out += "  alpha " + *v.alpha + "\n";
        } else if constexpr (std::is_same_v<T, DendriformAlgebra>) {
          const std::size_t n = v.dim();
          out += "dendriform " + name + " dim " + std::to_string(n) + "\n";
          for (const auto& [label, alg] : {std::pair<const char*, const Algebra*>{"prec", &v.prec}, {"succ", &v.succ}})
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                  if (!alg->c(i, j, k).is_zero())
                    out += std::string("  ") + label + " " + entry({i, j, k}, alg->c(i, j, k)) + "\n";
        } else if constexpr (std::is_same_v<T, Bundle>) {
          out += "bundle " + name + " kind " + v.kind + "\n";
          const Schema* s = find_schema(v.kind);
          for (const Key& k : s->keys)
            if (const std::string* x = v.get(k.name)) out += std::string("  ") + k.name + " " + *x + "\n";
        } else if constexpr (std::is_same_v<T, Certificate>) {
          out += "certificate " + name + "\n";
          out += "  check " + v.check + "\n";
          out += "  object " + v.object + "\n";
          out += std::string("  verdict ") + (v.passed ? "pass" : "fail") + "\n";
          out += "  failures " + std::to_string(v.failures) + "\n";
          out += "  digest " + v.digest + "\n";
          for (const Witness& w : v.witnesses) {
            out += "  witness";
            for (std::size_t i : w.indices) out += " " + std::to_string(i + 1);
            out += " ; " + w.condition + " ; " + w.residual + "\n";
          }
        }
      },
      o.value);
  out += "end\n";
}

std::string emit(const StructureFile& s, bool certificates) {
  std::string out = "format 1\n";
  out += s.field.is_rational() ? "field Q\n" : "field p " + std::to_string(s.field.characteristic()) + "\n";
  for (const Object& o : s.objects) {
    if (!certificates && std::holds_alternative<Certificate>(o.value)) continue;
    out += "\n";
    emit_object(out, o);
  }
  return out;
}

const Object& ref(const StructureFile& s, const Bundle& b, const std::string& key, std::string_view kind) {
  const std::string* name = b.get(key);
  if (!name) throw Error(ErrorKind::ResolutionError, "bundle has no '" + key + "'");
  const Object* o = s.find(*name);
  if (!o) throw Error(ErrorKind::ResolutionError, "unknown name '" + *name + "'");
  if (kind_of(o->value) != kind)
    throw Error(ErrorKind::ResolutionError, "'" + *name + "' is not a " + std::string(kind));
  return *o;
}

// Keeps a witness on one line and its fields separable.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  for (std::size_t at; (at = s.find(" ; ")) != std::string::npos;) s.erase(at, 1);
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

void collect(const CheckReport& r, const std::string& path, std::vector<Witness>& out) {
  std::string here = path.empty() ? r.name() : path + "/" + r.name();
  for (const Witness& w : r.witnesses()) {
    if (out.size() >= CheckReport::kMaxWitnesses) return;
    out.push_back({one_line(here + ": " + w.condition), w.indices, w.residual.empty() ? "-" : one_line(w.residual)});
  }
  for (const CheckReport& p : r.parts()) collect(p, here, out);
}

}  // namespace

const std::string* Bundle::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::string_view kind_of(const ObjectValue& v) {
  static constexpr std::string_view names[] = {"algebra", "coalgebra",  "operator", "tensor2",    "form",
                                               "representation", "dendriform", "bundle", "certificate"};
  return names[v.index()];
}

const Object* StructureFile::find(const std::string& name) const {
  for (const Object& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

const Object& StructureFile::get(const std::string& name) const {
  const Object* o = find(name);
  if (!o) throw Error(ErrorKind::ResolutionError, "unknown object '" + name + "'");
  return *o;
}

void StructureFile::add(std::string name, ObjectValue value) {
  if (find(name)) throw Error(ErrorKind::InvalidArgument, "duplicate object name '" + name + "'");
  objects.push_back({std::move(name), std::move(value)});
}

StructureFile parse_structure(const std::string& text) { return Parser(text).run(); }

StructureFile parse_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

std::string emit_structure(const StructureFile& s) { return emit(s, true); }

void emit_structure_file(const StructureFile& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << emit_structure(s);
}

std::string digest(const StructureFile& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit(s, false)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const Algebra& algebra_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<Algebra>(ref(s, b, key, "algebra").value);
}

const Coalgebra& coalgebra_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<Coalgebra>(ref(s, b, key, "coalgebra").value);
}

const Matrix& operator_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<Matrix>(ref(s, b, key, "operator").value);
}

std::optional<Matrix> optional_operator_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  if (!b.get(key)) return std::nullopt;
  return operator_ref(s, b, key);
}

const Tensor2& tensor_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<Tensor2>(ref(s, b, key, "tensor2").value);
}

const BilinearForm& form_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<BilinearForm>(ref(s, b, key, "form").value);
}

Representation representation_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<RepresentationEntry>(ref(s, b, key, "representation").value).rep;
}

const DendriformAlgebra& dendriform_ref(const StructureFile& s, const Bundle& b, const std::string& key) {
  return std::get<DendriformAlgebra>(ref(s, b, key, "dendriform").value);
}

Scalar scalar_entry(const StructureFile& s, const Bundle& b, const std::string& key) {
  const std::string* v = b.get(key);
  if (!v) throw Error(ErrorKind::ResolutionError, "bundle has no '" + key + "'");
  return s.field.parse(*v);
}

RBAlgebra load_rb_algebra(const StructureFile& s, const Bundle& b) {
  return {algebra_ref(s, b, "algebra"), operator_ref(s, b, "P"), scalar_entry(s, b, "weight")};
}

RBASIBialgebra load_rb_asi_bialgebra(const StructureFile& s, const Bundle& b) {
  return {algebra_ref(s, b, "algebra"), coalgebra_ref(s, b, "coproduct"), operator_ref(s, b, "P"),
          operator_ref(s, b, "Q"), scalar_entry(s, b, "weight")};
}

std::vector<Witness> flatten_witnesses(const CheckReport& report) {
  std::vector<Witness> out;
  collect(report, "", out);
  return out;
}

Certificate make_certificate(const StructureFile& s, const std::string& check, const std::string& object,
                             const CheckReport& report) {
  return {check, object, report.passed(), report.total_failures(), digest(s), flatten_witnesses(report)};
}

}  // namespace rb
