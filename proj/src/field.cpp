#include "rb/field.hpp"

#include <charconv>
#include <ostream>

#include "rb/error.hpp"

namespace rb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotABimodule: return "NotABimodule";
    case ErrorKind::NotARBRepresentation: return "NotARBRepresentation";
    case ErrorKind::NotAMatchedPair: return "NotAMatchedPair";
    case ErrorKind::NotABialgebra: return "NotABialgebra";
    case ErrorKind::NotQAdmissible: return "NotQAdmissible";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotWeightZero: return "NotWeightZero";
    case ErrorKind::NotDendriform: return "NotDendriform";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::LiftPreconditionFailed: return "LiftPreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ResolutionError: return "ResolutionError";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!rb::is_prime(p)) throw Error(ErrorKind::ParseError, "field characteristic " + std::to_string(p) + " is not prime");
  // Residue products are formed in 64 bits.
  if (p > (1u << 31)) throw Error(ErrorKind::ParseError, "prime too large");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(m), p_});
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  auto bad = [&](const char* why) {
    return Error(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "' in " + name() + ": " + why);
  };
  if (p_ != 0) {
    if (!all_digits(text)) throw bad("expected a canonical representative 0..p-1");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v >= p_) throw bad("not in 0..p-1");
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(v), p_});
  }
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw bad("expected a/b or a");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw bad("zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return Scalar(std::move(q));
}

std::vector<Scalar> Field::elements() const {
  if (p_ == 0) throw Error(ErrorKind::InvalidArgument, "the rationals cannot be enumerated");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t v = 0; v < p_; ++v) out.push_back(Scalar(Scalar::Residue{v, p_}));
  return out;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Field Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw Error(ErrorKind::FieldMismatch, "scalars from " + field().name() + " and " + o.field().name());
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t(r->value) + r->p - std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t(r->value) * std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::SingularMatrix, "division by zero");
  if (auto* r = std::get_if<Residue>(&value_)) {
    // Fermat: a^(p-2).
    std::uint64_t base = r->value, acc = 1, e = r->p - 2;
    while (e) {
      if (e & 1) acc = acc * base % r->p;
      base = base * base % r->p;
      e >>= 1;
    }
    return Scalar(Residue{static_cast<std::uint32_t>(acc), r->p});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (auto* r = std::get_if<Scalar::Residue>(&a.value_)) return r->value == std::get<Scalar::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::uint32_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorKind::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field scalar");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace rb
