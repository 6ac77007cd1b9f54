#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rb {

class Scalar;

/// The ground field K: either the rationals or a prime field F_p.
///
/// Fields are cheap value types; two fields compare equal iff they have the
/// same characteristic.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws Error(ParseError) when p is not prime.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Rationals: "a/b" or "a" with optional leading minus. Prime fields:
  /// canonical representatives "0".."p-1".
  Scalar parse(std::string_view text) const;
  /// All elements in canonical order 0, 1, ..., p-1. Prime fields only.
  std::vector<Scalar> elements() const;

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;

  friend class Scalar;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Arithmetic between elements of different
/// fields throws Error(FieldMismatch).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Error(SingularMatrix) on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  /// Residue in [0, p). Prime fields only.
  std::uint32_t residue() const;
  const mpq_class& rational() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  std::variant<Residue, mpq_class> value_;

  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace rb
