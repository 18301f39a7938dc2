#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>

namespace heaps {

/// Descriptor of an exact coefficient field: the rationals, or GF(p) for a
/// prime p.  All rank computations are parameterized by a Field.
class Field {
public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is prime.
  static Field gf(std::uint64_t p);
  /// Parses "q" or "gf:p" (case-insensitive).
  static Field parse(std::string_view text);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes the rationals
};

/// Exact scalar in a chosen field.  Rationals are kept in lowest terms with
/// positive denominator; GF(p) values as least nonnegative residues.
class FieldScalar {
public:
  FieldScalar() : field_(Field::rationals()) {}
  static FieldScalar zero(Field f) { return from_int(f, 0); }
  static FieldScalar one(Field f) { return from_int(f, 1); }
  static FieldScalar from_int(Field f, long value);
  static FieldScalar from_rational(mpq_class value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  /// Only valid for rational scalars.
  const mpq_class& rational() const { return q_; }
  /// Only valid for GF(p) scalars.
  std::uint64_t residue() const { return r_; }

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& other);
  FieldScalar& operator-=(const FieldScalar& other);
  FieldScalar& operator*=(const FieldScalar& other);
  /// Throws on division by zero.
  FieldScalar& operator/=(const FieldScalar& other);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

  std::string to_string() const;

private:
  void check_same_field(const FieldScalar& other) const;
  Field field_;
  mpq_class q_;         // rationals
  std::uint64_t r_ = 0; // GF(p)
};

bool is_prime(std::uint64_t n);

}  // namespace heaps
