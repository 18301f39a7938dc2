#include "heaps/field.hpp"

#include <cassert>
#include <cctype>

#include "heaps/errors.hpp"

namespace heaps {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (p >= (1ull << 31))
    throw InputError("GF modulus too large (must be below 2^31)");
  if (!is_prime(p))
    throw InputError("GF modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "q") return rationals();
  if (lower.rfind("gf:", 0) == 0) {
    const std::string digits = lower.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field '" + std::string(text) + "': expected q or gf:p");
    return gf(std::stoull(digits));
  }
  throw InputError("bad field '" + std::string(text) + "': expected q or gf:p");
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldScalar FieldScalar::from_int(Field f, long value) {
  FieldScalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    s.q_ = mpq_class(value);
  } else {
    long m = static_cast<long>(f.modulus());
    long r = value % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

FieldScalar FieldScalar::from_rational(mpq_class value) {
  FieldScalar s;
  s.field_ = Field::rationals();
  value.canonicalize();
  s.q_ = std::move(value);
  return s;
}

bool FieldScalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

void FieldScalar::check_same_field(const FieldScalar& other) const {
  assert(field_ == other.field_ && "mixed-field arithmetic");
  (void)other;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s = *this;
  if (field_.is_rationals())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.modulus() - r_;
  return s;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& other) {
  check_same_field(other);
  if (field_.is_rationals())
    q_ += other.q_;
  else
    r_ = (r_ + other.r_) % field_.modulus();
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& other) {
  check_same_field(other);
  if (field_.is_rationals())
    q_ -= other.q_;
  else
    r_ = (r_ + field_.modulus() - other.r_) % field_.modulus();
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& other) {
  check_same_field(other);
  if (field_.is_rationals())
    q_ *= other.q_;
  else
    r_ = (r_ * other.r_) % field_.modulus();  // modulus < 2^31, no overflow
  return *this;
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = (result * base) % m;
    base = (base * base) % m;
    exp >>= 1;
  }
  return result;
}

}  // namespace

FieldScalar& FieldScalar::operator/=(const FieldScalar& other) {
  check_same_field(other);
  if (other.is_zero()) throw std::domain_error("FieldScalar: division by zero");
  if (field_.is_rationals()) {
    q_ /= other.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ = (r_ * mod_pow(other.r_, p - 2, p)) % p;
  }
  return *this;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldScalar::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

}  // namespace heaps
