#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace heaps {

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored, so equality is map equality.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly from_int(long value);
  /// c * v^exponent.
  static LaurentPoly monomial(mpz_class coefficient, int exponent);
  /// (v + v^-1)^power, expanded.
  static LaurentPoly delta_power(unsigned power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return coeffs_.size(); }
  const std::map<int, mpz_class>& coefficients() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Descending powers: "v^2 + 2 + v^-2"; "0" when zero.
  std::string to_string() const;

private:
  void set(int exponent, mpz_class coefficient);
  std::map<int, mpz_class> coeffs_;
};

}  // namespace heaps
