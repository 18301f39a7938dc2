#include "heaps/laurent.hpp"

#include <sstream>

namespace heaps {

void LaurentPoly::set(int exponent, mpz_class coefficient) {
  if (coefficient == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(coefficient);
}

LaurentPoly LaurentPoly::from_int(long value) {
  LaurentPoly p;
  p.set(0, mpz_class(value));
  return p;
}

LaurentPoly LaurentPoly::monomial(mpz_class coefficient, int exponent) {
  LaurentPoly p;
  p.set(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::delta_power(unsigned power) {
  LaurentPoly p;
  for (unsigned k = 0; k <= power; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), power, k);
    p.set(static_cast<int>(power) - 2 * static_cast<int>(k), std::move(binom));
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      auto it = p.coeffs_.find(ea + eb);
      if (it == p.coeffs_.end())
        p.coeffs_.emplace(ea + eb, ca * cb);
      else
        it->second += ca * cb;
    }
  for (auto it = p.coeffs_.begin(); it != p.coeffs_.end();)
    it = it->second == 0 ? p.coeffs_.erase(it) : std::next(it);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [exponent, coefficient] = *it;
    mpz_class magnitude = abs(coefficient);
    if (first) {
      if (coefficient < 0) out << '-';
      first = false;
    } else {
      out << (coefficient < 0 ? " - " : " + ");
    }
    if (exponent == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << 'v';
      if (exponent != 1) out << '^' << exponent;
    }
  }
  return out.str();
}

}  // namespace heaps
