// Dense polynomials in the particle fugacity z with exact rational coefficients.
#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace hardmap {

// Invariant: the coefficient vector carries no trailing zero, so the zero
// polynomial is the empty vector and degree() is vector size minus one.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const mpq_class& constant);
  ZPoly(long constant) : ZPoly(mpq_class(constant)) {}
  explicit ZPoly(std::vector<mpq_class> coeffs);
  static ZPoly monomial(const mpq_class& coeff, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int j) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
  ZPoly& scale(const mpq_class& s);

  mpq_class eval(const mpq_class& z) const;
  ZPoly deriv() const;  // d/dz
  ZPoly euler() const;  // z d/dz

  // True when every coefficient has denominator 1 (resp. and is >= 0).
  bool integer_coeffs() const;
  bool nonneg_integer_coeffs() const;

  // "0", "1 + z", "12 + 60 z + 66 z^2 + 12 z^3", "-1/2 z^4", ...
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace hardmap
