// Truncated formal power series in the vertex weight g, coefficients in Q[z].
//
// Every series carries its truncation order: coefficients of g^0..g^order are
// known, everything above is unknown (not zero). Binary operations silently
// truncate to the smaller order of the two operands; reading past the order
// throws. A plain d/dg loses one order, the Euler forms g d/dg and z d/dz
// keep it.
#pragma once

#include <string>
#include <vector>

#include "hardmap/zpoly.hpp"

namespace hardmap {

class GSeries {
 public:
  explicit GSeries(int order);  // zero series
  static GSeries constant(const ZPoly& value, int order);
  static GSeries monomial(const ZPoly& coeff, int g_power, int order);

  int order() const { return order_; }
  const ZPoly& coeff(int n) const;  // throws outside 0..order
  void set_coeff(int n, ZPoly value);

  GSeries truncated(int new_order) const;  // new_order <= order

  GSeries operator-() const;
  friend GSeries operator+(const GSeries& a, const GSeries& b);
  friend GSeries operator-(const GSeries& a, const GSeries& b);
  friend GSeries operator*(const GSeries& a, const GSeries& b);
  friend bool operator==(const GSeries& a, const GSeries& b);
  GSeries& operator+=(const GSeries& o) { return *this = *this + o; }
  GSeries& operator-=(const GSeries& o) { return *this = *this - o; }
  GSeries& operator*=(const GSeries& o) { return *this = *this * o; }

  GSeries scaled(const ZPoly& s) const;  // order kept

  // Multiplicative inverse; requires the g^0 coefficient to be a nonzero
  // constant (z-degree 0).
  GSeries inverse() const;

  // Formal log; requires the g^0 coefficient to be exactly 1.
  GSeries log() const;

  GSeries deriv_g() const;  // order drops by one (floor 0)
  GSeries deriv_z() const;
  GSeries euler_g() const;  // g d/dg
  GSeries euler_z() const;  // z d/dz

  bool is_zero() const;
  bool integer_coeffs() const;

  // One line per nonzero coefficient: "g^4: 3 + 9 z + 3 z^2".
  std::string to_string() const;

 private:
  int order_;
  std::vector<ZPoly> a_;  // a_[n] = coefficient of g^n, size order_+1
};

}  // namespace hardmap
