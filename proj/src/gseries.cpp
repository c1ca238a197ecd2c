#include "hardmap/gseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hardmap {

GSeries::GSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  a_.assign(order_ + 1, ZPoly());
}

GSeries GSeries::constant(const ZPoly& value, int order) {
  GSeries s(order);
  s.a_[0] = value;
  return s;
}

GSeries GSeries::monomial(const ZPoly& coeff, int g_power, int order) {
  if (g_power < 0) throw std::invalid_argument("negative g power");
  GSeries s(order);
  if (g_power <= order) s.a_[g_power] = coeff;
  // A monomial above the order is representable as zero; the information it
  // carries lies beyond the truncation anyway.
  return s;
}

const ZPoly& GSeries::coeff(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("series coefficient index " + std::to_string(n) +
                            " outside known order " + std::to_string(order_));
  return a_[n];
}

void GSeries::set_coeff(int n, ZPoly value) {
  if (n < 0 || n > order_) throw std::out_of_range("series coefficient index out of range");
  a_[n] = std::move(value);
}

GSeries GSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  GSeries s(new_order);
  for (int n = 0; n <= new_order; ++n) s.a_[n] = a_[n];
  return s;
}

GSeries GSeries::operator-() const {
  GSeries s = *this;
  for (auto& p : s.a_) p = -p;
  return s;
}

GSeries operator+(const GSeries& a, const GSeries& b) {
  int ord = std::min(a.order_, b.order_);
  GSeries s(ord);
  for (int n = 0; n <= ord; ++n) s.a_[n] = a.a_[n] + b.a_[n];
  return s;
}

GSeries operator-(const GSeries& a, const GSeries& b) {
  int ord = std::min(a.order_, b.order_);
  GSeries s(ord);
  for (int n = 0; n <= ord; ++n) s.a_[n] = a.a_[n] - b.a_[n];
  return s;
}

GSeries operator*(const GSeries& a, const GSeries& b) {
  int ord = std::min(a.order_, b.order_);
  GSeries s(ord);
  for (int i = 0; i <= ord; ++i) {
    if (a.a_[i].is_zero()) continue;
    for (int j = 0; i + j <= ord; ++j) {
      if (b.a_[j].is_zero()) continue;
      s.a_[i + j] += a.a_[i] * b.a_[j];
    }
  }
  return s;
}

bool operator==(const GSeries& a, const GSeries& b) {
  return a.order_ == b.order_ && a.a_ == b.a_;
}

GSeries GSeries::scaled(const ZPoly& s) const {
  GSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.a_[n] = a_[n] * s;
  return r;
}

GSeries GSeries::inverse() const {
  if (a_[0].degree() > 0 || a_[0].is_zero())
    throw std::domain_error("series inverse needs a nonzero constant leading coefficient");
  mpq_class head = a_[0].coeff(0);
  GSeries inv(order_);
  inv.a_[0] = ZPoly(mpq_class(1) / head);
  for (int n = 1; n <= order_; ++n) {
    ZPoly acc;
    for (int k = 1; k <= n; ++k) acc += a_[k] * inv.a_[n - k];
    acc.scale(mpq_class(-1) / head);
    inv.a_[n] = acc;
  }
  return inv;
}

GSeries GSeries::log() const {
  if (!(a_[0] == ZPoly(1)))
    throw std::domain_error("series log needs leading coefficient 1");
  // log(a) = integral of a'/a; the integration constant is log 1 = 0.
  GSeries res(order_);
  if (order_ == 0) return res;
  GSeries ratio = deriv_g() * inverse().truncated(order_ - 1);
  for (int n = 1; n <= order_; ++n) {
    ZPoly c = ratio.a_[n - 1];
    c.scale(mpq_class(1, n));
    res.a_[n] = c;
  }
  return res;
}

GSeries GSeries::deriv_g() const {
  int ord = std::max(order_ - 1, 0);
  GSeries s(ord);
  if (order_ == 0) return s;
  for (int n = 1; n <= order_; ++n) {
    ZPoly c = a_[n];
    c.scale(n);
    s.a_[n - 1] = c;
  }
  return s;
}

GSeries GSeries::deriv_z() const {
  GSeries s(order_);
  for (int n = 0; n <= order_; ++n) s.a_[n] = a_[n].deriv();
  return s;
}

GSeries GSeries::euler_g() const {
  GSeries s(order_);
  for (int n = 0; n <= order_; ++n) {
    ZPoly c = a_[n];
    c.scale(n);
    s.a_[n] = c;
  }
  return s;
}

GSeries GSeries::euler_z() const {
  GSeries s(order_);
  for (int n = 0; n <= order_; ++n) s.a_[n] = a_[n].euler();
  return s;
}

bool GSeries::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

bool GSeries::integer_coeffs() const {
  for (const auto& p : a_)
    if (!p.integer_coeffs()) return false;
  return true;
}

std::string GSeries::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (int n = 0; n <= order_; ++n) {
    if (a_[n].is_zero()) continue;
    out << "g^" << n << ": " << a_[n].to_string() << "\n";
    any = true;
  }
  if (!any) out << "0 (through order " << order_ << ")\n";
  return out.str();
}

}  // namespace hardmap
