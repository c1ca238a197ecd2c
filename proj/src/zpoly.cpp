#include "hardmap/zpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "hardmap/numeric.hpp"

namespace hardmap {

ZPoly::ZPoly(const mpq_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

ZPoly::ZPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const mpq_class& coeff, int power) {
  if (power < 0) throw std::invalid_argument("negative z power");
  ZPoly p;
  if (coeff != 0) {
    p.c_.assign(power + 1, mpq_class(0));
    p.c_[power] = coeff;
  }
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class ZPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
  return c_[j];
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

ZPoly& ZPoly::scale(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

mpq_class ZPoly::eval(const mpq_class& z) const {
  mpq_class acc = 0;
  for (size_t j = c_.size(); j-- > 0;) acc = acc * z + c_[j];
  return acc;
}

ZPoly ZPoly::deriv() const {
  ZPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j) r.c_[j - 1] = mpq_class(static_cast<long>(j)) * c_[j];
  r.trim();
  return r;
}

ZPoly ZPoly::euler() const {
  ZPoly r = *this;
  for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] *= static_cast<long>(j);
  r.trim();
  return r;
}

bool ZPoly::integer_coeffs() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

bool ZPoly::nonneg_integer_coeffs() const {
  for (const auto& q : c_)
    if (q.get_den() != 1 || q < 0) return false;
  return true;
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    mpq_class q = c_[j];
    if (first) {
      if (q < 0) out << "-";
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    mpq_class mag = abs(q);
    bool unit = (mag == 1 && j > 0);
    if (!unit) out << rational_to_string(mag);
    if (j > 0) {
      if (!unit) out << " ";
      out << "z";
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

}  // namespace hardmap
