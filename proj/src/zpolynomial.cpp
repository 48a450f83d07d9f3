#include "mapdist/zpolynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mapdist {

ZPolynomial::ZPolynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

ZPolynomial::ZPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPolynomial::ZPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

ZPolynomial ZPolynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return ZPolynomial(std::move(v));
}

void ZPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational ZPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
  return c_[k];
}

Rational ZPolynomial::evaluate(const Rational& z) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ZPolynomial ZPolynomial::inverse() const {
  if (!is_unit()) throw std::domain_error("polynomial is not invertible: " + to_string());
  return ZPolynomial(c_[0].inverse());
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial r;
  r.add_product(a, b);
  return r;
}

ZPolynomial operator-(const ZPolynomial& a) {
  ZPolynomial r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

void ZPolynomial::add_product(const ZPolynomial& b, const ZPolynomial& c) {
  if (b.c_.empty() || c.c_.empty()) return;
  size_t need = b.c_.size() + c.c_.size() - 1;
  if (c_.size() < need) c_.resize(need);
  for (size_t i = 0; i < b.c_.size(); ++i) {
    if (b.c_[i].is_zero()) continue;
    for (size_t j = 0; j < c.c_.size(); ++j) c_[i + j].add_product(b.c_[i], c.c_[j]);
  }
  trim();
}

std::string ZPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string v = c_[k].to_string();
    if (!first) {
      if (v[0] == '-') {
        os << " - ";
        v.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (k == 0) {
      os << v;
      continue;
    }
    if (v == "-1")
      os << "-";
    else if (v != "1")
      os << v << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace mapdist
