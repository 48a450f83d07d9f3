#pragma once

#include "mapdist/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace mapdist {

// Polynomial in the face weight z with rational coefficients.
// Coefficients are stored lowest degree first with no trailing zeros.
class ZPolynomial {
 public:
  ZPolynomial() = default;
  ZPolynomial(long c) : ZPolynomial(Rational(c)) {}
  ZPolynomial(const Rational& c);
  explicit ZPolynomial(std::vector<Rational> coeffs);
  ZPolynomial(std::initializer_list<long> coeffs);

  static ZPolynomial z() { return ZPolynomial({0, 1}); }
  static ZPolynomial monomial(int degree, const Rational& c = Rational(1));

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational evaluate(const Rational& z) const;

  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  ZPolynomial inverse() const;

  std::string to_string() const;

  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const ZPolynomial& o) { return *this = *this * o; }
  ZPolynomial& operator*=(const Rational& c);

  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator*(ZPolynomial a, const Rational& c) { return a *= c; }
  friend ZPolynomial operator-(const ZPolynomial& a);
  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) { return a.c_ == b.c_; }

  // a += b * c without a temporary.
  void add_product(const ZPolynomial& b, const ZPolynomial& c);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace mapdist
