#pragma once

#include "mapdist/rational.hpp"
#include "mapdist/zpolynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace mapdist {

// Power series in g over the ring R, known up to and including g^order.
// Binary operations on series of different orders give a result at the smaller order.
template <class R>
class TruncatedSeries {
 public:
  using Ring = R;

  explicit TruncatedSeries(int order = 0) : c_(check_order(order) + 1) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(check_order(order) + 1);
  }

  static TruncatedSeries constant(int order, const R& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
  }
  static TruncatedSeries one(int order) { return constant(order, R(1)); }
  // The series g itself.
  static TruncatedSeries variable(int order) { return monomial(order, 1, R(1)); }
  static TruncatedSeries monomial(int order, int k, const R& c) {
    TruncatedSeries s(order);
    if (k < 0) throw std::invalid_argument("negative monomial exponent");
    if (k <= order) s.c_[k] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index outside truncation order");
    return c_[n];
  }
  void set_coeff(int n, R value) {
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index outside truncation order");
    c_[n] = std::move(value);
  }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(order, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  // Index of the first nonzero coefficient, or order()+1 if none.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!c_[n].is_zero()) return n;
    return order() + 1;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& operator/=(const TruncatedSeries& o) { return *this = *this / o; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries r(N);
    int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= N; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = vb; i + j <= N; ++j) r.c_[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return r;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& k) {
    for (auto& c : a.c_) c = c * k;
    return a;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!b.c_[0].is_unit())
      throw std::domain_error("series division by a series with non-invertible constant term");
    int N = std::min(a.order(), b.order());
    R inv0 = b.c_[0].inverse();
    bool monic = b.c_[0] == R(1);
    TruncatedSeries q(N);
    for (int n = 0; n <= N; ++n) {
      R acc = a.c_[n];
      R sub;
      for (int k = 1; k <= n; ++k) sub.add_product(b.c_[k], q.c_[n - k]);
      acc -= sub;
      q.c_[n] = monic ? acc : acc * inv0;
    }
    return q;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  TruncatedSeries inverse() const { return one(order()) / *this; }

  // Formal logarithm; requires constant term exactly 1.
  TruncatedSeries log() const {
    if (!(c_[0] == R(1))) throw std::domain_error("log of a series whose constant term is not 1");
    int N = order();
    TruncatedSeries r(N);
    if (N == 0) return r;
    TruncatedSeries d(N - 1);
    for (int n = 1; n <= N; ++n) d.c_[n - 1] = c_[n] * R(n);
    TruncatedSeries q = d / truncated(N - 1);
    for (int n = 1; n <= N; ++n) r.c_[n] = q.c_[n - 1] * R(Rational(1, n));
    return r;
  }

  TruncatedSeries pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  // Multiplication by g^k; negative k divides and requires enough leading zeros.
  TruncatedSeries shift(int k) const {
    TruncatedSeries r(order());
    if (k >= 0) {
      for (int n = 0; n + k <= order(); ++n) r.c_[n + k] = c_[n];
      return r;
    }
    if (valuation() < -k) throw std::domain_error("shift would produce negative powers of g");
    for (int n = -k; n <= order(); ++n) r.c_[n + k] = c_[n];
    return r;
  }

  template <class F>
  auto map(F f) const -> TruncatedSeries<std::decay_t<std::invoke_result_t<F, const R&>>> {
    using R2 = std::decay_t<std::invoke_result_t<F, const R&>>;
    std::vector<R2> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return TruncatedSeries<R2>(order(), std::move(v));
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
      if (c_[n].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[n].to_string() << ")";
      if (n > 0) os << "*g^" << n;
    }
    if (first) os << "0";
    os << " + O(g^" << order() + 1 << ")";
    return os.str();
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<R> c_;
};

using QSeries = TruncatedSeries<Rational>;
using QzSeries = TruncatedSeries<ZPolynomial>;

inline QSeries at_z(const QzSeries& s, const Rational& z) {
  return s.map([&](const ZPolynomial& p) { return p.evaluate(z); });
}

inline QzSeries lift(const QSeries& s) {
  return s.map([](const Rational& c) { return ZPolynomial(c); });
}

}  // namespace mapdist
