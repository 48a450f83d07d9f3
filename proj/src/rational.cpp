#include "mapdist/rational.hpp"

#include <stdexcept>

namespace mapdist {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

void Rational::add_product(const Rational& b, const Rational& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (b.is_integer() && c.is_integer() && is_integer()) {
    mpz_addmul(v_.get_num_mpz_t(), b.v_.get_num_mpz_t(), c.v_.get_num_mpz_t());
    return;
  }
  v_ += b.v_ * c.v_;
}

}  // namespace mapdist
