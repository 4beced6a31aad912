#include "remixed/qrat.hpp"

namespace remixed {

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // make monic
  Rat lead = a.coeff(a.degree());
  return a * Rat(Rat(1) / lead);
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (!(g == QPoly(1))) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rat lead = den_.coeff(den_.degree());
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw std::domain_error("QRat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

bool QRat::operator<(const QRat& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

QPoly QRat::to_poly() const { return num_.exact_div(den_); }

Rat QRat::eval_at(const Rat& x) const {
  Rat d = den_.eval_at(x);
  if (d == 0) throw std::domain_error("QRat: denominator vanishes at evaluation point");
  return num_.eval_at(x) / d;
}

std::string QRat::to_string() const {
  if (den_ == QPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace remixed
