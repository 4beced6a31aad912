#pragma once

#include <string>

#include "remixed/qpoly.hpp"

namespace remixed {

/// Rational function num/den in q, kept in canonical form: gcd(num, den) = 1
/// and den monic. Equality of QRats is structural equality of the canonical
/// forms. This is the home of process probabilities and tree weights.
class QRat {
 public:
  QRat() : num_(0), den_(1) {}
  QRat(int constant) : num_(constant), den_(1) {}   // NOLINT
  QRat(const Rat& constant) : num_(constant), den_(1) {}  // NOLINT
  QRat(const QPoly& p) : num_(p), den_(1) {}        // NOLINT
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }
  bool operator<(const QRat& o) const;

  /// Requires den | num exactly; throws ExactnessError otherwise.
  QPoly to_poly() const;

  /// Exact evaluation; throws std::domain_error if den vanishes at x.
  Rat eval_at(const Rat& x) const;

  std::string to_string() const;

 private:
  void canonicalize();
  QPoly num_, den_;
};

/// Monic gcd of two polynomials (Euclid over the rationals); gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

}  // namespace remixed
