#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remixed/rational.hpp"

namespace remixed {

/// Thrown when a division that must be exact leaves a remainder. This always
/// indicates a bug or a theory violation upstream, so callers should not
/// catch it except to abort the enclosing computation.
struct ExactnessError : std::runtime_error {
  explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

/// Univariate polynomial in q with exact rational coefficients.
///
/// Stored densely from exponent 0 with no trailing zeros; the zero polynomial
/// is the empty coefficient vector. Values are immutable after construction
/// except through assignment.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int constant);             // NOLINT: implicit by design
  QPoly(const Rat& constant);      // NOLINT
  explicit QPoly(std::vector<Rat> coeffs);

  /// coeff * q^k
  static QPoly monomial(int k, const Rat& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  /// Degree and valuation are undefined for the zero polynomial.
  int degree() const;
  int valuation() const;

  /// Coefficient of q^k (0 outside the stored range).
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_integral() const;
  bool has_nonnegative_coeffs() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rat& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
  friend QPoly operator*(const Rat& s, QPoly a) { return a *= s; }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }
  bool operator<(const QPoly& o) const { return c_ < o.c_; }

  QPoly pow(int e) const;

  Rat eval_at(const Rat& x) const;

  /// Division with remainder over the rationals: *this = b * quot + rem.
  std::pair<QPoly, QPoly> divmod(const QPoly& b) const;

  /// Exact quotient; throws ExactnessError on a nonzero remainder.
  QPoly exact_div(const QPoly& b) const;

  /// q^N * P(1/q). Requires N >= degree (the coefficient sequence is
  /// reversed within [0, N]).
  QPoly reverse_scale(int N) const;

  /// If the coefficient sequence between valuation and degree is positive,
  /// symmetric and unimodal, returns the center of symmetry
  /// (valuation + degree) / 2; otherwise nullopt. Zero is not psu.
  std::optional<Rat> is_psu() const;

  /// "2*q^3 + q + 1", exponents descending; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// q-integer [n] = 1 + q + ... + q^{n-1}; [0] = 0. Requires n >= 0.
QPoly qint(int n);
/// [n] for any n, with [n] = 0 when n <= 0 (used by generating-function
/// products whose out-of-range factors must vanish).
QPoly qint_or_zero(int n);
/// q-factorial [n]! = [1][2]...[n].
QPoly qfact(int n);
/// Gaussian binomial [n]! / ([k]! [n-k]!). Requires 0 <= k <= n.
QPoly qbinom(int n, int k);

}  // namespace remixed
