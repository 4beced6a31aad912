#pragma once

#include <map>

#include "remixed/comb.hpp"
#include "remixed/qpoly.hpp"

namespace remixed {

inline constexpr int kQdsOracleBound = 5;

/// Multivariate polynomial in x_1, ..., x_n with QPoly coefficients, stored
/// as exponent vector -> coefficient (lexicographic map order fixes the
/// serialization). Brute-force oracle substrate; performance is irrelevant
/// at the oracle rank bound.
class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const QPoly& c);
  static MPoly variable(int nvars, int i);  // x_i, 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, QPoly>& terms() const { return terms_; }

  void add_term(const std::vector<int>& expo, const QPoly& coeff);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const QPoly& s) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly pow(int e) const;

  /// Total degree in the x variables (0 for the zero polynomial).
  int total_degree() const;
  bool is_homogeneous(int d) const;

  /// Applies a permutation of the variable indices: x_i -> x_{sigma(i)}.
  MPoly permute_vars(const Perm& sigma) const;

  /// Constant term as a QPoly; throws if a nonconstant monomial remains.
  QPoly constant_value() const;

 private:
  int nvars_;
  std::map<std::vector<int>, QPoly> terms_;
};

/// sum_{sigma in S_n} sign(sigma) sigma(f).
MPoly antisymmetrize(const MPoly& f);

/// Maximal divided difference: antisymmetrize then divide exactly by the
/// Vandermonde prod_{i<j} (x_i - x_j). Zero when deg f < C(n, 2).
MPoly divided_diff_wo(const MPoly& f);

/// q-divided symmetrization of a degree-r polynomial in r+1 variables:
/// divided_diff_wo(f * prod_{1 <= i < j-1 <= r} (q x_i - x_j)), a scalar.
/// Homogeneous inputs of degree < r are accepted and give 0.
QPoly qds(const MPoly& f, int r);

/// y_c = x_1^{c_1} (x_1+x_2)^{c_2} ... (x_1+...+x_r)^{c_r} in r+1 variables.
MPoly y_c(const Composition& c);

/// Definition-level oracle for A_c(q); rejects r beyond the bound.
QPoly remixed_via_qds(const Composition& c, int bound = kQdsOracleBound);

/// V^q from the A_c expansion: sum_c A_c(q) prod mu_i^{c_i} / c_i!.
QPoly qvolume_expansion(const std::vector<Rat>& mu);

/// V^q(lambda) = (1/r!) qds((sum lambda_i x_i)^r); agrees with the expansion
/// route on mu_i = lambda_i - lambda_{i+1}, and is invariant under shifting
/// all lambda_i by a constant.
QPoly qvolume_direct(const std::vector<Rat>& lambda, int bound = kQdsOracleBound);

/// sum_c A_c / (c_1! ... c_r!) = ([r]_q!/r!) (r+1)^{r-1}, checked exactly.
bool mixed_sum_check(int r);

}  // namespace remixed
