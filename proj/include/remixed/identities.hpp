#pragma once

#include <string>

#include "remixed/comb.hpp"
#include "remixed/qpoly.hpp"

namespace remixed {

/// Power series in t truncated at order N (coefficients of t^0 .. t^N kept),
/// each coefficient an exact QPoly. Arithmetic truncates consistently.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(order + 1) {}
  int order() const { return static_cast<int>(c_.size()) - 1; }
  QPoly& at(int j) { return c_.at(j); }
  const QPoly& at(int j) const { return c_.at(j); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

  /// Multiplicative inverse; requires an invertible (unit) constant term.
  TruncSeries inverse() const;

 private:
  std::vector<QPoly> c_;
};

/// (t; q)_{r+1} = prod_{i=0}^{r} (1 - t q^i), truncated at order N.
TruncSeries t_pochhammer(int r, int N);

/// Carlitz / q-Eulerian: A_{(0^{i-1}, r, 0^{r-i})} equals the maj generating
/// function over S_r restricted to des = i-1, for every i in [r].
bool check_carlitz(int r);

/// Two-block case: A_{(..., k, r-k, ...)} with k at position i equals the
/// explicit sum over S_{r+1} with des = i, last value r+1-k, weight
/// q^{maj - k}. Valid positions: 1 <= i <= r-1, plus i = r when k = r.
bool check_two_block(int r, int k, int i);
/// All (k, i) for one r.
bool check_two_block_all(int r);

/// sum over W_r of A_c = [r]! Cat_r.
bool check_catalan_sum(int r);

/// Every necklace class sums to [r]!, and the class count is Cat_r.
bool check_cyclic(int r);

/// Interval-support generating function, both sides as series to order N
/// (default 2(r+1), which determines the identity completely).
bool gf_interval_check(const Composition& beta, int r, int N = -1);

/// q-hit data of a partition in the r x r square.
struct QHitResult {
  int a = 0;              // left end of the value interval
  Composition beta;       // multiplicities over the interval
  std::vector<QPoly> hits;  // H_j(lambda, q) for j = 0..r
};
QHitResult qhit_from_partition(const std::vector<int>& lambda);

/// Garsia-Remmel generating function for the q-hit numbers, exact to order N.
bool check_qhit_gf(const std::vector<int>& lambda, int N = -1);

/// Parking-function identity: the QRat sum over W_r, the dominant
/// q-multinomial sum, and the inv generating function over PF(r) all agree.
bool check_parking(int r);

struct CheckResult {
  std::string name;
  int r = 0;
  bool pass = false;
  std::string witness;  // failing instance, empty on pass
};

/// Known suite names: carlitz, two_block, catalan, cyclic, gf_interval,
/// qhit, parking, reversal, degree_valuation, psu, product. "all" selects
/// everything. Unknown names raise std::invalid_argument.
std::vector<CheckResult> run_suite(int r, const std::vector<std::string>& selection);

}  // namespace remixed
