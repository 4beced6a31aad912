#pragma once

#include <map>
#include <random>

#include "remixed/comb.hpp"
#include "remixed/qpoly.hpp"

namespace remixed {

/// Memoized computation of A_c(q) via the interval recurrence
///   [b-a+2] A_c = q^{i-a+1} [b-i+1] A_{L_i(c)} + [i-a+1] A_{R_i(c)},
/// base case A_{(1^r)} = [r]_q!. The pivot is the smallest i with c_i >= 2,
/// which keeps memo keys and traversal deterministic.
///
/// Not internally synchronized: confine each engine to one thread, or use
/// the shared remixed() entry point below.
class RemixedEngine {
 public:
  const QPoly& remixed(const Composition& c);
  void clear() { memo_.clear(); }
  size_t cache_size() const { return memo_.size(); }

 private:
  std::map<Composition, QPoly> memo_;
};

/// A_c(q) through a process-wide engine (mutex-guarded).
QPoly remixed(const Composition& c);

/// Same recurrence with a uniformly random pivot at every node and no memo;
/// exists to property-test pivot independence.
QPoly remixed_random_pivot(const Composition& c, std::mt19937_64& rng);

/// Checks (q+1) A_c = q A_{(...,c_{i-1}+1,c_i-1,...)} + A_{(...,c_i-1,c_{i+1}+1,...)}
/// exactly, ignoring the ill-defined boundary terms. Requires c_i >= 2.
bool check_relation(const Composition& c, int i);

/// Closed product formula on EB_r:
///   A_c = q^{d_c} [r choose k] prod [i]^{c_i} prod [i]^{c_{r+1-i}}.
/// Throws std::domain_error when c is not in EB_r. A k may be supplied to
/// override the default smallest-k rule (any valid k gives the same value).
QPoly product_formula(const Composition& c);
QPoly product_formula_with_k(const Composition& c, int k);

/// Reduced remixed Eulerian: A_c / prod_j [m_j]! over maximal support
/// interval sizes m_j. The division is exact by theory; an ExactnessError
/// here is an internal error.
QPoly reduced_remixed(const Composition& c);

/// Checks the reduced recurrence with the boundary q-binomials b_L, b_R.
bool check_reduced_recurrence(const Composition& c, int i);

}  // namespace remixed
