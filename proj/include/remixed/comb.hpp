#pragma once

#include <optional>
#include <vector>

#include "remixed/rational.hpp"

namespace remixed {

/// Weak composition c = (c_1, ..., c_r); entries are nonnegative. Membership
/// in W_r additionally requires sum = length, checked by is_in_wr.
using Composition = std::vector<int>;
/// Word over sites, 1-based letters.
using Word = std::vector<int>;
/// Permutation in one-line notation over {1, ..., n}.
using Perm = std::vector<int>;

/// Default enumeration bounds; larger requests are rejected, not attempted.
inline constexpr int kMaxPermEnum = 9;
inline constexpr int kMaxParkingEnum = 7;

struct Interval {
  int a, b;  // inclusive, 1-based
  bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

void require_nonnegative(const Composition& c);
bool is_in_wr(const Composition& c);

/// All c in W_r, lexicographically increasing. |W_r| = C(2r-1, r-1).
std::vector<Composition> all_compositions(int r);

/// Maximal intervals of Supp(c), ordered left to right.
std::vector<Interval> support_intervals(const Composition& c);
/// Sizes m_1, ..., m_p of the maximal support intervals.
std::vector<int> support_interval_sizes(const Composition& c);

/// L_i(c) / R_i(c): decrement c_i, increment c_{a-1} (resp. c_{b+1}) where
/// [a,b] is the maximal support interval containing i. nullopt when a = 1
/// (for L) or b = r (for R). Requires c_i >= 2. i is 1-based.
std::optional<Composition> left_move(const Composition& c, int i);
std::optional<Composition> right_move(const Composition& c, int i);

/// Lukasiewicz heights h_i = sum_{j<=i} (c_j - 1); h_r = 0 iff c in W_r.
std::vector<int> heights(const Composition& c);
/// H(c) = sum_{i<r} h_i.
long H_sum(const Composition& c);
/// H^-(c) = sum_{i<r} max(0, -h_i).
long H_minus(const Composition& c);

/// Valuation, degree and psu center of A_c(q), from the height profile.
long valuation_of(const Composition& c);
long degree_of(const Composition& c);
Rat psu_center_of(const Composition& c);

/// Smallest k in {0..r} whose prefix/suffix dominance condition places c in
/// EB_r; nullopt when c is not in EB_r.
std::optional<int> ebr_decompose(const Composition& c);
/// Every valid k, in increasing order (used to test pivot independence of
/// the product formula).
std::vector<int> ebr_all_k(const Composition& c);

/// Necklace class of c: all c' in W_r with (c', 0) a cyclic rotation of
/// (c, 0). Sorted, always contains c.
std::vector<Composition> cyc_class(const Composition& c);

/// Letter multiplicities of a word over [r]; result has length r.
Composition content(const Word& word, int r);
/// 1^{c_1} 2^{c_2} ... r^{c_r}.
Word canonical_word(const Composition& c);

struct PermStats {
  int des, maj, inv;
};
PermStats perm_stats(const Perm& sigma);
/// Lehmer code: code(w)_i = #{j > i : w_i > w_j}.
std::vector<int> code(const Perm& sigma);
/// All of S_n in lexicographic order; rejects n beyond the bound.
std::vector<Perm> all_permutations(int n, int bound = kMaxPermEnum);

/// All parking functions of length r (sorted values satisfy f~_i <= i),
/// with inv(f) = #{i < j : f_i > f_j} available via perm-style counting.
std::vector<std::vector<int>> parking_functions(int r, int bound = kMaxParkingEnum);
int inv_count(const std::vector<int>& f);

/// Parsing helpers shared by the CLI: "0,2,0,2" and digit/comma words.
Composition parse_composition(const std::string& s);
Word parse_word(const std::string& s);

}  // namespace remixed
