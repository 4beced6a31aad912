#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "remixed/qpoly.hpp"
#include "remixed/trees.hpp"

namespace remixed::testutil {

/// QPoly from a coefficient list starting at exponent 0.
inline QPoly poly(std::vector<int> coeffs) {
  std::vector<Rat> c(coeffs.begin(), coeffs.end());
  return QPoly(c);
}

/// Random integer-coefficient polynomial, coefficients in [-5, 5].
inline QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return QPoly(c);
}

/// Verifies the content-level shrink recurrence on B(c): grouping the trees
/// by (leaf index, absorbed label), each group's shrunken trees must be
/// exactly B(c') for the transformed content. Summing |B(c')| over groups is
/// then the q = 1 shrink recurrence for A_c(1).
inline bool liu_recurrence_check(const Composition& c) {
  auto trees = enumerate_bilabeled(c);
  std::map<std::pair<int, int>, std::vector<BilabeledTree>> groups;
  for (const auto& t : trees) {
    ShrinkResult s = liu_shrink(t);
    groups[{s.leaf_index, s.absorbed_label}].push_back(s.tree);
  }
  size_t total = 0;
  for (auto& [key, shrunk] : groups) {
    Composition c2 = bilabeled_content(shrunk.front());
    for (const auto& t : shrunk)
      if (bilabeled_content(t) != c2) return false;
    auto expected = enumerate_bilabeled(c2);
    std::sort(shrunk.begin(), shrunk.end());
    std::sort(expected.begin(), expected.end());
    if (shrunk != expected) return false;
    total += expected.size();
  }
  return total == trees.size();
}

}  // namespace remixed::testutil
