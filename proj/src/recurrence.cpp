#include "remixed/recurrence.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace remixed {

namespace {

int smallest_pivot(const Composition& c) {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] >= 2) return static_cast<int>(i) + 1;
  return 0;
}

Interval interval_containing(const Composition& c, int i) {
  for (const auto& iv : support_intervals(c))
    if (iv.a <= i && i <= iv.b) return iv;
  throw std::logic_error("pivot not in support");
}

}  // namespace

const QPoly& RemixedEngine::remixed(const Composition& c) {
  if (!is_in_wr(c)) throw std::invalid_argument("remixed: c not in W_r");
  auto it = memo_.find(c);
  if (it != memo_.end()) return it->second;

  int r = static_cast<int>(c.size());
  QPoly result;
  int i = smallest_pivot(c);
  if (i == 0) {
    result = qfact(r);  // c = (1^r), or r = 0 giving the empty product 1
  } else {
    Interval iv = interval_containing(c, i);
    auto L = left_move(c, i);
    auto R = right_move(c, i);
    QPoly acc;
    if (L) acc += QPoly::monomial(i - iv.a + 1) * qint(iv.b - i + 1) * remixed(*L);
    if (R) acc += qint(i - iv.a + 1) * remixed(*R);
    result = acc.exact_div(qint(iv.b - iv.a + 2));
  }
  return memo_.emplace(c, std::move(result)).first->second;
}

QPoly remixed(const Composition& c) {
  static RemixedEngine engine;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return engine.remixed(c);
}

namespace {

QPoly random_pivot_rec(const Composition& c, std::mt19937_64& rng,
                       std::map<Composition, QPoly>& memo) {
  auto it = memo.find(c);
  if (it != memo.end()) return it->second;
  std::vector<int> pivots;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] >= 2) pivots.push_back(static_cast<int>(i) + 1);
  QPoly result;
  if (pivots.empty()) {
    result = qfact(static_cast<int>(c.size()));
  } else {
    int i = pivots[std::uniform_int_distribution<size_t>(0, pivots.size() - 1)(rng)];
    Interval iv = interval_containing(c, i);
    auto L = left_move(c, i);
    auto R = right_move(c, i);
    QPoly acc;
    if (L) acc += QPoly::monomial(i - iv.a + 1) * qint(iv.b - i + 1) * random_pivot_rec(*L, rng, memo);
    if (R) acc += qint(i - iv.a + 1) * random_pivot_rec(*R, rng, memo);
    result = acc.exact_div(qint(iv.b - iv.a + 2));
  }
  memo.emplace(c, result);
  return result;
}

}  // namespace

QPoly remixed_random_pivot(const Composition& c, std::mt19937_64& rng) {
  if (!is_in_wr(c)) throw std::invalid_argument("remixed_random_pivot: c not in W_r");
  std::map<Composition, QPoly> memo;
  return random_pivot_rec(c, rng, memo);
}

bool check_relation(const Composition& c, int i) {
  int r = static_cast<int>(c.size());
  if (i < 1 || i > r || c[i - 1] < 2)
    throw std::invalid_argument("check_relation: requires c_i >= 2");
  QPoly lhs = (qint(2)) * remixed(c);  // q + 1 = [2]
  QPoly rhs;
  if (i > 1) {
    Composition cl(c);
    cl[i - 2] += 1;
    cl[i - 1] -= 1;
    rhs += QPoly::monomial(1) * remixed(cl);
  }
  if (i < r) {
    Composition cr(c);
    cr[i - 1] -= 1;
    cr[i] += 1;
    rhs += remixed(cr);
  }
  return lhs == rhs;
}

QPoly product_formula_with_k(const Composition& c, int k) {
  int r = static_cast<int>(c.size());
  auto ks = ebr_all_k(c);
  if (std::find(ks.begin(), ks.end(), k) == ks.end())
    throw std::domain_error("product_formula: k not valid for this composition");
  long d = 0;
  for (int j = 1; j <= r - k; ++j)
    for (int i = 1; i <= j; ++i) d += c[r - i] - 1;
  QPoly result = QPoly::monomial(static_cast<int>(d)) * qbinom(r, k);
  for (int i = 1; i <= k; ++i) result *= qint(i).pow(c[i - 1]);
  for (int i = 1; i <= r - k; ++i) result *= qint(i).pow(c[r - i]);
  return result;
}

QPoly product_formula(const Composition& c) {
  auto k = ebr_decompose(c);
  if (!k) throw std::domain_error("product_formula: c not in EB_r");
  return product_formula_with_k(c, *k);
}

QPoly reduced_remixed(const Composition& c) {
  QPoly den(1);
  for (int m : support_interval_sizes(c)) den *= qfact(m);
  return remixed(c).exact_div(den);
}

bool check_reduced_recurrence(const Composition& c, int i) {
  int r = static_cast<int>(c.size());
  if (i < 1 || i > r || c[i - 1] < 2)
    throw std::invalid_argument("check_reduced_recurrence: requires c_i >= 2");
  auto intervals = support_intervals(c);
  size_t j = 0;
  while (!(intervals[j].a <= i && i <= intervals[j].b)) ++j;
  int a = intervals[j].a, b = intervals[j].b;

  QPoly bL(1), bR(1);
  if (j > 0 && intervals[j - 1].b == a - 2)
    bL = qbinom(b - intervals[j - 1].a + 1, b - a + 2);
  if (j + 1 < intervals.size() && intervals[j + 1].a == b + 2)
    bR = qbinom(intervals[j + 1].b - a + 1, b - a + 2);

  auto L = left_move(c, i);
  auto R = right_move(c, i);
  QPoly rhs;
  if (L) rhs += bL * QPoly::monomial(i - a + 1) * qint(b - i + 1) * reduced_remixed(*L);
  if (R) rhs += bR * qint(i - a + 1) * reduced_remixed(*R);
  return reduced_remixed(c) == rhs;
}

}  // namespace remixed
