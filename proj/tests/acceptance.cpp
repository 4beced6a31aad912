// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. Bounds and tolerances are pinned; do not relax them to go green.
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>

#include "remixed/identities.hpp"
#include "remixed/process.hpp"
#include "remixed/recurrence.hpp"
#include "remixed/serialize.hpp"
#include "remixed/symmetrize.hpp"
#include "remixed/trees.hpp"
#include "util.hpp"

using namespace remixed;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " " << idx << ": " << what;
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

QPoly golden_15_term() {
  QPoly p;
  std::vector<int> coeffs = {2, 6, 11, 18, 27, 35, 40, 42, 40, 35, 27, 18, 11, 6, 2};
  for (int k = 0; k < 15; ++k) p += QPoly::monomial(20 - k, coeffs[k]);
  return p;
}

Composition random_composition(int r, std::mt19937_64& rng) {
  // r unit increments over r slots
  Composition c(r, 0);
  std::uniform_int_distribution<int> slot(0, r - 1);
  for (int k = 0; k < r; ++k) ++c[slot(rng)];
  return c;
}

void criterion_golden() {
  auto t0 = Clock::now();
  QPoly g1 = QPoly::monomial(2) * qint(3) * qint(3);
  QPoly g2 = golden_15_term();
  bool ok = remixed::remixed({0, 2, 0, 2}) == g1 && remixed_via_process({0, 2, 0, 2}) == g1 &&
            remixed::remixed({0, 3, 0, 0, 0, 1, 3}) == g2 &&
            remixed_via_process({0, 3, 0, 0, 0, 1, 3}) == g2;
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(1, "golden values via recurrence and process engines", ok && secs < 5.0,
         "elapsed " + std::to_string(secs) + "s");
}

void criterion_engine_agreement() {
  std::string detail;
  bool ok = true;
  for (int r = 1; r <= 6 && ok; ++r) {
    for (const auto& c : all_compositions(r)) {
      QPoly a = remixed::remixed(c);
      if (remixed_via_process(c) != a || remixed_via_bilabeled(c) != a ||
          remixed_via_postnikov(canonical_word(c)) != a ||
          (r <= 4 && remixed_via_qds(c) != a)) {
        ok = false;
        detail = "r=" + std::to_string(r);
        break;
      }
    }
  }
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 30 && ok; ++trial) {
    Composition c = random_composition(5, rng);
    if (remixed_via_qds(c) != remixed::remixed(c)) {
      ok = false;
      detail = "qds r=5 random";
    }
  }
  report(2, "five-engine agreement (r <= 6; qds r <= 4 full, 30 random at r = 5)",
         ok, detail);
}

void criterion_theorem_list() {
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 6 && ok; ++r) {
    if (!check_carlitz(r)) { ok = false; detail = "item 3, r=" + std::to_string(r); }
    else if (!check_two_block_all(r)) { ok = false; detail = "item 6, r=" + std::to_string(r); }
    else if (!check_catalan_sum(r)) { ok = false; detail = "item 5, r=" + std::to_string(r); }
    else if (!mixed_sum_check(r)) { ok = false; detail = "item 4, r=" + std::to_string(r); }
    if (!ok) break;
    int N = r * (r - 1) / 2;
    for (const auto& c : all_compositions(r)) {
      QPoly a = remixed::remixed(c);
      if (!a.is_integral() || !a.has_nonnegative_coeffs()) {
        ok = false;
        detail = "item 1";
        break;
      }
      Composition rev(c.rbegin(), c.rend());
      if (a != remixed::remixed(rev).reverse_scale(N)) {
        ok = false;
        detail = "item 2";
        break;
      }
    }
  }
  report(3, "theorem list items 1-6 at r <= 6 (exact arithmetic)", ok, detail);
}

void criterion_degree_valuation_psu() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 7 && ok; ++r) {
    for (const auto& c : all_compositions(r)) {
      QPoly a = remixed::remixed(c);
      auto center = a.is_psu();
      if (a.valuation() != valuation_of(c) || a.degree() != degree_of(c) ||
          !center || *center != psu_center_of(c)) {
        ok = false;
        detail = "r=" + std::to_string(r);
        break;
      }
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(4, "valuation/degree/psu center for all c, r <= 7", ok && secs < 120.0,
         detail + " elapsed " + std::to_string(secs) + "s");
}

void criterion_cyclic() {
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 7 && ok; ++r)
    if (!check_cyclic(r)) {
      ok = false;
      detail = "r=" + std::to_string(r);
    }
  report(5, "cyclic sum rule and Catalan class count, r <= 7", ok, detail);
}

void criterion_qhit() {
  bool ok = true;
  std::string detail;
  QHitResult res = qhit_from_partition({5, 5, 3, 3, 3, 0});
  if (res.a != -1 || res.beta != Composition{1, 2, 3}) {
    ok = false;
    detail = "reference example data";
  }
  if (ok && !check_qhit_gf({5, 5, 3, 3, 3, 0}, 14)) {
    ok = false;
    detail = "reference example series";
  }
  std::mt19937_64 rng(1618);
  for (int r : {5, 6}) {
    for (int trial = 0; trial < 10 && ok; ++trial) {
      std::vector<int> lambda(r);
      int cap = r;
      for (int i = 0; i < r; ++i) {
        lambda[i] = std::uniform_int_distribution<int>(0, cap)(rng);
        cap = lambda[i];
      }
      if (!check_qhit_gf(lambda)) {
        ok = false;
        detail = "random lambda";
        break;
      }
      Rat total;
      for (const auto& h : qhit_from_partition(lambda).hits) total += h.eval_at(1);
      if (total != Rat(factorial(r))) {
        ok = false;
        detail = "hit sum != r!";
      }
    }
  }
  report(6, "q-hit correspondence: reference example + random partitions in 5x5, 6x6",
         ok, detail);
}

void criterion_parking() {
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 6 && ok; ++r)
    if (!check_parking(r)) {
      ok = false;
      detail = "r=" + std::to_string(r);
    }
  report(7, "parking-function identity, three routes, r <= 6", ok, detail);
}

void criterion_hooklength() {
  bool ok = true;
  std::string detail;
  auto shapes = all_shapes(7);
  if (shapes.size() != 429) {
    ok = false;
    detail = "shape count";
  }
  for (const auto& s : shapes) {
    if (!ok) break;
    if (!hooklength_check(s, 7)) {
      ok = false;
      detail = s;
    }
  }
  report(8, "q-hooklength identity for all 429 shapes at r = 7", ok, detail);
}

void criterion_liu() {
  bool ok = true;
  std::string detail;
  for (int r = 2; r <= 5 && ok; ++r)
    for (const auto& c : all_compositions(r))
      if (!testutil::liu_recurrence_check(c)) {
        ok = false;
        detail = "r=" + std::to_string(r);
        break;
      }
  report(9, "shrink-map recurrence at q = 1 for all c, r <= 5", ok, detail);
}

void criterion_monte_carlo() {
  const long N = 100000;
  SimulationReport rep = simulate({0, 2, 0, 2}, Rat(1), N, 1);
  StableDistribution law = klyachko_expand({0, 2, 0, 2});
  long hits = 0;
  for (const auto& o : rep.outcomes)
    if (o.sites == StableSet{1, 2, 3, 4}) hits = o.count;
  double freq = static_cast<double>(hits) / N;
  double p = 3.0 / 8.0;
  double sigma = std::sqrt(p * (1 - p) / N);
  bool in_band = std::abs(freq - p) <= 4 * sigma;

  SimulationReport rerun = simulate({0, 2, 0, 2}, Rat(1), N, 1);
  bool identical = simulation_to_json(rep, &law).dump() ==
                   simulation_to_json(rerun, &law).dump();
  report(10, "Monte Carlo c=(0,2,0,2), q=1: freq within 4 sigma of 3/8 and "
             "byte-identical rerun",
         in_band && identical,
         "freq=" + std::to_string(freq) + " identical=" + std::to_string(identical));
}

void criterion_summand_positivity() {
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 5 && ok; ++r) {
    QPoly rfact = qfact(r);
    for (const auto& c : all_compositions(r)) {
      for (const auto& t : enumerate_postnikov(canonical_word(c))) {
        QPoly summand = (QRat(rfact) * t.weight).to_poly();
        if (!summand.is_integral() || !summand.has_nonnegative_coeffs()) {
          ok = false;
          detail = "r=" + std::to_string(r);
          break;
        }
      }
      if (!ok) break;
    }
  }
  report(11, "per-summand positivity of [r]! wt(T, i), canonical words, r <= 5",
         ok, detail);
}

}  // namespace

int main() {
  criterion_golden();
  criterion_engine_agreement();
  criterion_theorem_list();
  criterion_degree_valuation_psu();
  criterion_cyclic();
  criterion_qhit();
  criterion_parking();
  criterion_hooklength();
  criterion_liu();
  criterion_monte_carlo();
  criterion_summand_positivity();
  return failures == 0 ? 0 : 1;
}
