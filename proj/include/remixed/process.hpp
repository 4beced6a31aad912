#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "remixed/comb.hpp"
#include "remixed/qrat.hpp"

namespace remixed {

/// Stable configuration: at most one particle per site, identified with its
/// support. Kept sorted.
using StableSet = std::vector<int>;

/// Exact law of the particle process over stable configurations; equals the
/// squarefree Klyachko-basis expansion. A complete distribution sums to 1.
using StableDistribution = std::map<StableSet, QRat>;

/// Exit weights for a particle dropped at site i onto the occupied interval
/// [a, b]: right = [i-a+1]/[b-a+2], left = q^{i-a+1}[b-i+1]/[b-a+2].
/// They sum to 1.
struct ExitWeights {
  QRat left, right;
};
ExitWeights exit_weights(int a, int b, int i);

/// Postnikov node weight wt_q([a,b], j, i): the probability that dropping a
/// particle at i onto [a,b] \ {j} fills j.
QRat wt_q(int a, int b, int j, int i);

/// One sequential-process step: drop a particle at `site` on every stable
/// set of the distribution and stabilize. Mass is preserved exactly.
/// With a prune window, states leaving [window.a, window.b] are discarded.
StableDistribution drop_and_stabilize(const StableDistribution& dist, int site,
                                      std::optional<Interval> window = std::nullopt);

/// Terminal distribution of the process started from c (canonical drop
/// order). prune_to restricts states to subsets of [1, r]; only valid when
/// just the mass of [1, r] is needed.
StableDistribution klyachko_expand(const Composition& c, bool prune_to = false);

/// A_c(q) = [r]_q! * prob_c([r]). Exact; engine-independent cross-check of
/// the recurrence.
QPoly remixed_via_process(const Composition& c);

/// Probability that dropping the word's letters one at a time ends in the
/// stable set [target.a, target.b].
QRat prob_word(const Word& word, Interval target);

/// Seeded Monte-Carlo run of the biased stabilization process.
struct SimulationOutcome {
  StableSet sites;
  long count = 0;
};
struct SimulationReport {
  Composition c;
  Rat q_value;
  long samples = 0;
  uint64_t seed = 0;
  long cap_hits = 0;  // samples aborted by the step cap
  std::vector<SimulationOutcome> outcomes;  // sorted by sites
};
SimulationReport simulate(const Composition& c, const Rat& q_value, long samples,
                          uint64_t seed, long max_steps = 1000000);

}  // namespace remixed
