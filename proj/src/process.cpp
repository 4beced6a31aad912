#include "remixed/process.hpp"

#include <algorithm>
#include <random>

namespace remixed {

ExitWeights exit_weights(int a, int b, int i) {
  if (i < a || i > b) throw std::invalid_argument("exit_weights: i outside [a,b]");
  QPoly den = qint(b - a + 2);
  QRat right(qint(i - a + 1), den);
  QRat left(QPoly::monomial(i - a + 1) * qint(b - i + 1), den);
  return {left, right};
}

QRat wt_q(int a, int b, int j, int i) {
  if (i < a || i > b || j < a || j > b)
    throw std::invalid_argument("wt_q: site outside [a,b]");
  if (i > j) return QRat(QPoly::monomial(i - j) * qint(b - i + 1), qint(b - j + 1));
  return QRat(qint(i - a + 1), qint(j - a + 1));
}

namespace {

bool in_window(int site, const std::optional<Interval>& window) {
  return !window || (window->a <= site && site <= window->b);
}

void add_mass(StableDistribution& dist, StableSet s, int site, const QRat& mass,
              const std::optional<Interval>& window) {
  if (!in_window(site, window)) return;
  s.insert(std::lower_bound(s.begin(), s.end(), site), site);
  dist[std::move(s)] += mass;
}

}  // namespace

StableDistribution drop_and_stabilize(const StableDistribution& dist, int site,
                                      std::optional<Interval> window) {
  StableDistribution out;
  for (const auto& [s, mass] : dist) {
    if (!std::binary_search(s.begin(), s.end(), site)) {
      add_mass(out, s, site, mass, window);
      continue;
    }
    // maximal occupied interval [a, b] of s containing the drop site
    int a = site, b = site;
    while (std::binary_search(s.begin(), s.end(), a - 1)) --a;
    while (std::binary_search(s.begin(), s.end(), b + 1)) ++b;
    ExitWeights w = exit_weights(a, b, site);
    add_mass(out, s, a - 1, mass * w.left, window);
    add_mass(out, s, b + 1, mass * w.right, window);
  }
  return out;
}

StableDistribution klyachko_expand(const Composition& c, bool prune_to) {
  require_nonnegative(c);
  int r = static_cast<int>(c.size());
  std::optional<Interval> window;
  if (prune_to) window = Interval{1, r};
  StableDistribution dist;
  dist[StableSet{}] = QRat(1);
  for (int site : canonical_word(c)) dist = drop_and_stabilize(dist, site, window);
  return dist;
}

QPoly remixed_via_process(const Composition& c) {
  if (!is_in_wr(c)) throw std::invalid_argument("remixed_via_process: c not in W_r");
  int r = static_cast<int>(c.size());
  StableDistribution dist = klyachko_expand(c, /*prune_to=*/true);
  StableSet target(r);
  for (int i = 0; i < r; ++i) target[i] = i + 1;
  auto it = dist.find(target);
  QRat mass = it == dist.end() ? QRat(0) : it->second;
  return (QRat(qfact(r)) * mass).to_poly();
}

QRat prob_word(const Word& word, Interval target) {
  StableDistribution dist;
  dist[StableSet{}] = QRat(1);
  for (int site : word) dist = drop_and_stabilize(dist, site);
  StableSet t;
  for (int i = target.a; i <= target.b; ++i) t.push_back(i);
  auto it = dist.find(t);
  return it == dist.end() ? QRat(0) : it->second;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SimulationReport simulate(const Composition& c, const Rat& q_value, long samples,
                          uint64_t seed, long max_steps) {
  if (q_value < 0) throw std::invalid_argument("simulate: negative q");
  if (samples < 1) throw std::invalid_argument("simulate: need samples >= 1");
  require_nonnegative(c);

  double q = q_value.get_d();
  double p_left = q / (1.0 + q);
  Word word = canonical_word(c);

  std::map<StableSet, long> counts;
  long cap_hits = 0;
  for (long idx = 0; idx < samples; ++idx) {
    // one independent stream per sample so aggregates are order-insensitive
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<uint64_t>(idx) + 1)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::map<int, int> conf;
    long steps = 0;
    bool capped = false;
    for (int site : word) {
      ++conf[site];
      for (;;) {
        auto unstable = std::find_if(conf.begin(), conf.end(),
                                     [](const auto& kv) { return kv.second > 1; });
        if (unstable == conf.end()) break;
        if (++steps > max_steps) {
          capped = true;
          break;
        }
        int i = unstable->first;
        bool go_left = q_value != 0 && unif(rng) < p_left;
        --conf[i];
        ++conf[i + (go_left ? -1 : 1)];
      }
      if (capped) break;
    }
    if (capped) {
      ++cap_hits;
      continue;
    }
    StableSet s;
    for (const auto& [site, n] : conf)
      if (n == 1) s.push_back(site);
    ++counts[s];
  }

  SimulationReport rep;
  rep.c = c;
  rep.q_value = q_value;
  rep.samples = samples;
  rep.seed = seed;
  rep.cap_hits = cap_hits;
  for (const auto& [s, n] : counts) rep.outcomes.push_back({s, n});
  return rep;
}

}  // namespace remixed
