#include "remixed/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "remixed/qrat.hpp"
#include "remixed/recurrence.hpp"

namespace remixed {

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  TruncSeries out(order());
  for (int j = 0; j <= order(); ++j) out.c_[j] = c_[j] + o.c_[j];
  return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  TruncSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  const QPoly& u = c_[0];
  if (u.is_zero() || u.degree() != 0)
    throw std::domain_error("TruncSeries::inverse: constant term is not a unit");
  Rat u0 = u.coeff(0);
  TruncSeries out(order());
  out.c_[0] = QPoly(Rat(1) / u0);
  for (int j = 1; j <= order(); ++j) {
    QPoly acc;
    for (int i = 1; i <= j; ++i) acc += c_[i] * out.c_[j - i];
    out.c_[j] = acc * Rat(Rat(-1) / u0);
  }
  return out;
}

TruncSeries t_pochhammer(int r, int N) {
  TruncSeries out(N);
  out.at(0) = QPoly(1);
  for (int i = 0; i <= r; ++i) {
    TruncSeries factor(N);
    factor.at(0) = QPoly(1);
    if (N >= 1) factor.at(1) = -QPoly::monomial(i);
    out = out * factor;
  }
  return out;
}

bool check_carlitz(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("check_carlitz: r out of range");
  auto perms = all_permutations(r);
  for (int i = 1; i <= r; ++i) {
    Composition c(r, 0);
    c[i - 1] = r;
    QPoly rhs;
    for (const auto& sigma : perms) {
      PermStats st = perm_stats(sigma);
      if (st.des == i - 1) rhs += QPoly::monomial(st.maj);
    }
    if (remixed(c) != rhs) return false;
  }
  return true;
}

bool check_two_block(int r, int k, int i) {
  if (r < 1 || r + 1 > 8) throw std::invalid_argument("check_two_block: r out of range");
  if (k < 0 || k > r) throw std::invalid_argument("check_two_block: k out of range");
  bool pos_ok = (i >= 1 && i <= r - 1) || (i == r && k == r);
  if (!pos_ok) throw std::invalid_argument("check_two_block: invalid position");

  Composition c(r, 0);
  c[i - 1] = k;
  if (i <= r - 1) c[i] += r - k;
  QPoly rhs;
  for (const auto& sigma : all_permutations(r + 1)) {
    if (sigma[r] != r + 1 - k) continue;
    PermStats st = perm_stats(sigma);
    if (st.des != i) continue;
    rhs += QPoly::monomial(st.maj - k);
  }
  return remixed(c) == rhs;
}

bool check_two_block_all(int r) {
  for (int k = 0; k <= r; ++k)
    for (int i = 1; i <= r - 1; ++i)
      if (!check_two_block(r, k, i)) return false;
  return r == 1 || check_two_block(r, r, r);
}

bool check_catalan_sum(int r) {
  if (r < 1 || r > 7) throw std::invalid_argument("check_catalan_sum: r out of range");
  QPoly sum;
  for (const auto& c : all_compositions(r)) sum += remixed(c);
  Rat cat = Rat(binomial(2 * r, r)) / (r + 1);
  return sum == qfact(r) * cat;
}

bool check_cyclic(int r) {
  if (r < 1 || r > 7) throw std::invalid_argument("check_cyclic: r out of range");
  std::vector<Composition> seen;
  long classes = 0;
  QPoly rf = qfact(r);
  for (const auto& c : all_compositions(r)) {
    auto cls = cyc_class(c);
    if (c != cls.front()) continue;  // count each class at its minimum
    ++classes;
    QPoly sum;
    for (const auto& cp : cls) sum += remixed(cp);
    if (sum != rf) return false;
  }
  Rat cat = Rat(binomial(2 * r, r)) / (r + 1);
  return Rat(classes) == cat;
}

bool gf_interval_check(const Composition& beta, int r, int N) {
  int k = static_cast<int>(beta.size());
  long total = std::accumulate(beta.begin(), beta.end(), 0L);
  for (int b : beta)
    if (b < 1) throw std::invalid_argument("gf_interval_check: beta must be strong");
  if (total != r) throw std::invalid_argument("gf_interval_check: beta must sum to r");
  if (N < 0) N = 2 * (r + 1);

  TruncSeries lhs(N);
  for (int j = 0; j <= N; ++j) {
    QPoly prod(1);
    for (int i = 1; i <= k; ++i) prod *= qint_or_zero(j + i).pow(beta[i - 1]);
    lhs.at(j) = prod;
  }

  TruncSeries num(N);
  for (int i = 0; i <= r - k; ++i) {
    Composition c(r, 0);
    for (int t = 0; t < k; ++t) c[i + t] = beta[t];
    num.at(i) = remixed(c);
  }
  return lhs == num * t_pochhammer(r, N).inverse();
}

QHitResult qhit_from_partition(const std::vector<int>& lambda) {
  int r = static_cast<int>(lambda.size());
  for (int i = 0; i < r; ++i) {
    if (lambda[i] < 0 || lambda[i] > r)
      throw std::invalid_argument("qhit: partition must fit in the r x r square");
    if (i + 1 < r && lambda[i] < lambda[i + 1])
      throw std::invalid_argument("qhit: partition must be weakly decreasing");
  }
  std::vector<int> values(r);
  for (int i = 1; i <= r; ++i) values[i - 1] = i - lambda[r - i];
  int a = *std::min_element(values.begin(), values.end());
  int top = *std::max_element(values.begin(), values.end());
  int k = top - a + 1;
  Composition beta(k, 0);
  for (int v : values) ++beta[v - a];
  for (int b : beta)
    if (b == 0) throw std::logic_error("qhit: values do not form an interval");

  QHitResult res;
  res.a = a;
  res.beta = beta;
  res.hits.assign(r + 1, QPoly());
  int lo = (a == 1) ? 0 : 1 - a;
  int hi = (a == 1) ? r - k : r - k + 1 - a;
  for (int j = lo; j <= hi; ++j) {
    int zeros_before = (a == 1) ? j : j - 1 + a;
    Composition c(r, 0);
    for (int t = 0; t < k; ++t) c[zeros_before + t] = beta[t];
    res.hits[j] = remixed(c);
  }
  return res;
}

bool check_qhit_gf(const std::vector<int>& lambda, int N) {
  int r = static_cast<int>(lambda.size());
  if (N < 0) N = 2 * (r + 1);
  QHitResult res = qhit_from_partition(lambda);

  TruncSeries lhs(N);
  for (int j = 0; j <= N; ++j) {
    QPoly prod(1);
    for (int i = 1; i <= r; ++i) prod *= qint_or_zero(i - lambda[r - i] + j);
    lhs.at(j) = prod;
  }
  TruncSeries num(N);
  for (int j = 0; j <= std::min(N, r); ++j) num.at(j) = res.hits[j];
  return lhs == num * t_pochhammer(r, N).inverse();
}

bool check_parking(int r) {
  if (r < 1 || r > 6) throw std::invalid_argument("check_parking: r out of range");
  QRat route1;
  QPoly route2;
  for (const auto& c : all_compositions(r)) {
    QPoly den(1);
    for (int ci : c) den *= qfact(ci);
    route1 += QRat(remixed(c), den);
    bool dominant = true;
    int pre = 0;
    for (int j = 0; j < r && dominant; ++j) {
      pre += c[j];
      if (pre < j + 1) dominant = false;
    }
    if (dominant) route2 += qfact(r).exact_div(den);
  }
  QPoly route3;
  for (const auto& f : parking_functions(r)) route3 += QPoly::monomial(inv_count(f));
  return route1 == QRat(route2) && route2 == route3;
}

namespace {

std::vector<Composition> strong_compositions(int r) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= rem; ++v) {
      cur.push_back(v);
      rec(rem - v);
      cur.pop_back();
    }
  };
  rec(r);
  return out;
}

std::vector<std::vector<int>> partitions_in_square(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, r);
  return out;
}

std::string comp_str(const Composition& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_suite(int r, const std::vector<std::string>& selection) {
  std::vector<std::string> names = selection;
  const std::vector<std::string> all = {"carlitz",     "two_block", "catalan",
                                        "cyclic",      "gf_interval", "qhit",
                                        "parking",     "reversal",  "degree_valuation",
                                        "psu",         "product"};
  if (names.size() == 1 && names[0] == "all") names = all;
  for (const auto& n : names)
    if (std::find(all.begin(), all.end(), n) == all.end())
      throw std::invalid_argument("unknown check: " + n);

  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, bool pass, const std::string& witness = "") {
    results.push_back({name, r, pass, pass ? "" : witness});
  };

  for (const auto& name : names) {
    if (name == "carlitz") {
      add(name, check_carlitz(r));
    } else if (name == "two_block") {
      add(name, check_two_block_all(r));
    } else if (name == "catalan") {
      add(name, check_catalan_sum(r));
    } else if (name == "cyclic") {
      add(name, check_cyclic(r));
    } else if (name == "gf_interval") {
      bool ok = true;
      std::string witness;
      for (const auto& beta : strong_compositions(r))
        if (!gf_interval_check(beta, r)) {
          ok = false;
          witness = "beta=" + comp_str(beta);
          break;
        }
      add(name, ok, witness);
    } else if (name == "qhit") {
      bool ok = true;
      std::string witness;
      for (const auto& lambda : partitions_in_square(r)) {
        if (!check_qhit_gf(lambda)) {
          ok = false;
          witness = "lambda=" + comp_str(lambda);
          break;
        }
        QHitResult res = qhit_from_partition(lambda);
        Rat total = 0;
        for (const auto& h : res.hits) total += h.eval_at(1);
        if (total != Rat(factorial(r))) {
          ok = false;
          witness = "lambda=" + comp_str(lambda) + " (hit sum)";
          break;
        }
      }
      add(name, ok, witness);
    } else if (name == "parking") {
      add(name, check_parking(r));
    } else if (name == "reversal") {
      bool ok = true;
      std::string witness;
      int N = r * (r - 1) / 2;
      for (const auto& c : all_compositions(r)) {
        Composition rev(c.rbegin(), c.rend());
        if (remixed(c) != remixed(rev).reverse_scale(N)) {
          ok = false;
          witness = "c=" + comp_str(c);
          break;
        }
      }
      add(name, ok, witness);
    } else if (name == "degree_valuation") {
      bool ok = true;
      std::string witness;
      for (const auto& c : all_compositions(r)) {
        QPoly a = remixed(c);
        if (a.valuation() != valuation_of(c) || a.degree() != degree_of(c)) {
          ok = false;
          witness = "c=" + comp_str(c);
          break;
        }
      }
      add(name, ok, witness);
    } else if (name == "psu") {
      bool ok = true;
      std::string witness;
      for (const auto& c : all_compositions(r)) {
        auto center = remixed(c).is_psu();
        if (!center || *center != psu_center_of(c)) {
          ok = false;
          witness = "c=" + comp_str(c);
          break;
        }
      }
      add(name, ok, witness);
    } else if (name == "product") {
      bool ok = true;
      std::string witness;
      for (const auto& c : all_compositions(r)) {
        for (int k : ebr_all_k(c)) {
          if (product_formula_with_k(c, k) != remixed(c)) {
            ok = false;
            witness = "c=" + comp_str(c) + " k=" + std::to_string(k);
            break;
          }
        }
        if (!ok) break;
      }
      add(name, ok, witness);
    }
  }
  return results;
}

}  // namespace remixed
