#include "remixed/comb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace remixed {

void require_nonnegative(const Composition& c) {
  for (int x : c)
    if (x < 0) throw std::invalid_argument("composition has a negative part");
}

bool is_in_wr(const Composition& c) {
  require_nonnegative(c);
  long sum = std::accumulate(c.begin(), c.end(), 0L);
  return sum == static_cast<long>(c.size());
}

std::vector<Composition> all_compositions(int r) {
  if (r < 0) throw std::invalid_argument("all_compositions: negative r");
  std::vector<Composition> out;
  Composition cur(r, 0);
  // lexicographic enumeration of nonnegative vectors of length r summing to r
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == r) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (pos == r - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
    cur[pos] = 0;
  };
  if (r == 0) return {Composition{}};
  rec(rec, 0, r);
  return out;
}

std::vector<Interval> support_intervals(const Composition& c) {
  require_nonnegative(c);
  std::vector<Interval> out;
  int r = static_cast<int>(c.size());
  int i = 1;
  while (i <= r) {
    if (c[i - 1] > 0) {
      int a = i;
      while (i <= r && c[i - 1] > 0) ++i;
      out.push_back({a, i - 1});
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<int> support_interval_sizes(const Composition& c) {
  std::vector<int> out;
  for (const auto& iv : support_intervals(c)) out.push_back(iv.b - iv.a + 1);
  return out;
}

namespace {
Interval interval_containing(const Composition& c, int i) {
  for (const auto& iv : support_intervals(c))
    if (iv.a <= i && i <= iv.b) return iv;
  throw std::logic_error("site not in support");
}
}  // namespace

std::optional<Composition> left_move(const Composition& c, int i) {
  if (i < 1 || i > static_cast<int>(c.size()) || c[i - 1] < 2)
    throw std::invalid_argument("left_move: requires c_i >= 2");
  Interval iv = interval_containing(c, i);
  if (iv.a == 1) return std::nullopt;
  Composition out(c);
  out[i - 1] -= 1;
  out[iv.a - 2] += 1;
  return out;
}

std::optional<Composition> right_move(const Composition& c, int i) {
  if (i < 1 || i > static_cast<int>(c.size()) || c[i - 1] < 2)
    throw std::invalid_argument("right_move: requires c_i >= 2");
  Interval iv = interval_containing(c, i);
  if (iv.b == static_cast<int>(c.size())) return std::nullopt;
  Composition out(c);
  out[i - 1] -= 1;
  out[iv.b] += 1;
  return out;
}

std::vector<int> heights(const Composition& c) {
  std::vector<int> h(c.size());
  int acc = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    acc += c[i] - 1;
    h[i] = acc;
  }
  return h;
}

long H_sum(const Composition& c) {
  auto h = heights(c);
  long s = 0;
  for (size_t i = 0; i + 1 < h.size(); ++i) s += h[i];
  return s;
}

long H_minus(const Composition& c) {
  auto h = heights(c);
  long s = 0;
  for (size_t i = 0; i + 1 < h.size(); ++i) s += std::max(0, -h[i]);
  return s;
}

long valuation_of(const Composition& c) { return H_minus(c); }

long degree_of(const Composition& c) {
  int r = static_cast<int>(c.size());
  auto h = heights(c);
  long plus = 0;
  for (size_t i = 0; i + 1 < h.size(); ++i) plus += std::max(0, h[i]);
  return static_cast<long>(r) * (r - 1) / 2 - plus;
}

Rat psu_center_of(const Composition& c) {
  int r = static_cast<int>(c.size());
  return Rat(static_cast<long>(r) * (r - 1) / 2 - H_sum(c)) / 2;
}

std::vector<int> ebr_all_k(const Composition& c) {
  int r = static_cast<int>(c.size());
  std::vector<int> ks;
  for (int k = 0; k <= r; ++k) {
    bool ok = true;
    int pre = 0;
    for (int j = 1; j <= k && ok; ++j) {
      pre += c[j - 1];
      if (pre < j) ok = false;
    }
    int suf = 0;
    for (int j = 1; j <= r - k && ok; ++j) {
      suf += c[r - j];
      if (suf < j) ok = false;
    }
    if (ok) ks.push_back(k);
  }
  return ks;
}

std::optional<int> ebr_decompose(const Composition& c) {
  auto ks = ebr_all_k(c);
  if (ks.empty()) return std::nullopt;
  return ks.front();
}

std::vector<Composition> cyc_class(const Composition& c) {
  if (!is_in_wr(c)) throw std::invalid_argument("cyc_class: c not in W_r");
  int r = static_cast<int>(c.size());
  Composition ext(c);
  ext.push_back(0);
  std::set<Composition> cls;
  for (int s = 0; s <= r; ++s) {
    Composition rot(r + 1);
    for (int i = 0; i <= r; ++i) rot[i] = ext[(i + s) % (r + 1)];
    if (rot[r] == 0) cls.insert(Composition(rot.begin(), rot.begin() + r));
  }
  return {cls.begin(), cls.end()};
}

Composition content(const Word& word, int r) {
  Composition c(r, 0);
  for (int x : word) {
    if (x < 1 || x > r) throw std::invalid_argument("content: letter out of range");
    ++c[x - 1];
  }
  return c;
}

Word canonical_word(const Composition& c) {
  require_nonnegative(c);
  Word w;
  for (size_t i = 0; i < c.size(); ++i)
    for (int k = 0; k < c[i]; ++k) w.push_back(static_cast<int>(i) + 1);
  return w;
}

PermStats perm_stats(const Perm& sigma) {
  PermStats st{0, 0, 0};
  int n = static_cast<int>(sigma.size());
  for (int i = 1; i < n; ++i) {
    if (sigma[i - 1] > sigma[i]) {
      ++st.des;
      st.maj += i;
    }
  }
  st.inv = inv_count(sigma);
  return st;
}

std::vector<int> code(const Perm& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j]) ++c[i];
  return c;
}

std::vector<Perm> all_permutations(int n, int bound) {
  if (n < 0 || n > bound)
    throw std::invalid_argument("all_permutations: n beyond enumeration bound");
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int inv_count(const std::vector<int>& f) {
  int inv = 0;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (f[i] > f[j]) ++inv;
  return inv;
}

std::vector<std::vector<int>> parking_functions(int r, int bound) {
  if (r < 0 || r > bound)
    throw std::invalid_argument("parking_functions: r beyond enumeration bound");
  std::vector<std::vector<int>> out;
  if (r == 0) return {std::vector<int>{}};
  std::vector<int> f(r, 1);
  while (true) {
    std::vector<int> sorted(f);
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int i = 0; i < r; ++i)
      if (sorted[i] > i + 1) {
        ok = false;
        break;
      }
    if (ok) out.push_back(f);
    // odometer over [1, r]^r
    int pos = r - 1;
    while (pos >= 0 && f[pos] == r) f[pos--] = 1;
    if (pos < 0) break;
    ++f[pos];
  }
  return out;
}

Composition parse_composition(const std::string& s) {
  Composition c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0)
      throw std::invalid_argument("bad composition entry: " + tok);
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty composition");
  return c;
}

Word parse_word(const std::string& s) {
  if (s.find(',') != std::string::npos) {
    Composition parts = parse_composition(s);
    return Word(parts.begin(), parts.end());
  }
  Word w;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("bad word digit");
    w.push_back(ch - '0');
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

}  // namespace remixed
