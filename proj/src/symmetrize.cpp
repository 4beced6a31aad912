#include "remixed/symmetrize.hpp"

#include <numeric>

#include "remixed/recurrence.hpp"

namespace remixed {

MPoly MPoly::constant(int nvars, const QPoly& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("MPoly::variable: index out of range");
  MPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  p.add_term(e, QPoly(1));
  return p;
}

void MPoly::add_term(const std::vector<int>& expo, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MPoly MPoly::operator*(const QPoly& s) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

MPoly MPoly::pow(int e) const {
  MPoly r = MPoly::constant(nvars_, QPoly(1));
  MPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MPoly::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

MPoly MPoly::permute_vars(const Perm& sigma) const {
  MPoly out(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[sigma[i] - 1] = e1[i];
    out.add_term(e, c);
  }
  return out;
}

QPoly MPoly::constant_value() const {
  if (terms_.empty()) return QPoly();
  if (terms_.size() != 1 || terms_.begin()->first != std::vector<int>(nvars_, 0))
    throw std::logic_error("MPoly::constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

namespace {

int perm_sign(const Perm& sigma) {
  return inv_count(sigma) % 2 == 0 ? 1 : -1;
}

/// Exact synthetic division by (x_i - x_j), 1-based indices. The dividend
/// must vanish at x_i = x_j.
MPoly divide_linear(const MPoly& f, int i, int j) {
  int n = f.nvars();
  // group by the exponent of x_i
  std::map<int, MPoly> layers;
  for (const auto& [e, c] : f.terms()) {
    int k = e[i - 1];
    std::vector<int> rest(e);
    rest[i - 1] = 0;
    auto it = layers.find(k);
    if (it == layers.end()) it = layers.emplace(k, MPoly(n)).first;
    it->second.add_term(rest, c);
  }
  if (layers.empty()) return MPoly(n);
  int d = layers.rbegin()->first;
  MPoly xj = MPoly::variable(n, j);
  auto layer = [&](int k) { return layers.count(k) ? layers.at(k) : MPoly(n); };

  std::vector<MPoly> quot(std::max(d, 1), MPoly(n));
  MPoly carry(n);
  for (int k = d; k >= 1; --k) {
    MPoly bk = layer(k) + carry;   // coefficient of x_i^{k-1} in the quotient
    quot[k - 1] = bk;
    carry = xj * bk;
  }
  MPoly rem = layer(0) + carry;
  if (!rem.is_zero())
    throw ExactnessError("divide_linear: dividend not divisible by (x_i - x_j)");

  MPoly out(n);
  for (int k = 0; k < d; ++k) {
    for (const auto& [e, c] : quot[k].terms()) {
      std::vector<int> e2(e);
      e2[i - 1] += k;
      out.add_term(e2, c);
    }
  }
  return out;
}

}  // namespace

MPoly antisymmetrize(const MPoly& f) {
  int n = f.nvars();
  MPoly out(n);
  Perm sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    MPoly g = f.permute_vars(sigma);
    if (perm_sign(sigma) < 0) g = MPoly(n) - g;
    out = out + g;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

MPoly divided_diff_wo(const MPoly& f) {
  int n = f.nvars();
  MPoly g = antisymmetrize(f);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g = divide_linear(g, i, j);
  return g;
}

QPoly qds(const MPoly& f, int r) {
  if (f.nvars() != r + 1)
    throw std::invalid_argument("qds: f must live in r+1 variables");
  if (!f.is_zero() && !f.is_homogeneous(r)) {
    // degree < r is allowed and gives 0 (the divided difference kills it)
    int d = f.total_degree();
    if (d > r || !f.is_homogeneous(d))
      throw std::invalid_argument("qds: f must be homogeneous of degree <= r");
  }
  int n = r + 1;
  MPoly g(f);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      // q x_i - x_j
      MPoly factor = MPoly::variable(n, i) * QPoly::monomial(1) - MPoly::variable(n, j);
      g = g * factor;
    }
  }
  return divided_diff_wo(g).constant_value();
}

MPoly y_c(const Composition& c) {
  if (!is_in_wr(c)) throw std::invalid_argument("y_c: c not in W_r");
  int r = static_cast<int>(c.size());
  int n = r + 1;
  MPoly out = MPoly::constant(n, QPoly(1));
  MPoly prefix(n);
  for (int i = 1; i <= r; ++i) {
    prefix = prefix + MPoly::variable(n, i);
    if (c[i - 1] > 0) out = out * prefix.pow(c[i - 1]);
  }
  return out;
}

QPoly remixed_via_qds(const Composition& c, int bound) {
  int r = static_cast<int>(c.size());
  if (r > bound) throw std::invalid_argument("remixed_via_qds: r beyond oracle bound");
  return qds(y_c(c), r);
}

QPoly qvolume_expansion(const std::vector<Rat>& mu) {
  int r = static_cast<int>(mu.size());
  QPoly total;
  for (const auto& c : all_compositions(r)) {
    Rat coeff = 1;
    bool zero = false;
    for (int i = 0; i < r && !zero; ++i) {
      if (c[i] == 0) continue;
      if (mu[i] == 0) {
        zero = true;
        break;
      }
      Rat p = 1;
      for (int k = 0; k < c[i]; ++k) p *= mu[i];
      coeff *= p / Rat(factorial(c[i]));
    }
    if (!zero) total += remixed(c) * coeff;
  }
  return total;
}

QPoly qvolume_direct(const std::vector<Rat>& lambda, int bound) {
  int r = static_cast<int>(lambda.size()) - 1;
  if (r < 0) throw std::invalid_argument("qvolume_direct: need at least one entry");
  if (r > bound) throw std::invalid_argument("qvolume_direct: r beyond oracle bound");
  int n = r + 1;
  MPoly lin(n);
  for (int i = 1; i <= n; ++i)
    lin = lin + MPoly::variable(n, i) * QPoly(lambda[i - 1]);
  // qds((sum mu_i p_i)^r) expands multinomially into r!/prod(c_i!) * mu^c * A_c,
  // so dividing by r! matches the A_c-expansion of V^q exactly.
  return qds(lin.pow(r), r) * Rat(Rat(1) / Rat(factorial(r)));
}

bool mixed_sum_check(int r) {
  if (r < 1 || r > 7) throw std::invalid_argument("mixed_sum_check: r out of range");
  QPoly lhs;
  for (const auto& c : all_compositions(r)) {
    Rat denom = 1;
    for (int ci : c) denom *= Rat(factorial(ci));
    lhs += remixed(c) * Rat(Rat(1) / denom);
  }
  Rat scale = Rat(Int(1));
  Int pw = 1;
  for (int k = 0; k < r - 1; ++k) pw *= (r + 1);
  scale = Rat(pw) / Rat(factorial(r));
  return lhs == qfact(r) * scale;
}

}  // namespace remixed
