#include "remixed/qpoly.hpp"

#include <sstream>

namespace remixed {

namespace {
const Rat kZero = 0;
}

QPoly::QPoly(int constant) {
  if (constant != 0) c_.push_back(Rat(constant));
}

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int k, const Rat& coeff) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = coeff;
  }
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

int QPoly::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  int v = 0;
  while (c_[v] == 0) ++v;
  return v;
}

const Rat& QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

bool QPoly::is_integral() const {
  for (const auto& a : c_)
    if (!is_integer(a)) return false;
  return true;
}

bool QPoly::has_nonnegative_coeffs() const {
  for (const auto& a : c_)
    if (a < 0) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& a : r.c_) a = -a;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  QPoly r(1), base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rat QPoly::eval_at(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  QPoly rem(*this);
  QPoly quot;
  int db = b.degree();
  const Rat& lead = b.c_[db];
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rat f = rem.c_[rem.degree()] / lead;
    quot += QPoly::monomial(k, f);
    rem -= QPoly::monomial(k, f) * b;
  }
  return {quot, rem};
}

QPoly QPoly::exact_div(const QPoly& b) const {
  auto [q, r] = divmod(b);
  if (!r.is_zero())
    throw ExactnessError("exact_div: nonzero remainder dividing " + to_string() +
                         " by " + b.to_string());
  return q;
}

QPoly QPoly::reverse_scale(int N) const {
  if (is_zero()) return QPoly();
  if (N < degree()) throw std::invalid_argument("reverse_scale: N < degree");
  std::vector<Rat> out(N + 1, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) out[N - k] = c_[k];
  return QPoly(std::move(out));
}

std::optional<Rat> QPoly::is_psu() const {
  if (is_zero()) return std::nullopt;
  int v = valuation(), d = degree();
  for (int k = v; k <= d; ++k) {
    if (c_[k] <= 0) return std::nullopt;                 // positivity (no internal zeros)
    if (c_[k] != c_[v + d - k]) return std::nullopt;     // symmetry
  }
  for (int k = v; k + 1 <= (v + d) / 2; ++k)
    if (c_[k] > c_[k + 1]) return std::nullopt;          // unimodality up to the middle
  return Rat(v + d) / 2;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (!unit || k == 0) os << rat_to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

QPoly qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  return QPoly(std::vector<Rat>(n, Rat(1)));
}

QPoly qint_or_zero(int n) { return n <= 0 ? QPoly() : qint(n); }

QPoly qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  QPoly r(1);
  for (int i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

QPoly qbinom(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
  return qfact(n).exact_div(qfact(k) * qfact(n - k));
}

}  // namespace remixed
