#pragma once

// Symmetric functions over a finite label alphabet, stored in the power-sum
// basis: p_rho for a multipartition rho is the product over labels a and parts
// r of rho(a) of p_r(a).  Schur, Schur Q and Jack functions exist only as
// expansions in this basis.

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wg/cyclo.hpp"
#include "wg/partitions.hpp"

namespace wg {

class SymFuncElem {
 public:
  using Terms = std::map<MultiPartition, CycNum>;

  SymFuncElem() : alphabet_{"x"} {}
  explicit SymFuncElem(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}

  /// c * p_rho(label) for a single-label power sum.
  static SymFuncElem power_sum(std::vector<std::string> alphabet, std::size_t label, const Partition& rho,
                               const CycNum& c = 1) {
    SymFuncElem f(std::move(alphabet));
    MultiPartition key(f.alphabet_.size());
    key[label] = rho;
    f.add_term(key, c);
    return f;
  }
  static SymFuncElem power_sum(const Partition& rho, const CycNum& c = 1) { return power_sum({"x"}, 0, rho, c); }
  static SymFuncElem constant(std::vector<std::string> alphabet, const CycNum& c) {
    SymFuncElem f(std::move(alphabet));
    f.add_term(MultiPartition(f.alphabet_.size()), c);
    return f;
  }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CycNum coefficient(const MultiPartition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? CycNum() : it->second;
  }
  /// Single-label convenience.
  CycNum coefficient(const Partition& rho) const {
    MultiPartition key(alphabet_.size());
    key[0] = rho;
    return coefficient(key);
  }

  void add_term(const MultiPartition& key, const CycNum& c) {
    if (key.labels() != alphabet_.size()) throw DomainError("term does not match the alphabet");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Weight of the terms, or -1 when the element mixes degrees (0 for the zero element).
  int degree() const {
    int d = -2;
    for (const auto& [key, c] : terms_) {
      const int w = key.weight();
      if (d == -2) {
        d = w;
      } else if (d != w) {
        return -1;
      }
    }
    return d == -2 ? 0 : d;
  }

  SymFuncElem& operator+=(const SymFuncElem& other) {
    check_alphabet(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }
  SymFuncElem& operator-=(const SymFuncElem& other) {
    check_alphabet(other);
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
  }
  SymFuncElem& operator*=(const CycNum& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend SymFuncElem operator+(SymFuncElem a, const SymFuncElem& b) { return a += b; }
  friend SymFuncElem operator-(SymFuncElem a, const SymFuncElem& b) { return a -= b; }
  friend SymFuncElem operator*(SymFuncElem a, const CycNum& s) { return a *= s; }
  friend SymFuncElem operator*(const CycNum& s, SymFuncElem a) { return a *= s; }

  friend SymFuncElem operator*(const SymFuncElem& a, const SymFuncElem& b) {
    a.check_alphabet(b);
    SymFuncElem out(a.alphabet_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.merged(kb), ca * cb);
    }
    return out;
  }

  friend bool operator==(const SymFuncElem& a, const SymFuncElem& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*p[" + key.to_string(alphabet_) + "]";
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, c] : terms_) {
      nlohmann::json labels = nlohmann::json::object();
      for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (!key[i].empty()) labels[alphabet_[i]] = key[i].parts();
      }
      arr.push_back({{"labels", labels}, {"coeff", c.to_string()}});
    }
    return arr;
  }

 private:
  void check_alphabet(const SymFuncElem& other) const {
    if (other.alphabet_ != alphabet_) throw DomainError("symmetric functions over different alphabets");
  }

  std::vector<std::string> alphabet_;
  Terms terms_;
};

/// The ring homomorphism p_r(a) -> sum_b coeff(a, b, r) p_r(b).
inline SymFuncElem change_alphabet(const SymFuncElem& f, const std::vector<std::string>& target,
                                   const std::function<CycNum(std::size_t, std::size_t, int)>& coeff) {
  std::map<std::pair<std::size_t, int>, SymFuncElem> image;
  auto image_of = [&](std::size_t a, int r) -> const SymFuncElem& {
    auto it = image.find({a, r});
    if (it != image.end()) return it->second;
    SymFuncElem g(target);
    for (std::size_t b = 0; b < target.size(); ++b) g += SymFuncElem::power_sum(target, b, Partition{r}, coeff(a, b, r));
    return image.emplace(std::make_pair(a, r), std::move(g)).first->second;
  };
  SymFuncElem out(target);
  for (const auto& [key, c] : f.terms()) {
    SymFuncElem term = SymFuncElem::constant(target, c);
    for (std::size_t a = 0; a < key.labels(); ++a) {
      for (int r : key[a].parts()) term = term * image_of(a, r);
    }
    out += term;
  }
  return out;
}

/// p_r -> c p_r on every label, i.e. the coefficient of p_rho picks up c^{l(rho)}.
inline SymFuncElem psi_twist(const SymFuncElem& f, const Rational& c) {
  SymFuncElem out(f.alphabet());
  for (const auto& [key, coeff] : f.terms()) {
    int len = 0;
    for (const auto& p : key.components()) len += p.length();
    out.add_term(key, coeff * CycNum(rational_pow(c, len)));
  }
  return out;
}

/// Degree-by-degree substitution p_r(a) -> s(r) p_r(a) for an arbitrary scalar per degree.
inline SymFuncElem scale_by_degree(const SymFuncElem& f, const std::function<CycNum(int)>& s) {
  SymFuncElem out(f.alphabet());
  for (const auto& [key, coeff] : f.terms()) {
    CycNum c = coeff;
    for (const auto& p : key.components()) {
      for (int r : p.parts()) c *= s(r);
    }
    out.add_term(key, c);
  }
  return out;
}

/// Embeds a single-label element into label `label` of a larger alphabet.
inline SymFuncElem relabel(const SymFuncElem& f, const std::vector<std::string>& alphabet, std::size_t label) {
  if (f.alphabet().size() != 1) throw DomainError("relabel expects a single-label element");
  SymFuncElem out(alphabet);
  for (const auto& [key, c] : f.terms()) {
    MultiPartition k(alphabet.size());
    k[label] = key[0];
    out.add_term(k, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric group characters

namespace detail {

// Beta-set of lambda with exactly `len` beads.
inline std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beads(len);
  for (int i = 0; i < len; ++i) beads[i] = lambda[i] + (len - 1 - i);
  return beads;
}

inline Partition from_beta_set(std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<>());
  const int len = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beads[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

/// Every r-rim hook of lambda: (lambda minus the hook, leg length).
inline std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  std::vector<std::pair<Partition, int>> out;
  const int len = lambda.length() + r;
  auto beads = beta_set(lambda, len);
  std::set<int> occupied(beads.begin(), beads.end());
  for (int i = 0; i < len; ++i) {
    const int b = beads[i];
    if (b - r < 0 || occupied.count(b - r)) continue;
    int leg = 0;
    for (int x : beads) {
      if (x > b - r && x < b) ++leg;
    }
    auto moved = beads;
    moved[i] = b - r;
    out.emplace_back(from_beta_set(std::move(moved)), leg);
  }
  return out;
}

}  // namespace detail

/// chi^lambda evaluated at cycle type rho, by Murnaghan-Nakayama.
inline Integer sym_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw DomainError("character weight mismatch: " + lambda.to_string() + " vs " + rho.to_string());
  }
  if (rho.empty()) return 1;
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Integer> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({lambda, rho}); it != memo.end()) return it->second;
  }
  // Strip the largest part first; the rest of rho stays sorted.
  const int r = rho[0];
  std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
  const Partition tail(rest);
  Integer value = 0;
  for (const auto& [smaller, leg] : detail::remove_rim_hooks(lambda, r)) {
    const Integer v = sym_character(smaller, tail);
    if (leg % 2 == 0) {
      value += v;
    } else {
      value -= v;
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(lambda, rho), value);
  return value;
}

/// s_lambda = sum_rho z_rho^{-1} chi^lambda_rho p_rho.
inline SymFuncElem schur_p(const Partition& lambda) {
  SymFuncElem f;
  for (const auto& rho : enumerate_partitions(lambda.size())) {
    const Integer chi = sym_character(lambda, rho);
    if (chi != 0) f += SymFuncElem::power_sum(rho, CycNum(Rational(chi, z_value(rho))));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Schur Q-functions

/// q_r from sum_r q_r t^r = exp(2 sum_{k odd} p_k t^k / k), via r q_r = sum_{k odd} 2 p_k q_{r-k}.
inline SymFuncElem schur_q_row(int r) {
  static std::mutex mutex;
  static std::map<int, SymFuncElem> memo;
  if (r < 0) return SymFuncElem();
  if (r == 0) return SymFuncElem::constant({"x"}, 1);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(r); it != memo.end()) return it->second;
  }
  SymFuncElem q;
  for (int k = 1; k <= r; k += 2) q += SymFuncElem::power_sum(Partition{k}, 2) * schur_q_row(r - k);
  q *= CycNum(Rational(1, r));
  std::lock_guard lock(mutex);
  return memo.emplace(r, q).first->second;
}

namespace detail {

// Q_{(a,b)} for a > b >= 0 (b may be 0, giving q_a).
inline SymFuncElem schur_q_pair(int a, int b) {
  SymFuncElem f = schur_q_row(a) * schur_q_row(b);
  for (int i = 1; i <= b; ++i) {
    const SymFuncElem t = schur_q_row(a + i) * schur_q_row(b - i) * CycNum(2);
    if (i % 2 == 0) {
      f += t;
    } else {
      f -= t;
    }
  }
  return f;
}

// Pfaffian expansion along the first row of the antisymmetric matrix Q_{(l_i, l_j)}.
inline SymFuncElem schur_q_pfaffian(const std::vector<int>& parts) {
  if (parts.empty()) return SymFuncElem::constant({"x"}, 1);
  SymFuncElem f;
  for (std::size_t j = 1; j < parts.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      if (k != j) rest.push_back(parts[k]);
    }
    SymFuncElem t = schur_q_pair(parts[0], parts[j]) * schur_q_pfaffian(rest);
    if (j % 2 == 1) {
      f += t;
    } else {
      f -= t;
    }
  }
  return f;
}

}  // namespace detail

inline SymFuncElem schur_Q(const Partition& lambda) {
  if (!lambda.is_strict()) throw DomainError("Schur Q-function needs a strict partition, got " + lambda.to_string());
  std::vector<int> parts = lambda.parts();
  if (parts.size() % 2 == 1) parts.push_back(0);
  return detail::schur_q_pfaffian(parts);
}

// ---------------------------------------------------------------------------
// Jack functions

namespace detail {

// Number of ways to distribute the parts of rho into boxes of sizes lambda;
// this is the coefficient of m_lambda in p_rho.
inline Integer power_to_monomial(const Partition& rho, const Partition& lambda) {
  std::vector<int> room = lambda.parts();
  Integer count = 0;
  std::function<void(int)> place = [&](int j) {
    if (j == rho.length()) {
      count += 1;
      return;
    }
    for (auto& slot : room) {
      if (slot >= rho[j]) {
        slot -= rho[j];
        place(j + 1);
        slot += rho[j];
      }
    }
  };
  if (rho.size() == lambda.size()) place(0);
  return count;
}

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw MathViolation("singular transition matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational m = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= m * a[col][k];
        inv[row][k] -= m * inv[col][k];
      }
    }
  }
  return inv;
}

// Rational vectors indexed by enumerate_partitions(n).
using PVec = std::vector<Rational>;

inline Rational alpha_inner(const PVec& a, const PVec& b, const std::vector<Partition>& basis, const Rational& alpha) {
  Rational s = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    s += a[i] * b[i] * Rational(z_value(basis[i])) * rational_pow(alpha, basis[i].length());
  }
  return s;
}

}  // namespace detail

/// <p_lambda, p_mu>_alpha = delta z_lambda alpha^{l(lambda)}, on single-label elements.
inline CycNum alpha_inner_product(const SymFuncElem& f, const SymFuncElem& g, const Rational& alpha) {
  CycNum s;
  for (const auto& [key, c] : f.terms()) {
    auto it = g.terms().find(key);
    if (it == g.terms().end()) continue;
    s += c * it->second.conjugate() * CycNum(Rational(z_value(key[0])) * rational_pow(alpha, key[0].length()));
  }
  return s;
}

/// Monomial symmetric function m_lambda in the power-sum basis.
inline SymFuncElem monomial_p(const Partition& lambda) {
  const auto basis = enumerate_partitions(lambda.size());
  std::vector<std::vector<Rational>> r(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) r[i][j] = Rational(detail::power_to_monomial(basis[i], basis[j]));
  }
  // p = R m, so m = R^{-1} p.
  const auto inv = detail::invert(r);
  const auto idx = std::find(basis.begin(), basis.end(), lambda) - basis.begin();
  SymFuncElem f;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(inv[idx][j]) != 0) f += SymFuncElem::power_sum(basis[j], CycNum(inv[idx][j]));
  }
  return f;
}

/// J_lambda^(alpha), normalized so that the coefficient of m_{1^n} is n!.
/// Built by Gram-Schmidt on monomials in increasing lexicographic order.
inline SymFuncElem jack_p(const Partition& lambda, const Rational& alpha) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Rational>, SymFuncElem> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({lambda, alpha}); it != memo.end()) return it->second;
  }
  const int n = lambda.size();
  auto basis = enumerate_partitions(n);  // decreasing lex order
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> r(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) r[i][j] = Rational(detail::power_to_monomial(basis[i], basis[j]));
  }
  const auto inv = detail::invert(r);
  // Row j of inv is m_{basis[j]} in the p-basis.
  std::vector<detail::PVec> done;
  detail::PVec target;
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t j = k - 1 - step;  // increasing lex order
    detail::PVec v = inv[j];
    for (const auto& u : done) {
      const Rational c = detail::alpha_inner(v, u, basis, alpha) / detail::alpha_inner(u, u, basis, alpha);
      for (std::size_t t = 0; t < k; ++t) v[t] -= c * u[t];
    }
    done.push_back(v);
    if (basis[j] == lambda) {
      target = v;
      break;
    }
  }
  // [m_{1^n}] f = sum_rho f_rho R[rho][1^n].
  Rational lead = 0;
  for (std::size_t i = 0; i < k; ++i) lead += target[i] * r[i][k - 1];
  const Rational scale = Rational(factorial(n)) / lead;
  SymFuncElem f;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(target[i]) != 0) f += SymFuncElem::power_sum(basis[i], CycNum(target[i] * scale));
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(lambda, alpha), f);
  return f;
}

}  // namespace wg
