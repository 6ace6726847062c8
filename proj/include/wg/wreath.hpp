#pragma once

// Wreath products SG_n = G wr S_n, the subgroup HG_n of SG_{2n}, its linear
// characters Theta_{xi,pi}, double-coset representatives and the label sets
// on both sides of the Gelfand-triple correspondence.
//
// Elements are (g_1..g_n : sigma) with 0-indexed one-line sigma, multiplied by
//   (g : s)(h : t) = (g_i h_{s^{-1}(i)} : s t),   (s t)(i) = s(t(i)).

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wg/caps.hpp"
#include "wg/groups.hpp"
#include "wg/partitions.hpp"
#include "wg/symfunc.hpp"

namespace wg {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

inline int sign(const Perm& p) {
  std::vector<bool> seen(p.size());
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

/// Permutation from 1-indexed disjoint cycles on {1..n}.
inline Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity_perm(n);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

struct WreathElement {
  std::vector<int> base;
  Perm perm;

  int degree() const { return static_cast<int>(perm.size()); }
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

inline WreathElement wreath_identity(int n) { return {std::vector<int>(n, 0), identity_perm(n)}; }

inline WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& x, const WreathElement& y) {
  const int n = x.degree();
  const Perm xinv = inverse(x.perm);
  WreathElement z{std::vector<int>(n), compose(x.perm, y.perm)};
  for (int i = 0; i < n; ++i) z.base[i] = g.mul(x.base[i], y.base[xinv[i]]);
  return z;
}

inline WreathElement wreath_inv(const FiniteGroup& g, const WreathElement& x) {
  const int n = x.degree();
  WreathElement z{std::vector<int>(n), inverse(x.perm)};
  for (int j = 0; j < n; ++j) z.base[j] = g.inv(x.base[x.perm[j]]);
  return z;
}

/// [X_1, ..., X_m]: block-diagonal embedding.
inline WreathElement wreath_embed(const std::vector<WreathElement>& blocks) {
  WreathElement out;
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.degree(); ++i) {
      out.base.push_back(b.base[i]);
      out.perm.push_back(b.perm[i] + offset);
    }
    offset += b.degree();
  }
  return out;
}

/// Multipartition over the classes of G: for each cycle of sigma, its length
/// filed under the class of g_i g_{s^{-1} i} ... g_{s^{-(k-1)} i}.
inline MultiPartition class_type(const FiniteGroup& g, const WreathElement& x) {
  const int n = x.degree();
  const Perm xinv = inverse(x.perm);
  std::vector<std::vector<int>> parts(g.num_classes());
  std::vector<bool> seen(n);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int prod = 0;
    int len = 0;
    for (int j = i; !seen[j]; j = xinv[j]) {
      seen[j] = true;
      prod = g.mul(prod, x.base[j]);
      ++len;
    }
    parts[g.class_of(prod)].push_back(len);
  }
  std::vector<Partition> comps;
  for (auto& p : parts) comps.emplace_back(std::move(p));
  return MultiPartition(std::move(comps));
}

/// Calls f on every element of SG_m.
inline void for_each_wreath_element(const FiniteGroup& g, int m, const Caps& caps,
                                    const std::function<void(const WreathElement&)>& f) {
  Integer total = factorial(m);
  for (int i = 0; i < m; ++i) total *= g.order();
  caps.check_elements(total.fits_slong_p() ? total.get_si() : caps.elements + 1);
  Perm p = identity_perm(m);
  do {
    WreathElement x{std::vector<int>(m, 0), p};
    for (;;) {
      f(x);
      int i = 0;
      while (i < m && ++x.base[i] == g.order()) x.base[i++] = 0;
      if (i == m) break;
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

inline WreathElement random_wreath_element(const FiniteGroup& g, int m, std::mt19937& rng) {
  WreathElement x{std::vector<int>(m), identity_perm(m)};
  for (int& b : x.base) b = static_cast<int>(rng() % g.order());
  std::shuffle(x.perm.begin(), x.perm.end(), rng);
  return x;
}

// ---------------------------------------------------------------------------
// Characters of SG_n

/// |SG_n| / prod_c z_{tau(c)} zeta_c^{l(tau(c))}.
inline Integer wreath_class_size(const FiniteGroup& g, const MultiPartition& type) {
  const int n = type.weight();
  Integer order = factorial(n);
  for (int i = 0; i < n; ++i) order *= g.order();
  Integer denom = 1;
  for (int c = 0; c < g.num_classes(); ++c) {
    denom *= z_value(type[c]);
    for (int i = 0; i < type[c].length(); ++i) denom *= g.zeta(c);
  }
  return order / denom;
}

/// Irreducible characters chi^{lambda} of SG_n, lambda a multipartition over the
/// rows of the table, evaluated at class types by the wreath Murnaghan-Nakayama
/// rule: strip a cycle (r, c) from the type and an r-rim hook from one
/// component lambda(gamma), weighting by gamma(c) and (-1)^{leg}.
class WreathCharacters {
 public:
  explicit WreathCharacters(const CharacterTable& table) : table_(table) {}

  const CharacterTable& table() const { return table_; }

  CycNum value(const MultiPartition& label, const MultiPartition& type) const {
    if (label.weight() != type.weight()) throw DomainError("wreath character weight mismatch");
    if (label.labels() != static_cast<std::size_t>(table_.size()) ||
        type.labels() != static_cast<std::size_t>(table_.group().num_classes())) {
      throw DomainError("wreath character alphabet mismatch");
    }
    return eval(label, type);
  }

  CycNum value_at(const MultiPartition& label, const WreathElement& x) const {
    return value(label, class_type(table_.group(), x));
  }

  Integer dimension(const MultiPartition& label) const {
    MultiPartition type(table_.group().num_classes());
    type[0] = Partition(std::vector<int>(label.weight(), 1));
    return value(label, type).try_rational()->get_num();
  }

  std::vector<MultiPartition> labels(int n) const { return enumerate_multipartitions(table_.size(), n); }
  std::vector<MultiPartition> class_types(int n) const {
    return enumerate_multipartitions(table_.group().num_classes(), n);
  }

 private:
  CycNum eval(const MultiPartition& label, const MultiPartition& type) const {
    if (type.weight() == 0) return 1;
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find({label, type}); it != memo_.end()) return it->second;
    }
    std::size_t c = 0;
    while (type[c].empty()) ++c;
    const int r = type[c][0];
    MultiPartition rest = type;
    rest[c] = Partition(std::vector<int>(type[c].parts().begin() + 1, type[c].parts().end()));
    CycNum total;
    for (int gamma = 0; gamma < table_.size(); ++gamma) {
      if (label[gamma].size() < r) continue;
      const CycNum& weight = table_.value(gamma, static_cast<int>(c));
      if (weight.is_zero()) continue;
      CycNum inner;
      for (const auto& [smaller, leg] : detail::remove_rim_hooks(label[gamma], r)) {
        MultiPartition reduced = label;
        reduced[gamma] = smaller;
        const CycNum v = eval(reduced, rest);
        if (leg % 2 == 0) {
          inner += v;
        } else {
          inner -= v;
        }
      }
      total += weight * inner;
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(std::make_pair(label, type), total);
    return total;
  }

  const CharacterTable& table_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<MultiPartition, MultiPartition>, CycNum> memo_;
};

// ---------------------------------------------------------------------------
// Hyperoctahedral group and the linear characters of HG_n

enum class Pi { trivial, delta, iota, delta_iota };

inline const char* pi_name(Pi pi) {
  switch (pi) {
    case Pi::trivial:
      return "triv";
    case Pi::delta:
      return "delta";
    case Pi::iota:
      return "iota";
    case Pi::delta_iota:
      return "delta-iota";
  }
  return "?";
}

inline Pi parse_pi(const std::string& name) {
  for (Pi pi : {Pi::trivial, Pi::delta, Pi::iota, Pi::delta_iota}) {
    if (name == pi_name(pi)) return pi;
  }
  throw ParseError("unknown linear character of H_n '" + name + "'");
}

inline constexpr Pi kAllPi[] = {Pi::trivial, Pi::delta, Pi::iota, Pi::delta_iota};

/// +1 for pi in {1, delta}, -1 for pi in {iota, delta (x) iota}.
inline int epsilon(Pi pi) { return pi == Pi::trivial || pi == Pi::delta ? 1 : -1; }
inline bool has_delta(Pi pi) { return pi == Pi::delta || pi == Pi::delta_iota; }
/// The character with the delta factor removed.
inline Pi without_delta(Pi pi) { return epsilon(pi) == 1 ? Pi::trivial : Pi::iota; }

struct HyperoctDecomposition {
  std::vector<int> eps;  // eps_i in {0, 1}
  Perm tau;              // permutation of the blocks {2i, 2i+1}
  int delta = 1;
  int iota = 1;
};

/// sigma = prod_i (2i-1, 2i)^{eps_i} * phi(tau), where phi(tau)(2i-1) = 2tau(i)-1
/// and phi(tau)(2i) = 2tau(i); throws if sigma does not preserve the blocks.
inline HyperoctDecomposition hyperoct_decompose(const Perm& sigma) {
  if (sigma.size() % 2 != 0) throw DomainError("H_n lives in an even symmetric group");
  const int n = static_cast<int>(sigma.size()) / 2;
  HyperoctDecomposition d;
  d.eps.assign(n, 0);
  d.tau.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int a = sigma[2 * i];
    const int b = sigma[2 * i + 1];
    if (a / 2 != b / 2) throw DomainError("permutation does not centralize (12)(34)...");
    d.tau[i] = a / 2;
    d.eps[d.tau[i]] = a % 2;
  }
  const int flips = std::accumulate(d.eps.begin(), d.eps.end(), 0);
  d.delta = flips % 2 ? -1 : 1;
  d.iota = sign(d.tau);
  return d;
}

inline Perm phi(const Perm& tau) {
  Perm p(2 * tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) {
    p[2 * i] = 2 * tau[i];
    p[2 * i + 1] = 2 * tau[i] + 1;
  }
  return p;
}

inline bool in_hyperoctahedral(const Perm& sigma) {
  if (sigma.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < sigma.size(); i += 2) {
    if (sigma[i] / 2 != sigma[i + 1] / 2) return false;
  }
  return true;
}

inline int pi_value(Pi pi, const HyperoctDecomposition& d) {
  switch (pi) {
    case Pi::trivial:
      return 1;
    case Pi::delta:
      return d.delta;
    case Pi::iota:
      return d.iota;
    case Pi::delta_iota:
      return d.delta * d.iota;
  }
  return 1;
}

struct ThetaCharacter {
  int xi = 0;  // row of a linear character of G
  Pi pi = Pi::trivial;
};

inline bool in_hg(const WreathElement& x) {
  if (!in_hyperoctahedral(x.perm)) return false;
  for (std::size_t i = 0; i < x.base.size(); i += 2) {
    if (x.base[i] != x.base[i + 1]) return false;
  }
  return true;
}

/// Theta_{xi,pi}(g_1, g_1, ..., g_n, g_n : sigma) = xi(g_1 ... g_n) pi(sigma).
inline CycNum theta_value(const CharacterTable& t, const ThetaCharacter& theta, const WreathElement& x) {
  if (!in_hg(x)) throw DomainError("element is not in HG_n");
  const FiniteGroup& g = t.group();
  int prod = 0;
  for (std::size_t i = 0; i < x.base.size(); i += 2) prod = g.mul(prod, x.base[i]);
  return t.at(theta.xi, prod) * CycNum(pi_value(theta.pi, hyperoct_decompose(x.perm)));
}

inline Integer hg_order(const FiniteGroup& g, int n) {
  Integer h = factorial(n);
  for (int i = 0; i < n; ++i) h *= 2 * g.order();
  return h;
}

inline Integer sg_order(const FiniteGroup& g, int m) {
  Integer s = factorial(m);
  for (int i = 0; i < m; ++i) s *= g.order();
  return s;
}

/// Calls f on every element of HG_n inside SG_{2n}.
inline void for_each_hg_element(const FiniteGroup& g, int n, const Caps& caps,
                                const std::function<void(const WreathElement&)>& f) {
  const Integer total = hg_order(g, n);
  caps.check_elements(total.fits_slong_p() ? total.get_si() : caps.elements + 1);
  Perm tau = identity_perm(n);
  do {
    const Perm base_perm = phi(tau);
    for (int mask = 0; mask < (1 << n); ++mask) {
      Perm flips = identity_perm(2 * n);
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) std::swap(flips[2 * i], flips[2 * i + 1]);
      }
      WreathElement x{std::vector<int>(2 * n, 0), compose(flips, base_perm)};
      std::vector<int> gs(n, 0);
      for (;;) {
        for (int i = 0; i < n; ++i) x.base[2 * i] = x.base[2 * i + 1] = gs[i];
        f(x);
        int i = 0;
        while (i < n && ++gs[i] == g.order()) gs[i++] = 0;
        if (i == n) break;
      }
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
}

inline std::vector<WreathElement> hg_elements(const FiniteGroup& g, int n, const Caps& caps = {}) {
  std::vector<WreathElement> out;
  for_each_hg_element(g, n, caps, [&](const WreathElement& x) { out.push_back(x); });
  return out;
}

// ---------------------------------------------------------------------------
// Double-coset representatives

/// x(rho): merged classes in order, parts in decreasing order; a part r is a
/// block of length 2r with base (1, ..., 1, g_R) and the full cycle of the block.
inline WreathElement x_rho(const ClassFusion& f, const MultiPartition& rho) {
  if (rho.labels() != f.merged.size()) throw DomainError("label is not over the merged classes");
  std::vector<WreathElement> blocks;
  for (std::size_t r = 0; r < f.merged.size(); ++r) {
    for (int part : rho[r].parts()) {
      const int len = 2 * part;
      WreathElement b{std::vector<int>(len, 0), Perm(len)};
      b.base[len - 1] = f.merged[r].rep;
      for (int i = 0; i < len; ++i) b.perm[i] = (i + 1) % len;
      blocks.push_back(std::move(b));
    }
  }
  if (blocks.empty()) return WreathElement{};
  return wreath_embed(blocks);
}

/// All of P_{**}(n): multipartitions of weight n over the merged classes.
inline std::vector<MultiPartition> double_coset_labels(const ClassFusion& f, int n) {
  return enumerate_multipartitions(f.merged.size(), n);
}

/// P_{**}^{xi,+}(n) (sign = +1) or P_{**}^{xi,-}(n) (sign = -1).
inline std::vector<MultiPartition> lower_index_set(const CharacterTable& t, const ClassFusion& f, int xi, int sign_,
                                                   int n) {
  const FiniteGroup& g = t.group();
  return enumerate_multipartitions(f.merged.size(), n, [&](std::size_t r, int k) {
    const auto& m = f.merged[r];
    if (!m.real) return enumerate_partitions(k);
    const bool minus = t.value(xi, g.class_of(m.rep)) == CycNum(-1);
    if (sign_ > 0) return minus ? (k == 0 ? enumerate_partitions(0) : std::vector<Partition>{}) : enumerate_partitions(k);
    return minus ? even_partitions(k) : odd_partitions(k);
  });
}

inline std::vector<MultiPartition> lower_index_set(const CharacterTable& t, const ClassFusion& f,
                                                   const ThetaCharacter& theta, int n) {
  return lower_index_set(t, f, theta.xi, epsilon(theta.pi), n);
}

/// The component shape attached to a self-paired character: W(mu) for the
/// indicator value nu and pi (E, E', DSP, DSP').
inline Partition self_paired_shape(const Partition& mu, int nu, Pi pi) {
  const bool plain = (nu == 1) != has_delta(pi);
  const Partition w = epsilon(pi) == 1 ? mu.scaled(2) : doubling(mu);
  return plain ? w : w.transpose();
}

/// Inverse of self_paired_shape on its image, or nothing.
inline std::optional<Partition> self_paired_parameter(const Partition& lambda, int nu, Pi pi) {
  const bool plain = (nu == 1) != has_delta(pi);
  const Partition w = plain ? lambda : lambda.transpose();
  if (epsilon(pi) == 1) {
    if (!w.is_even()) return std::nullopt;
    std::vector<int> half;
    for (int p : w.parts()) half.push_back(p / 2);
    return Partition(half);
  }
  try {
    return undouble(w);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

/// P^{**}_{xi,pi}(n): multipartitions of weight 2n over the rows of the table.
inline std::vector<MultiPartition> upper_index_set(const CharacterTable& t, const ClassFusion& f,
                                                   const ThetaCharacter& theta, int n) {
  // Choose a half-weight per orbit, then a shape per orbit.
  std::vector<MultiPartition> out;
  const std::size_t k = f.orbits.size();
  std::vector<int> nus(k);
  for (std::size_t o = 0; o < k; ++o) nus[o] = nu2(t, theta.xi, f.orbits[o].rep);
  MultiPartition current(t.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t o, int remaining) {
    if (o == k) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const auto& orb = f.orbits[o];
    for (int w = remaining; w >= 0; --w) {
      if (orb.self_paired()) {
        const auto params = epsilon(theta.pi) == 1 ? enumerate_partitions(w) : strict_partitions(w);
        for (const auto& mu : params) {
          current[orb.rep] = self_paired_shape(mu, nus[o], theta.pi);
          rec(o + 1, remaining - w);
        }
      } else {
        for (const auto& mu : enumerate_partitions(w)) {
          current[orb.rep] = mu;
          current[orb.partner] = epsilon(theta.pi) == 1 ? mu : mu.transpose();
          rec(o + 1, remaining - w);
        }
      }
      current[orb.rep] = Partition();
      current[orb.partner] = Partition();
    }
  };
  rec(0, n);
  return out;
}

// ---------------------------------------------------------------------------
// Induced character and Hecke basis

/// Multiplicity of every S(lambda), |lambda| = 2n, in Theta induced from HG_n,
/// by Frobenius reciprocity over HG_n.  Zero multiplicities are omitted.
inline std::map<MultiPartition, Integer> decompose_induced(const WreathCharacters& chars, const ThetaCharacter& theta,
                                                           int n, const Caps& caps = {}) {
  const CharacterTable& t = chars.table();
  const FiniteGroup& g = t.group();
  std::map<MultiPartition, CycNum> weights;
  for_each_hg_element(g, n, caps, [&](const WreathElement& h) {
    weights[class_type(g, h)] += theta_value(t, theta, h).conjugate();
  });
  const auto labels = chars.labels(2 * n);
  caps.check_class_work(static_cast<long long>(labels.size() * weights.size()));
  const CycNum scale(Rational(1) / Rational(hg_order(g, n)));
  std::map<MultiPartition, Integer> out;
  for (const auto& label : labels) {
    CycNum m;
    for (const auto& [type, w] : weights) {
      if (!w.is_zero()) m += w * chars.value(label, type);
    }
    m *= scale;
    auto q = m.try_rational();
    if (!q || q->get_den() != 1 || sgn(*q) < 0) {
      throw MathViolation("multiplicity of a constituent is " + m.to_string());
    }
    if (sgn(*q) != 0) out.emplace(label, q->get_num());
  }
  return out;
}

struct HeckeCoefficient {
  CycNum coefficient;     // sum of Theta(h) Theta(h') over h x h' = x
  Integer stabilizer = 0; // number of such pairs
};

/// Coefficient of x in sum_{h,h'} Theta(h h') h x h'.  It vanishes exactly when
/// e x e = 0, and (e x e)(x) = conj(coefficient) / |HG_n|^2.
inline HeckeCoefficient hecke_coefficient(const CharacterTable& t, const ThetaCharacter& theta,
                                          const WreathElement& x, const Caps& caps = {}) {
  const FiniteGroup& g = t.group();
  const int n = x.degree() / 2;
  const WreathElement xinv = wreath_inv(g, x);
  HeckeCoefficient out;
  for_each_hg_element(g, n, caps, [&](const WreathElement& h) {
    const WreathElement other = wreath_mul(g, wreath_mul(g, xinv, wreath_inv(g, h)), x);
    if (!in_hg(other)) return;
    out.stabilizer += 1;
    out.coefficient += theta_value(t, theta, h) * theta_value(t, theta, other);
  });
  return out;
}

/// Labels rho in P_{**}(n) whose Hecke element e x(rho) e is nonzero.
inline std::vector<MultiPartition> hecke_support(const CharacterTable& t, const ClassFusion& f,
                                                 const ThetaCharacter& theta, int n, const Caps& caps = {}) {
  std::vector<MultiPartition> out;
  for (const auto& rho : double_coset_labels(f, n)) {
    if (!hecke_coefficient(t, theta, x_rho(f, rho), caps).coefficient.is_zero()) out.push_back(rho);
  }
  return out;
}

struct KBasisEntry {
  int merged = 0;  // index into ClassFusion::merged
  CycNum coefficient;
};

/// In SG_2: coefficient of (1, g_R : 1) in K_{(1, g_R : 1)} for every merged class.
inline std::vector<KBasisEntry> k_basis_sg2(const CharacterTable& t, const ClassFusion& f, const ThetaCharacter& theta) {
  std::vector<KBasisEntry> out;
  for (std::size_t r = 0; r < f.merged.size(); ++r) {
    const WreathElement x{{0, f.merged[r].rep}, {0, 1}};
    out.push_back({static_cast<int>(r), hecke_coefficient(t, theta, x).coefficient});
  }
  return out;
}

/// |D_rho| = |HG_n|^2 prod_{R real} 1/(z_{2 rho(R)} zeta^{l}) prod_{R complex} 1/(z_{rho(R)} zeta^{l}).
inline Integer coset_order(const FiniteGroup& g, const ClassFusion& f, const MultiPartition& rho) {
  const int n = rho.weight();
  const Integer h = hg_order(g, n);
  Integer num = h * h;
  Integer den = 1;
  for (std::size_t r = 0; r < f.merged.size(); ++r) {
    const auto& m = f.merged[r];
    const int zeta = g.zeta(m.classes.front());
    den *= m.real ? z_value(rho[r].scaled(2)) : z_value(rho[r]);
    for (int i = 0; i < rho[r].length(); ++i) den *= zeta;
  }
  if (num % den != 0) throw MathViolation("double coset order is not an integer");
  return num / den;
}

/// |HG_n x HG_n| by enumerating the orbit.
inline Integer coset_order_brute(const FiniteGroup& g, const WreathElement& x, const Caps& caps = {}) {
  const int n = x.degree() / 2;
  const auto hs = hg_elements(g, n, caps);
  caps.check_class_work(static_cast<long long>(hs.size() * hs.size()));
  std::set<WreathElement> orbit;
  for (const auto& a : hs) {
    const WreathElement ax = wreath_mul(g, a, x);
    for (const auto& b : hs) orbit.insert(wreath_mul(g, ax, b));
  }
  return Integer(static_cast<unsigned long>(orbit.size()));
}

}  // namespace wg
