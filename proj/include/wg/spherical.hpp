#pragma once

// Theta_{xi,pi}-spherical functions of (SG_{2n}, HG_n) by three routes:
//   brute    convolution over HG_n, Omega(x) = |HG_n|^{-1} sum_h conj(Theta(h)) chi(x^{-1} h)
//   closed   product formulas for labels carried by a single character orbit
//   symfunc  the characteristic map CH_pi against products of Jack, Q and Schur functions
// and the reconciliation of all three.

#include <openssl/sha.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "wg/group_io.hpp"
#include "wg/wreath.hpp"

namespace wg {

enum class Engine { brute, closed, symfunc };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::brute:
      return "brute";
    case Engine::closed:
      return "closed";
    case Engine::symfunc:
      return "symfunc";
  }
  return "?";
}

/// Everything fixed by (G, xi, pi, n).
struct Triple {
  const CharacterTable* table = nullptr;
  ThetaCharacter theta;
  int n = 0;
  ClassFusion fusion;
  std::vector<std::string> class_alphabet;  // one name per merged class

  Triple(const CharacterTable& t, ThetaCharacter th, int n_) : table(&t), theta(th), n(n_) {
    fusion = fuse_classes(t, th.xi);
    std::vector<int> column_of(t.group().num_classes());
    for (int j = 0; j < t.group().num_classes(); ++j) column_of[t.column_class(j)] = j;
    for (const auto& m : fusion.merged) {
      std::string name;
      for (int c : m.classes) name += (name.empty() ? "C" : "/C") + std::to_string(column_of[c] + 1);
      class_alphabet.push_back(name);
    }
  }

  const FiniteGroup& group() const { return table->group(); }
  std::vector<MultiPartition> rows() const { return upper_index_set(*table, fusion, theta, n); }
  std::vector<MultiPartition> columns() const { return lower_index_set(*table, fusion, theta, n); }
  std::string row_name(const MultiPartition& l) const { return l.to_string(table->names()); }
  std::string column_name(const MultiPartition& r) const { return r.to_string(class_alphabet); }
};

// ---------------------------------------------------------------------------
// Brute force

/// For each column x: class type of x^{-1} h -> sum of conj(Theta(h)).
class BruteSpherical {
 public:
  BruteSpherical(const Triple& triple, const Caps& caps = {}) : triple_(triple), chars_(*triple.table) {
    const FiniteGroup& g = triple.group();
    const auto hs = hg_elements(g, triple.n, caps);
    std::vector<CycNum> theta_bar;
    for (const auto& h : hs) theta_bar.push_back(theta_value(*triple.table, triple.theta, h).conjugate());
    const auto cols = triple.columns();
    caps.check_class_work(static_cast<long long>(hs.size() * cols.size()));
    for (const auto& rho : cols) {
      const auto xinv = wreath_inv(g, x_rho(triple.fusion, rho));
      std::map<MultiPartition, CycNum> agg;
      for (std::size_t i = 0; i < hs.size(); ++i) agg[class_type(g, wreath_mul(g, xinv, hs[i]))] += theta_bar[i];
      columns_.push_back(std::move(agg));
    }
    scale_ = CycNum(Rational(1) / Rational(hg_order(g, triple.n)));
  }

  const std::vector<std::map<MultiPartition, CycNum>>& aggregates() const { return columns_; }

  std::vector<CycNum> row(const MultiPartition& label) const {
    std::vector<CycNum> out;
    for (const auto& agg : columns_) {
      CycNum v;
      for (const auto& [type, w] : agg) {
        if (!w.is_zero()) v += w * chars_.value(label, type);
      }
      out.push_back(v * scale_);
    }
    return out;
  }

  const WreathCharacters& characters() const { return chars_; }

 private:
  const Triple& triple_;
  WreathCharacters chars_;
  std::vector<std::map<MultiPartition, CycNum>> columns_;
  CycNum scale_;
};

/// Omega_lambda at an arbitrary element of SG_{2n}.
inline CycNum spherical_brute(const WreathCharacters& chars, const ThetaCharacter& theta, const MultiPartition& label,
                              const WreathElement& x, const Caps& caps = {}) {
  const CharacterTable& t = chars.table();
  const FiniteGroup& g = t.group();
  const WreathElement xinv = wreath_inv(g, x);
  std::map<MultiPartition, CycNum> agg;
  for_each_hg_element(g, x.degree() / 2, caps, [&](const WreathElement& h) {
    agg[class_type(g, wreath_mul(g, xinv, h))] += theta_value(t, theta, h).conjugate();
  });
  CycNum v;
  for (const auto& [type, w] : agg) {
    if (!w.is_zero()) v += w * chars.value(label, type);
  }
  return v * CycNum(Rational(1) / Rational(hg_order(g, x.degree() / 2)));
}

// ---------------------------------------------------------------------------
// Closed forms

/// Spherical function of (S_{2n}, H_n) twisted by a linear character of H_n,
/// for the Specht module of shape w: omega(s) = |H_n|^{-1} sum_h pi(h) chi^w(s^{-1} h).
inline Rational classical_spherical(const Partition& w, Pi pi, const Perm& sigma) {
  const int n = static_cast<int>(sigma.size()) / 2;
  const Perm sinv = inverse(sigma);
  Rational total = 0;
  Perm tau = identity_perm(n);
  std::map<Partition, Integer> char_cache;
  do {
    const Perm base = phi(tau);
    for (int mask = 0; mask < (1 << n); ++mask) {
      Perm flips = identity_perm(2 * n);
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) std::swap(flips[2 * i], flips[2 * i + 1]);
      }
      const Perm h = compose(flips, base);
      const int v = pi_value(pi, hyperoct_decompose(h));
      const Perm y = compose(sinv, h);
      std::vector<bool> seen(y.size());
      std::vector<int> cycles;
      for (std::size_t i = 0; i < y.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = y[j]) {
          seen[j] = true;
          ++len;
        }
        if (len) cycles.push_back(len);
      }
      const Partition type(cycles);
      auto it = char_cache.find(type);
      if (it == char_cache.end()) it = char_cache.emplace(type, sym_character(w, type)).first;
      total += Rational(it->second * v);
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return total / Rational(factorial(n) << n);
}

/// The orbit carrying a label when it is carried by exactly one orbit.
inline std::optional<int> single_orbit(const ClassFusion& f, const MultiPartition& label) {
  std::optional<int> found;
  for (std::size_t r = 0; r < label.labels(); ++r) {
    if (label[r].empty()) continue;
    const int o = f.orbit_of_row[r];
    if (found && *found != o) return std::nullopt;
    found = o;
  }
  return found;
}

inline int perm_sign_of(const WreathElement& x) { return sign(x.perm); }

/// Self-paired chi, label lambda(chi) of weight 2n.  pi without delta is handled
/// directly; delta is moved to the transposed label by the sign character.
inline CycNum spherical_closed_W(const Triple& tr, int chi, const Partition& shape, const MultiPartition& rho) {
  const CharacterTable& t = *tr.table;
  const int nu = nu2(t, tr.theta.xi, chi);
  if (nu == 0) throw DomainError("closed form W needs a self-paired character");
  const WreathElement x = x_rho(tr.fusion, rho);
  if (has_delta(tr.theta.pi)) {
    Triple plain(t, {tr.theta.xi, without_delta(tr.theta.pi)}, tr.n);
    return CycNum(perm_sign_of(x)) * spherical_closed_W(plain, chi, shape.transpose(), rho);
  }
  // v in S^{W} transforms under H_n by pi, times delta when nu = -1
  const Pi twist = nu == 1 ? tr.theta.pi : (tr.theta.pi == Pi::trivial ? Pi::delta : Pi::delta_iota);
  const Rational omega = classical_spherical(shape, twist, x.perm);
  CycNum v(omega * rational_pow(Rational(nu), tr.n) / rational_pow(Rational(t.degree_int(chi)), tr.n));
  for (std::size_t r = 0; r < tr.fusion.merged.size(); ++r) {
    // conj(chi(g_R)): the printed form is the conjugate of the convolution convention
    const CycNum c = t.at(chi, tr.fusion.merged[r].rep).conjugate();
    for (int i = 0; i < rho[r].length(); ++i) v *= c;
  }
  return v;
}

/// Pair {chi, xi (x) conj(chi)}, lambda(chi) = mu of weight n.
inline CycNum spherical_closed_split(const Triple& tr, int chi, const Partition& mu, const MultiPartition& rho) {
  const CharacterTable& t = *tr.table;
  if (nu2(t, tr.theta.xi, chi) != 0) throw DomainError("closed split form needs a non-self-paired character");
  const WreathElement x = x_rho(tr.fusion, rho);
  if (has_delta(tr.theta.pi)) {
    Triple plain(t, {tr.theta.xi, without_delta(tr.theta.pi)}, tr.n);
    return CycNum(perm_sign_of(x)) * spherical_closed_split(plain, chi, mu.transpose(), rho);
  }
  const int eps = epsilon(tr.theta.pi);
  Integer dim = sym_dimension(mu);
  for (int i = 0; i < tr.n; ++i) dim *= t.degree_int(chi);
  CycNum v(Rational(sym_character(mu, rho.flattened())) / (rational_pow(2, tr.n) * Rational(dim)));
  for (std::size_t r = 0; r < tr.fusion.merged.size(); ++r) {
    const int g = tr.fusion.merged[r].rep;
    const CycNum a = t.at(tr.theta.xi, g).conjugate() * t.at(chi, g);
    const CycNum b = t.at(chi, g).conjugate();
    for (int part : rho[r].parts()) v *= a + ((part - 1) % 2 && eps < 0 ? CycNum(0) - b : b);
  }
  return v;
}

/// Closed-form value when the label is carried by one orbit, else nothing.
inline std::optional<CycNum> spherical_closed(const Triple& tr, const MultiPartition& label,
                                              const MultiPartition& rho) {
  const auto o = single_orbit(tr.fusion, label);
  if (!o) {
    if (label.weight() == 0) return CycNum(1);
    return std::nullopt;
  }
  const auto& orb = tr.fusion.orbits[*o];
  if (orb.self_paired()) return spherical_closed_W(tr, orb.rep, label[orb.rep], rho);
  return spherical_closed_split(tr, orb.rep, label[orb.rep], rho);
}

/// omega_chi(x, y) = eta(y^{-1}) chi(x^{-1} y) / chi(1) on G x G relative to the twisted diagonal.
inline CycNum delta_pair_spherical(const CharacterTable& t, int eta, int chi, int x, int y) {
  const FiniteGroup& g = t.group();
  return t.at(eta, g.inv(y)) * t.at(chi, g.mul(g.inv(x), y)) / t.degree(chi);
}

/// The same function by convolution over the diagonal with the character
/// chi (x) (eta (x) conj(chi)) of G x G.
inline CycNum delta_pair_spherical_brute(const CharacterTable& t, int eta, int chi, int x, int y) {
  const FiniteGroup& g = t.group();
  CycNum s;
  for (int d = 0; d < g.order(); ++d) {
    const int a = g.mul(g.inv(x), d);
    const int b = g.mul(g.inv(y), d);
    s += t.at(chi, a) * t.at(eta, b) * t.at(chi, b).conjugate() * t.at(eta, g.inv(d));
  }
  return s / CycNum(g.order());
}

// ---------------------------------------------------------------------------
// Characteristic map and the product side

/// Radical factor of CH_pi on e x(rho) e: prod over real R of 2^{l(rho(R))} when eps_pi = -1.
inline Integer ch_scale(const Triple& tr, const MultiPartition& rho) {
  if (epsilon(tr.theta.pi) == 1) return 1;
  Integer s = 1;
  for (std::size_t r = 0; r < tr.fusion.merged.size(); ++r) {
    if (tr.fusion.merged[r].real) s <<= rho[r].length();
  }
  return s;
}

/// CH_pi(f) = sum_rho |D_rho| f(x(rho)) CH(e x(rho) e) for f given by its values on the columns.
inline SymFuncElem ch_map(const Triple& tr, const std::vector<MultiPartition>& cols, const std::vector<CycNum>& values) {
  SymFuncElem out(tr.class_alphabet);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Integer w = coset_order(tr.group(), tr.fusion, cols[j]) * ch_scale(tr, cols[j]);
    out.add_term(cols[j], values[j] * CycNum(Rational(w)));
  }
  return out;
}

/// p_r(chi) -> sum_R a_R(r) / (kappa zeta_R) p_r(R),
/// a_R(r) = conj(xi(g_R)) chi(g_R) + eps_pi^{r-1} conj(chi(g_R)).
/// For eps_pi = 1, kappa is 2 on real R and 1 on complex R.  For eps_pi = -1 the
/// brute-force tables need kappa = 2 on every R for self-paired chi and kappa = 1
/// on every R for a pair; the real/complex rule is off by 2^{l} there.
inline SymFuncElem push_to_classes(const Triple& tr, int chi, const SymFuncElem& f) {
  const CharacterTable& t = *tr.table;
  const int eps = epsilon(tr.theta.pi);
  const bool self_paired = nu2(t, tr.theta.xi, chi) != 0;
  return change_alphabet(f, tr.class_alphabet, [&](std::size_t, std::size_t r, int deg) {
    const auto& m = tr.fusion.merged[r];
    const int g = m.rep;
    const CycNum a = t.at(tr.theta.xi, g).conjugate() * t.at(chi, g);
    const CycNum b = t.at(chi, g).conjugate();
    const CycNum sum = a + ((deg - 1) % 2 && eps < 0 ? CycNum(0) - b : b);
    const int kappa = eps > 0 ? (m.real ? 2 : 1) : (self_paired ? 2 : 1);
    return sum / CycNum(kappa * tr.group().zeta(m.classes.front()));
  });
}

/// p_r -> -p_r.
inline SymFuncElem negate_power_sums(const SymFuncElem& f) {
  return scale_by_degree(f, [](int) { return CycNum(-1); });
}

/// J~_mu: the alpha = 1/2 Jack function twisted by p_r -> p_r / 2.  Two readings
/// of the index; the spherical oracle picks the transposed one.
enum class JTildeReading { same_index, transposed_index };

inline SymFuncElem twisted_jack(const Partition& mu, JTildeReading reading) {
  const Partition index = reading == JTildeReading::same_index ? mu : mu.transpose();
  return psi_twist(jack_p(index, Rational(1, 2)), Rational(1, 2));
}

/// One factor F(chi) of the product side, in the single-letter alphabet p(chi),
/// before the change of variables.  k = half weight of the factor.
inline SymFuncElem product_factor(const Triple& tr, const CharOrbit& orb, const MultiPartition& label,
                                  JTildeReading reading = JTildeReading::transposed_index) {
  const CharacterTable& t = *tr.table;
  const int chi = orb.rep;
  const int nu = nu2(t, tr.theta.xi, chi);
  const Pi pi = tr.theta.pi;
  const Partition& shape = label[chi];
  const int k = orb.self_paired() ? shape.size() / 2 : shape.size();
  // (|G| / dim chi)^k
  const CycNum pre(rational_pow(Rational(tr.group().order(), t.degree_int(chi)), k));
  if (!orb.self_paired()) {
    const SymFuncElem s = schur_p(shape) * CycNum(Rational(hook_product(shape)));
    return has_delta(pi) ? s * CycNum(k % 2 ? -1 : 1) * pre : s * pre;
  }
  const auto mu = self_paired_parameter(shape, nu, pi);
  if (!mu) throw DomainError("label is not in the upper index set");
  if (epsilon(pi) == 1) {
    // nu^k comes from the tensor factor; J~ carries (-2)^k against the classical normalization
    const bool twisted = (nu == -1) != has_delta(pi);
    const CycNum sign(rational_pow(Rational(nu), k));
    if (!twisted) return jack_p(*mu, 2) * sign * pre;
    return twisted_jack(*mu, reading) * CycNum(rational_pow(Rational(-2), k)) * sign * pre;
  }
  const Rational hbar = Rational(factorial(mu->size())) / Rational(shifted_tableaux_count(*mu));
  const Rational s = (has_delta(pi) ? rational_pow(Rational(-1), k) : Rational(1)) * hbar;
  return schur_Q(*mu) * CycNum(s) * pre;
}

/// prod over orbits carrying the label of F(chi), pushed to the merged-class alphabet.
inline SymFuncElem product_formula(const Triple& tr, const MultiPartition& label,
                                 JTildeReading reading = JTildeReading::transposed_index) {
  SymFuncElem out = SymFuncElem::constant(tr.class_alphabet, 1);
  for (const auto& orb : tr.fusion.orbits) {
    if (label[orb.rep].empty() && label[orb.partner].empty()) continue;
    out = out * push_to_classes(tr, orb.rep, product_factor(tr, orb, label, reading));
  }
  return out;
}

/// |HG_n|^{-1} CH_pi(Omega_lambda) from a row of values on the columns.
inline SymFuncElem normalized_ch(const Triple& tr, const std::vector<MultiPartition>& cols,
                                 const std::vector<CycNum>& row) {
  return ch_map(tr, cols, row) * CycNum(Rational(1) / Rational(hg_order(tr.group(), tr.n)));
}

/// Spherical values recovered from the product side by reading off coefficients.
inline std::vector<CycNum> spherical_symfunc(const Triple& tr, const std::vector<MultiPartition>& cols,
                                             const MultiPartition& label) {
  const SymFuncElem rhs = product_formula(tr, label);
  const Rational h = Rational(hg_order(tr.group(), tr.n));
  std::vector<CycNum> out;
  for (const auto& rho : cols) {
    const Integer w = coset_order(tr.group(), tr.fusion, rho) * ch_scale(tr, rho);
    out.push_back(rhs.coefficient(rho) * CycNum(h / Rational(w)));
  }
  for (const auto& [key, c] : rhs.terms()) {
    if (std::find(cols.begin(), cols.end(), key) == cols.end()) {
      throw MathViolation("product side has a term off the Hecke support: " + key.to_string(tr.class_alphabet));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hecke algebra product, used to spot-check that CH_pi is multiplicative

/// A Hecke element as a function on SG_{2n}, extended from its values at x(rho)
/// by f(h x h') = conj(Theta(h)) conj(Theta(h')) f(x).
inline std::map<WreathElement, CycNum> hecke_function(const Triple& tr, const std::vector<MultiPartition>& cols,
                                                      const std::vector<CycNum>& values) {
  const FiniteGroup& g = tr.group();
  const auto hs = hg_elements(g, tr.n);
  std::map<WreathElement, CycNum> f;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (values[j].is_zero()) continue;
    const auto x = x_rho(tr.fusion, cols[j]);
    for (const auto& a : hs) {
      const CycNum ta = theta_value(*tr.table, tr.theta, a).conjugate() * values[j];
      const auto ax = wreath_mul(g, a, x);
      for (const auto& b : hs) f[wreath_mul(g, ax, b)] = ta * theta_value(*tr.table, tr.theta, b).conjugate();
    }
  }
  return f;
}

/// Values at x(sigma) of e (f x g) e in the Hecke algebra of level m + n.
inline std::vector<CycNum> hecke_product(const Triple& left, const std::vector<MultiPartition>& lcols,
                                         const std::vector<CycNum>& lvals, const Triple& right,
                                         const std::vector<MultiPartition>& rcols, const std::vector<CycNum>& rvals,
                                         const Triple& total, const std::vector<MultiPartition>& cols) {
  const FiniteGroup& g = total.group();
  const auto f = hecke_function(left, lcols, lvals);
  const auto h = hecke_function(right, rcols, rvals);
  const int split = 2 * left.n;
  auto product_at = [&](const WreathElement& y) -> CycNum {
    WreathElement a{{y.base.begin(), y.base.begin() + split}, {y.perm.begin(), y.perm.begin() + split}};
    WreathElement b{{y.base.begin() + split, y.base.end()}, {y.perm.begin() + split, y.perm.end()}};
    for (int& p : b.perm) {
      p -= split;
      if (p < 0) return CycNum();
    }
    for (int p : a.perm) {
      if (p >= split) return CycNum();
    }
    auto fa = f.find(a);
    auto hb = h.find(b);
    if (fa == f.end() || hb == h.end()) return CycNum();
    return fa->second * hb->second;
  };
  const auto hs = hg_elements(g, total.n);
  std::vector<CycNum> theta_bar;
  for (const auto& x : hs) theta_bar.push_back(theta_value(*total.table, total.theta, x).conjugate());
  std::vector<CycNum> out;
  const Rational scale = Rational(1) / (Rational(hs.size()) * Rational(hs.size()));
  for (const auto& sigma : cols) {
    const auto x = x_rho(total.fusion, sigma);
    CycNum v;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const auto ax = wreath_mul(g, wreath_inv(g, hs[i]), x);
      for (std::size_t j = 0; j < hs.size(); ++j) {
        const CycNum p = product_at(wreath_mul(g, ax, wreath_inv(g, hs[j])));
        if (!p.is_zero()) v += theta_bar[i] * theta_bar[j] * p;
      }
    }
    out.push_back(v * CycNum(scale));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables, reconciliation, cache

struct SphericalTable {
  std::string group;
  std::string xi;
  Pi pi = Pi::trivial;
  int n = 0;
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  std::vector<std::vector<CycNum>> values;
  std::vector<std::vector<Engine>> engines;

  std::string to_csv() const {
    std::ostringstream out;
    out << "label";
    for (const auto& c : column_names) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < row_names.size(); ++i) {
      out << row_names[i];
      for (const auto& v : values[i]) out << ',' << v.to_string();
      out << '\n';
    }
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"group", group}, {"xi", xi}, {"pi", pi_name(pi)}, {"n", n},
                        {"rows", row_names}, {"columns", column_names}};
    j["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < values[i].size(); ++k) {
        row.push_back({{"value", values[i][k].to_string()}, {"engine", engine_name(engines[i][k])}});
      }
      j["values"].push_back(row);
    }
    return j;
  }

  static SphericalTable from_json(const nlohmann::json& j) {
    SphericalTable t;
    t.group = j.at("group");
    t.xi = j.at("xi");
    t.pi = parse_pi(j.at("pi"));
    t.n = j.at("n");
    t.row_names = j.at("rows").get<std::vector<std::string>>();
    t.column_names = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("values")) {
      std::vector<CycNum> vals;
      std::vector<Engine> engs;
      for (const auto& cell : row) {
        vals.push_back(CycNum::parse(cell.at("value").get<std::string>()));
        const std::string e = cell.at("engine");
        engs.push_back(e == "brute" ? Engine::brute : e == "closed" ? Engine::closed : Engine::symfunc);
      }
      t.values.push_back(std::move(vals));
      t.engines.push_back(std::move(engs));
    }
    return t;
  }
};

inline SphericalTable spherical_table(const Triple& tr, const Caps& caps = {}) {
  const BruteSpherical brute(tr, caps);
  SphericalTable out;
  out.group = tr.group().name();
  out.xi = tr.table->name(tr.theta.xi);
  out.pi = tr.theta.pi;
  out.n = tr.n;
  for (const auto& rho : tr.columns()) out.column_names.push_back(tr.column_name(rho));
  for (const auto& label : tr.rows()) {
    out.row_names.push_back(tr.row_name(label));
    out.values.push_back(brute.row(label));
    out.engines.emplace_back(out.values.back().size(), Engine::brute);
  }
  return out;
}

struct Mismatch {
  std::string row;
  std::string column;  // column label, or the p-monomial for product-side mismatches
  std::string what;    // "closed" or "symfunc"
  CycNum brute;
  CycNum other;
};

struct ReconcileReport {
  SphericalTable table;
  std::vector<std::vector<std::optional<CycNum>>> closed;
  std::vector<std::vector<CycNum>> symfunc;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> violations;  // Omega(1) != 1, orthogonality

  bool ok() const { return mismatches.empty() && violations.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"group", table.group}, {"xi", table.xi}, {"pi", pi_name(table.pi)}, {"n", table.n}};
    j["cells"] = nlohmann::json::array();
    for (std::size_t i = 0; i < table.row_names.size(); ++i) {
      for (std::size_t k = 0; k < table.column_names.size(); ++k) {
        nlohmann::json cell = {{"row", table.row_names[i]},
                               {"column", table.column_names[k]},
                               {"brute", table.values[i][k].to_string()},
                               {"symfunc", symfunc[i][k].to_string()}};
        cell["closed"] = closed[i][k] ? nlohmann::json(closed[i][k]->to_string()) : nlohmann::json(nullptr);
        j["cells"].push_back(cell);
      }
    }
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : mismatches) {
      j["mismatches"].push_back({{"row", m.row},
                                 {"column", m.column},
                                 {"engine", m.what},
                                 {"brute", m.brute.to_string()},
                                 {"other", m.other.to_string()}});
    }
    j["violations"] = violations;
    return j;
  }
};

inline ReconcileReport reconcile(const Triple& tr, const Caps& caps = {}) {
  ReconcileReport rep;
  const BruteSpherical brute(tr, caps);
  const auto rows = tr.rows();
  const auto cols = tr.columns();
  rep.table.group = tr.group().name();
  rep.table.xi = tr.table->name(tr.theta.xi);
  rep.table.pi = tr.theta.pi;
  rep.table.n = tr.n;
  for (const auto& rho : cols) rep.table.column_names.push_back(tr.column_name(rho));
  const MultiPartition identity = [&] {
    MultiPartition m(tr.fusion.merged.size());
    m[0] = Partition(std::vector<int>(tr.n, 1));
    return m;
  }();
  const auto id_col = std::find(cols.begin(), cols.end(), identity) - cols.begin();
  const CycNum id_theta = theta_value(*tr.table, tr.theta, x_rho(tr.fusion, identity));
  const Integer sg = sg_order(tr.group(), 2 * tr.n);
  std::vector<Integer> sizes;
  for (const auto& rho : cols) sizes.push_back(coset_order(tr.group(), tr.fusion, rho));
  const WreathCharacters& chars = brute.characters();

  for (const auto& label : rows) {
    const std::string name = tr.row_name(label);
    rep.table.row_names.push_back(name);
    const auto values = brute.row(label);
    rep.table.values.push_back(values);
    rep.table.engines.emplace_back(values.size(), Engine::brute);

    // x(1^n) = t_n lies in HG_n, so Omega(1) = Theta(t_n) Omega(t_n)
    if (values[id_col] * id_theta != CycNum(1)) rep.violations.push_back(name + ": Omega(1) is not 1");

    std::vector<std::optional<CycNum>> closed_row;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto c = spherical_closed(tr, label, cols[k]);
      if (c && *c != values[k]) rep.mismatches.push_back({name, rep.table.column_names[k], "closed", values[k], *c});
      closed_row.push_back(c);
    }
    rep.closed.push_back(std::move(closed_row));

    const SymFuncElem lhs = normalized_ch(tr, cols, values);
    const SymFuncElem rhs = product_formula(tr, label);
    if (!(lhs == rhs)) {
      std::set<MultiPartition> keys;
      for (const auto& [key, c] : lhs.terms()) keys.insert(key);
      for (const auto& [key, c] : rhs.terms()) keys.insert(key);
      for (const auto& key : keys) {
        if (lhs.coefficient(key) != rhs.coefficient(key)) {
          rep.mismatches.push_back({name, "p[" + key.to_string(tr.class_alphabet) + "]", "symfunc",
                                    lhs.coefficient(key), rhs.coefficient(key)});
        }
      }
    }
    std::vector<CycNum> sym_row;
    const Rational h = Rational(hg_order(tr.group(), tr.n));
    for (const auto& rho : cols) {
      const Integer w = coset_order(tr.group(), tr.fusion, rho) * ch_scale(tr, rho);
      sym_row.push_back(rhs.coefficient(rho) * CycNum(h / Rational(w)));
    }
    rep.symfunc.push_back(std::move(sym_row));

    // sum over SG_{2n} of |Omega|^2 = |SG_{2n}| / dim S(lambda)
    CycNum norm;
    for (std::size_t k = 0; k < cols.size(); ++k) norm += CycNum(Rational(sizes[k])) * values[k] * values[k].conjugate();
    if (norm != CycNum(Rational(sg) / Rational(chars.dimension(label)))) {
      rep.violations.push_back(name + ": norm is " + norm.to_string());
    }
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      CycNum s;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        s += CycNum(Rational(sizes[k])) * rep.table.values[a][k] * rep.table.values[b][k].conjugate();
      }
      if (!s.is_zero()) rep.violations.push_back(rep.table.row_names[a] + " and " + rep.table.row_names[b] + " are not orthogonal");
    }
  }
  return rep;
}

/// Content-addressed store for spherical tables, keyed by SHA-256 of the group
/// and table files together with (xi, pi, n).
class SphericalCache {
 public:
  explicit SphericalCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::string key(const std::string& group_bytes, const std::string& table_bytes, const std::string& xi, Pi pi,
                         int n) {
    const std::string material = "wg-spherical-1\n" + std::to_string(group_bytes.size()) + "\n" + group_bytes +
                                 std::to_string(table_bytes.size()) + "\n" + table_bytes + xi + "\n" + pi_name(pi) +
                                 "\n" + std::to_string(n);
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(material.data()), material.size(), digest);
    std::ostringstream hex;
    for (unsigned char c : digest) hex << "0123456789abcdef"[c >> 4] << "0123456789abcdef"[c & 15];
    return hex.str();
  }

  std::optional<SphericalTable> load(const std::string& k) const {
    std::ifstream in(dir_ / (k + ".json"));
    if (!in) return std::nullopt;
    try {
      return SphericalTable::from_json(nlohmann::json::parse(in));
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable entries are recomputed
    }
  }

  void store(const std::string& k, const SphericalTable& t) const {
    std::filesystem::create_directories(dir_);
    const auto tmp = dir_ / (k + ".tmp");
    {
      std::ofstream out(tmp);
      out << t.to_json().dump(1) << '\n';
    }
    std::filesystem::rename(tmp, dir_ / (k + ".json"));
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace wg
