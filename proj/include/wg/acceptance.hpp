#pragma once

// The numbered end-to-end checks.  Each one recomputes everything from the
// bundled data and reports a single verdict with a short detail line.

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "wg/spherical.hpp"

namespace wg::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;
};

inline Result start(int id, std::string title) {
  Result r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

namespace detail {

// Collects failures; keeps the first few for the report.
struct Log {
  int failures = 0;
  int checks = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first.size() < 4) first.push_back(what);
  }
  std::string summary() const {
    std::ostringstream out;
    out << checks - failures << "/" << checks << " checks";
    for (const auto& f : first) out << "; " << f;
    if (failures > static_cast<int>(first.size())) out << "; ...";
    return out.str();
  }
};

inline const std::vector<std::string>& bundled() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "Q8", "GL2F3"};
  return names;
}

inline int row(const CharacterTable& t, const std::string& name) {
  auto r = t.find(name);
  if (!r) throw DomainError("no character named " + name);
  return *r;
}

inline std::string where(const CharacterTable& t, int xi, Pi pi, int n) {
  return t.group().name() + " " + t.name(xi) + " " + pi_name(pi) + " n=" + std::to_string(n);
}

}  // namespace detail

inline Result twisted_indicators() {
  Result r = start(1, "twisted Frobenius-Schur indicators of GL2(F3)");
  const auto t = load_bundled("GL2F3");
  const int xi = detail::row(t, "chi2");
  const std::vector<int> want_xi{0, 0, -1, 0, 0, -1, -1, -1};
  const std::vector<int> want_one{1, 1, 1, 1, 1, 0, 0, 1};
  std::vector<int> got_xi;
  std::vector<int> got_one;
  for (int k = 1; k <= 8; ++k) {
    const int chi = detail::row(t, "chi" + std::to_string(k));
    got_xi.push_back(nu2(t, xi, chi));
    got_one.push_back(nu2(t, detail::row(t, "chi1"), chi));
  }
  r.pass = got_xi == want_xi && got_one == want_one;
  std::ostringstream d;
  d << "nu2^chi2 = (";
  for (std::size_t i = 0; i < got_xi.size(); ++i) d << (i ? "," : "") << got_xi[i];
  d << "), nu2^1 = (";
  for (std::size_t i = 0; i < got_one.size(); ++i) d << (i ? "," : "") << got_one[i];
  d << ")";
  r.detail = d.str();
  return r;
}

inline Result counting_identities() {
  Result r = start(2, "class and character counting identities");
  detail::Log log;
  for (const auto& name : detail::bundled()) {
    const auto t = load_bundled(name);
    for (int xi : linear_characters(t)) {
      const auto s = fuse_classes(t, xi).stats;
      const std::string w = name + " " + t.name(xi);
      log.expect(s.n_C + 2 * s.n_xi == s.n_upper_C, w + ": n_C + 2 n_xi != n^C");
      log.expect(s.n_R - 2 * s.n_xi == s.n_upper_R, w + ": n_R - 2 n_xi != n^R");
      log.expect(s.n_upper_R + s.n_upper_C == s.n_starstar + s.n_C / 2, w + ": character count");
      int zeros = 0;
      for (int c = 0; c < t.size(); ++c) zeros += nu2(t, xi, c) == 0;
      log.expect(zeros == s.n_upper_C, w + ": vanishing indicators");
    }
  }
  const auto t = load_bundled("GL2F3");
  const auto s = fuse_classes(t, detail::row(t, "chi2")).stats;
  log.expect(s.n_xi == 1 && s.n_C == 2 && s.n_upper_C == 4, "GL2F3 chi2 counts differ from (1, 2, 4)");
  r.pass = log.failures == 0;
  r.detail = log.summary() + "; GL2F3 chi2: n_xi=" + std::to_string(s.n_xi) + " n_C=" + std::to_string(s.n_C) +
             " n^C=" + std::to_string(s.n_upper_C);
  return r;
}

inline Result littlewood(const Caps& caps = {}) {
  Result r = start(3, "Littlewood decompositions for the trivial group");
  detail::Log log;
  const auto t = load_bundled("C1");
  const WreathCharacters chars(t);
  for (int n = 1; n <= 3; ++n) {
    for (Pi pi : kAllPi) {
      std::set<Partition> expected;
      const auto params = epsilon(pi) == 1 ? enumerate_partitions(n) : strict_partitions(n);
      for (const auto& mu : params) {
        Partition lambda = epsilon(pi) == 1 ? Partition(mu.scaled(2)) : doubling(mu);
        expected.insert(has_delta(pi) ? lambda.transpose() : lambda);
      }
      std::set<Partition> got;
      bool simple = true;
      for (const auto& [label, mult] : decompose_induced(chars, {0, pi}, n, caps)) {
        simple = simple && mult == 1;
        got.insert(label[0]);
      }
      log.expect(simple && got == expected, "n=" + std::to_string(n) + " " + pi_name(pi));
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

namespace detail {

struct Config {
  const char* group;
  int max_n;
};

inline const std::vector<Config>& gelfand_configs() {
  static const std::vector<Config> c{{"C2", 3}, {"C3", 2}, {"C4", 2}, {"Q8", 2}};
  return c;
}

}  // namespace detail

inline Result gelfand_triples(const Caps& caps = {}) {
  Result r = start(4, "induced characters are multiplicity free on the upper index set");
  detail::Log log;
  for (const auto& c : detail::gelfand_configs()) {
    const auto t = load_bundled(c.group);
    const WreathCharacters chars(t);
    for (int xi : linear_characters(t)) {
      const auto f = fuse_classes(t, xi);
      for (Pi pi : kAllPi) {
        for (int n = 1; n <= c.max_n; ++n) {
          const ThetaCharacter theta{xi, pi};
          const auto want = upper_index_set(t, f, theta, n);
          std::set<MultiPartition> got;
          bool simple = true;
          for (const auto& [label, mult] : decompose_induced(chars, theta, n, caps)) {
            simple = simple && mult == 1;
            got.insert(label);
          }
          log.expect(simple && got == std::set<MultiPartition>(want.begin(), want.end()),
                     detail::where(t, xi, pi, n));
        }
      }
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result hecke_basis(const Caps& caps = {}) {
  Result r = start(5, "Hecke basis support and the SG_2 K-basis");
  detail::Log log;
  for (const auto& c : detail::gelfand_configs()) {
    const auto t = load_bundled(c.group);
    for (int xi : linear_characters(t)) {
      const auto f = fuse_classes(t, xi);
      for (Pi pi : kAllPi) {
        for (int n = 1; n <= 2; ++n) {
          const ThetaCharacter theta{xi, pi};
          log.expect(hecke_support(t, f, theta, n, caps) == lower_index_set(t, f, theta, n),
                     detail::where(t, xi, pi, n));
        }
      }
    }
  }
  // K_{(1, g_R : 1)} in SG_2 for GL2(F3): vanishes exactly on real classes with xi = -1 when pi is trivial,
  // and on the complement of the n = 1 lower index set in general.
  const auto t = load_bundled("GL2F3");
  const auto& g = t.group();
  for (int xi : linear_characters(t)) {
    const auto f = fuse_classes(t, xi);
    for (Pi pi : kAllPi) {
      const ThetaCharacter theta{xi, pi};
      std::set<int> allowed;
      for (const auto& rho : lower_index_set(t, f, theta, 1)) {
        for (std::size_t m = 0; m < rho.labels(); ++m) {
          if (rho[m].size() > 0) allowed.insert(static_cast<int>(m));
        }
      }
      int vanishing = 0;
      for (const auto& entry : k_basis_sg2(t, f, theta)) {
        const auto& m = f.merged[entry.merged];
        const int cls = m.classes.front();
        vanishing += entry.coefficient.is_zero();
        log.expect(entry.coefficient.is_zero() != (allowed.count(entry.merged) > 0),
                   "K-basis " + detail::where(t, xi, pi, 1) + " class " + std::to_string(entry.merged));
        if (pi == Pi::trivial && !entry.coefficient.is_zero()) {
          log.expect(entry.coefficient == CycNum((m.real ? 2 : 1) * g.zeta(cls)),
                     "K-basis coefficient " + t.name(xi) + " class " + std::to_string(entry.merged));
        }
      }
      if (pi == Pi::trivial) log.expect(vanishing == f.stats.n_xi, "K-basis vanishing count " + t.name(xi));
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result cardinalities() {
  Result r = start(6, "upper and lower index sets have equal size");
  detail::Log log;
  for (const auto& name : detail::bundled()) {
    const auto t = load_bundled(name);
    for (int xi : linear_characters(t)) {
      const auto f = fuse_classes(t, xi);
      for (Pi pi : kAllPi) {
        for (int n = 0; n <= 4; ++n) {
          const ThetaCharacter theta{xi, pi};
          log.expect(upper_index_set(t, f, theta, n).size() == lower_index_set(t, f, theta, n).size(),
                     detail::where(t, xi, pi, n));
        }
      }
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result reconciliation(const Caps& caps = {}) {
  Result r = start(7, "brute force, closed forms and symmetric functions agree");
  detail::Log log;
  auto run = [&](const CharacterTable& t, int xi, Pi pi, int n) {
    const auto rep = reconcile(Triple(t, {xi, pi}, n), caps);
    std::string why = detail::where(t, xi, pi, n);
    if (!rep.mismatches.empty()) why += ": " + std::to_string(rep.mismatches.size()) + " mismatches";
    if (!rep.violations.empty()) why += ": " + rep.violations.front();
    log.expect(rep.ok(), why);
  };
  const auto c2 = load_bundled("C2");
  for (int xi : linear_characters(c2)) {
    for (Pi pi : kAllPi) {
      for (int n = 1; n <= 2; ++n) run(c2, xi, pi, n);
    }
  }
  const auto q8 = load_bundled("Q8");
  for (Pi pi : {Pi::trivial, Pi::iota}) run(q8, detail::row(q8, "chi2"), pi, 1);
  const auto c1 = load_bundled("C1");
  for (Pi pi : kAllPi) {
    for (int n = 1; n <= 3; ++n) run(c1, 0, pi, n);
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result z2_factorization(const Caps& caps = {}) {
  Result r = start(8, "Z/2 tables factor as D1 [chi] D2");
  detail::Log log;
  const auto t = load_bundled("C2");
  const int eps = detail::row(t, "xi1");
  std::vector<std::string> signs;
  for (int n = 2; n <= 4; ++n) {
    for (Pi pi : kAllPi) {
      const Triple tr(t, {eps, pi}, n);
      const BruteSpherical brute(tr, caps);
      const auto cols = tr.columns();
      bool equal = true;
      std::optional<CycNum> ratio;
      bool constant = true;
      for (const auto& label : tr.rows()) {
        const Partition& lambda = label[tr.fusion.orbits.front().rep];
        const Partition shape = epsilon(pi) == 1 ? lambda : lambda.transpose();
        const auto values = brute.row(label);
        for (std::size_t k = 0; k < cols.size(); ++k) {
          const Partition rho = cols[k].flattened();
          const Rational d1 = Rational(hook_product(lambda)) / Rational(factorial(n) << n);
          const Rational d2 = rational_pow(2, rho.length());
          const CycNum want(d1 * Rational(sym_character(shape, rho)) * d2);
          equal = equal && values[k] == want;
          if (want.is_zero() || values[k].is_zero()) {
            constant = constant && want.is_zero() == values[k].is_zero();
          } else {
            const CycNum q = values[k] / want;
            if (!ratio) ratio = q;
            constant = constant && *ratio == q;
          }
        }
      }
      std::string why = "n=" + std::to_string(n) + " " + pi_name(pi);
      if (!equal && constant && ratio) why += " differs by the global factor " + ratio->to_string();
      log.expect(equal, why);
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result coset_orders(const Caps& caps = {}) {
  Result r = start(9, "double coset sizes against orbit enumeration");
  detail::Log log;
  for (auto [name, n] : std::vector<std::pair<std::string, int>>{{"C2", 1}, {"C4", 1}, {"Q8", 1}, {"C2", 2}}) {
    const auto t = load_bundled(name);
    const auto& g = t.group();
    for (int xi : linear_characters(t)) {
      const Triple tr(t, {xi, Pi::trivial}, n);
      const auto& f = tr.fusion;
      Integer total = 0;
      for (const auto& rho : double_coset_labels(f, n)) {
        const Integer formula = coset_order(g, f, rho);
        log.expect(formula == coset_order_brute(g, x_rho(f, rho), caps),
                   name + " " + tr.column_name(rho) + ": formula " + formula.get_str());
        total += formula;
      }
      log.expect(total == sg_order(g, 2 * n), name + " n=" + std::to_string(n) + ": sizes do not sum to |SG_2n|");
    }
  }
  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

inline Result property_suites(const Caps& caps = {}) {
  Result r = start(10, "algebraic property suites");
  detail::Log log;

  std::mt19937 rng(20261018);
  auto random_cyc = [&] {
    static const int conductors[] = {1, 3, 4, 5, 8, 12};
    const int n = conductors[rng() % std::size(conductors)];
    std::map<long, Rational> raw;
    for (int k = 0; k < 3; ++k) raw[rng() % n] += Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4);
    return CycNum::canonicalize(n, raw);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const CycNum a = random_cyc();
    const CycNum b = random_cyc();
    const CycNum c = random_cyc();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a * b == b * a && (a * b).conjugate() == a.conjugate() * b.conjugate();
    if (!a.is_zero()) ok = ok && a * a.inverse() == CycNum(1);
    log.expect(ok, "field axioms for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
  }

  for (auto [name, max_n] : std::vector<std::pair<std::string, int>>{{"C1", 4}, {"C2", 3}, {"C3", 2}, {"Q8", 2}}) {
    const auto t = load_bundled(name);
    const WreathCharacters chars(t);
    for (int n = 1; n <= max_n; ++n) {
      const auto labels = chars.labels(n);
      const auto types = chars.class_types(n);
      bool ok = labels.size() == types.size();
      for (std::size_t a = 0; ok && a < labels.size(); ++a) {
        for (std::size_t b = a; b < labels.size(); ++b) {
          CycNum s;
          for (const auto& type : types) {
            s += CycNum(Rational(wreath_class_size(t.group(), type))) * chars.value(labels[a], type) *
                 chars.value(labels[b], type).conjugate();
          }
          ok = ok && s == CycNum(Rational(a == b ? sg_order(t.group(), n) : Integer(0)));
        }
      }
      log.expect(ok, name + " wreath table orthogonality n=" + std::to_string(n));
    }
  }

  for (auto [name, max_n] : std::vector<std::pair<std::string, int>>{{"C1", 3}, {"C2", 2}, {"C3", 2}, {"Q8", 1}}) {
    const auto t = load_bundled(name);
    const WreathCharacters chars(t);
    for (int xi : linear_characters(t)) {
      for (Pi pi : kAllPi) {
        for (int n = 1; n <= max_n; ++n) {
          const Triple tr(t, {xi, pi}, n);
          for (const auto& label : tr.rows()) {
            log.expect(spherical_brute(chars, tr.theta, label, wreath_identity(2 * n), caps) == CycNum(1),
                       "Omega(1) " + detail::where(t, xi, pi, n) + " " + tr.row_name(label));
          }
        }
      }
    }
  }

  for (int n = 1; n <= 7; ++n) {
    const auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        Rational s = 0;
        for (const auto& rho : ps) s += Rational(sym_character(a, rho) * sym_character(b, rho)) / Rational(z_value(rho));
        log.expect(s == (a == b ? 1 : 0), "S_n orthogonality " + a.to_string() + " " + b.to_string());
      }
    }
  }

  for (const Rational& alpha : {Rational(2), Rational(1, 2)}) {
    for (int n = 1; n <= 5; ++n) {
      const auto ps = enumerate_partitions(n);
      std::vector<SymFuncElem> jacks;
      for (const auto& a : ps) jacks.push_back(jack_p(a, alpha));
      for (std::size_t a = 0; a < ps.size(); ++a) {
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
          log.expect(alpha_inner_product(jacks[a], jacks[b], alpha).is_zero(),
                     "Jack orthogonality " + ps[a].to_string() + " " + ps[b].to_string());
        }
      }
    }
  }

  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : strict_partitions(n)) {
      bool odd = true;
      const auto q = schur_Q(lambda);
      for (const auto& [key, c] : q.terms()) odd = odd && key[0].is_odd();
      log.expect(odd, "Q_" + lambda.to_string() + " has an even power sum");
    }
  }

  r.pass = log.failures == 0;
  r.detail = log.summary();
  return r;
}

struct Criterion {
  int id;
  double budget;  // seconds
  std::function<Result(const Caps&)> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, 1, [](const Caps&) { return twisted_indicators(); }},
      {2, 1, [](const Caps&) { return counting_identities(); }},
      {3, 10, [](const Caps& c) { return littlewood(c); }},
      {4, 300, [](const Caps& c) { return gelfand_triples(c); }},
      {5, 300, [](const Caps& c) { return hecke_basis(c); }},
      {6, 1, [](const Caps&) { return cardinalities(); }},
      {7, 600, [](const Caps& c) { return reconciliation(c); }},
      {8, 30, [](const Caps& c) { return z2_factorization(c); }},
      {9, 30, [](const Caps& c) { return coset_orders(c); }},
      {10, 120, [](const Caps& c) { return property_suites(c); }},
  };
}

/// Runs one criterion, catching library errors and enforcing the time budget.
inline Result run(const Criterion& c, const Caps& caps = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = c.run(caps);
  } catch (const Error& e) {
    r = start(c.id, "");
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.budget = c.budget;
  if (r.seconds > c.budget) {
    r.pass = false;
    r.detail += "; over the time budget";
  }
  return r;
}

inline std::string format(const Result& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << std::fixed
      << std::setprecision(2) << r.seconds << "s) " << r.detail;
  return out.str();
}

}  // namespace wg::acceptance
