#pragma once

// Finite groups given by a multiplication table, their conjugacy classes,
// character tables, and the class/character fusions driven by a linear
// character.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wg/caps.hpp"
#include "wg/cyclo.hpp"
#include "wg/error.hpp"

namespace wg {

class FiniteGroup {
 public:
  /// Validates the table (identity at 0, inverses, associativity) and computes classes.
  static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> mul) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.mul_ = std::move(mul);
    g.check_axioms();
    g.compute_classes();
    return g;
  }

  /// Closure of 0-indexed one-line permutations under (a*b)(i) = a(b(i)).  Elements
  /// are numbered by lexicographic order of their one-line form, so 0 is the identity.
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& gens,
                                       const Caps& caps = {}) {
    if (gens.empty()) throw DomainError("no generators");
    const std::size_t degree = gens.front().size();
    for (const auto& g : gens) {
      std::vector<int> sorted = g;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> iota(degree);
      std::iota(iota.begin(), iota.end(), 0);
      if (g.size() != degree || sorted != iota) throw DomainError("generator is not a permutation of 1..n");
    }
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> c(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
      return c;
    };
    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          auto y = compose(g, x);
          if (seen.insert(y).second) {
            caps.check("group-order", caps.group_order, static_cast<long long>(seen.size()));
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::vector<int>> elements(seen.begin(), seen.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
    std::vector<std::vector<int>> mul(elements.size(), std::vector<int>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));
    }
    return from_table(std::move(name), std::move(mul));
  }

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int by) const { return mul_[mul_[by][x]][inv_[by]]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

  int power(int x, long k) const {
    if (k < 0) return power(inv_[x], -k);
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul_[r][x];
    return r;
  }
  int element_order(int x) const {
    int k = 1;
    for (int y = x; y != 0; y = mul_[y][x]) ++k;
    return k;
  }

  /// Classes are numbered by their minimal element, so class 0 is {identity}.
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_rep(int c) const { return classes_[c].front(); }
  /// |G| / |C|, the centralizer order.
  int zeta(int c) const { return order() / class_size(c); }
  int inverse_class(int c) const { return class_of_[inv_[class_rep(c)]]; }
  bool is_real_class(int c) const { return inverse_class(c) == c; }
  /// Class of x^k for x in class c.
  int power_class(int c, long k) const { return class_of_[power(class_rep(c), k)]; }

 private:
  void check_axioms() {
    const int n = order();
    if (n == 0) throw MathViolation("group table is empty");
    if (n > 64) throw DomainError("groups of order > 64 are not supported");
    for (const auto& row : mul_) {
      if (static_cast<int>(row.size()) != n) throw MathViolation("multiplication table is not square");
      for (int v : row) {
        if (v < 0 || v >= n) throw MathViolation("multiplication table entry out of range");
      }
    }
    for (int a = 0; a < n; ++a) {
      if (mul_[0][a] != a || mul_[a][0] != a) throw MathViolation("element 0 is not the identity");
    }
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (mul_[a][b] == 0) {
          if (mul_[b][a] != 0) throw MathViolation("one-sided inverse for element " + std::to_string(a));
          inv_[a] = b;
        }
      }
      if (inv_[a] < 0) throw MathViolation("element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = mul_[a][b];
        for (int c = 0; c < n; ++c) {
          if (mul_[ab][c] != mul_[a][mul_[b][c]]) {
            throw MathViolation("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
          }
        }
      }
    }
  }

  void compute_classes() {
    const int n = order();
    class_of_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      if (class_of_[x] >= 0) continue;
      std::set<int> members;
      for (int g = 0; g < n; ++g) members.insert(conj(x, g));
      const int c = static_cast<int>(classes_.size());
      for (int m : members) class_of_[m] = c;
      classes_.emplace_back(members.begin(), members.end());
    }
  }

  std::string name_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

/// Irreducible characters, stored per group class (not per file column).
class CharacterTable {
 public:
  /// columns[j] is an element whose class is column j of `values`.
  CharacterTable(std::shared_ptr<const FiniteGroup> group, const std::vector<int>& columns,
                 const std::vector<std::vector<CycNum>>& values, std::vector<std::string> names = {})
      : group_(std::move(group)), names_(std::move(names)) {
    const int k = group_->num_classes();
    if (static_cast<int>(columns.size()) != k) {
      throw MathViolation("table has " + std::to_string(columns.size()) + " columns, group has " + std::to_string(k) +
                          " classes");
    }
    column_class_.resize(k);
    std::set<int> covered;
    for (int j = 0; j < k; ++j) {
      if (columns[j] < 0 || columns[j] >= group_->order()) throw MathViolation("class representative out of range");
      column_class_[j] = group_->class_of(columns[j]);
      covered.insert(column_class_[j]);
    }
    if (static_cast<int>(covered.size()) != k) throw MathViolation("two table columns name the same class");
    for (const auto& row : values) {
      if (static_cast<int>(row.size()) != k) throw MathViolation("character row has the wrong length");
      std::vector<CycNum> by_class(k);
      for (int j = 0; j < k; ++j) by_class[column_class_[j]] = row[j];
      rows_.push_back(std::move(by_class));
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < rows_.size(); ++i) names_.push_back("chi" + std::to_string(i + 1));
    }
    if (names_.size() != rows_.size()) throw MathViolation("name count differs from row count");
  }

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::string& name(int row) const { return names_[row]; }
  const std::vector<std::string>& names() const { return names_; }
  const CycNum& value(int row, int cls) const { return rows_[row][cls]; }
  const CycNum& at(int row, int element) const { return rows_[row][group_->class_of(element)]; }
  const std::vector<CycNum>& row(int r) const { return rows_[r]; }
  const CycNum& degree(int row) const { return rows_[row][0]; }
  int degree_int(int row) const { return static_cast<int>(degree(row).try_rational()->get_num().get_si()); }
  /// Group class shown in file column j.
  int column_class(int j) const { return column_class_[j]; }

  std::optional<int> find(const std::string& row_name) const {
    for (int i = 0; i < size(); ++i) {
      if (names_[i] == row_name) return i;
    }
    return std::nullopt;
  }

  std::optional<int> find_row(const std::vector<CycNum>& values) const {
    for (int i = 0; i < size(); ++i) {
      if (rows_[i] == values) return i;
    }
    return std::nullopt;
  }

  int conjugate_row(int r) const {
    std::vector<CycNum> v;
    for (const auto& x : rows_[r]) v.push_back(x.conjugate());
    return require_row(v, "conjugate");
  }

  /// Row of conjugate(chi) tensor eta, where eta is linear.
  int twisted_conjugate_row(int r, int eta) const {
    std::vector<CycNum> v;
    for (std::size_t c = 0; c < rows_[r].size(); ++c) v.push_back(rows_[r][c].conjugate() * rows_[eta][c]);
    return require_row(v, "twisted conjugate");
  }

 private:
  int require_row(const std::vector<CycNum>& v, const char* what) const {
    auto idx = find_row(v);
    if (!idx) throw MathViolation(std::string(what) + " of a row is not a row of the table");
    return *idx;
  }

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::string> names_;
  std::vector<int> column_class_;
  std::vector<std::vector<CycNum>> rows_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Row and column orthogonality plus sum of squared degrees.
inline ValidationReport validate_table(const CharacterTable& t) {
  ValidationReport report;
  const FiniteGroup& g = t.group();
  const int k = g.num_classes();
  if (t.size() != k) {
    report.violations.push_back("row count " + std::to_string(t.size()) + " differs from class count " +
                                std::to_string(k));
    return report;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      CycNum sum;
      for (int c = 0; c < k; ++c) sum += CycNum(g.class_size(c)) * t.value(a, c) * t.value(b, c).conjugate();
      if (sum != CycNum(a == b ? g.order() : 0)) {
        report.violations.push_back("row orthogonality fails for (" + t.name(a) + ", " + t.name(b) + ")");
      }
    }
  }
  for (int c = 0; c < k; ++c) {
    for (int d = c; d < k; ++d) {
      CycNum sum;
      for (int r = 0; r < k; ++r) sum += t.value(r, c) * t.value(r, d).conjugate();
      if (sum != CycNum(c == d ? g.zeta(c) : 0)) {
        report.violations.push_back("column orthogonality fails for classes (" + std::to_string(g.class_rep(c)) + ", " +
                                    std::to_string(g.class_rep(d)) + ")");
      }
    }
  }
  Rational squares = 0;
  for (int r = 0; r < k; ++r) {
    auto d = t.degree(r).try_rational();
    if (!d || d->get_den() != 1 || sgn(*d) <= 0) {
      report.violations.push_back("degree of " + t.name(r) + " is not a positive integer");
      continue;
    }
    squares += *d * *d;
  }
  if (squares != g.order()) report.violations.push_back("sum of squared degrees differs from |G|");
  return report;
}

/// Rows of degree 1, each checked to be multiplicative on all of G.
inline std::vector<int> linear_characters(const CharacterTable& t) {
  const FiniteGroup& g = t.group();
  std::vector<int> out;
  for (int r = 0; r < t.size(); ++r) {
    if (t.degree(r) != CycNum(1)) continue;
    for (int x = 0; x < g.order(); ++x) {
      for (int y = 0; y < g.order(); ++y) {
        if (t.at(r, g.mul(x, y)) != t.at(r, x) * t.at(r, y)) {
          throw MathViolation(t.name(r) + " has degree 1 but is not multiplicative");
        }
      }
    }
    out.push_back(r);
  }
  return out;
}

inline bool is_linear(const CharacterTable& t, int row) { return t.degree(row) == CycNum(1); }

/// A merged class R = C u C^{-1}.
struct MergedClass {
  int rep = 0;               // minimal element index of R
  std::vector<int> classes;  // one class if real, two otherwise
  bool real = true;
};

/// An orbit {chi, conjugate(chi) (x) eta} of the character set.
struct CharOrbit {
  int rep = 0;  // smaller row index
  int partner = 0;
  bool self_paired() const { return rep == partner; }
};

struct FusionStats {
  int n_starstar = 0;   // |G_**|
  int n_xi = 0;         // real classes with xi = -1
  int n_R_xi = 0;       // real classes with xi = 1
  int n_C = 0;          // classes not equal to their inverse class
  int n_R = 0;          // n_** - n_C/2
  int n_upper_R = 0;    // chi with chi = conjugate(chi) (x) xi
  int n_upper_C = 0;    // chi with chi != conjugate(chi) (x) xi
};

struct ClassFusion {
  std::vector<MergedClass> merged;          // ordered by representative
  std::vector<int> merged_of_class;         // class -> index into merged
  std::vector<CharOrbit> orbits;            // ordered by representative row
  std::vector<int> orbit_of_row;            // row -> index into orbits
  FusionStats stats;
};

inline ClassFusion fuse_classes(const CharacterTable& t, int eta) {
  if (!is_linear(t, eta)) throw DomainError(t.name(eta) + " is not linear");
  const FiniteGroup& g = t.group();
  ClassFusion f;
  const int k = g.num_classes();
  f.merged_of_class.assign(k, -1);
  // Classes are numbered by minimal element, so scanning them in order visits
  // merged classes in order of their minimal element.
  for (int c = 0; c < k; ++c) {
    if (f.merged_of_class[c] >= 0) continue;
    MergedClass m;
    m.rep = g.class_rep(c);
    m.classes.push_back(c);
    const int ci = g.inverse_class(c);
    m.real = ci == c;
    if (!m.real) m.classes.push_back(ci);
    for (int x : m.classes) f.merged_of_class[x] = static_cast<int>(f.merged.size());
    f.merged.push_back(std::move(m));
  }
  f.orbit_of_row.assign(t.size(), -1);
  for (int r = 0; r < t.size(); ++r) {
    if (f.orbit_of_row[r] >= 0) continue;
    const int p = t.twisted_conjugate_row(r, eta);
    f.orbit_of_row[r] = f.orbit_of_row[p] = static_cast<int>(f.orbits.size());
    f.orbits.push_back({r, p});
  }
  auto& s = f.stats;
  s.n_starstar = static_cast<int>(f.merged.size());
  for (int c = 0; c < k; ++c) {
    if (!g.is_real_class(c)) {
      ++s.n_C;
    } else if (t.value(eta, c) == CycNum(-1)) {
      ++s.n_xi;
    } else {
      ++s.n_R_xi;
    }
  }
  s.n_R = s.n_starstar - s.n_C / 2;
  for (const auto& o : f.orbits) {
    if (o.self_paired()) {
      ++s.n_upper_R;
    } else {
      s.n_upper_C += 2;
    }
  }
  return f;
}

/// (1/|G|) sum_x conjugate(xi(x)) chi(x^2); must be -1, 0 or 1 and vanish
/// exactly when chi differs from conjugate(chi) (x) xi.
inline int nu2(const CharacterTable& t, int xi, int chi) {
  if (!is_linear(t, xi)) throw DomainError(t.name(xi) + " is not linear");
  const FiniteGroup& g = t.group();
  CycNum sum;
  for (int x = 0; x < g.order(); ++x) sum += t.at(xi, x).conjugate() * t.at(chi, g.mul(x, x));
  sum *= CycNum(Rational(1, g.order()));
  auto q = sum.try_rational();
  if (!q || q->get_den() != 1 || abs(*q) > 1) {
    throw MathViolation("twisted indicator of " + t.name(chi) + " is " + sum.to_string());
  }
  const int v = static_cast<int>(q->get_num().get_si());
  const bool paired = t.twisted_conjugate_row(chi, xi) == chi;
  if ((v != 0) != paired) throw MathViolation("twisted indicator of " + t.name(chi) + " contradicts the pairing");
  return v;
}

}  // namespace wg
