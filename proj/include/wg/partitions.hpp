#pragma once

// Integer partitions, multipartitions and the statistics consumed by the
// symmetric-function and wreath-product code.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wg/error.hpp"
#include "wg/rational.hpp"

namespace wg {

class Partition {
 public:
  Partition() = default;

  /// Parts must be positive; they are sorted into weakly decreasing order.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p <= 0) throw DomainError("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

  bool is_strict() const { return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end(); }
  bool is_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }
  bool is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
  }

  Partition transpose() const {
    std::vector<int> t;
    for (int col = 1; !parts_.empty() && col <= parts_.front(); ++col) {
      int height = 0;
      for (int p : parts_) {
        if (p >= col) ++height;
      }
      t.push_back(height);
    }
    return Partition(std::move(t));
  }

  /// Every part multiplied by k (k * lambda; 2*lambda is the even partition).
  Partition scaled(int k) const {
    std::vector<int> out = parts_;
    for (int& p : out) p *= k;
    return Partition(std::move(out));
  }

  /// Union: multiplicities add.
  Partition merged(const Partition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(out));
  }

  /// "4+2+1"; the empty partition prints as "0".
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += "+";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  static Partition parse(std::string_view text) {
    if (text == "0" || text.empty()) return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto plus = text.find('+', start);
      auto token = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("invalid partition '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(std::string(token)));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    return Partition(std::move(parts));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

 private:
  std::vector<int> parts_;
};

/// A tuple of partitions indexed by positions 0..k-1 of an external alphabet.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::size_t labels) : parts_(labels) {}
  explicit MultiPartition(std::vector<Partition> parts) : parts_(std::move(parts)) {}

  std::size_t labels() const { return parts_.size(); }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  Partition& operator[](std::size_t i) { return parts_[i]; }
  const std::vector<Partition>& components() const { return parts_; }

  int weight() const {
    int w = 0;
    for (const auto& p : parts_) w += p.size();
    return w;
  }

  /// rho-hat: union of all components.
  Partition flattened() const {
    Partition out;
    for (const auto& p : parts_) out = out.merged(p);
    return out;
  }

  MultiPartition merged(const MultiPartition& other) const {
    if (other.labels() != labels()) throw DomainError("multipartition alphabet mismatch");
    MultiPartition out(labels());
    for (std::size_t i = 0; i < labels(); ++i) out.parts_[i] = parts_[i].merged(other.parts_[i]);
    return out;
  }

  MultiPartition transposed() const {
    MultiPartition out(labels());
    for (std::size_t i = 0; i < labels(); ++i) out.parts_[i] = parts_[i].transpose();
    return out;
  }

  /// Nonempty components as "label:4+2+1" joined by spaces; all-empty prints "-".
  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].empty()) continue;
      if (!out.empty()) out += " ";
      out += (i < names.size() ? names[i] : std::to_string(i)) + ":" + parts_[i].to_string();
    }
    return out.empty() ? "-" : out;
  }

  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> parts_;
};

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void enumerate_bounded(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_bounded(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::enumerate_bounded(n, n, prefix, out);
  return out;
}

inline std::vector<Partition> enumerate_partitions_if(int n, const std::function<bool(const Partition&)>& keep) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n)) {
    if (keep(p)) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<Partition> strict_partitions(int n) {
  return enumerate_partitions_if(n, [](const Partition& p) { return p.is_strict(); });
}
inline std::vector<Partition> odd_partitions(int n) {
  return enumerate_partitions_if(n, [](const Partition& p) { return p.is_odd(); });
}
inline std::vector<Partition> even_partitions(int n) {
  return enumerate_partitions_if(n, [](const Partition& p) { return p.is_even(); });
}

/// All multipartitions of total weight n over `labels` positions, where the
/// component at position i is drawn from allowed(i, size).  Ordered by the
/// weight vector in reverse-lexicographic order, then componentwise by the
/// order of the allowed lists.
inline std::vector<MultiPartition> enumerate_multipartitions(
    std::size_t labels, int n, const std::function<std::vector<Partition>(std::size_t, int)>& allowed) {
  std::vector<MultiPartition> out;
  if (labels == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::vector<std::vector<Partition>>> options(labels, std::vector<std::vector<Partition>>(n + 1));
  for (std::size_t i = 0; i < labels; ++i) {
    for (int k = 0; k <= n; ++k) options[i][k] = allowed(i, k);
  }
  MultiPartition current(labels);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t pos, int remaining) {
    if (pos + 1 == labels) {
      for (const auto& p : options[pos][remaining]) {
        current[pos] = p;
        out.push_back(current);
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : options[pos][k]) {
        current[pos] = p;
        recurse(pos + 1, remaining - k);
      }
    }
  };
  recurse(0, n);
  return out;
}

inline std::vector<MultiPartition> enumerate_multipartitions(std::size_t labels, int n) {
  return enumerate_multipartitions(labels, n, [](std::size_t, int k) { return enumerate_partitions(k); });
}

// ---------------------------------------------------------------------------
// Doubling and the bijections used for the cardinality identities

/// Partition with Frobenius coordinates (a_1..a_r | b_1..b_r), a and b strictly
/// decreasing and nonnegative.
inline Partition from_frobenius(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DomainError("Frobenius coordinate lengths differ");
  const int r = static_cast<int>(a.size());
  if (r == 0) return {};
  std::vector<int> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = a[i] + i + 1;
  // Rows below the Durfee square: row i (i >= r) has #{j < r : b_j + j + 1 > i} cells.
  for (int i = r;; ++i) {
    int len = 0;
    for (int j = 0; j < r; ++j) {
      if (b[j] + j + 1 > i) ++len;
    }
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

/// D(mu): the partition with Frobenius coordinates (mu_1..mu_l | mu_1-1..mu_l-1).
inline Partition doubling(const Partition& mu) {
  if (!mu.is_strict()) throw DomainError("doubling requires a strict partition, got " + mu.to_string());
  std::vector<int> a = mu.parts();
  std::vector<int> b = a;
  for (int& x : b) --x;
  return from_frobenius(a, b);
}

/// Inverse of doubling on its image; throws if lambda is not a doubled partition.
inline Partition undouble(const Partition& lambda) {
  std::vector<int> a;
  std::vector<int> b;
  const Partition t = lambda.transpose();
  for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
    a.push_back(lambda[i] - i - 1);
    b.push_back(t[i] - i - 1);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] + 1) throw DomainError(lambda.to_string() + " is not a doubled partition");
  }
  return Partition(a);
}

/// Glaisher: each part 2^k * m (m odd) becomes 2^k copies of m.
inline Partition strict_to_odd(const Partition& mu) {
  if (!mu.is_strict()) throw DomainError("strict_to_odd requires a strict partition");
  std::vector<int> out;
  for (int p : mu.parts()) {
    int copies = 1;
    while (p % 2 == 0) {
      p /= 2;
      copies *= 2;
    }
    out.insert(out.end(), copies, p);
  }
  return Partition(std::move(out));
}

/// Inverse Glaisher: write each multiplicity in binary.
inline Partition odd_to_strict(const Partition& rho) {
  if (!rho.is_odd()) throw DomainError("odd_to_strict requires an odd partition");
  std::vector<int> out;
  std::set<int> distinct(rho.parts().begin(), rho.parts().end());
  for (int m : distinct) {
    int mult = rho.multiplicity(m);
    for (int bit = 0; mult > 0; ++bit, mult >>= 1) {
      if (mult & 1) out.push_back(m << bit);
    }
  }
  return Partition(std::move(out));
}

/// Splits a partition into its even parts and its odd parts.
inline std::pair<Partition, Partition> split_even_odd(const Partition& lambda) {
  std::vector<int> even;
  std::vector<int> odd;
  for (int p : lambda.parts()) (p % 2 == 0 ? even : odd).push_back(p);
  return {Partition(std::move(even)), Partition(std::move(odd))};
}

// ---------------------------------------------------------------------------
// Statistics

/// Product of ordinary hook lengths.
inline Integer hook_product(const Partition& lambda) {
  const Partition t = lambda.transpose();
  Integer h = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) h *= (lambda[i] - j - 1) + (t[j] - i - 1) + 1;
  }
  return h;
}

/// Number of standard Young tableaux, n!/h_lambda.
inline Integer sym_dimension(const Partition& lambda) {
  Integer f = factorial(lambda.size()) / hook_product(lambda);
  return f;
}

/// z_lambda = prod_r r^{m_r} m_r!.
inline Integer z_value(const Partition& lambda) {
  Integer z = 1;
  std::set<int> distinct(lambda.parts().begin(), lambda.parts().end());
  for (int r : distinct) {
    const int m = lambda.multiplicity(r);
    for (int i = 0; i < m; ++i) z *= r;
    z *= factorial(m);
  }
  return z;
}

/// Number of standard shifted tableaux of a strict shape (corner removal recursion).
inline Integer shifted_tableaux_count(const Partition& lambda) {
  if (!lambda.is_strict()) throw DomainError("shifted tableaux need a strict shape, got " + lambda.to_string());
  static std::mutex mutex;
  static std::map<std::vector<int>, Integer> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(lambda.parts()); it != memo.end()) return it->second;
  }
  Integer count = 0;
  if (lambda.size() <= 1) {
    count = 1;
  } else {
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
      // Removing the last cell of row i keeps the shape strict.
      std::vector<int> q = p;
      --q[i];
      if (q[i] == 0) {
        q.pop_back();
      } else if (i + 1 < q.size() && q[i] == q[i + 1]) {
        continue;
      }
      count += shifted_tableaux_count(Partition(q));
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(lambda.parts(), count);
  return count;
}

/// Product of shifted hook lengths, n!/g^lambda.
inline Integer shifted_hook_product(const Partition& lambda) {
  return factorial(lambda.size()) / shifted_tableaux_count(lambda);
}

struct PartitionStats {
  Partition transpose;
  Integer hook_product;
  Integer z;
  bool even = false;
  bool odd = false;
  bool strict = false;
  // Only meaningful for strict partitions.
  Integer shifted_tableaux;
  Integer shifted_hook_product;
};

inline PartitionStats stats(const Partition& lambda) {
  PartitionStats s;
  s.transpose = lambda.transpose();
  s.hook_product = hook_product(lambda);
  s.z = z_value(lambda);
  s.even = lambda.is_even();
  s.odd = lambda.is_odd();
  s.strict = lambda.is_strict();
  if (s.strict) {
    s.shifted_tableaux = shifted_tableaux_count(lambda);
    s.shifted_hook_product = shifted_hook_product(lambda);
  }
  return s;
}

/// Dominance order: mu <= lambda iff every partial sum of mu is <= that of lambda.
inline bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int a = 0;
  int b = 0;
  for (int i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

}  // namespace wg
