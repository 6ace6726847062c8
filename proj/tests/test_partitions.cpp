#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "wg/partitions.hpp"

using wg::Integer;
using wg::MultiPartition;
using wg::Partition;

namespace {

// Doubled diagram built cell by cell: the shifted diagram of mu moved one
// column right, united with its mirror image in the diagonal.
Partition doubled_by_cells(const Partition& mu) {
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = i; j < i + mu[i]; ++j) {
      cells.emplace(i, j + 1);
      cells.emplace(j, i);
    }
  }
  std::map<int, int> rows;
  for (auto [r, c] : cells) ++rows[r];
  std::vector<int> parts;
  for (auto [r, len] : rows) parts.push_back(len);
  return Partition(parts);
}

// Counts standard shifted tableaux by trying every filling order.
long brute_shifted_tableaux(const Partition& lambda) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = i; j < i + lambda[i]; ++j) cells.emplace_back(i, j);
  }
  std::vector<int> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  long count = 0;
  do {
    std::map<std::pair<int, int>, int> label;
    for (std::size_t k = 0; k < order.size(); ++k) label[cells[order[k]]] = static_cast<int>(k);
    bool ok = true;
    for (auto [cell, v] : label) {
      auto right = label.find({cell.first, cell.second + 1});
      auto down = label.find({cell.first + 1, cell.second});
      if (right != label.end() && right->second < v) ok = false;
      if (down != label.end() && down->second < v) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(lengths);
}

}  // namespace

TEST(Partitions, EnumerationOrder) {
  const auto p4 = wg::enumerate_partitions(4);
  ASSERT_EQ(p4.size(), 5u);
  EXPECT_EQ(p4[0], Partition({4}));
  EXPECT_EQ(p4[1], Partition({3, 1}));
  EXPECT_EQ(p4[2], Partition({2, 2}));
  EXPECT_EQ(p4[3], Partition({2, 1, 1}));
  EXPECT_EQ(p4[4], Partition({1, 1, 1, 1}));
  const auto p0 = wg::enumerate_partitions(0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_TRUE(p0[0].empty());
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = wg::enumerate_partitions(n);
    EXPECT_EQ(static_cast<int>(ps.size()), expected[n]);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
  }
}

TEST(Partitions, MultiEnumeration) {
  const auto two = wg::enumerate_multipartitions(2, 2);
  EXPECT_EQ(two.size(), 5u);  // (2|-), (11|-), (1|1), (-|2), (-|11)
  const auto three = wg::enumerate_multipartitions(3, 2);
  EXPECT_EQ(three.size(), 9u);
  std::set<MultiPartition> distinct(three.begin(), three.end());
  EXPECT_EQ(distinct.size(), three.size());
  // Brute count: every triple of partitions with total weight n.
  for (int n = 0; n <= 4; ++n) {
    std::size_t brute = 0;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        brute += wg::enumerate_partitions(a).size() * wg::enumerate_partitions(b).size() *
                 wg::enumerate_partitions(n - a - b).size();
      }
    }
    EXPECT_EQ(wg::enumerate_multipartitions(3, n).size(), brute);
  }
}

TEST(Partitions, TextForm) {
  EXPECT_EQ(Partition({4, 2, 1}).to_string(), "4+2+1");
  EXPECT_EQ(Partition::parse("4+2+1"), Partition({4, 2, 1}));
  EXPECT_EQ(Partition::parse("1+3"), Partition({3, 1}));
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_THROW(Partition::parse("4++1"), wg::ParseError);
  EXPECT_THROW(Partition::parse("a"), wg::ParseError);
  EXPECT_THROW(Partition({2, 0}), wg::DomainError);
}

TEST(Partitions, TransposeInvolution) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : wg::enumerate_partitions(n)) {
      const Partition t = p.transpose();
      EXPECT_EQ(t.transpose(), p);
      EXPECT_EQ(t.size(), p.size());
      EXPECT_EQ(t.length(), p[0]);
    }
  }
  EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
}

TEST(Partitions, Doubling) {
  EXPECT_EQ(wg::doubling(Partition({4, 2, 1})), Partition({5, 4, 4, 1}));
  EXPECT_EQ(wg::doubling(Partition({1})), Partition({2}));
  EXPECT_EQ(wg::doubling(Partition({2, 1})), Partition({3, 3}));
  EXPECT_THROW(wg::doubling(Partition({2, 2})), wg::DomainError);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : wg::strict_partitions(n)) {
      const Partition d = wg::doubling(mu);
      EXPECT_EQ(d.size(), 2 * n);
      EXPECT_EQ(d, doubled_by_cells(mu)) << mu;
      EXPECT_EQ(wg::undouble(d), mu);
    }
  }
  EXPECT_THROW(wg::undouble(Partition({2, 2})), wg::DomainError);
}

TEST(Partitions, HookAndZ) {
  EXPECT_EQ(wg::hook_product(Partition({2, 1})), 3);
  EXPECT_EQ(wg::z_value(Partition({2, 1})), 2);
  EXPECT_EQ(wg::z_value(Partition({2, 2, 1})), 8);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(wg::hook_product(Partition({n})), wg::factorial(n));
  // sum of f^2 = n!
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& p : wg::enumerate_partitions(n)) total += wg::sym_dimension(p) * wg::sym_dimension(p);
    EXPECT_EQ(total, wg::factorial(n));
  }
}

TEST(Partitions, ZCountsPermutations) {
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, long> counts;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++counts[cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& rho : wg::enumerate_partitions(n)) {
      EXPECT_EQ(wg::z_value(rho) * counts[rho], wg::factorial(n)) << rho;
    }
  }
}

TEST(Partitions, ShiftedTableaux) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : wg::strict_partitions(n)) {
      const Integer g = wg::shifted_tableaux_count(mu);
      EXPECT_EQ(g, brute_shifted_tableaux(mu)) << mu;
      // product formula n!/prod mu_i! * prod_{i<j} (mu_i - mu_j)/(mu_i + mu_j)
      wg::Rational formula(wg::factorial(n));
      for (int i = 0; i < mu.length(); ++i) {
        formula /= wg::factorial(mu[i]);
        for (int j = i + 1; j < mu.length(); ++j) formula *= wg::Rational(mu[i] - mu[j], mu[i] + mu[j]);
      }
      EXPECT_EQ(wg::Rational(g), formula) << mu;
      EXPECT_EQ(wg::shifted_hook_product(mu) * g, wg::factorial(n));
    }
  }
  const auto s = wg::stats(Partition({2, 1}));
  EXPECT_EQ(s.shifted_tableaux, 1);
  EXPECT_EQ(s.shifted_hook_product, 6);
  EXPECT_THROW(wg::shifted_tableaux_count(Partition({1, 1})), wg::DomainError);
}

TEST(Partitions, GlaisherBijection) {
  for (int n = 0; n <= 12; ++n) {
    const auto sp = wg::strict_partitions(n);
    const auto op = wg::odd_partitions(n);
    EXPECT_EQ(sp.size(), op.size());
    std::set<Partition> image;
    for (const auto& mu : sp) {
      const Partition rho = wg::strict_to_odd(mu);
      EXPECT_TRUE(rho.is_odd());
      EXPECT_EQ(rho.size(), n);
      EXPECT_EQ(wg::odd_to_strict(rho), mu);
      image.insert(rho);
    }
    EXPECT_EQ(image.size(), op.size());
  }
}

TEST(Partitions, Dominance) {
  EXPECT_TRUE(wg::dominated_by(Partition({2, 2}), Partition({3, 1})));
  EXPECT_FALSE(wg::dominated_by(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  EXPECT_FALSE(wg::dominated_by(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
}
