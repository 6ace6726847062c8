#include <gtest/gtest.h>

#include <random>

#include "wg/group_io.hpp"
#include "wg/wreath.hpp"

using wg::CycNum;
using wg::MultiPartition;
using wg::Partition;
using wg::Perm;
using wg::Pi;
using wg::WreathElement;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

MultiPartition M(std::vector<Partition> v) { return MultiPartition(std::move(v)); }

int row(const wg::CharacterTable& t, const char* name) { return *t.find(name); }

}  // namespace

TEST(Wreath, GroupLaws) {
  const auto t = wg::load_bundled("Q8");
  const auto& g = t.group();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = wg::random_wreath_element(g, 4, rng);
    const auto b = wg::random_wreath_element(g, 4, rng);
    const auto c = wg::random_wreath_element(g, 4, rng);
    EXPECT_EQ(wg::wreath_mul(g, wg::wreath_mul(g, a, b), c), wg::wreath_mul(g, a, wg::wreath_mul(g, b, c)));
    EXPECT_EQ(wg::wreath_mul(g, a, wg::wreath_inv(g, a)), wg::wreath_identity(4));
    // the class type is a conjugation invariant
    const auto conj = wg::wreath_mul(g, wg::wreath_mul(g, b, a), wg::wreath_inv(g, b));
    EXPECT_EQ(wg::class_type(g, conj), wg::class_type(g, a));
  }
}

TEST(Wreath, ClassSizesSum) {
  for (const char* name : {"C2", "C3", "Q8"}) {
    const auto t = wg::load_bundled(name);
    const auto& g = t.group();
    for (int n = 1; n <= 3; ++n) {
      std::map<MultiPartition, long> counts;
      wg::for_each_wreath_element(g, n, {}, [&](const WreathElement& x) { ++counts[wg::class_type(g, x)]; });
      const auto types = wg::enumerate_multipartitions(g.num_classes(), n);
      EXPECT_EQ(counts.size(), types.size());
      for (const auto& type : types) EXPECT_EQ(wg::wreath_class_size(g, type), counts[type]) << name;
    }
  }
}

TEST(Wreath, CharacterOrthogonality) {
  for (const char* name : {"C1", "C2", "C3", "Q8"}) {
    const auto t = wg::load_bundled(name);
    const wg::WreathCharacters chars(t);
    for (int n = 1; n <= 3; ++n) {
      if (std::string(name) == "Q8" && n == 3) continue;
      const auto labels = chars.labels(n);
      const auto types = chars.class_types(n);
      ASSERT_EQ(labels.size(), types.size());
      const wg::Integer order = wg::sg_order(t.group(), n);
      wg::Integer dims = 0;
      for (std::size_t a = 0; a < labels.size(); ++a) {
        const wg::Integer d = chars.dimension(labels[a]);
        dims += d * d;
        for (std::size_t b = a; b < labels.size(); ++b) {
          CycNum s;
          for (const auto& type : types) {
            s += CycNum(wg::Rational(wg::wreath_class_size(t.group(), type))) * chars.value(labels[a], type) *
                 chars.value(labels[b], type).conjugate();
          }
          EXPECT_EQ(s, CycNum(wg::Rational(a == b ? order : wg::Integer(0))))
              << name << " " << labels[a].to_string(t.names()) << " " << labels[b].to_string(t.names());
        }
      }
      EXPECT_EQ(dims, order);
    }
  }
}

TEST(Wreath, DimensionFormula) {
  // dim S(lambda) = n! / prod |lambda(g)|! * prod dim(S^{lambda(g)}) dim(g)^{|lambda(g)|}
  const auto t = wg::load_bundled("GL2F3");
  const wg::WreathCharacters chars(t);
  for (const auto& label : chars.labels(3)) {
    wg::Integer d = wg::factorial(3);
    for (int r = 0; r < t.size(); ++r) {
      d /= wg::factorial(label[r].size());
      d *= wg::sym_dimension(label[r]);
      for (int i = 0; i < label[r].size(); ++i) d *= t.degree_int(r);
    }
    EXPECT_EQ(chars.dimension(label), d) << label.to_string(t.names());
  }
}

TEST(Wreath, TraceOnTensorPower) {
  // S((1^2)) over gamma is V_gamma (x) V_gamma twisted by the sign of S_2
  const auto t = wg::load_bundled("Q8");
  const auto& g = t.group();
  const wg::WreathCharacters chars(t);
  const int gamma = row(t, "chi5");
  MultiPartition label(t.size());
  label[gamma] = P({1, 1});
  wg::for_each_wreath_element(g, 2, {}, [&](const WreathElement& x) {
    const CycNum expect = x.perm[0] == 0 ? t.at(gamma, x.base[0]) * t.at(gamma, x.base[1])
                                         : CycNum(0) - t.at(gamma, g.mul(x.base[0], x.base[1]));
    EXPECT_EQ(chars.value_at(label, x), expect);
  });
}

TEST(Hyperoctahedral, Decomposition) {
  const auto swap12 = wg::perm_from_cycles(4, {{1, 2}});
  auto d = wg::hyperoct_decompose(swap12);
  EXPECT_EQ(d.delta, -1);
  EXPECT_EQ(d.iota, 1);
  const auto blocks = wg::perm_from_cycles(4, {{1, 3}, {2, 4}});
  d = wg::hyperoct_decompose(blocks);
  EXPECT_EQ(d.delta, 1);
  EXPECT_EQ(d.iota, -1);
  EXPECT_THROW(wg::hyperoct_decompose(wg::perm_from_cycles(4, {{2, 3}})), wg::DomainError);

  for (int n = 1; n <= 4; ++n) {
    const auto t = wg::load_bundled("C1");
    const auto hs = wg::hg_elements(t.group(), n);
    EXPECT_EQ(static_cast<long>(hs.size()), (1L << n) * wg::factorial(n).get_si());
    std::set<WreathElement> distinct(hs.begin(), hs.end());
    EXPECT_EQ(distinct.size(), hs.size());
    // sigma = t^eps phi(tau) and delta, iota are homomorphisms
    std::mt19937 rng(n);
    for (int k = 0; k < 50; ++k) {
      const auto& a = hs[rng() % hs.size()];
      const auto& b = hs[rng() % hs.size()];
      const auto da = wg::hyperoct_decompose(a.perm);
      const auto db = wg::hyperoct_decompose(b.perm);
      const auto dab = wg::hyperoct_decompose(wg::compose(a.perm, b.perm));
      EXPECT_EQ(dab.delta, da.delta * db.delta);
      EXPECT_EQ(dab.iota, da.iota * db.iota);
      Perm flips = wg::identity_perm(2 * n);
      for (int i = 0; i < n; ++i) {
        if (da.eps[i]) std::swap(flips[2 * i], flips[2 * i + 1]);
      }
      EXPECT_EQ(wg::compose(flips, wg::phi(da.tau)), a.perm);
    }
  }
}

TEST(Hyperoctahedral, ThetaIsACharacter) {
  const auto t = wg::load_bundled("C4");
  const auto& g = t.group();
  const auto hs = wg::hg_elements(g, 2);
  EXPECT_EQ(static_cast<long>(hs.size()), wg::hg_order(g, 2).get_si());
  std::mt19937 rng(3);
  for (int xi : wg::linear_characters(t)) {
    for (Pi pi : wg::kAllPi) {
      const wg::ThetaCharacter theta{xi, pi};
      for (int k = 0; k < 100; ++k) {
        const auto& a = hs[rng() % hs.size()];
        const auto& b = hs[rng() % hs.size()];
        EXPECT_EQ(wg::theta_value(t, theta, wg::wreath_mul(g, a, b)),
                  wg::theta_value(t, theta, a) * wg::theta_value(t, theta, b));
      }
    }
  }
}

TEST(DoubleCosets, Representatives) {
  // G = C4, rho = (-, (1), (2,1)) over {e}, {a, a^3}, {a^2}
  const auto t = wg::load_bundled("C4");
  const auto f = wg::fuse_classes(t, 0);
  ASSERT_EQ(f.merged.size(), 3u);
  const int a = f.merged[1].rep;
  const int a2 = f.merged[2].rep;
  EXPECT_EQ(t.group().mul(a, a), a2);
  const auto x = wg::x_rho(f, M({P({}), P({1}), P({2, 1})}));
  EXPECT_EQ(x.perm, wg::perm_from_cycles(8, {{1, 2}, {3, 4, 5, 6}, {7, 8}}));
  EXPECT_EQ(x.base, (std::vector<int>{0, a, 0, 0, 0, a2, 0, a2}));

  const auto c1 = wg::load_bundled("C1");
  const auto x1 = wg::x_rho(wg::fuse_classes(c1, 0), M({P({4, 2, 2})}));
  EXPECT_EQ(x1.perm, wg::perm_from_cycles(16, {{1, 2, 3, 4, 5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}}));
}

TEST(DoubleCosets, RepresentativesSeparate) {
  // every element of SG_{2n} lies in exactly one HG_n x(rho) HG_n, of the predicted size
  for (const char* name : {"C2", "C3", "C4"}) {
    const auto t = wg::load_bundled(name);
    const auto& g = t.group();
    const auto f = wg::fuse_classes(t, 0);
    for (int n = 1; n <= 2; ++n) {
      wg::Integer total = 0;
      std::set<std::vector<int>> seen;
      for (const auto& rho : wg::double_coset_labels(f, n)) {
        const auto x = wg::x_rho(f, rho);
        const auto brute = wg::coset_order_brute(g, x);
        EXPECT_EQ(brute, wg::coset_order(g, f, rho)) << name << " " << rho.to_string({});
        total += brute;
      }
      EXPECT_EQ(total, wg::sg_order(g, 2 * n)) << name;
    }
  }
}

TEST(DoubleCosets, InverseInSameCoset) {
  // HG_n x HG_n = HG_n x^{-1} HG_n
  const auto t = wg::load_bundled("Q8");
  const auto& g = t.group();
  const auto hs = wg::hg_elements(g, 1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = wg::random_wreath_element(g, 2, rng);
    const auto xinv = wg::wreath_inv(g, x);
    bool found = false;
    for (const auto& a : hs) {
      for (const auto& b : hs) found = found || wg::wreath_mul(g, wg::wreath_mul(g, a, x), b) == xinv;
    }
    EXPECT_TRUE(found);
  }
}

namespace {

// x_m = prod_{k=1}^{m-1} (k, 2m-k-1) * (2m-1, 2m)
Perm x_m(int m) {
  std::vector<std::vector<int>> cycles;
  for (int k = 1; k <= m - 1; ++k) cycles.push_back({k, 2 * m - k - 1});
  cycles.push_back({2 * m - 1, 2 * m});
  return wg::perm_from_cycles(2 * m, cycles);
}

Perm y_m(int m) {
  std::vector<int> odd;
  std::vector<int> even;
  for (int k = m; k >= 1; --k) {
    odd.push_back(2 * k - 1);
    even.push_back(2 * k);
  }
  return wg::perm_from_cycles(2 * m, {odd, even});
}

Perm tau_m(int m) {
  std::vector<int> odd;
  std::vector<int> even;
  for (int k = 1; k <= m; ++k) {
    odd.push_back(2 * k - 1);
    even.push_back(2 * k);
  }
  return wg::perm_from_cycles(2 * m, {even, odd});
}

}  // namespace

TEST(DoubleCosets, CycleSymmetries) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> all(2 * m);
    std::iota(all.begin(), all.end(), 1);
    const Perm sigma = wg::perm_from_cycles(2 * m, {all});
    const Perm x = x_m(m);
    const Perm y = y_m(m);
    EXPECT_TRUE(wg::in_hyperoctahedral(x)) << m;
    EXPECT_TRUE(wg::in_hyperoctahedral(y)) << m;
    EXPECT_EQ(wg::compose(wg::compose(x, sigma), wg::compose(y, x)), sigma) << m;
    EXPECT_EQ(wg::compose(x, wg::compose(y, x)), tau_m(m)) << m;
  }
}

TEST(Hecke, SupportMatchesLowerIndexSet) {
  // e x(rho) e != 0 exactly on the lower index set
  for (const char* name : {"C1", "C2", "C3", "C4", "Q8"}) {
    const auto t = wg::load_bundled(name);
    for (int xi : wg::linear_characters(t)) {
      const auto f = wg::fuse_classes(t, xi);
      for (Pi pi : {Pi::trivial, Pi::iota}) {
        const wg::ThetaCharacter theta{xi, pi};
        for (int n = 1; n <= 2; ++n) {
          EXPECT_EQ(wg::hecke_support(t, f, theta, n), wg::lower_index_set(t, f, theta, n))
              << name << " xi=" << t.name(xi) << " " << wg::pi_name(pi) << " n=" << n;
        }
      }
    }
  }
}

TEST(Hecke, KBasisGL2F3) {
  const auto t = wg::load_bundled("GL2F3");
  const auto& g = t.group();
  const int xi = row(t, "chi2");
  const auto f = wg::fuse_classes(t, xi);
  const auto k = wg::k_basis_sg2(t, f, {xi, Pi::trivial});
  ASSERT_EQ(k.size(), f.merged.size());
  for (const auto& entry : k) {
    const auto& m = f.merged[entry.merged];
    const int c = m.classes.front();
    const CycNum x = t.value(xi, c);
    if (m.real && x == CycNum(-1)) {
      EXPECT_TRUE(entry.coefficient.is_zero());
    } else {
      EXPECT_EQ(entry.coefficient, CycNum((m.real ? 2 : 1) * g.zeta(c)));
    }
  }
  int vanishing = 0;
  for (const auto& entry : k) vanishing += entry.coefficient.is_zero();
  EXPECT_EQ(vanishing, f.stats.n_xi);
  EXPECT_EQ(vanishing, 1);
}

TEST(IndexSets, Cardinalities) {
  // |P_**^{xi,pi}(n)| = |P^{**}_{xi,pi}(n)| for every bundled group and xi
  for (const char* name : {"C1", "C2", "C3", "C4", "C5", "C6", "Q8", "GL2F3"}) {
    const auto t = wg::load_bundled(name);
    for (int xi : wg::linear_characters(t)) {
      const auto f = wg::fuse_classes(t, xi);
      for (Pi pi : wg::kAllPi) {
        for (int n = 0; n <= 4; ++n) {
          const wg::ThetaCharacter theta{xi, pi};
          EXPECT_EQ(wg::lower_index_set(t, f, theta, n).size(), wg::upper_index_set(t, f, theta, n).size())
              << name << " " << t.name(xi) << " " << wg::pi_name(pi) << " " << n;
        }
      }
    }
  }
}

TEST(IndexSets, SelfPairedShapes) {
  EXPECT_EQ(wg::self_paired_shape(P({2, 1}), 1, Pi::trivial), P({4, 2}));
  EXPECT_EQ(wg::self_paired_shape(P({2, 1}), -1, Pi::trivial), P({2, 2, 1, 1}));
  EXPECT_EQ(wg::self_paired_shape(P({2, 1}), 1, Pi::iota), P({3, 3}));
  EXPECT_EQ(wg::self_paired_shape(P({2, 1}), 1, Pi::delta), P({2, 2, 1, 1}));
  for (int nu : {1, -1}) {
    for (Pi pi : wg::kAllPi) {
      for (int n = 0; n <= 5; ++n) {
        const auto params = wg::epsilon(pi) == 1 ? wg::enumerate_partitions(n) : wg::strict_partitions(n);
        for (const auto& mu : params) {
          EXPECT_EQ(wg::self_paired_parameter(wg::self_paired_shape(mu, nu, pi), nu, pi), mu);
        }
      }
    }
  }
}

TEST(Induced, MultiplicityFree) {
  // the induced character decomposes over exactly the upper index set, each once
  struct Case {
    const char* group;
    int max_n;
  };
  for (const Case c : {Case{"C1", 3}, Case{"C2", 2}, Case{"C3", 2}, Case{"C4", 2}, Case{"Q8", 2}}) {
    const auto t = wg::load_bundled(c.group);
    const wg::WreathCharacters chars(t);
    for (int xi : wg::linear_characters(t)) {
      const auto f = wg::fuse_classes(t, xi);
      for (Pi pi : wg::kAllPi) {
        for (int n = 1; n <= c.max_n; ++n) {
          const wg::ThetaCharacter theta{xi, pi};
          const auto dec = wg::decompose_induced(chars, theta, n);
          const auto expected = wg::upper_index_set(t, f, theta, n);
          std::set<MultiPartition> got;
          for (const auto& [label, mult] : dec) {
            EXPECT_EQ(mult, 1) << c.group << " " << label.to_string(t.names());
            got.insert(label);
          }
          EXPECT_EQ(got, std::set<MultiPartition>(expected.begin(), expected.end()))
              << c.group << " " << t.name(xi) << " " << wg::pi_name(pi) << " n=" << n;
        }
      }
    }
  }
}

TEST(Induced, LittlewoodForTrivialGroup) {
  // trivial G: 1 up from H_n is sum of S^{2mu}; delta gives (2mu)'; iota gives D(mu) over strict mu
  const auto t = wg::load_bundled("C1");
  const wg::WreathCharacters chars(t);
  const auto dec = wg::decompose_induced(chars, {0, Pi::trivial}, 3);
  std::set<MultiPartition> got;
  for (const auto& [label, mult] : dec) got.insert(label);
  EXPECT_EQ(got, (std::set<MultiPartition>{M({P({6})}), M({P({4, 2})}), M({P({2, 2, 2})})}));
  const auto dec_iota = wg::decompose_induced(chars, {0, Pi::iota}, 3);
  got.clear();
  for (const auto& [label, mult] : dec_iota) got.insert(label);
  EXPECT_EQ(got, (std::set<MultiPartition>{M({P({4, 1, 1})}), M({P({3, 3})})}));
}

TEST(Caps, ElementCap) {
  const auto t = wg::load_bundled("GL2F3");
  wg::Caps caps;
  caps.elements = 1000;
  EXPECT_THROW(wg::hg_elements(t.group(), 2, caps), wg::CapExceeded);
  const wg::WreathCharacters chars(t);
  EXPECT_THROW(wg::decompose_induced(chars, {0, Pi::trivial}, 2, caps), wg::CapExceeded);
}
