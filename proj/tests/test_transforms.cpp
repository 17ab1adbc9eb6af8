#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bct/multilinear.hpp"
#include "bct/transforms.hpp"

#include <set>

using namespace bct;

namespace {

BinaryTable random_prob_table(int n, SplitMix64& rng) {
  std::vector<Rational> p(std::size_t(1) << n);
  Rational sum = 0;
  for (auto& v : p) {
    v = Rational(static_cast<unsigned long>(rng.uniform(1, 1000)), 1UL);
    sum += v;
  }
  for (auto& v : p) v /= sum;
  return BinaryTable(n, Coords::prob, std::move(p));
}

// O(4^n) superset-sum oracle.
BinaryTable naive_moments(const BinaryTable& t) {
  std::vector<Rational> mu(t.size());
  for (SubsetMask I = 0; I < t.size(); ++I)
    for (SubsetMask J = 0; J < t.size(); ++J)
      if ((I & J) == I) mu[I] += t[J];
  return BinaryTable(t.n(), Coords::moment, std::move(mu));
}

// Independence model on a pair of disjoint blocks: product of a table on A,
// a table on B, and an arbitrary (non-product) table on the rest.
BinaryTable factorized_table(int n, SubsetMask A, SubsetMask B, SplitMix64& rng) {
  SubsetMask rest = full_mask(n) & ~(A | B);
  auto factor = [&](SubsetMask block) {
    std::vector<Rational> q(std::size_t(1) << popcount(block));
    Rational s = 0;
    for (auto& v : q) {
      v = Rational(static_cast<unsigned long>(rng.uniform(1, 100)), 1UL);
      s += v;
    }
    for (auto& v : q) v /= s;
    return q;
  };
  auto qa = factor(A), qb = factor(B), qr = factor(rest);
  auto index_in = [](SubsetMask I, SubsetMask block) {
    int idx = 0, bit = 0;
    for (int i = 0; i < 16; ++i) {
      if (!(block >> i & 1)) continue;
      if (I >> i & 1) idx |= 1 << bit;
      ++bit;
    }
    return idx;
  };
  std::vector<Rational> p(std::size_t(1) << n);
  for (SubsetMask I = 0; I < p.size(); ++I)
    p[I] = qa[index_in(I, A)] * qb[index_in(I, B)] * qr[index_in(I, rest)];
  return BinaryTable(n, Coords::prob, std::move(p));
}

}  // namespace

TEST_CASE("table construction enforces the coordinate invariants") {
  CHECK_THROWS(BinaryTable(1, Coords::prob, {Rational(1, 2), Rational(1, 3)}));
  CHECK_THROWS(BinaryTable(1, Coords::moment, {Rational(0), Rational(1)}));
  CHECK_THROWS(BinaryTable(1, Coords::cumulant, {Rational(1), Rational(0)}));
  CHECK_THROWS(BinaryTable(2, Coords::prob, {Rational(1)}));  // wrong size
  // Negative entries are allowed in a prob-tagged table (distributions).
  BinaryTable d(1, Coords::prob, {Rational(3, 2), Rational(-1, 2)});
  CHECK(d[0] == Rational(3, 2));
}

TEST_CASE("probs_to_moments basics") {
  BinaryTable uniform(2, Coords::prob,
                      {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  BinaryTable mu = probs_to_moments(uniform);
  CHECK(mu[0] == 1);
  CHECK(mu[1] == Rational(1, 2));
  CHECK(mu[2] == Rational(1, 2));
  CHECK(mu[3] == Rational(1, 4));

  std::vector<Rational> point(16, 0);
  point[15] = 1;
  BinaryTable mass = probs_to_moments(BinaryTable(4, Coords::prob, point));
  for (SubsetMask I = 0; I < 16; ++I) CHECK(mass[I] == 1);

  CHECK_THROWS(probs_to_moments(mu));  // wrong coordinates
}

TEST_CASE("probs_to_moments agrees with the quadratic oracle") {
  SplitMix64 rng(101);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      BinaryTable t = random_prob_table(n, rng);
      CHECK(probs_to_moments(t) == naive_moments(t));
    }
}

TEST_CASE("moments_to_probs inverts and handles edge examples") {
  BinaryTable mu(2, Coords::moment,
                 {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1, 4)});
  BinaryTable p = moments_to_probs(mu);
  for (SubsetMask I = 0; I < 4; ++I) CHECK(p[I] == Rational(1, 4));

  BinaryTable ones(3, Coords::moment, std::vector<Rational>(8, Rational(1)));
  BinaryTable q = moments_to_probs(ones);
  CHECK(q[7] == 1);
  for (SubsetMask I = 0; I < 7; ++I) CHECK(q[I] == 0);

  SplitMix64 rng(103);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      BinaryTable t = random_prob_table(n, rng);
      CHECK(moments_to_probs(probs_to_moments(t)) == t);
    }
}

TEST_CASE("probs_to_moments is linear") {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    BinaryTable p = random_prob_table(3, rng);
    BinaryTable q = random_prob_table(3, rng);
    Rational alpha(static_cast<unsigned long>(rng.uniform(1, 9)), 10UL);
    alpha.canonicalize();
    std::vector<Rational> mix(8);
    for (SubsetMask I = 0; I < 8; ++I) mix[I] = alpha * p[I] + (1 - alpha) * q[I];
    BinaryTable combo(3, Coords::prob, mix);
    BinaryTable mp = probs_to_moments(p), mq = probs_to_moments(q);
    BinaryTable mc = probs_to_moments(combo);
    for (SubsetMask I = 0; I < 8; ++I)
      CHECK(mc[I] == alpha * mp[I] + (1 - alpha) * mq[I]);
  }
}

TEST_CASE("zeta and Moebius transforms are inverse on basis vectors") {
  const int n = 4;
  for (SubsetMask basis = 0; basis < 16; ++basis) {
    std::vector<Rational> e(16, 0);
    e[basis] = 1;
    // Build a moment table directly from the raw vector path.
    std::vector<Rational> mu = e;
    for (int i = 0; i < n; ++i)
      for (SubsetMask S = 0; S < 16; ++S)
        if (!(S & (1u << i))) mu[S] += mu[S | (1u << i)];
    for (int i = 0; i < n; ++i)
      for (SubsetMask S = 0; S < 16; ++S)
        if (!(S & (1u << i))) mu[S] -= mu[S | (1u << i)];
    CHECK(mu == e);
  }
}

TEST_CASE("moments_to_cumulants examples") {
  // Product distribution: all higher cumulants vanish.
  SplitMix64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> mu(16, 1);
    std::vector<Rational> m1(4);
    for (auto& v : m1) v = random_unit_rational(rng);
    for (SubsetMask I = 0; I < 16; ++I)
      for (int i = 0; i < 4; ++i)
        if (I >> i & 1) mu[I] *= m1[i];
    BinaryTable k = moments_to_cumulants(BinaryTable(4, Coords::moment, mu));
    for (SubsetMask I = 0; I < 16; ++I) {
      if (popcount(I) >= 2) CHECK(k[I] == 0);
      if (popcount(I) == 1) CHECK(k[I] == m1[elements(I)[0] - 1]);
    }
  }
  // p_empty = p_12 = 1/2 has k12 = 1/4.
  BinaryTable t(2, Coords::prob, {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)});
  BinaryTable k = moments_to_cumulants(probs_to_moments(t));
  CHECK(k[3] == Rational(1, 4));
  CHECK(k[1] == Rational(1, 2));
  CHECK(k[2] == Rational(1, 2));
}

TEST_CASE("cumulants_to_moments examples and round trips") {
  BinaryTable zero(3, Coords::cumulant, std::vector<Rational>(8, 0));
  BinaryTable mu = cumulants_to_moments(zero);
  CHECK(mu[0] == 1);
  for (SubsetMask I = 1; I < 8; ++I) CHECK(mu[I] == 0);

  SplitMix64 rng(109);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Rational> kv(std::size_t(1) << n);
      for (SubsetMask I = 1; I < kv.size(); ++I) kv[I] = random_unit_rational(rng);
      BinaryTable k(n, Coords::cumulant, kv);
      CHECK(moments_to_cumulants(cumulants_to_moments(k)) == k);
    }
  }
}

TEST_CASE("partition-formula and log/exp paths are bit-identical") {
  SplitMix64 rng(113);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      BinaryTable mu = probs_to_moments(random_prob_table(n, rng));
      BinaryTable k1 = moments_to_cumulants(mu);
      BinaryTable k2 = moments_to_cumulants_log(mu);
      CHECK(k1 == k2);
      CHECK(cumulants_to_moments(k1) == cumulants_to_moments_exp(k1));
      CHECK(cumulants_to_moments_exp(k2) == mu);
    }
  }
}

TEST_CASE("full round trip prob -> moment -> cumulant -> moment -> prob") {
  SplitMix64 rng(127);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      BinaryTable t = random_prob_table(n, rng);
      BinaryTable back = moments_to_probs(
          cumulants_to_moments(moments_to_cumulants(probs_to_moments(t))));
      CHECK(back == t);
      CHECK(convert(convert(t, Coords::cumulant), Coords::prob) == t);
    }
  }
}

TEST_CASE("act_symmetry basics") {
  BinaryTable t(2, Coords::prob, {Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(act_symmetry(t, identity_symmetry(2)) == t);
  CubeSymmetry flip12{{1, 2}, full_mask(2)};
  BinaryTable ft = act_symmetry(t, flip12);
  CHECK(ft[3] == 1);
  CHECK(ft[0] == 0);

  // Composition: g.(h.t) = (gh).t on random tables, exhaustive over n=2 group.
  SplitMix64 rng(131);
  BinaryTable r = random_prob_table(2, rng);
  for (const auto& g : cube_group(2))
    for (const auto& h : cube_group(2))
      CHECK(act_symmetry(act_symmetry(r, h), g) == act_symmetry(r, compose(g, h)));
}

TEST_CASE("flip action on cumulants follows the sign rule") {
  SplitMix64 rng(137);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      BinaryTable t = random_prob_table(n, rng);
      BinaryTable k = convert(t, Coords::cumulant);
      for (SubsetMask J = 0; J < (SubsetMask(1) << n); ++J) {
        CubeSymmetry rho = identity_symmetry(n);
        rho.flip = J;
        BinaryTable kf = convert(act_symmetry(t, rho), Coords::cumulant);
        for (SubsetMask I = 1; I < (SubsetMask(1) << n); ++I) {
          if (popcount(I) >= 2) {
            Rational expect = (popcount(I & J) % 2 == 1) ? Rational(-k[I]) : k[I];
            CHECK(kf[I] == expect);
          } else {
            int i = elements(I)[0];
            Rational expect = contains(J, i) ? Rational(1) - k[I] : k[I];
            CHECK(kf[I] == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("relabel_values") {
  SplitMix64 rng(139);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      BinaryTable mu = probs_to_moments(random_prob_table(n, rng));
      std::vector<Rational> a(n), b(n);
      for (auto& v : a) v = random_unit_rational(rng);
      for (auto& v : b) v = random_unit_rational(rng);

      // a = 1, b = 0 is the identity.
      CHECK(relabel_values(mu, std::vector<Rational>(n, 1), std::vector<Rational>(n, 0)) == mu);

      // a = b + 1: higher cumulants unchanged, first-order shifted by b.
      std::vector<Rational> a1 = b;
      for (auto& v : a1) v += 1;
      BinaryTable k0 = moments_to_cumulants(mu);
      BinaryTable k1 = moments_to_cumulants(relabel_values(mu, a1, b));
      for (SubsetMask I = 1; I < mu.size(); ++I) {
        if (popcount(I) >= 2) CHECK(k1[I] == k0[I]);
        else CHECK(k1[I] == k0[I] + b[elements(I)[0] - 1]);
      }

      // General scaling law: k'_I = k_I prod (a_i - b_i) for |I| >= 2,
      // k'_i = (a_i - b_i) k_i + b_i.
      BinaryTable k2 = moments_to_cumulants(relabel_values(mu, a, b));
      for (SubsetMask I = 1; I < mu.size(); ++I) {
        if (popcount(I) >= 2) {
          Rational scale = 1;
          for (int e : elements(I)) scale *= a[e - 1] - b[e - 1];
          CHECK(k2[I] == k0[I] * scale);
        } else {
          int e = elements(I)[0];
          CHECK(k2[I] == (a[e - 1] - b[e - 1]) * k0[I] + b[e - 1]);
        }
      }
    }
  }
}

TEST_CASE("check_independence") {
  SplitMix64 rng(149);
  // Point-mass product example: false for the coupled pair distribution.
  BinaryTable coupled(2, Coords::prob,
                      {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)});
  CHECK(!check_independence(coupled, single(1), single(2)));
  CHECK_THROWS(check_independence(coupled, single(1), single(1)));

  for (int trial = 0; trial < 10; ++trial) {
    // Full product distribution: any disjoint pair is independent.
    BinaryTable prod = factorized_table(4, single(1), single(2) | single(3), rng);
    CHECK(check_independence(prod, single(1), single(2) | single(3)));
    CHECK(check_independence(prod, single(1), single(2)));

    // A = {1,2}, B = {3}: marginal factorizes, coordinate 4 is arbitrary and
    // correlated with nothing in particular.
    BinaryTable t = factorized_table(4, single(1) | single(2), single(3), rng);
    CHECK(check_independence(t, single(1) | single(2), single(3)));

    // Verify the moment characterization mu_{IuJ} = mu_I mu_J on the block.
    BinaryTable mu = probs_to_moments(t);
    SubsetMask A = single(1) | single(2), B = single(3);
    for (SubsetMask I = 0; I <= A; ++I) {
      if ((I & A) != I) continue;
      for (SubsetMask J = 0; J <= B; ++J) {
        if ((J & B) != J) continue;
        CHECK(mu[I | J] == mu[I] * mu[J]);
      }
    }

    // Random tables are generically dependent.
    BinaryTable r = random_prob_table(3, rng);
    CHECK(!check_independence(r, single(1), single(2)));
  }
}

TEST_CASE("zgrade") {
  VarListPtr kv = k_vars(3, 2);
  SparsePoly tangle = SparsePoly::variable(kv, "k123").pow(2) +
                      Rational(4) * SparsePoly::variable(kv, "k12") *
                          SparsePoly::variable(kv, "k13") *
                          SparsePoly::variable(kv, "k23");
  auto g = zgrade(tangle);
  CHECK(g.homogeneous);
  CHECK(g.degree.deg == std::vector<int>{2, 2, 2});

  SparsePoly mixed = SparsePoly::variable(kv, "k12") + SparsePoly::variable(kv, "k13");
  auto h = zgrade(mixed);
  CHECK(!h.homogeneous);
  CHECK(h.witness_a != h.witness_b);

  VarListPtr bad = make_vars({"x"});
  CHECK_THROWS(zgrade(SparsePoly::variable(bad, "x")));
}
