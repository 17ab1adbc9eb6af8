#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bct/hyperdet.hpp"
#include "bct/models.hpp"

#include <algorithm>

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

BinaryTable product_table(int n, SplitMix64& rng) {
  std::vector<Rational> m1(n);
  for (auto& v : m1) v = random_unit_rational(rng);
  std::vector<Rational> p(std::size_t(1) << n, 1);
  for (SubsetMask I = 0; I < p.size(); ++I)
    for (int i = 0; i < n; ++i)
      p[I] *= (I >> i & 1) ? m1[i] : Rational(1) - m1[i];
  return BinaryTable(n, Coords::prob, std::move(p));
}

Monomial mono(const VarListPtr& vars, const std::vector<std::pair<const char*, int>>& exps) {
  Monomial m(vars->size(), 0);
  for (const auto& [name, e] : exps) {
    int i = vars->index(name);
    REQUIRE(i >= 0);
    m[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

}  // namespace

TEST_CASE("moment-coordinate formula for the 2x2x2 hyperdeterminant") {
  SparsePoly d = hyperdet3_moments();
  CHECK(d.num_terms() == 12);
  CHECK(d.degree() == 4);
  const auto& mv = d.vars();
  CHECK(d.coefficient(mono(mv, {{"mu123", 2}})) == 1);
  CHECK(d.coefficient(mono(mv, {{"mu12", 1}, {"mu13", 1}, {"mu23", 1}})) == 4);
  CHECK(d.coefficient(mono(mv, {{"mu1", 1}, {"mu2", 1}, {"mu3", 1}, {"mu123", 1}})) == 4);
  CHECK(d.coefficient(mono(mv, {{"mu1", 1}, {"mu2", 1}, {"mu13", 1}, {"mu23", 1}})) == -2);

  // Vanishes on product moments mu_I = prod mu_i.
  SplitMix64 rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    Rational m1 = random_unit_rational(rng), m2 = random_unit_rational(rng),
             m3 = random_unit_rational(rng);
    std::unordered_map<std::string, Rational> point{
        {"mu1", m1},         {"mu2", m2},         {"mu3", m3},
        {"mu12", m1 * m2},   {"mu13", m1 * m3},   {"mu23", m2 * m3},
        {"mu123", m1 * m2 * m3}};
    CHECK(d.eval(point) == 0);
  }
}

TEST_CASE("hyperdeterminant in cumulants: closed forms by computation") {
  const SparsePoly& d2 = hyperdet_cumulants(2);
  CHECK(d2.num_terms() == 1);
  CHECK(d2 == SparsePoly::variable(k_vars(2, 2), "k12"));

  const SparsePoly& d3 = hyperdet_cumulants(3);
  VarListPtr kv = k_vars(3, 2);
  SparsePoly tangle = SparsePoly::variable(kv, "k123").pow(2) +
                      Rational(4) * SparsePoly::variable(kv, "k12") *
                          SparsePoly::variable(kv, "k13") *
                          SparsePoly::variable(kv, "k23");
  CHECK(d3 == tangle);
  CHECK_THROWS(hyperdet_cumulants(5));
  CHECK_THROWS(hyperdet_cumulants(1));
}

TEST_CASE("format-2^4 hyperdeterminant census") {
  const SparsePoly& d4 = hyperdet_cumulants(4);
  CHECK(d4.num_terms() == 13819);

  auto grade = zgrade(d4);
  CHECK(grade.homogeneous);
  CHECK(grade.degree.deg == std::vector<int>{12, 12, 12, 12});

  int min_deg = 1 << 20, max_deg = 0;
  for (const auto& [m, c] : d4.terms()) {
    min_deg = std::min(min_deg, total_degree(m));
    max_deg = std::max(max_deg, total_degree(m));
  }
  CHECK(min_deg == 15);
  CHECK(max_deg == 24);

  const auto& kv = d4.vars();
  // No first-order cumulants appear at all.
  for (int i = 0; i < kv->size(); ++i) CHECK(popcount(*k_var_subset(kv->name(i))) >= 2);

  // Anchor terms.
  CHECK(d4.coefficient(mono(kv, {{"k12", 6}, {"k13", 5}, {"k14", 1}, {"k23", 1},
                                  {"k24", 5}, {"k34", 6}})) == 256);
  CHECK(d4.coefficient(mono(kv, {{"k123", 3}, {"k124", 3}, {"k134", 3}, {"k234", 3},
                                  {"k1234", 3}})) == 1);
  CHECK(d4.coefficient(mono(kv, {{"k34", 1}, {"k123", 3}, {"k124", 3}, {"k134", 2},
                                  {"k234", 2}, {"k1234", 4}})) == -1);
  CHECK(d4.coefficient(mono(kv, {{"k12", 6}, {"k13", 4}, {"k14", 2}, {"k23", 2},
                                  {"k24", 4}, {"k34", 6}})) == -1024);
  CHECK(d4.coefficient(mono(kv, {{"k12", 6}, {"k13", 3}, {"k14", 3}, {"k23", 3},
                                  {"k24", 3}, {"k34", 6}})) == 1536);
  // Content is 1 after normalization.
  CHECK(d4.content() == 1);
}

TEST_CASE("schlafli slicing is axis-independent and kills rank-one tensors") {
  VarListPtr kv = k_vars(4, 2);
  MultilinearPoly<SparsePoly> T = moment_mgf_from_cumulants(4, kv);
  SparsePoly d_x4 = schlafli_det4(T, 4);
  SparsePoly d_x1 = schlafli_det4(T, 1);
  SparsePoly d_x2 = schlafli_det4(T, 2);
  CHECK(d_x4 == d_x1);
  CHECK(d_x4 == d_x2);

  // (1 + x1)(1 + x2)(1 + x3)(1 + x4): a Segre point.
  MultilinearPoly<SparsePoly> rank1(4, SparsePoly::zero(kv));
  for (SubsetMask I = 0; I < 16; ++I) rank1[I] = SparsePoly::constant(kv, 1);
  CHECK(schlafli_det4(rank1, 4).is_zero());

  CHECK_THROWS(schlafli_det4(T, 0));
  CHECK_THROWS(schlafli_det4(T, 5));
}

TEST_CASE("the x1x2x3x4 coefficient of exp(K) with first-order terms dropped") {
  VarListPtr kv = k_vars(4, 2);
  MultilinearPoly<SparsePoly> T = moment_mgf_from_cumulants(4, kv);
  auto k = [&](const char* s) { return SparsePoly::variable(kv, s); };
  CHECK(T[15] == k("k1234") + k("k12") * k("k34") + k("k13") * k("k24") +
                     k("k14") * k("k23"));
  CHECK(T[0] == SparsePoly::constant(kv, 1));
  CHECK(T[1].is_zero());  // no first-order cumulants in the list
  CHECK(T[7] == k("k123"));
}

TEST_CASE("hyperdet_eval") {
  SplitMix64 rng(223);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial)
      CHECK(hyperdet_eval(product_table(n, rng), n) == 0);

  BinaryTable t(2, Coords::prob, {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)});
  CHECK(hyperdet_eval(t, 2) == Rational(1, 4));
  CHECK_THROWS(hyperdet_eval(t, 3));
}

TEST_CASE("hyperdeterminant vanishes on the second osculating model") {
  HiddenSubsetModel h{4, {0, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}};
  std::vector<SparsePoly> det{hyperdet_cumulants(4)};
  CHECK(verify_vanishing(det, hsm_parametrization(h), VerifyMode::sampled, 25, 977));
}

TEST_CASE("cube symmetries preserve the hyperdeterminant") {
  SplitMix64 rng(227);
  // n = 3: exhaustive over all 48 symmetries.
  for (int trial = 0; trial < 5; ++trial) {
    BinaryTable t = random_prob_table(3, rng);
    Rational v = hyperdet_eval(t, 3);
    for (const auto& g : cube_group(3))
      CHECK(hyperdet_eval(act_symmetry(t, g), 3) == v);
  }
  // n = 4: sampled symmetries (the Z^4-degree (12,12,12,12) makes every flip
  // sign (+1)^12, and permutations fix the polynomial).
  auto group4 = cube_group(4);
  for (int trial = 0; trial < 2; ++trial) {
    BinaryTable t = random_prob_table(4, rng);
    Rational v = hyperdet_eval(t, 4);
    for (int draw = 0; draw < 12; ++draw) {
      const auto& g = group4[rng.uniform(0, group4.size() - 1)];
      CHECK(hyperdet_eval(act_symmetry(t, g), 4) == v);
    }
  }
}

TEST_CASE("tangential parametrization lies on the n=3 hypersurface, symbolically") {
  VarListPtr sv = make_vars({"s1", "s2", "s3"});
  std::vector<SparsePoly> s;
  for (int i = 1; i <= 3; ++i) s.push_back(SparsePoly::variable(sv, "s" + std::to_string(i)));
  auto coords = tangential_cumulants(3, s);
  CHECK(verify_vanishing_map({hyperdet_cumulants(3)}, coords, VerifyMode::symbolic));
}

TEST_CASE("one-parameter family of sextics through the hyperdeterminant") {
  // In affine moments, Det(P) + (rho - 4)(mu12 - mu1 mu2)(mu13 - mu1 mu3)
  // (mu23 - mu2 mu3) rewrites in cumulants as k123^2 + rho k12 k13 k23,
  // because each covariance factor is exactly a second-order cumulant.
  VarListPtr mv = mu_vars(3);
  auto m = [&](const char* s) { return SparsePoly::variable(mv, s); };
  for (long rho : {0L, 7L, -3L}) {
    SparsePoly family =
        hyperdet3_moments() +
        Rational(rho - 4) * ((m("mu12") - m("mu1") * m("mu2")) *
                             ((m("mu13") - m("mu1") * m("mu3")) *
                              (m("mu23") - m("mu2") * m("mu3"))));
    VarListPtr kv = k_vars(3, 1);
    MultilinearPoly<SparsePoly> M = moment_mgf_from_cumulants(3, kv);
    std::unordered_map<std::string, SparsePoly> bind;
    for (SubsetMask I = 1; I < 8; ++I) bind.emplace(mu_var_name(I), M[I]);
    SparsePoly in_k = family.substitute(bind);
    auto k = [&](const char* s) { return SparsePoly::variable(kv, s); };
    CHECK(in_k == k("k123").pow(2) + Rational(rho) * (k("k12") * (k("k13") * k("k23"))));
  }
}

TEST_CASE("cayley degrees") {
  CHECK(cayley_degree(2) == 2);
  CHECK(cayley_degree(3) == 4);
  CHECK(cayley_degree(4) == 24);
  CHECK(cayley_degree(5) == 128);
  CHECK(hyperdet3_moments().degree() == 4);
  CHECK_THROWS(cayley_degree(1));
}

TEST_CASE("principal minor cumulants") {
  // Diagonal matrix: independence, higher cumulants vanish.
  RatMatrix diag(3, std::vector<Rational>(3, 0));
  diag[0][0] = Rational(1, 2);
  diag[1][1] = Rational(1, 3);
  diag[2][2] = Rational(2, 7);
  BinaryTable k = principal_minor_cumulants(diag);
  for (SubsetMask I = 0; I < 8; ++I) {
    if (popcount(I) >= 2) CHECK(k[I] == 0);
    if (popcount(I) == 1) CHECK(k[I] == diag[elements(I)[0] - 1][elements(I)[0] - 1]);
  }

  RatMatrix bad = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK_THROWS(principal_minor_cumulants(bad));

  // Low-order coefficients: k_ij = -a_ij^2, k_ijl = 2 a_ij a_il a_jl, and the
  // fourth-order three-cycle sum, checked on random symmetric matrices.
  SplitMix64 rng(229);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix A(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i) {
      A[i][i] = random_unit_rational(rng);
      for (int j = 0; j < i; ++j) A[i][j] = A[j][i] = random_unit_rational(rng);
    }
    BinaryTable kc = principal_minor_cumulants(A);
    for (int i = 1; i <= 4; ++i) CHECK(kc[single(i)] == A[i - 1][i - 1]);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        CHECK(kc[single(i) | single(j)] == -(A[i - 1][j - 1] * A[i - 1][j - 1]));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int l = j + 1; l <= 4; ++l)
          CHECK(kc[single(i) | single(j) | single(l)] ==
                Rational(2) * A[i - 1][j - 1] * A[i - 1][l - 1] * A[j - 1][l - 1]);
    Rational cyc = A[0][1] * A[0][2] * A[1][3] * A[2][3] +
                   A[0][1] * A[0][3] * A[1][2] * A[2][3] +
                   A[0][2] * A[0][3] * A[1][2] * A[1][3];
    CHECK(kc[15] == Rational(-2) * cyc);
  }
}

TEST_CASE("hand-checked generator value") {
  // 4 k12 k13 k23 + k123^2 on the all-ones off-diagonal matrix:
  // 4 (-1)^3 + 2^2 = 0.
  RatMatrix A(4, std::vector<Rational>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) A[i][j] = 1;
  BinaryTable k = principal_minor_cumulants(A);
  CHECK(k[0b0011] == -1);
  CHECK(k[0b0111] == 2);
  Rational value = Rational(4) * k[0b0011] * k[0b0101] * k[0b0110] + k[0b0111] * k[0b0111];
  CHECK(value == 0);
}

TEST_CASE("principal minor ideal") {
  CHECK(principal_minor_ideal_n4().size() == 20);
  CHECK(verify_principal_minor_ideal(100, 1));
  CHECK(verify_principal_minor_ideal(25, 999));

  // Negative control: perturbing one coefficient (4 -> 5) breaks vanishing.
  VarListPtr kv = k_vars(4, 2);
  auto k = [&](const char* s) { return SparsePoly::variable(kv, s); };
  SparsePoly perturbed = Rational(5) * k("k12") * k("k13") * k("k23") + k("k123").pow(2);
  SplitMix64 rng(233);
  RatMatrix A(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) {
    A[i][i] = random_unit_rational(rng);
    for (int j = 0; j < i; ++j) A[i][j] = A[j][i] = random_unit_rational(rng);
  }
  BinaryTable kc = principal_minor_cumulants(A);
  std::unordered_map<std::string, Rational> point;
  for (SubsetMask I : k_var_masks(4, 2)) point.emplace(k_var_name(I), kc[I]);
  CHECK(perturbed.eval(point) != 0);
}

TEST_CASE("principal minor ideal generators are symbolically exact") {
  // Build the cumulants of det(I + A X) for a symbolic symmetric 4x4 matrix
  // and substitute into all twenty generators.
  std::vector<std::string> names;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      names.push_back("a" + std::to_string(i) + std::to_string(j));
  VarListPtr av = make_vars(names);
  auto entry = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return SparsePoly::variable(av, "a" + std::to_string(i) + std::to_string(j));
  };
  std::vector<SparsePoly> mu(16, SparsePoly::zero(av));
  mu[0] = SparsePoly::constant(av, 1);
  for (SubsetMask I = 1; I < 16; ++I) {
    auto idx = elements(I);
    std::vector<std::vector<SparsePoly>> sub(idx.size(),
                                             std::vector<SparsePoly>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = entry(idx[r], idx[c]);
    mu[I] = cofactor_determinant(sub, SparsePoly::zero(av));
  }
  // Moebius inversion on the partition lattice, symbolically.
  std::map<SubsetMask, SparsePoly> kc;
  for (SubsetMask I = 1; I < 16; ++I) {
    SparsePoly total = SparsePoly::zero(av);
    for_each_set_partition(I, [&](const std::vector<SubsetMask>& blocks) {
      Rational c = (blocks.size() % 2 == 1) ? 1 : -1;
      for (std::size_t j = 2; j < blocks.size(); ++j) c *= Rational(static_cast<long>(j));
      SparsePoly prod = SparsePoly::constant(av, c);
      for (SubsetMask B : blocks) prod = prod * mu[B];
      total += prod;
    });
    kc.emplace(I, std::move(total));
  }
  CHECK(verify_vanishing_map(principal_minor_ideal_n4(), kc, VerifyMode::symbolic));
}
