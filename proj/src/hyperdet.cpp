#include "bct/hyperdet.hpp"

#include "bct/discriminant.hpp"

#include <array>
#include <stdexcept>

namespace bct {

std::string mu_var_name(SubsetMask I) { return "mu" + subset_str(I); }

VarListPtr mu_vars(int n) {
  std::vector<std::string> names;
  for (SubsetMask I : k_var_masks(n, 1)) names.push_back(mu_var_name(I));
  return make_vars(std::move(names));
}

namespace {

// Cayley's 2x2x2 hyperdeterminant over the eight slots indexed by subsets of
// a 3-element axis set (local masks 0..7): 4 squares, 2 terms with +4, and
// 6 terms with -2.
struct CayleyTerm {
  int coeff;
  std::array<SubsetMask, 4> slots;
};

const std::array<CayleyTerm, 12> kCayley3 = {{
    {+1, {0, 0, 7, 7}},
    {+1, {1, 1, 6, 6}},
    {+1, {2, 2, 5, 5}},
    {+1, {4, 4, 3, 3}},
    {+4, {0, 3, 5, 6}},
    {+4, {1, 2, 4, 7}},
    {-2, {0, 1, 6, 7}},
    {-2, {0, 2, 5, 7}},
    {-2, {0, 4, 3, 7}},
    {-2, {1, 2, 5, 6}},
    {-2, {1, 4, 3, 6}},
    {-2, {2, 4, 3, 5}},
}};

}  // namespace

SparsePoly hyperdet3_moments() {
  VarListPtr vars = mu_vars(3);
  auto v = [&](SubsetMask I) {
    return I == 0 ? SparsePoly::constant(vars, 1)
                  : SparsePoly::variable(vars, mu_var_name(I));
  };
  SparsePoly out = SparsePoly::zero(vars);
  for (const auto& t : kCayley3) {
    SparsePoly p = SparsePoly::constant(vars, t.coeff);
    for (SubsetMask s : t.slots) p = p * v(s);
    out += p;
  }
  return out;
}

MultilinearPoly<SparsePoly> cumulant_generating_poly(int n, const VarListPtr& kv) {
  MultilinearPoly<SparsePoly> K(n, SparsePoly::zero(kv));
  for (SubsetMask I = 1; I < (SubsetMask(1) << n); ++I) {
    std::string name = k_var_name(I);
    if (kv->index(name) >= 0) K[I] = SparsePoly::variable(kv, name);
  }
  return K;
}

MultilinearPoly<SparsePoly> moment_mgf_from_cumulants(int n, const VarListPtr& kv) {
  return ml_exp(cumulant_generating_poly(n, kv), SparsePoly::constant(kv, 1));
}

SparsePoly schlafli_det4(const MultilinearPoly<SparsePoly>& T, int slice_axis) {
  if (T.n() != 4) throw std::invalid_argument("schlafli_det4: need a 4-variable tensor");
  if (slice_axis < 1 || slice_axis > 4)
    throw std::invalid_argument("schlafli_det4: slice axis out of range");
  const SubsetMask axis_bit = single(slice_axis);
  // Remaining axes, ascending, define the local 3-bit slot indexing.
  std::vector<int> rest;
  for (int i = 1; i <= 4; ++i)
    if (i != slice_axis) rest.push_back(i);
  auto global_mask = [&](SubsetMask local) {
    SubsetMask g = 0;
    for (int b = 0; b < 3; ++b)
      if (local & (SubsetMask(1) << b)) g |= single(rest[b]);
    return g;
  };

  const VarListPtr kv = T.zero().vars();
  const SparsePoly zero = SparsePoly::zero(kv);
  std::array<SparsePoly, 8> F, G;
  for (SubsetMask s = 0; s < 8; ++s) {
    F[s] = T[global_mask(s)];
    G[s] = T[global_mask(s) | axis_bit];
  }

  // Pencil Det3(F u + G v): expand each Cayley term's product of four linear
  // forms into the five binary-quartic coefficients.
  std::array<SparsePoly, 5> c;
  c.fill(zero);
  for (const auto& term : kCayley3) {
    for (unsigned pick = 0; pick < 16; ++pick) {
      int vcount = __builtin_popcount(pick);
      SparsePoly p = SparsePoly::constant(kv, term.coeff);
      bool dead = false;
      for (int j = 0; j < 4 && !dead; ++j) {
        const SparsePoly& slot =
            (pick >> j) & 1u ? G[term.slots[j]] : F[term.slots[j]];
        if (slot.is_zero()) dead = true;
        else p = p * slot;
      }
      if (!dead) c[vcount] += p;
    }
  }

  SparsePoly disc = binary_quartic_discriminant(c[0], c[1], c[2], c[3], c[4]);
  if (disc.is_zero()) return disc;
  disc = disc.divided_by_content();
  if (disc.terms().rbegin()->second < 0) disc *= Rational(-1);
  return disc;
}

namespace {

// Re-express a polynomial whose support uses only the variables of `target`.
SparsePoly project_onto(const SparsePoly& p, const VarListPtr& target) {
  std::unordered_map<std::string, SparsePoly> bind;
  const auto& vars = *p.vars();
  for (int i = 0; i < vars.size(); ++i) {
    int j = target->index(vars.name(i));
    bind.emplace(vars.name(i), j >= 0 ? SparsePoly::variable(target, vars.name(i))
                                      : SparsePoly::zero(target));
  }
  // Verify no occurring variable was dropped.
  for (const auto& [m, coeff] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0 && target->index(vars.name(i)) < 0)
        throw std::logic_error("projection drops an occurring variable: " + vars.name(i));
  return p.substitute(bind);
}

SparsePoly compute_hyperdet_cumulants(int n) {
  if (n == 2 || n == 3) {
    // Substitute the cumulant expansion of each moment into the
    // moment-coordinate hyperdeterminant.
    VarListPtr kv_full = k_vars(n, 1);
    MultilinearPoly<SparsePoly> M = moment_mgf_from_cumulants(n, kv_full);
    std::unordered_map<std::string, SparsePoly> bind;
    for (SubsetMask I : k_var_masks(n, 1)) bind.emplace(mu_var_name(I), M[I]);
    SparsePoly det_mu =
        n == 2 ? SparsePoly::variable(mu_vars(2), "mu12") -
                     SparsePoly::variable(mu_vars(2), "mu1") *
                         SparsePoly::variable(mu_vars(2), "mu2")
               : hyperdet3_moments();
    SparsePoly in_k = det_mu.substitute(bind);
    return project_onto(in_k, k_vars(n, 2));
  }
  if (n == 4) {
    VarListPtr kv = k_vars(4, 2);
    MultilinearPoly<SparsePoly> T = moment_mgf_from_cumulants(4, kv);
    SparsePoly det = schlafli_det4(T, 4);
    // Normalize sign on the anchor monomial (k123 k124 k134 k234 k1234)^3.
    Monomial anchor(kv->size(), 0);
    for (SubsetMask I : k_var_masks(4, 2))
      if (popcount(I) >= 3) anchor[kv->index(k_var_name(I))] = 3;
    Rational a = det.coefficient(anchor);
    if (a == 0) throw std::logic_error("hyperdet4: anchor monomial missing");
    if (a < 0) det *= Rational(-1);
    return det;
  }
  throw std::invalid_argument("hyperdet_cumulants: supported only for n in {2,3,4}");
}

}  // namespace

const SparsePoly& hyperdet_cumulants(int n) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("hyperdet_cumulants: supported only for n in {2,3,4}");
  static const SparsePoly d2 = compute_hyperdet_cumulants(2);
  static const SparsePoly d3 = compute_hyperdet_cumulants(3);
  static const SparsePoly d4 = compute_hyperdet_cumulants(4);
  switch (n) {
    case 2: return d2;
    case 3: return d3;
    default: return d4;
  }
}

Rational hyperdet_eval(const BinaryTable& t, int n) {
  if (t.n() != n) throw std::invalid_argument("hyperdet_eval: dimension mismatch");
  BinaryTable k = convert(t, Coords::cumulant);
  std::unordered_map<std::string, Rational> point;
  for (SubsetMask I : k_var_masks(n, 2)) point.emplace(k_var_name(I), k[I]);
  return hyperdet_cumulants(n).eval(point);
}

Integer cayley_degree(int n) {
  if (n < 2) throw std::invalid_argument("cayley_degree: need n >= 2");
  Integer total = 0;
  for (int j = 0; j <= n; ++j) {
    Integer perm = 1;  // n!/j! = n (n-1) ... (j+1)
    for (int v = j + 1; v <= n; ++v) perm *= v;
    Integer pw = 1;
    for (int v = 0; v < j; ++v) pw *= -2;
    total += perm * pw * (n - j + 1);
  }
  return total;
}

BinaryTable principal_minor_cumulants(const RatMatrix& A) {
  std::size_t n = A.size();
  if (n == 0 || n > 6) throw std::invalid_argument("principal_minor_cumulants: need 1 <= n <= 6");
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("matrix not square");
    for (std::size_t j = 0; j < i; ++j)
      if (A[i][j] != A[j][i]) throw std::invalid_argument("matrix not symmetric");
  }
  std::vector<Rational> mu(std::size_t(1) << n);
  mu[0] = 1;
  for (SubsetMask I = 1; I < mu.size(); ++I) {
    std::vector<int> idx = elements(I);
    RatMatrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        sub[r][c] = A[idx[r] - 1][idx[c] - 1];
    mu[I] = determinant(sub);
  }
  return moments_to_cumulants(BinaryTable(static_cast<int>(n), Coords::moment, std::move(mu)));
}

const std::vector<SparsePoly>& principal_minor_ideal_n4() {
  static const std::vector<SparsePoly> gens = [] {
    VarListPtr kv = k_vars(4, 2);
    auto k = [&](const char* name) { return SparsePoly::variable(kv, name); };
    auto C = [&](long c) { return SparsePoly::constant(kv, c); };
    std::vector<SparsePoly> g;
    SparsePoly k12 = k("k12"), k13 = k("k13"), k14 = k("k14"), k23 = k("k23"),
               k24 = k("k24"), k34 = k("k34"), k123 = k("k123"), k124 = k("k124"),
               k134 = k("k134"), k234 = k("k234"), k1234 = k("k1234");
    g.push_back(C(4) * k12 * k13 * k23 + k123 * k123);
    g.push_back(C(4) * k12 * k14 * k24 + k124 * k124);
    g.push_back(C(4) * k13 * k14 * k34 + k134 * k134);
    g.push_back(C(4) * k23 * k24 * k34 + k234 * k234);
    g.push_back(C(4) * k12 * k13 * k14 * k234 + k123 * k124 * k134);
    g.push_back(C(4) * k12 * k23 * k24 * k134 + k123 * k124 * k234);
    g.push_back(C(4) * k13 * k23 * k34 * k124 + k123 * k134 * k234);
    g.push_back(C(4) * k14 * k24 * k34 * k123 + k124 * k134 * k234);
    g.push_back(C(2) * k12 * k13 * k234 + C(2) * k12 * k23 * k134 +
                C(2) * k13 * k23 * k124 + k123 * k1234);
    g.push_back(C(2) * k12 * k14 * k234 + C(2) * k12 * k24 * k134 +
                C(2) * k14 * k24 * k123 + k124 * k1234);
    g.push_back(C(2) * k13 * k14 * k234 + C(2) * k13 * k34 * k124 +
                C(2) * k14 * k34 * k123 + k134 * k1234);
    g.push_back(C(2) * k23 * k24 * k134 + C(2) * k23 * k34 * k124 +
                C(2) * k24 * k34 * k123 + k234 * k1234);
    g.push_back(C(-2) * k12 * k13 * k14 * k1234 + k12 * k13 * k124 * k134 +
                k12 * k14 * k123 * k134 + k13 * k14 * k123 * k124);
    g.push_back(C(-2) * k12 * k23 * k24 * k1234 + k12 * k23 * k124 * k234 +
                k12 * k24 * k123 * k234 + k23 * k24 * k123 * k124);
    g.push_back(C(-2) * k13 * k23 * k34 * k1234 + k13 * k23 * k134 * k234 +
                k13 * k34 * k123 * k234 + k23 * k34 * k123 * k134);
    g.push_back(C(-2) * k14 * k24 * k34 * k1234 + k14 * k24 * k134 * k234 +
                k14 * k34 * k124 * k234 + k24 * k34 * k124 * k134);
    g.push_back(k14 * k123 * k234 - k23 * k124 * k134);
    g.push_back(k13 * k124 * k234 - k24 * k123 * k134);
    g.push_back(k12 * k134 * k234 - k34 * k123 * k124);
    g.push_back(C(4) * (k12 * k13 * k24 * k34 + k12 * k14 * k23 * k34 +
                        k13 * k14 * k23 * k24) -
                C(2) * (k14 * k123 * k234 + k24 * k123 * k134 + k34 * k123 * k124) -
                k1234 * k1234);
    return g;
  }();
  return gens;
}

bool verify_principal_minor_ideal(int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto& gens = principal_minor_ideal_n4();
  for (int t = 0; t < trials; ++t) {
    RatMatrix A(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i) {
      A[i][i] = random_unit_rational(rng);
      for (int j = 0; j < i; ++j) A[i][j] = A[j][i] = random_unit_rational(rng);
    }
    BinaryTable k = principal_minor_cumulants(A);
    std::unordered_map<std::string, Rational> point;
    for (SubsetMask I : k_var_masks(4, 2)) point.emplace(k_var_name(I), k[I]);
    for (const auto& gpoly : gens)
      if (gpoly.eval(point) != 0) return false;
  }
  return true;
}

}  // namespace bct
