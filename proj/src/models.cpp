#include "bct/models.hpp"

#include "bct/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bct {

namespace {

void validate(const HiddenSubsetModel& h) {
  if (h.n < 1 || h.n > 6) throw std::invalid_argument("hidden subset model: need 1 <= n <= 6");
  if (h.subsets.empty()) throw std::invalid_argument("hidden subset model: empty collection");
  std::set<SubsetMask> seen;
  for (SubsetMask J : h.subsets) {
    if (J >= (SubsetMask(1) << h.n))
      throw std::invalid_argument("hidden subset model: subset out of range");
    if (!seen.insert(J).second)
      throw std::invalid_argument("hidden subset model: duplicate subset");
  }
}

}  // namespace

CSISplitModel hsm_to_csi(const HiddenSubsetModel& h) {
  validate(h);
  CSISplitModel c;
  c.n = h.n;
  c.m = h.m();
  c.first_blocks.resize(h.n, 0);
  for (int i = 1; i <= h.n; ++i)
    for (int l = 1; l <= c.m; ++l)
      if (contains(h.subsets[l - 1], i)) c.first_blocks[i - 1] |= single(l);
  return c;
}

HiddenSubsetModel csi_to_hsm(const CSISplitModel& c) {
  if (c.m < 1 || c.m > 31) throw std::invalid_argument("csi model: bad class count");
  if (static_cast<int>(c.first_blocks.size()) != c.n)
    throw std::invalid_argument("csi model: need one split per variable");
  HiddenSubsetModel h;
  h.n = c.n;
  for (int l = 1; l <= c.m; ++l) {
    SubsetMask J = 0;
    for (int i = 1; i <= c.n; ++i)
      if (contains(c.first_blocks[i - 1], l)) J |= single(i);
    h.subsets.push_back(J);
  }
  std::set<SubsetMask> distinct(h.subsets.begin(), h.subsets.end());
  if (distinct.size() != h.subsets.size())
    throw std::invalid_argument("csi model: coincident classes (A2 fails)");
  return h;
}

std::string t_var_name(SubsetMask J) { return "t" + subset_str(J); }

namespace {

// Partition-formula cumulants of a table of symbolic moments (mu[0] == 1).
std::vector<SparsePoly> symbolic_moments_to_cumulants(int n,
                                                      const std::vector<SparsePoly>& mu) {
  const VarListPtr& vars = mu[0].vars();
  std::vector<SparsePoly> k(mu.size(), SparsePoly::zero(vars));
  for (SubsetMask I = 1; I < mu.size(); ++I) {
    SparsePoly total = SparsePoly::zero(vars);
    for_each_set_partition(I, [&](const std::vector<SubsetMask>& blocks) {
      Rational c = (blocks.size() % 2 == 1) ? 1 : -1;
      for (std::size_t j = 2; j < blocks.size(); ++j) c *= Rational(static_cast<long>(j));
      SparsePoly prod = SparsePoly::constant(vars, c);
      for (SubsetMask B : blocks) prod = prod * mu[B];
      total += prod;
    });
    k[I] = total;
  }
  return k;
}

}  // namespace

ModelParametrization hsm_parametrization(const HiddenSubsetModel& h) {
  validate(h);
  const int n = h.n;
  const int m = h.m();
  std::vector<std::string> names;
  for (int l = 0; l + 1 < m; ++l) names.push_back(t_var_name(h.subsets[l]));
  for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  ModelParametrization par;
  par.n = n;
  par.params = make_vars(names);
  par.free_params.assign(names.begin(), names.begin() + (m - 1) + n);

  // Mixing weights: the last listed subset carries 1 - sum of the others.
  std::vector<SparsePoly> weight(m, SparsePoly::zero(par.params));
  SparsePoly last = SparsePoly::constant(par.params, 1);
  for (int l = 0; l + 1 < m; ++l) {
    weight[l] = SparsePoly::variable(par.params, t_var_name(h.subsets[l]));
    last -= weight[l];
  }
  weight[m - 1] = last;

  // Moments of the mixing table: mu_B^(t) = sum of weights of supersets.
  std::vector<SparsePoly> mu(std::size_t(1) << n, SparsePoly::zero(par.params));
  for (SubsetMask B = 0; B < mu.size(); ++B)
    for (int l = 0; l < m; ++l)
      if ((h.subsets[l] & B) == B) mu[B] += weight[l];
  std::vector<SparsePoly> kt = symbolic_moments_to_cumulants(n, mu);

  for (SubsetMask I = 1; I < mu.size(); ++I) {
    SparsePoly val = kt[I];
    for (int e : elements(I))
      val = val * SparsePoly::variable(par.params, "b" + std::to_string(e));
    if (popcount(I) == 1) {
      int e = elements(I)[0];
      val += SparsePoly::variable(par.params, "a" + std::to_string(e));
    } else {
      // Higher coordinates must not involve the baseline parameters.
      for (const auto& [mono, c] : val.terms())
        for (std::size_t v = 0; v < mono.size(); ++v)
          if (mono[v] > 0 && par.params->name(v)[0] == 'a')
            throw std::logic_error("higher cumulant depends on a baseline parameter");
    }
    par.coords.emplace(I, std::move(val));
  }
  return par;
}

SparsePoly kappa_poly(int nu) {
  if (nu < 1) throw std::invalid_argument("kappa_poly: need nu >= 1");
  VarListPtr vars = make_vars({"t"});
  SparsePoly out = SparsePoly::zero(vars);
  for (int i = 1; i <= nu; ++i) {
    Rational c(static_cast<long>(necklace_count(nu, i)));
    if (i % 2 == 0) c = -c;
    out.add_term(Monomial{static_cast<std::uint16_t>(i)}, c);
  }
  return out;
}

std::map<SubsetMask, SparsePoly> tangential_cumulants(int n,
                                                      const std::vector<SparsePoly>& s) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("tangential_cumulants: need n parameters");
  std::map<SubsetMask, SparsePoly> out;
  for (SubsetMask I = 1; I < (SubsetMask(1) << n); ++I) {
    if (popcount(I) < 2) continue;
    Rational c = (popcount(I) % 2 == 1) ? 1 : -1;  // (-1)^{|I|-1}
    for (int j = 2; j < popcount(I); ++j) c *= j;  // (|I|-1)!
    SparsePoly p = SparsePoly::constant(s[0].vars(), c);
    for (int e : elements(I)) p = p * s[e - 1];
    out.emplace(I, std::move(p));
  }
  return out;
}

std::map<SubsetMask, SparsePoly> tangential_cumulants(int n,
                                                      const std::vector<Rational>& s,
                                                      const VarListPtr& vars) {
  std::vector<SparsePoly> sp;
  for (const auto& v : s) sp.push_back(SparsePoly::constant(vars, v));
  return tangential_cumulants(n, sp);
}

std::map<SubsetMask, SparsePoly> secant_cumulants(int n, const SparsePoly& t,
                                                  const std::vector<SparsePoly>& b) {
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("secant_cumulants: need n parameters");
  std::map<SubsetMask, SparsePoly> out;
  for (SubsetMask I = 1; I < (SubsetMask(1) << n); ++I) {
    const int sz = popcount(I);
    if (sz < 2) continue;
    std::unordered_map<std::string, SparsePoly> bind{{"t", t}};
    SparsePoly p = kappa_poly(sz).substitute(bind);
    for (int e : elements(I)) p = p * b[e - 1];
    out.emplace(I, std::move(p));
  }
  return out;
}

int model_codimension(const HiddenSubsetModel& h, std::uint64_t seed) {
  ModelParametrization par = hsm_parametrization(h);
  std::vector<SparsePoly> polys;
  for (const auto& [I, p] : par.coords)
    if (popcount(I) >= 2) polys.push_back(p);
  const int ambient = (1 << h.n) - h.n - 1;
  return ambient - jacobian_rank(polys, par.free_params, seed);
}

namespace {

bool vanishes(const std::vector<SparsePoly>& generators,
              const std::map<SubsetMask, SparsePoly>& coords,
              const std::vector<std::string>& sample_params, VerifyMode mode,
              int trials, std::uint64_t seed) {
  if (generators.empty()) return true;
  if (mode == VerifyMode::symbolic) {
    const VarListPtr& gvars = generators.front().vars();
    std::unordered_map<std::string, SparsePoly> bind;
    for (int i = 0; i < gvars->size(); ++i) {
      auto mask = k_var_subset(gvars->name(i));
      if (!mask || !coords.count(*mask))
        throw std::invalid_argument("verify_vanishing: no coordinate for " + gvars->name(i));
      bind.emplace(gvars->name(i), coords.at(*mask));
    }
    for (const auto& g : generators)
      if (!g.substitute(bind).is_zero()) return false;
    return true;
  }
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::unordered_map<std::string, Rational> point;
    for (const auto& v : sample_params) point.emplace(v, random_unit_rational(rng));
    std::unordered_map<std::string, Rational> kpoint;
    for (const auto& [I, p] : coords) kpoint.emplace(k_var_name(I), p.eval(point));
    for (const auto& g : generators)
      if (g.eval(kpoint) != 0) return false;
  }
  return true;
}

}  // namespace

bool verify_vanishing(const std::vector<SparsePoly>& generators,
                      const ModelParametrization& par, VerifyMode mode, int trials,
                      std::uint64_t seed) {
  return vanishes(generators, par.coords, par.params->names(), mode, trials, seed);
}

bool verify_vanishing_map(const std::vector<SparsePoly>& generators,
                          const std::map<SubsetMask, SparsePoly>& coords,
                          VerifyMode mode, int trials, std::uint64_t seed) {
  if (coords.empty()) throw std::invalid_argument("verify_vanishing_map: empty map");
  return vanishes(generators, coords, coords.begin()->second.vars()->names(), mode,
                  trials, seed);
}

namespace {

std::vector<SparsePoly> build_secant_generators() {
  VarListPtr kv = k_vars(4, 2);
  auto k = [&](const char* name) { return SparsePoly::variable(kv, name); };
  auto C = [&](long c) { return SparsePoly::constant(kv, c); };
  SparsePoly k12 = k("k12"), k13 = k("k13"), k14 = k("k14"), k23 = k("k23"),
             k24 = k("k24"), k34 = k("k34"), k123 = k("k123"), k124 = k("k124"),
             k134 = k("k134"), k234 = k("k234"), k1234 = k("k1234");
  SparsePoly L = k1234 + C(6) * k14 * k23;
  std::vector<SparsePoly> g;
  // Ten binomial quadrics.
  g.push_back(k12 * k34 - k14 * k23);
  g.push_back(k13 * k24 - k14 * k23);
  g.push_back(k12 * k134 - k14 * k123);
  g.push_back(k13 * k124 - k14 * k123);
  g.push_back(k12 * k234 - k24 * k123);
  g.push_back(k23 * k124 - k24 * k123);
  g.push_back(k13 * k234 - k34 * k123);
  g.push_back(k23 * k134 - k34 * k123);
  g.push_back(k14 * k234 - k34 * k124);
  g.push_back(k24 * k134 - k34 * k124);
  // Six non-binomial cubics.
  g.push_back(k12 * L - (k123 * k124 + C(4) * k12 * k14 * k23));
  g.push_back(k13 * L - (k123 * k134 + C(4) * k13 * k14 * k23));
  g.push_back(k14 * L - (k124 * k134 + C(4) * k14 * k14 * k23));
  g.push_back(k23 * L - (k123 * k234 + C(4) * k23 * k14 * k23));
  g.push_back(k24 * L - (k124 * k234 + C(4) * k24 * k14 * k23));
  g.push_back(k34 * L - (k134 * k234 + C(4) * k34 * k14 * k23));
  return g;
}

std::vector<SparsePoly> build_tangential_generators() {
  VarListPtr kv = k_vars(4, 2);
  auto k = [&](const char* name) { return SparsePoly::variable(kv, name); };
  auto C = [&](long c) { return SparsePoly::constant(kv, c); };
  SparsePoly k12 = k("k12"), k13 = k("k13"), k14 = k("k14"), k23 = k("k23"),
             k24 = k("k24"), k34 = k("k34"), k123 = k("k123"), k124 = k("k124"),
             k134 = k("k134"), k234 = k("k234"), k1234 = k("k1234");
  std::vector<SparsePoly> g = build_secant_generators();
  g.resize(10);  // keep the quadrics, replace the cubics
  g.push_back(k1234 + C(6) * k14 * k23);  // L
  g.push_back(k123 * k124 + C(4) * k12 * k14 * k23);
  g.push_back(k123 * k134 + C(4) * k13 * k14 * k23);
  g.push_back(k124 * k134 + C(4) * k14 * k14 * k23);
  g.push_back(k123 * k234 + C(4) * k23 * k14 * k23);
  g.push_back(k124 * k234 + C(4) * k24 * k14 * k23);
  g.push_back(k134 * k234 + C(4) * k34 * k14 * k23);
  // Hyperdeterminants of the four 2x2x2 subtensors.
  g.push_back(k234 * k234 + C(4) * k23 * k24 * k34);
  g.push_back(k134 * k134 + C(4) * k13 * k14 * k34);
  g.push_back(k124 * k124 + C(4) * k12 * k14 * k24);
  g.push_back(k123 * k123 + C(4) * k12 * k13 * k23);
  return g;
}

std::vector<SparsePoly> build_example_model_generators() {
  VarListPtr kv = k_vars(4, 2);
  auto k = [&](const char* name) { return SparsePoly::variable(kv, name); };
  auto C = [&](long c) { return SparsePoly::constant(kv, c); };
  SparsePoly k13 = k("k13"), k14 = k("k14"), k23 = k("k23"), k24 = k("k24"),
             k123 = k("k123"), k124 = k("k124"), k134 = k("k134"), k234 = k("k234"),
             k1234 = k("k1234");
  std::vector<SparsePoly> g;
  g.push_back(k13 * k24 - k14 * k23);
  g.push_back(k13 * k124 - k14 * k123);
  g.push_back(k13 * k234 - k23 * k134);
  g.push_back(k14 * k234 - k24 * k134);
  g.push_back(k23 * k124 - k24 * k123);
  g.push_back(k23 * k1234 - k234 * k123 + C(2) * k14 * k23 * k23);
  g.push_back(k13 * k1234 - k134 * k123 + C(2) * k14 * k13 * k23);
  g.push_back(k24 * k1234 - k234 * k124 + C(2) * k14 * k24 * k23);
  g.push_back(k14 * k1234 - k134 * k124 + C(2) * k14 * k14 * k23);
  return g;
}

}  // namespace

const std::vector<SparsePoly>& secant_ideal_generators_n4() {
  static const std::vector<SparsePoly> g = build_secant_generators();
  return g;
}

const std::vector<SparsePoly>& tangential_ideal_generators_n4() {
  static const std::vector<SparsePoly> g = build_tangential_generators();
  return g;
}

const std::vector<SparsePoly>& example_model_ideal_n4() {
  static const std::vector<SparsePoly> g = build_example_model_generators();
  return g;
}

}  // namespace bct
