#include "bct/transforms.hpp"

#include "bct/multilinear.hpp"

#include <stdexcept>

namespace bct {

const char* coords_name(Coords c) {
  switch (c) {
    case Coords::prob: return "prob";
    case Coords::moment: return "moment";
    case Coords::cumulant: return "cumulant";
  }
  return "?";
}

BinaryTable::BinaryTable(int n, Coords coords, std::vector<Rational> entries)
    : n_(n), coords_(coords), entries_(std::move(entries)) {
  if (n < 0 || n > 16) throw std::invalid_argument("BinaryTable: n out of range");
  if (entries_.size() != (std::size_t(1) << n))
    throw std::invalid_argument("BinaryTable: wrong number of entries");
  switch (coords_) {
    case Coords::prob: {
      Rational sum = 0;
      for (const auto& v : entries_) sum += v;
      if (sum != 1) throw std::invalid_argument("prob table entries must sum to 1");
      break;
    }
    case Coords::moment:
      if (entries_[0] != 1)
        throw std::invalid_argument("moment table requires mu_emptyset = 1");
      break;
    case Coords::cumulant:
      if (entries_[0] != 0)
        throw std::invalid_argument("cumulant table requires k_emptyset = 0");
      break;
  }
}

namespace {

void require(const BinaryTable& t, Coords c, const char* op) {
  if (t.coords() != c)
    throw std::invalid_argument(std::string(op) + ": expected " + coords_name(c) +
                                " coordinates, got " + coords_name(t.coords()));
}

}  // namespace

BinaryTable probs_to_moments(const BinaryTable& t) {
  require(t, Coords::prob, "probs_to_moments");
  std::vector<Rational> a = t.entries();
  const int n = t.n();
  for (int i = 0; i < n; ++i) {
    SubsetMask bit = SubsetMask(1) << i;
    for (SubsetMask S = 0; S < a.size(); ++S)
      if (!(S & bit)) a[S] += a[S | bit];
  }
  return BinaryTable(n, Coords::moment, std::move(a));
}

BinaryTable moments_to_probs(const BinaryTable& t) {
  require(t, Coords::moment, "moments_to_probs");
  std::vector<Rational> a = t.entries();
  const int n = t.n();
  for (int i = 0; i < n; ++i) {
    SubsetMask bit = SubsetMask(1) << i;
    for (SubsetMask S = 0; S < a.size(); ++S)
      if (!(S & bit)) a[S] -= a[S | bit];
  }
  return BinaryTable(n, Coords::prob, std::move(a));
}

BinaryTable moments_to_cumulants(const BinaryTable& t) {
  require(t, Coords::moment, "moments_to_cumulants");
  const int n = t.n();
  std::vector<Rational> k(std::size_t(1) << n, 0);
  for (SubsetMask I = 1; I < k.size(); ++I) {
    Rational total = 0;
    for_each_set_partition(I, [&](const std::vector<SubsetMask>& blocks) {
      Rational prod = (blocks.size() % 2 == 1) ? 1 : -1;
      for (std::size_t j = 2; j < blocks.size(); ++j)
        prod *= Rational(static_cast<long>(j));  // (|pi|-1)!
      for (SubsetMask B : blocks) prod *= t[B];
      total += prod;
    });
    k[I] = total;
  }
  return BinaryTable(n, Coords::cumulant, std::move(k));
}

BinaryTable cumulants_to_moments(const BinaryTable& t) {
  require(t, Coords::cumulant, "cumulants_to_moments");
  const int n = t.n();
  std::vector<Rational> mu(std::size_t(1) << n, 0);
  mu[0] = 1;  // empty product over the single empty partition
  for (SubsetMask I = 1; I < mu.size(); ++I) {
    Rational total = 0;
    for_each_set_partition(I, [&](const std::vector<SubsetMask>& blocks) {
      Rational prod = 1;
      for (SubsetMask B : blocks) prod *= t[B];
      total += prod;
    });
    mu[I] = total;
  }
  return BinaryTable(n, Coords::moment, std::move(mu));
}

BinaryTable moments_to_cumulants_log(const BinaryTable& t) {
  require(t, Coords::moment, "moments_to_cumulants_log");
  const int n = t.n();
  MultilinearPoly<Rational> f(n, 0);
  for (SubsetMask I = 0; I < t.size(); ++I) f[I] = t[I];
  MultilinearPoly<Rational> K = ml_log(f, Rational(1));
  std::vector<Rational> k(t.size());
  for (SubsetMask I = 0; I < t.size(); ++I) k[I] = K[I];
  return BinaryTable(n, Coords::cumulant, std::move(k));
}

BinaryTable cumulants_to_moments_exp(const BinaryTable& t) {
  require(t, Coords::cumulant, "cumulants_to_moments_exp");
  const int n = t.n();
  MultilinearPoly<Rational> f(n, 0);
  for (SubsetMask I = 0; I < t.size(); ++I) f[I] = t[I];
  MultilinearPoly<Rational> M = ml_exp(f, Rational(1));
  std::vector<Rational> mu(t.size());
  for (SubsetMask I = 0; I < t.size(); ++I) mu[I] = M[I];
  return BinaryTable(n, Coords::moment, std::move(mu));
}

BinaryTable convert(const BinaryTable& t, Coords target) {
  if (t.coords() == target) return t;
  switch (t.coords()) {
    case Coords::prob:
      return target == Coords::moment ? probs_to_moments(t)
                                      : moments_to_cumulants(probs_to_moments(t));
    case Coords::moment:
      return target == Coords::prob ? moments_to_probs(t) : moments_to_cumulants(t);
    case Coords::cumulant:
      return target == Coords::moment ? cumulants_to_moments(t)
                                      : moments_to_probs(cumulants_to_moments(t));
  }
  throw std::logic_error("convert: unreachable");
}

BinaryTable act_symmetry(const BinaryTable& t, const CubeSymmetry& g) {
  require(t, Coords::prob, "act_symmetry");
  if (g.n() != t.n()) throw std::invalid_argument("act_symmetry: dimension mismatch");
  CubeSymmetry ginv = inverse(g);
  std::vector<Rational> out(t.size());
  for (SubsetMask I = 0; I < t.size(); ++I) out[I] = t[act_on_subset(ginv, I)];
  return BinaryTable(t.n(), Coords::prob, std::move(out));
}

BinaryTable relabel_values(const BinaryTable& t, const std::vector<Rational>& a,
                           const std::vector<Rational>& b) {
  require(t, Coords::moment, "relabel_values");
  const int n = t.n();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("relabel_values: need n values in a and b");
  std::vector<Rational> out(t.size());
  for (SubsetMask I = 0; I < t.size(); ++I) {
    Rational total = 0;
    SubsetMask J = I;
    while (true) {  // J runs over subsets of I
      Rational w = 1;
      for (int i = 1; i <= n; ++i) {
        if (contains(I & ~J, i)) w *= b[i - 1];
        if (contains(J, i)) w *= a[i - 1] - b[i - 1];
      }
      total += w * t[J];
      if (J == 0) break;
      J = (J - 1) & I;
    }
    out[I] = total;
  }
  return BinaryTable(n, Coords::moment, std::move(out));
}

bool check_independence(const BinaryTable& t, SubsetMask A, SubsetMask B) {
  if (A & B) throw std::invalid_argument("check_independence: A and B overlap");
  BinaryTable k = convert(t, Coords::cumulant);
  SubsetMask ab = A | B;
  SubsetMask I = ab;
  while (I > 0) {  // nonempty subsets of A u B
    if ((I & A) && (I & B) && k[I] != 0) return false;
    I = (I - 1) & ab;
  }
  return true;
}

ZGradeResult zgrade(const SparsePoly& p) {
  const auto& vars = *p.vars();
  std::vector<SubsetMask> masks(vars.size());
  int n = 0;
  for (int i = 0; i < vars.size(); ++i) {
    auto sub = k_var_subset(vars.name(i));
    if (!sub || *sub == 0)
      throw std::invalid_argument("zgrade: not a k-variable: " + vars.name(i));
    masks[i] = *sub;
    for (int e : elements(*sub)) n = std::max(n, e);
  }
  ZGradeResult res;
  bool first = true;
  Monomial first_mono;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      for (int e : elements(masks[i])) deg[e - 1] += m[i];
    }
    if (first) {
      res.degree.deg = deg;
      first_mono = m;
      first = false;
    } else if (deg != res.degree.deg) {
      res.homogeneous = false;
      res.witness_a = first_mono;
      res.witness_b = m;
      return res;
    }
  }
  res.homogeneous = true;  // zero polynomial is trivially homogeneous
  if (first) res.degree.deg.assign(n, 0);
  return res;
}

}  // namespace bct
