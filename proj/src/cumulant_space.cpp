#include "bct/cumulant_space.hpp"

#include "bct/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bct {

std::vector<SparsePoly> knspace_inequalities(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("knspace_inequalities: need 1 <= n <= 5");
  VarListPtr kv = k_vars(n, 1);
  const SubsetMask all = full_mask(n);
  std::vector<SparsePoly> out;
  out.reserve(std::size_t(1) << n);
  for (SubsetMask J = 0; J <= all; ++J) {
    SparsePoly total = SparsePoly::zero(kv);
    for_each_set_partition(all, [&](const std::vector<SubsetMask>& blocks) {
      SparsePoly prod = SparsePoly::constant(kv, 1);
      for (SubsetMask B : blocks) {
        SparsePoly kB = SparsePoly::variable(kv, k_var_name(B));
        if (popcount(B) == 1) {
          if (B & J) prod = prod * (SparsePoly::constant(kv, 1) - kB);
          else prod = prod * kB;
        } else {
          if (popcount(B & J) % 2 == 1) prod = prod * (-kB);
          else prod = prod * kB;
        }
      }
      total += prod;
    });
    out.push_back(std::move(total));
  }
  return out;
}

MembershipResult knspace_membership(const BinaryTable& cumulants) {
  if (cumulants.coords() != Coords::cumulant)
    throw std::invalid_argument("knspace_membership: expected cumulant coordinates");
  BinaryTable probs = moments_to_probs(cumulants_to_moments(cumulants));
  MembershipResult res;
  res.probs = probs.entries();
  res.member = true;
  for (SubsetMask I = 0; I < probs.size(); ++I) {
    if (probs[I] < 0) {
      res.member = false;
      res.witness = I;
      res.violated_probability = probs[I];
      break;
    }
  }
  return res;
}

MembershipResult knspace_membership(const CumulantPoint& pt) {
  if (pt.n < 1 || pt.n > 6) throw std::invalid_argument("knspace_membership: need 1 <= n <= 6");
  if (pt.values.size() != (std::size_t(1) << pt.n))
    throw std::invalid_argument("knspace_membership: wrong table size");
  std::vector<Rational> k(pt.values.size());
  for (std::size_t i = 1; i < k.size(); ++i) k[i] = rationalize(pt.values[i], 1000000ULL);
  k[0] = 0;
  return knspace_membership(BinaryTable(pt.n, Coords::cumulant, std::move(k)));
}

KappaHalf kappa_at_half(int n) {
  KappaHalf out;
  out.value = kappa_poly(n).eval({{"t", Rational(1, 2)}});
  out.odd_zero = (n % 2 == 1);
  return out;
}

namespace {

// Partitions of [n] cached as flat block lists.
struct PartitionTable {
  std::vector<std::vector<SubsetMask>> parts;
  std::vector<double> coeff;  // (-1)^{|pi|-1} (|pi|-1)!

  explicit PartitionTable(int n) {
    for_each_set_partition(full_mask(n), [&](const std::vector<SubsetMask>& blocks) {
      parts.push_back(blocks);
      double c = (blocks.size() % 2 == 1) ? 1.0 : -1.0;
      for (std::size_t j = 2; j < blocks.size(); ++j) c *= double(j);
      coeff.push_back(c);
    });
  }
};

void zeta_transform(std::vector<double>& a, int n) {
  for (int i = 0; i < n; ++i) {
    std::size_t bit = std::size_t(1) << i;
    for (std::size_t S = 0; S < a.size(); ++S)
      if (!(S & bit)) a[S] += a[S | bit];
  }
}

double eval_top_cumulant(const PartitionTable& pt, const std::vector<double>& mu) {
  double k = 0;
  for (std::size_t p = 0; p < pt.parts.size(); ++p) {
    double prod = pt.coeff[p];
    for (SubsetMask B : pt.parts[p]) prod *= mu[B];
    k += prod;
  }
  return k;
}

// d k / d p_J = sum_{B <= J} d k / d mu_B.
void top_cumulant_gradient(const PartitionTable& pt, const std::vector<double>& mu,
                           int n, std::vector<double>& grad) {
  std::vector<double> dmu(mu.size(), 0.0);
  for (std::size_t p = 0; p < pt.parts.size(); ++p) {
    const auto& blocks = pt.parts[p];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      double prod = pt.coeff[p];
      for (std::size_t b2 = 0; b2 < blocks.size(); ++b2)
        if (b2 != b) prod *= mu[blocks[b2]];
      dmu[blocks[b]] += prod;
    }
  }
  // Subset sum: grad[J] = sum over B <= J of dmu[B].
  grad = dmu;
  for (int i = 0; i < n; ++i) {
    std::size_t bit = std::size_t(1) << i;
    for (std::size_t S = 0; S < grad.size(); ++S)
      if (S & bit) grad[S] += grad[S ^ bit];
  }
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0, theta = 0;
  int rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    double t = (cum - 1.0) / double(i + 1);
    if (u[i] - t > 0) {
      rho = static_cast<int>(i + 1);
      theta = t;
    }
  }
  (void)rho;
  for (auto& x : v) x = std::max(0.0, x - theta);
}

}  // namespace

double top_cumulant(int n, const std::vector<double>& probs) {
  PartitionTable table(n);
  std::vector<double> mu = probs;
  zeta_transform(mu, n);
  return eval_top_cumulant(table, mu);
}

Rational top_cumulant_exact(const BinaryTable& probs) {
  BinaryTable k = convert(probs, Coords::cumulant);
  return k[full_mask(probs.n())];
}

OptimizeResult maximize_top_cumulant(int n, int starts, std::uint64_t seed) {
  if (n < 1 || n > 5) throw std::invalid_argument("maximize_top_cumulant: need 1 <= n <= 5");
  if (starts < 1) throw std::invalid_argument("maximize_top_cumulant: need starts >= 1");
  const std::size_t dim = std::size_t(1) << n;
  PartitionTable table(n);

  auto objective = [&](const std::vector<double>& p) {
    std::vector<double> mu = p;
    zeta_transform(mu, n);
    return eval_top_cumulant(table, mu);
  };

  // Self-check: analytic gradient against central differences at 10 random
  // points, relative agreement 1e-6.
  {
    SplitMix64 check_rng(seed ^ 0x5eedc0deULL);
    const double h = 1e-5;
    for (int pt = 0; pt < 10; ++pt) {
      std::vector<double> p(dim);
      double sum = 0;
      for (auto& x : p) {
        x = check_rng.next_double() + 1e-3;
        sum += x;
      }
      for (auto& x : p) x /= sum;
      std::vector<double> mu = p, grad;
      zeta_transform(mu, n);
      top_cumulant_gradient(table, mu, n, grad);
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<double> up = p, dn = p;
        up[j] += h;
        dn[j] -= h;
        double fd = (objective(up) - objective(dn)) / (2 * h);
        if (std::abs(fd - grad[j]) > 1e-6 * std::max(1.0, std::abs(grad[j])))
          throw std::logic_error("gradient self-check failed");
      }
    }
  }

  // Ascend sgn * k with sgn refreshed from the current iterate, i.e. local
  // ascent of |k|; backtracking line search on the projected step.
  auto ascend = [&](std::vector<double> p, int iters) {
    double step = 0.25;
    double f = objective(p);
    std::vector<double> mu, grad, cand;
    for (int it = 0; it < iters; ++it) {
      double sgn = f >= 0 ? 1.0 : -1.0;
      mu = p;
      zeta_transform(mu, n);
      top_cumulant_gradient(table, mu, n, grad);
      bool improved = false;
      for (int bt = 0; bt < 50; ++bt) {
        cand = p;
        for (std::size_t i = 0; i < dim; ++i) cand[i] += sgn * step * grad[i];
        project_simplex(cand);
        double fc = objective(cand);
        if (std::abs(fc) > std::abs(f)) {
          p = cand;
          f = fc;
          step *= 1.6;
          improved = true;
          break;
        }
        step *= 0.5;
        if (step < 1e-18) break;
      }
      if (!improved) break;
    }
    return std::make_pair(p, std::abs(f));
  };

  SplitMix64 rng(seed);
  double best = -1;
  std::vector<double> best_p;
  for (int s = 0; s < starts; ++s) {
    std::vector<double> p(dim);
    double sum = 0;
    for (auto& x : p) {
      x = -std::log(rng.next_double() + 1e-300);
      sum += x;
    }
    for (auto& x : p) x /= sum;
    auto [pt, val] = ascend(std::move(p), 600);
    if (val > best + 1e-12) {  // ties keep the earliest start
      best = val;
      best_p = pt;
    }
  }
  // Polish the winner.
  auto [pol, val] = ascend(best_p, 20000);
  if (val > best) {
    best = val;
    best_p = pol;
  }

  // Canonicalize over the 2^n flips p'_I = p_{I xor J}: lexicographically
  // greatest probability vector.
  std::vector<double> canon = best_p;
  for (SubsetMask J = 1; J < dim; ++J) {
    std::vector<double> img(dim);
    for (std::size_t I = 0; I < dim; ++I) img[I] = best_p[I ^ J];
    if (std::lexicographical_compare(canon.begin(), canon.end(), img.begin(), img.end()))
      canon = img;
  }

  OptimizeResult res;
  res.n = n;
  res.best_value = best;
  res.argmax = canon;
  res.starts = starts;
  res.seed = seed;
  res.tolerance = 1e-9;

  // Exact certificate: rationalize, renormalize, evaluate exactly.
  std::vector<Rational> rp(dim);
  Rational total = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    rp[i] = rationalize(std::max(0.0, canon[i]), 1000000ULL);
    total += rp[i];
  }
  if (total == 0) throw std::logic_error("degenerate argmax");
  for (auto& v : rp) v /= total;
  BinaryTable cert(n, Coords::prob, rp);
  Rational kv = top_cumulant_exact(cert);
  res.certified_value = kv < 0 ? Rational(-kv) : kv;
  res.certified_argmax = cert.entries();
  return res;
}

}  // namespace bct
