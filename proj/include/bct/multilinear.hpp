#pragma once

#include "bct/combinatorics.hpp"
#include "bct/rational.hpp"

#include <stdexcept>
#include <vector>

namespace bct {

// Element of R[x_1,...,x_n] / <x_1^2,...,x_n^2>: one coefficient per subset
// of [n]. R is Rational for numeric tables and SparsePoly for symbolic
// parametrizations; the same truncated log/exp code serves both.
template <class R>
class MultilinearPoly {
 public:
  MultilinearPoly(int n, const R& zero)
      : n_(n), zero_(zero), coeff_(std::size_t(1) << n, zero) {}

  int n() const { return n_; }
  const R& zero() const { return zero_; }
  R& operator[](SubsetMask I) { return coeff_[I]; }
  const R& operator[](SubsetMask I) const { return coeff_[I]; }

  bool operator==(const MultilinearPoly& o) const {
    return n_ == o.n_ && coeff_ == o.coeff_;
  }

  MultilinearPoly& operator+=(const MultilinearPoly& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
  }

  MultilinearPoly& operator-=(const MultilinearPoly& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
  }

  MultilinearPoly scaled(const Rational& c) const {
    MultilinearPoly out(*this);
    for (auto& v : out.coeff_) v = v * c;
    return out;
  }

  void check_compatible(const MultilinearPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("multilinear ring mismatch");
  }

 private:
  int n_;
  R zero_;
  std::vector<R> coeff_;
};

// Product modulo <x_i^2>: only disjoint subsets combine; any monomial with a
// squared variable is discarded.
template <class R>
MultilinearPoly<R> ml_mul(const MultilinearPoly<R>& f, const MultilinearPoly<R>& g) {
  f.check_compatible(g);
  const int n = f.n();
  MultilinearPoly<R> out(n, f.zero());
  const SubsetMask all = full_mask(n);
  for (SubsetMask A = 0; A <= all; ++A) {
    if (f[A] == f.zero()) continue;
    // B ranges over subsets of the complement of A.
    SubsetMask comp = all & ~A;
    SubsetMask B = comp;
    while (true) {
      if (!(g[B] == g.zero())) out[A | B] += f[A] * g[B];
      if (B == 0) break;
      B = (B - 1) & comp;
    }
  }
  return out;
}

// log(f) for f with constant coefficient 1: the finite sum
// sum_{i=1..n} (-1)^{i-1} (f-1)^i / i; (f-1)^{n+1} vanishes identically.
template <class R>
MultilinearPoly<R> ml_log(const MultilinearPoly<R>& f, const R& one) {
  if (!(f[0] == one)) throw std::invalid_argument("ml_log: constant coefficient must be 1");
  const int n = f.n();
  MultilinearPoly<R> g = f;
  g[0] -= one;
  MultilinearPoly<R> acc(n, f.zero());
  MultilinearPoly<R> p = g;
  for (int i = 1; i <= n; ++i) {
    Rational c(i % 2 == 1 ? 1 : -1, i);
    acc += p.scaled(c);
    if (i < n) p = ml_mul(p, g);
  }
  return acc;
}

// exp(f) for f with constant coefficient 0: sum_{i=0..n} f^i / i!.
template <class R>
MultilinearPoly<R> ml_exp(const MultilinearPoly<R>& f, const R& one) {
  if (!(f[0] == f.zero())) throw std::invalid_argument("ml_exp: constant coefficient must be 0");
  const int n = f.n();
  MultilinearPoly<R> acc(n, f.zero());
  acc[0] = one;
  MultilinearPoly<R> p(n, f.zero());
  p[0] = one;
  Rational fact = 1;
  for (int i = 1; i <= n; ++i) {
    p = ml_mul(p, f);
    fact *= i;
    acc += p.scaled(Rational(1) / fact);
  }
  return acc;
}

}  // namespace bct
