#pragma once

#include "bct/combinatorics.hpp"
#include "bct/poly.hpp"
#include "bct/rational.hpp"

#include <vector>

namespace bct {

enum class Coords { prob, moment, cumulant };

const char* coords_name(Coords c);

// A 2x2x...x2 table of exact rationals carrying its coordinate system.
// Construction enforces the tag invariant: prob entries sum to 1, moment
// tables have entry(emptyset) = 1, cumulant tables have entry(emptyset) = 0.
// Cross-coordinate arithmetic is a type error by design; entries of a prob
// table may be negative (a "distribution", not necessarily a probability
// distribution).
class BinaryTable {
 public:
  BinaryTable(int n, Coords coords, std::vector<Rational> entries);

  int n() const { return n_; }
  Coords coords() const { return coords_; }
  const Rational& operator[](SubsetMask I) const { return entries_[I]; }
  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const BinaryTable& o) const = default;

 private:
  int n_;
  Coords coords_;
  std::vector<Rational> entries_;
};

// mu_I = sum_{J >= I} p_J via the superset-sum (zeta) transform, O(n 2^n).
BinaryTable probs_to_moments(const BinaryTable& t);
// p_I = sum_{J >= I} (-1)^{|J \ I|} mu_J (Moebius inversion); output is
// prob-tagged but may have negative entries.
BinaryTable moments_to_probs(const BinaryTable& t);

// Partition-lattice Moebius inversion (reference implementation):
// k_I = sum_{pi in Pi(I)} (-1)^{|pi|-1} (|pi|-1)! prod_B mu_B, k_empty = 0.
BinaryTable moments_to_cumulants(const BinaryTable& t);
// mu_I = sum_{pi in Pi(I)} prod_B k_B.
BinaryTable cumulants_to_moments(const BinaryTable& t);

// The same transforms through truncated log/exp of the generating function;
// pinned bit-equal to the partition-formula path by tests.
BinaryTable moments_to_cumulants_log(const BinaryTable& t);
BinaryTable cumulants_to_moments_exp(const BinaryTable& t);

// Composes the partition-path conversions along prob <-> moment <-> cumulant.
BinaryTable convert(const BinaryTable& t, Coords target);

// g acting on a probability table: result[I] = p[g^{-1}(I)].
BinaryTable act_symmetry(const BinaryTable& t, const CubeSymmetry& g);

// Moments of the same distribution after variable i takes values (b_i, a_i)
// instead of (0, 1):
//   mu'_I = sum_{J <= I} (prod_{i in I\J} b_i) (prod_{i in J} (a_i - b_i)) mu_J.
// Cumulants transform as k'_I = k_I prod(a_i - b_i) for |I| >= 2 and
// k'_i = (a_i - b_i) k_i + b_i.
BinaryTable relabel_values(const BinaryTable& t, const std::vector<Rational>& a,
                           const std::vector<Rational>& b);

// True iff k_I = 0 for every I <= A u B meeting both A and B (the
// independence model A _||_ B). A and B must be disjoint.
bool check_independence(const BinaryTable& t, SubsetMask A, SubsetMask B);

// Z^n-grading with deg(k_I) = sum_{i in I} e_i.
struct MultiDegree {
  std::vector<int> deg;
  bool operator==(const MultiDegree&) const = default;
};

struct ZGradeResult {
  bool homogeneous = false;
  MultiDegree degree;            // set when homogeneous
  Monomial witness_a, witness_b;  // a pair of differently graded monomials otherwise
};

// Common Z^n-degree of all monomials of p, whose variables must all be k_I
// names; n is the largest element mentioned in the variable list.
ZGradeResult zgrade(const SparsePoly& p);

}  // namespace bct
