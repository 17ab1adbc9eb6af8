#pragma once

#include "bct/poly.hpp"
#include "bct/transforms.hpp"

#include <cstdint>
#include <vector>

namespace bct {

// A real cumulant vector, indexed by SubsetMask; slot 0 (k_emptyset) is 0.
struct CumulantPoint {
  int n = 0;
  std::vector<double> values;  // size 2^n
};

// The 2^n polynomial inequalities cutting out the space of cumulants K_n:
// for each J <= [n] the polynomial sum_{pi in Pi([n])} prod_B rho_J(k_B),
// where rho_J negates k_B for |J n B| odd and sends k_i to 1 - k_i for
// i in J. Inequality J equals the probability p_{[n] \ J} rewritten in
// cumulants; the vector is indexed by the mask of J. Variables k_vars(n, 1).
std::vector<SparsePoly> knspace_inequalities(int n);  // n <= 5

struct MembershipResult {
  bool member = false;
  SubsetMask witness = 0;          // a violated probability index when !member
  Rational violated_probability;   // its exact value
  std::vector<Rational> probs;     // the full exact probability table
};

// Exact membership: cumulants -> moments -> probabilities, all probabilities
// nonnegative. Witness is the first violated subset in mask order.
MembershipResult knspace_membership(const BinaryTable& cumulants);  // n <= 6
// Float input is first rationalized with denominator <= 10^6.
MembershipResult knspace_membership(const CumulantPoint& pt);

struct KappaHalf {
  Rational value;
  bool odd_zero = false;  // odd n: the value is identically 0
};

KappaHalf kappa_at_half(int n);

struct OptimizeResult {
  int n = 0;
  double best_value = 0;            // max over starts of |k_{[n]}|
  std::vector<double> argmax;       // probability table, flip-canonicalized
  int starts = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  Rational certified_value;         // exact |k_{[n]}| at the rationalized argmax
  std::vector<Rational> certified_argmax;
};

// Multi-start projected gradient ascent of |k_{[n]}(p)| over the probability
// simplex (the absolute value costs nothing: K_n is closed under k -> -k).
// Analytic gradients through the partition formula; deterministic given
// (starts, seed). The reported argmax is the representative of the flip
// orbit of the best point with lexicographically greatest probability
// vector, which makes the output independent of which symmetric optimum a
// start happens to find.
OptimizeResult maximize_top_cumulant(int n, int starts, std::uint64_t seed);

// Value of k_{[n]}(p) at an exact probability table (helper for certificates
// and property checks).
Rational top_cumulant_exact(const BinaryTable& probs);
double top_cumulant(int n, const std::vector<double>& probs);

}  // namespace bct
