#pragma once

#include "bct/poly.hpp"
#include "bct/transforms.hpp"

#include <map>
#include <vector>

namespace bct {

// Mixture over a collection A of hidden subsets of [n]; the listed order
// fixes parameter naming and which mixing weight is eliminated.
struct HiddenSubsetModel {
  int n = 0;
  std::vector<SubsetMask> subsets;  // distinct, nonempty list

  int m() const { return static_cast<int>(subsets.size()); }
  bool operator==(const HiddenSubsetModel&) const = default;
};

// n two-block partitions ("splits") of the hidden class set [m], each named
// by its first block.
struct CSISplitModel {
  int n = 0;
  int m = 0;
  std::vector<SubsetMask> first_blocks;  // size n, masks over [m]

  bool operator==(const CSISplitModel&) const = default;
};

// Split i of the CSI model has first block { l : i in J_l }.
CSISplitModel hsm_to_csi(const HiddenSubsetModel& h);
// J_l = { i : l in first block of split i }. Throws if two classes coincide
// (an (A2) violation cannot be represented as a set collection).
HiddenSubsetModel csi_to_hsm(const CSISplitModel& c);

// Symbolic cumulant parametrization of a hidden subset model. Parameters are
// the mixing weights t_J for J in A with the last one eliminated by
// sum t = 1, the regression coefficients b_1..b_n, and the baseline
// probabilities a_1..a_n. Every k_I with |I| >= 2 involves only t's and b's:
//   k_I = k_I^(t) * prod_{i in I} b_i,     k_i = a_i + b_i k_i^(t).
struct ModelParametrization {
  int n = 0;
  VarListPtr params;                     // t's (minus last), then b's, then a's
  std::vector<std::string> free_params;  // t's (minus last) + b's
  std::map<SubsetMask, SparsePoly> coords;  // k_I for every nonempty I

  const SparsePoly& coord(SubsetMask I) const { return coords.at(I); }
};

std::string t_var_name(SubsetMask J);  // "t" + subset digits; "t" for the empty set

ModelParametrization hsm_parametrization(const HiddenSubsetModel& h);

// kappa_nu(t) = sum_{i=1..nu} (-1)^{i-1} gamma_{i,nu} t^i, the necklace
// polynomial; a univariate SparsePoly in "t".
SparsePoly kappa_poly(int nu);

// k_I = (-1)^{|I|-1} (|I|-1)! prod_{i in I} s_i for |I| >= 2.
std::map<SubsetMask, SparsePoly> tangential_cumulants(int n,
                                                      const std::vector<SparsePoly>& s);
std::map<SubsetMask, SparsePoly> tangential_cumulants(int n,
                                                      const std::vector<Rational>& s,
                                                      const VarListPtr& vars);

// k_I = kappa_{|I|}(t) * prod_{i in I} b_i for |I| >= 2.
std::map<SubsetMask, SparsePoly> secant_cumulants(int n, const SparsePoly& t,
                                                  const std::vector<SparsePoly>& b);

// (2^n - n - 1) minus the Jacobian rank of the higher-cumulant coordinates
// with respect to the free parameters, at random rational parameter values.
int model_codimension(const HiddenSubsetModel& h, std::uint64_t seed);

enum class VerifyMode { symbolic, sampled };

// Checks that every generator (a polynomial in k_I variables) vanishes on the
// parametrization: symbolically by substitution, or exactly at `trials`
// random rational parameter points.
bool verify_vanishing(const std::vector<SparsePoly>& generators,
                      const ModelParametrization& par, VerifyMode mode,
                      int trials = 0, std::uint64_t seed = 0);

// As above for a bare coordinate map (e.g. tangential/secant parametrizations
// whose parameters are the variables of the coordinate polynomials).
bool verify_vanishing_map(const std::vector<SparsePoly>& generators,
                          const std::map<SubsetMask, SparsePoly>& coords,
                          VerifyMode mode, int trials = 0, std::uint64_t seed = 0);

// Generator fixtures over k_vars(4, 2).
const std::vector<SparsePoly>& secant_ideal_generators_n4();      // 10 quadrics + 6 cubics
const std::vector<SparsePoly>& tangential_ideal_generators_n4();  // 21 generators
const std::vector<SparsePoly>& example_model_ideal_n4();  // the 9 generators of {0,12,34,1234}

}  // namespace bct
