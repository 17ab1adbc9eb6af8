#pragma once

#include "bct/linalg.hpp"
#include "bct/multilinear.hpp"
#include "bct/poly.hpp"
#include "bct/transforms.hpp"

#include <map>

namespace bct {

// Moment variable names "mu" + element digits; affine convention mu_empty = 1.
std::string mu_var_name(SubsetMask I);
VarListPtr mu_vars(int n);  // all nonempty subsets, ordered by (size, elements)

// The 2x2x2 hyperdeterminant as the 12-term degree-4 polynomial in the seven
// affine moments mu_1,...,mu_123 (mu_empty = 1).
SparsePoly hyperdet3_moments();

// Symbolic cumulant generating polynomial K(x) = sum k_I x^I over the given
// k-variable list (first-order terms included iff present in the list), and
// its exponential M(x) = exp(K(x)).
MultilinearPoly<SparsePoly> cumulant_generating_poly(int n, const VarListPtr& kv);
MultilinearPoly<SparsePoly> moment_mgf_from_cumulants(int n, const VarListPtr& kv);

// Slices T on x_axis as T = F + x_axis * G, forms the pencil of homogenized
// 2x2x2 hyperdeterminants Det3(F u + G v) -- a binary quartic in (u, v) --
// and returns the discriminant, reduced by its integer content with the
// grevlex-leading coefficient made positive.
SparsePoly schlafli_det4(const MultilinearPoly<SparsePoly>& T, int slice_axis = 4);

// The hyperdeterminant expanded in higher cumulants {k_I : |I| >= 2}:
//   n=2: k12
//   n=3: k123^2 + 4 k12 k13 k23
//   n=4: the Schlaefli expansion with 13,819 monomials, normalized so that
//        k123^3 k124^3 k134^3 k234^3 k1234^3 has coefficient +1.
// n=2,3 are obtained by substituting the cumulant expansions of the moments
// into the moment-coordinate formulas, not hard-coded. Results are cached.
const SparsePoly& hyperdet_cumulants(int n);

// Converts the table to cumulants and evaluates hyperdet_cumulants(n).
Rational hyperdet_eval(const BinaryTable& t, int n);

// Degree C_n of the format-2^n hyperdeterminant, from the exponential
// generating function sum C_n x^n / n! = exp(-2x) / (1-x)^2:
//   C_n = sum_{j=0}^{n} (n!/j!) (-2)^j (n-j+1).
Integer cayley_degree(int n);

// Principal minors mu_I = det(A[I,I]) of a symmetric matrix treated as formal
// moments, pushed through moments_to_cumulants. K(x) = log det(I + A X).
BinaryTable principal_minor_cumulants(const RatMatrix& A);

// The twenty generators of the prime ideal of relations among the cumulants
// of principal minors of a symmetric 4x4 matrix.
const std::vector<SparsePoly>& principal_minor_ideal_n4();

// Evaluates all twenty generators on principal_minor_cumulants of `trials`
// random rational symmetric 4x4 matrices; true iff every value is exactly 0.
bool verify_principal_minor_ideal(int trials, std::uint64_t seed);

}  // namespace bct
