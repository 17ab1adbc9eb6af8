#pragma once

#include "bct/poly.hpp"
#include "bct/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bct {

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row by row.
int rank_fraction_free(RatMatrix m);

// Exact determinant of a square matrix, fraction-free on cleared integers.
Rational determinant(const RatMatrix& m);

// Division-free determinant over any commutative ring (cofactor expansion);
// meant for the small principal minors that arise here (k <= 6).
template <class R>
R cofactor_determinant(const std::vector<std::vector<R>>& m, const R& zero) {
  std::size_t k = m.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  if (k == 1) return m[0][0];
  R det = zero;
  std::vector<std::vector<R>> minor(k - 1, std::vector<R>(k - 1, zero));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    R term = m[0][j] * cofactor_determinant(minor, zero);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Rank of the Jacobian of `polys` with respect to `params`, evaluated at a
// random rational point with coordinates q/1000, q uniform in [1,1000), drawn
// deterministically from `seed`. Takes the maximum over `trials` independent
// points (Monte-Carlo with one-sided error: the reported rank is a lower
// bound that equals the generic rank with overwhelming probability).
// Every variable of every polynomial must appear in `params`.
int jacobian_rank(const std::vector<SparsePoly>& polys,
                  const std::vector<std::string>& params, std::uint64_t seed,
                  int trials = 3);

}  // namespace bct
