#include "bct/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bct {

namespace {

// Clears denominators row by row; rank and determinant sign bookkeeping are
// handled by the callers.
std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& m,
                                                  std::vector<Integer>* scales) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer lcm = 1;
    for (const auto& v : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Integer> irow;
    irow.reserve(row.size());
    for (const auto& v : row) {
      Rational scaled = v * Rational(lcm);
      irow.push_back(scaled.get_num());
    }
    if (scales) scales->push_back(lcm);
    out.push_back(std::move(irow));
  }
  return out;
}

// Bareiss elimination in place; returns (rank, sign, last pivot).
struct BareissResult {
  int rank = 0;
  int sign = 1;
  Integer last_pivot = 1;
};

BareissResult bareiss(std::vector<std::vector<Integer>>& a) {
  BareissResult res;
  if (a.empty()) return res;
  std::size_t rows = a.size(), cols = a[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    res.last_pivot = prev;
    ++r;
    ++res.rank;
  }
  return res;
}

}  // namespace

int rank_fraction_free(RatMatrix m) {
  if (m.empty()) return 0;
  auto a = to_integer_rows(m, nullptr);
  return bareiss(a).rank;
}

Rational determinant(const RatMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  std::vector<Integer> scales;
  auto a = to_integer_rows(m, &scales);
  BareissResult res = bareiss(a);
  if (res.rank < static_cast<int>(n)) return 0;
  // Bareiss leaves det(scaled) in the last pivot.
  Rational det(res.last_pivot * res.sign);
  for (const auto& s : scales) det /= Rational(s);
  return det;
}

int jacobian_rank(const std::vector<SparsePoly>& polys,
                  const std::vector<std::string>& params, std::uint64_t seed,
                  int trials) {
  if (polys.empty() || params.empty()) return 0;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0 &&
            std::find(params.begin(), params.end(), p.vars()->name(i)) == params.end())
          throw std::invalid_argument("jacobian_rank: variable not in params: " +
                                      p.vars()->name(i));
      }
    }
  }
  // Symbolic partials once, evaluated per trial.
  std::vector<std::vector<SparsePoly>> jac;
  jac.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<SparsePoly> row;
    row.reserve(params.size());
    for (const auto& v : params) row.push_back(p.derivative(v));
    jac.push_back(std::move(row));
  }
  SplitMix64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::unordered_map<std::string, Rational> point;
    for (const auto& v : params) point.emplace(v, random_unit_rational(rng));
    RatMatrix m(polys.size(), std::vector<Rational>(params.size()));
    for (std::size_t i = 0; i < jac.size(); ++i)
      for (std::size_t j = 0; j < params.size(); ++j) m[i][j] = jac[i][j].eval(point);
    best = std::max(best, rank_fraction_free(std::move(m)));
  }
  return best;
}

}  // namespace bct
