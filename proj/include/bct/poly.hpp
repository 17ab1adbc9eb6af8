#pragma once

#include "bct/combinatorics.hpp"
#include "bct/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bct {

// Declared, ordered variable list shared by all polynomials over one ring.
// The order fixes the grevlex term order used for storage and printing.
class VarList {
 public:
  explicit VarList(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;  // -1 when absent
  bool operator==(const VarList& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(std::vector<std::string> names);

// Cumulant variable names: "k" + ascending element digits, e.g. k12, k134.
std::string k_var_name(SubsetMask I);
// Inverse of k_var_name; nullopt if the name is not of that shape.
std::optional<SubsetMask> k_var_subset(const std::string& name);
// All k_I with min_size <= |I| <= n, ordered by (|I|, element tuple).
VarListPtr k_vars(int n, int min_size);
// The masks in the same order as k_vars(n, min_size).
std::vector<SubsetMask> k_var_masks(int n, int min_size);

// Dense exponent vector over the VarList.
using Monomial = std::vector<std::uint16_t>;

int total_degree(const Monomial& m);
// Graded reverse-lexicographic comparison on the declared variable order.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(a, b);
  }
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored in ascending grevlex order; zero coefficients are never kept.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(VarListPtr vars) : vars_(std::move(vars)) {}

  static SparsePoly zero(VarListPtr vars) { return SparsePoly(std::move(vars)); }
  static SparsePoly constant(VarListPtr vars, const Rational& c);
  static SparsePoly variable(const VarListPtr& vars, const std::string& name);
  static SparsePoly from_monomial(VarListPtr vars, Monomial m, const Rational& c);

  const VarListPtr& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }
  int degree() const;  // total degree; -1 for the zero polynomial

  // Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator-() const;
  SparsePoly& operator*=(const Rational& c);
  SparsePoly& add_term(const Monomial& m, const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }
  friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }

  bool operator==(const SparsePoly& o) const;

  SparsePoly pow(int e) const;
  SparsePoly derivative(const std::string& var) const;

  // Exact evaluation; every variable occurring in the polynomial must be
  // bound or std::invalid_argument is thrown.
  Rational eval(const std::unordered_map<std::string, Rational>& point) const;

  // Exact substitution var -> polynomial. All binding targets must share one
  // VarList; every occurring variable must be bound.
  SparsePoly substitute(
      const std::unordered_map<std::string, SparsePoly>& bindings) const;

  // Positive rational c such that p/c has coprime integer coefficients.
  Rational content() const;
  SparsePoly divided_by_content() const;

  // Ascending grevlex rendering, e.g. "k123^2 + 4*k12*k13*k23".
  std::string str() const;

 private:
  void check_same_vars(const SparsePoly& o) const;

  VarListPtr vars_;
  TermMap terms_;
};

// Convenience: bind variables to exact numbers and evaluate a whole map.
SparsePoly substitute_values(const SparsePoly& p,
                             const std::unordered_map<std::string, Rational>& vals,
                             const VarListPtr& target_vars);

}  // namespace bct
