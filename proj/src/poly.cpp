#include "bct/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bct {

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

int VarList::index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

VarListPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarList>(std::move(names));
}

std::string k_var_name(SubsetMask I) { return "k" + subset_str(I); }

std::optional<SubsetMask> k_var_subset(const std::string& name) {
  if (name.size() < 2 || name[0] != 'k') return std::nullopt;
  return subset_from_str(name.substr(1), 9);
}

std::vector<SubsetMask> k_var_masks(int n, int min_size) {
  std::vector<SubsetMask> masks;
  for (SubsetMask I = 1; I < (SubsetMask(1) << n); ++I)
    if (popcount(I) >= min_size) masks.push_back(I);
  std::sort(masks.begin(), masks.end(), [](SubsetMask a, SubsetMask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return elements(a) < elements(b);
  });
  return masks;
}

VarListPtr k_vars(int n, int min_size) {
  std::vector<std::string> names;
  for (SubsetMask I : k_var_masks(n, min_size)) names.push_back(k_var_name(I));
  return make_vars(std::move(names));
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Equal degree: a < b iff the rightmost nonzero entry of a-b is positive.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

SparsePoly SparsePoly::constant(VarListPtr vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Monomial(p.vars_->size(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(const VarListPtr& vars, const std::string& name) {
  int i = vars->index(name);
  if (i < 0) throw std::invalid_argument("unknown variable: " + name);
  Monomial m(vars->size(), 0);
  m[i] = 1;
  return from_monomial(vars, std::move(m), 1);
}

SparsePoly SparsePoly::from_monomial(VarListPtr vars, Monomial m, const Rational& c) {
  SparsePoly p(std::move(vars));
  if (static_cast<int>(m.size()) != p.vars_->size())
    throw std::invalid_argument("monomial length does not match variable list");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational SparsePoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::check_same_vars(const SparsePoly& o) const {
  if (vars_ == o.vars_) return;
  if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
  throw std::invalid_argument("polynomials over different variable lists");
}

SparsePoly& SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
  return out;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m) {
      h ^= e;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_vars(b);
  SparsePoly out(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  std::unordered_map<Monomial, Rational, MonoHash> acc;
  acc.reserve(a.terms_.size() * 2);
  Monomial key;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      key = ma;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += mb[i];
      auto [it, inserted] = acc.emplace(key, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  while (!acc.empty()) {
    auto node = acc.extract(acc.begin());
    if (node.mapped() != 0)
      out.terms_.emplace(std::move(node.key()), std::move(node.mapped()));
  }
  return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  check_same_vars(o);
  return terms_ == o.terms_;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  int i = vars_->index(var);
  if (i < 0) throw std::invalid_argument("unknown variable: " + var);
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(m[i])));
  }
  return out;
}

Rational SparsePoly::eval(
    const std::unordered_map<std::string, Rational>& point) const {
  if (terms_.empty()) return 0;
  const int nv = vars_->size();
  // Write every bound value as N_i / D with one shared denominator D, clear
  // coefficient denominators with C, and accumulate
  //   sum c_num * prod N_i^{e_i} * D^{maxdeg - deg}   over  C * D^maxdeg
  // in pure integer arithmetic; a single canonicalization at the end. This
  // avoids per-term mpq gcds, which dominate on large expansions.
  std::vector<std::uint16_t> max_exp(nv, 0);
  int max_deg = 0;
  Integer C = 1;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < nv; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
    max_deg = std::max(max_deg, total_degree(m));
    mpz_lcm(C.get_mpz_t(), C.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Integer D = 1;
  std::vector<const Rational*> bound(nv, nullptr);
  for (int i = 0; i < nv; ++i) {
    if (max_exp[i] == 0) continue;
    auto it = point.find(vars_->name(i));
    if (it == point.end()) throw std::invalid_argument("unbound variable: " + vars_->name(i));
    bound[i] = &it->second;
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), it->second.get_den().get_mpz_t());
  }
  std::vector<std::vector<Integer>> pow_n(nv);
  for (int i = 0; i < nv; ++i) {
    if (max_exp[i] == 0) continue;
    Integer Ni = bound[i]->get_num() * (D / bound[i]->get_den());
    auto& cache = pow_n[i];
    cache.reserve(max_exp[i] + 1);
    cache.emplace_back(1);
    for (int e = 1; e <= max_exp[i]; ++e) cache.push_back(cache.back() * Ni);
  }
  std::vector<Integer> pow_d(max_deg + 1);
  pow_d[0] = 1;
  for (int e = 1; e <= max_deg; ++e) pow_d[e] = pow_d[e - 1] * D;

  Integer total = 0, term;
  for (const auto& [m, c] : terms_) {
    term = c.get_num() * (C / c.get_den());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term *= pow_n[i][m[i]];
    term *= pow_d[max_deg - total_degree(m)];
    total += term;
  }
  Rational result{total, C * pow_d[max_deg]};
  result.canonicalize();
  return result;
}

SparsePoly SparsePoly::substitute(
    const std::unordered_map<std::string, SparsePoly>& bindings) const {
  if (bindings.empty()) throw std::invalid_argument("substitute: no bindings");
  VarListPtr target = bindings.begin()->second.vars();
  for (const auto& [name, p] : bindings) {
    if (!(p.vars() == target || *p.vars() == *target))
      throw std::invalid_argument("substitute: bindings over different variable lists");
  }
  // Cache powers of each binding.
  std::vector<std::vector<SparsePoly>> powers(vars_ ? vars_->size() : 0);
  auto power_of = [&](int var, int e) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) {
      auto it = bindings.find(vars_->name(var));
      if (it == bindings.end())
        throw std::invalid_argument("unbound variable: " + vars_->name(var));
      cache.push_back(SparsePoly::constant(target, 1));
      cache.push_back(it->second);
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  SparsePoly out(target);
  for (const auto& [m, c] : terms_) {
    SparsePoly term = SparsePoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * power_of(static_cast<int>(i), m[i]);
    out += term;
  }
  return out;
}

Rational SparsePoly::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

SparsePoly SparsePoly::divided_by_content() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  SparsePoly out(vars_);
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff / c);
  return out;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_vars = total_degree(m) > 0;
    if (!has_vars || a != 1) {
      os << rational_str(a);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      os << vars_->name(i);
      if (m[i] > 1) os << "^" << m[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

SparsePoly substitute_values(const SparsePoly& p,
                             const std::unordered_map<std::string, Rational>& vals,
                             const VarListPtr& target_vars) {
  std::unordered_map<std::string, SparsePoly> bindings;
  for (const auto& [name, v] : vals)
    bindings.emplace(name, SparsePoly::constant(target_vars, v));
  return p.substitute(bindings);
}

}  // namespace bct
