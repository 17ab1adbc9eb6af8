#include "bct/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bct {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw std::invalid_argument("malformed rational: " + s);
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
    if (intpart.empty() || intpart == "-" || intpart == "+") intpart += "0";
    if (!valid_integer_token(intpart) || frac.empty() ||
        !valid_integer_token(frac) || frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("malformed decimal: " + s);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer ip(intpart);
    Integer fp(frac);
    bool neg = !intpart.empty() && intpart[0] == '-';
    Integer total = ip * scale + (neg ? -fp : fp);
    Rational r(total, scale);
    r.canonicalize();
    return r;
  }
  if (!valid_integer_token(s)) throw std::invalid_argument("malformed rational: " + s);
  return Rational(Integer(s));
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rationalize(double x, std::uint64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  bool neg = x < 0;
  double v = neg ? -x : x;
  Rational target(v);  // exact binary value of the double
  Integer limit(static_cast<unsigned long>(max_den));
  // Continued fraction convergents p/q of v until the denominator bound.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational best;
  bool have_best = false;
  double rem = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(rem);
    if (fa > 1e18) break;
    Integer a(static_cast<unsigned long>(fa));
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > limit) {
      // Largest semiconvergent with denominator within the bound.
      if (q1 > 0) {
        Integer t = (limit - q0) / q1;
        if (t > 0) {
          Rational cand(t * p1 + p0, t * q1 + q0);
          cand.canonicalize();
          if (!have_best || abs(cand - target) < abs(best - target)) best = cand;
          have_best = true;
        }
      }
      break;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational conv(p1, q1);
    conv.canonicalize();
    if (!have_best || abs(conv - target) < abs(best - target)) best = conv;
    have_best = true;
    double frac = rem - fa;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  if (!have_best) best = 0;
  return neg ? Rational(-best) : best;
}

double to_double(const Rational& r) { return r.get_d(); }

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t range = hi - lo + 1;
  std::uint64_t limit = range * (UINT64_MAX / range);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + v % range;
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rational random_unit_rational(SplitMix64& rng) {
  Rational r(static_cast<unsigned long>(rng.uniform(1, 999)), 1000UL);
  r.canonicalize();
  return r;
}

}  // namespace bct
