#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bct {

// Exact arithmetic throughout the library: arbitrary-precision rationals,
// always kept in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", or a plain decimal like "-0.25" (converted exactly).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

// Best rational approximation of x with denominator <= max_den, via the
// continued fraction expansion. Exact inputs with small denominators are
// recovered exactly.
Rational rationalize(double x, std::uint64_t max_den);

double to_double(const Rational& r);

// Deterministic 64-bit generator (splitmix64). Used everywhere a "random"
// rational point is drawn so that results are reproducible across platforms;
// std::uniform_int_distribution is implementation-defined and unsuitable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Rejection-sampled, unbiased.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  double next_double();  // uniform in [0,1)

 private:
  std::uint64_t state_;
};

// q/1000 with q uniform in [1, 1000): the sampling convention shared by all
// Monte-Carlo rank and vanishing checks.
Rational random_unit_rational(SplitMix64& rng);

}  // namespace bct
