#include "bct/discriminant.hpp"

namespace bct {

SparsePoly binary_quartic_discriminant(const SparsePoly& a, const SparsePoly& b,
                                       const SparsePoly& c, const SparsePoly& d,
                                       const SparsePoly& e) {
  SparsePoly a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
  SparsePoly out = Rational(256) * (a2 * a) * (e2 * e);
  out += Rational(-192) * (a2 * (b * (d * e2)));
  out += Rational(-128) * (a2 * (c2 * e2));
  out += Rational(144) * (a2 * (c * (d2 * e)));
  out += Rational(-27) * (a2 * (d2 * d2));
  out += Rational(144) * (a * (b2 * (c * e2)));
  out += Rational(-6) * (a * (b2 * (d2 * e)));
  out += Rational(-80) * (a * (b * (c2 * (d * e))));
  out += Rational(18) * (a * (b * (c * (d2 * d))));
  out += Rational(16) * (a * (c2 * (c2 * e)));
  out += Rational(-4) * (a * (c2 * (c * d2)));
  out += Rational(-27) * (b2 * (b2 * e2));
  out += Rational(18) * (b2 * (b * (c * (d * e))));
  out += Rational(-4) * (b2 * (b * (d2 * d)));
  out += Rational(-4) * (b2 * (c2 * (c * e)));
  out += b2 * (c2 * d2);
  return out;
}

}  // namespace bct
