#pragma once

#include "bct/poly.hpp"

namespace bct {

// Discriminant of the quartic a x^4 + b x^3 + c x^2 + d x + e: the classical
// closed form with 16 terms in generic coefficients, degree 6. Vanishes
// exactly when the quartic has a repeated root. All five inputs must share
// one variable list.
SparsePoly binary_quartic_discriminant(const SparsePoly& a, const SparsePoly& b,
                                       const SparsePoly& c, const SparsePoly& d,
                                       const SparsePoly& e);

}  // namespace bct
