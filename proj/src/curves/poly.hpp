#pragma once

#include "isodescent/arith.hpp"

#include <vector>

namespace isodescent::poly {

// Ascending coefficients over Q; the zero polynomial is empty.
using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly derivative(const Poly& a);
Poly rem(const Poly& a, const Poly& b);
Poly quot(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic
Rational eval(const Poly& p, const Rational& x);

}  // namespace isodescent::poly
