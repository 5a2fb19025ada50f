#include "isodescent/descent.hpp"

namespace isodescent {

QuarticSpace space_doubleprime(const Rational& d, const Rational& b, const Rational& c) {
    if (d == 0) throw DomainError("d must be nonzero");
    if (c == 0 || b * b - 4 * c == 0) throw DomainError("singular quartic space");
    return {d, b, c};
}

BiquadraticSpace space_prime(const Rational& d, const Rational& t) {
    if (d == 0 || t == 0) throw DomainError("d and t must be nonzero");
    return {d, t};
}

bool on_space(const Rational& Z, const Rational& W, const QuarticSpace& s) {
    Rational Z2 = Z * Z;
    return s.d * W * W == s.d * s.d + s.b * s.d * Z2 + s.c * Z2 * Z2;
}

bool on_space_prime(const Rational& z, const Rational& w, const BiquadraticSpace& s) {
    Rational z2 = z * z, e = w * w - s.d;
    return s.d * (w - z2 / (4 * s.t * s.t)) * z2 == e * e;
}

CurvePoint psi_prime(const Rational& z, const Rational& w, const Rational& d, const Rational& t) {
    if (z == 0) throw SpecialFiber("z = 0 lies over torsion");
    Rational z2 = z * z, e = w * w - d;
    Rational den = d * z2 * z2;
    return CurvePoint::affine(4 * t * t * e * e / den, 4 * t * t * t * e * (w * w + d) / den);
}

CurvePoint psi_prime_small(const Rational& z, const Rational& w, const Rational& d) {
    if (z == 0) throw SpecialFiber("z = 0 lies over torsion");
    Rational z2 = z * z;
    return CurvePoint::affine(w / z2, (w * w - d) / (z2 * z2));
}

std::pair<Rational, Rational> eta_star(const Rational& z, const Rational& w, const Rational& d, const Rational& t) {
    Rational e = w * w - d;
    if (e == 0) throw SpecialFiber("w^2 = d is the excluded fiber");
    Rational z2 = z * z;
    return {-d * z2 / (2 * t * e), d * z2 * (w * w + d) / (2 * e * e)};
}

CurvePoint psi_doubleprime(const Rational& Z, const Rational& W, const Rational& d) {
    if (Z == 0) throw SpecialFiber("Z = 0 lies over torsion");
    Rational Z2 = Z * Z;
    return CurvePoint::affine(d / Z2, -d * W / (Z2 * Z));
}

}  // namespace isodescent
