#include "isodescent/descent.hpp"

namespace isodescent {

Rational delta_prime_value(const Family& f, const CurvePoint& p) {
    if (p.infinity) return Rational(1);
    const Rational &u = p.x, &v = p.y, &t = f.t;
    Rational val = u * u + 2 * (t * t + 1) * u + 1 - 2 * t * v;
    // The polynomial form vanishes only at (-1,-t) = [3](-1,t), whose class is that of -4t^2.
    if (val == 0) return -4 * t * t;
    return val;
}

KummerClass delta_prime(const Family& f, const CurvePoint& p) { return kummer_class(delta_prime_value(f, p), 4); }

KummerClass delta_prime_small(const Family& f, const CurvePoint& p) {
    if (p.infinity) return kummer_class(Rational(1), 4);
    if (p.x == 0 && p.y == 0) return kummer_class(1 / f.a, 4);
    return kummer_class(pairing_f(f, p), 4);
}

KummerClass delta_doubleprime(const Family&, const CurvePoint& p) {
    if (p.infinity || p.x == 0) return kummer_class(Rational(1), 2);
    return kummer_class(p.x, 2);
}

}  // namespace isodescent
