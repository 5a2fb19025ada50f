#include "isodescent/curves.hpp"

#include <sstream>

namespace isodescent {

std::string label_name(CurveLabel l) {
    switch (l) {
        case CurveLabel::Et: return "E_t";
        case CurveLabel::EtPrime: return "E'_t";
        case CurveLabel::EtDoublePrime: return "E''_t";
        case CurveLabel::ESmall: return "E_small";
        case CurveLabel::EPrimeSmall: return "E'_small";
        case CurveLabel::Generic: return "generic";
    }
    return "?";
}

std::string CurvePoint::to_string() const {
    if (infinity) return "O";
    return "(" + isodescent::to_string(x) + ", " + isodescent::to_string(y) + ")";
}

Curve make_curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6, CurveLabel label) {
    Curve c{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6), label};
    if (c.discriminant() == 0) throw DegenerateParameter("singular curve " + c.to_string());
    return c;
}

Rational Curve::discriminant() const {
    Rational b2 = a1 * a1 + 4 * a2;
    Rational b4 = 2 * a4 + a1 * a3;
    Rational b6 = a3 * a3 + 4 * a6;
    Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool Curve::contains(const CurvePoint& p) const {
    if (p.infinity) return true;
    const Rational &x = p.x, &y = p.y;
    return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

CurvePoint Curve::negate(const CurvePoint& p) const {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y - a1 * p.x - a3);
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational lambda, nu;
    if (p.x == q.x) {
        if (p.y + q.y + a1 * q.x + a3 == 0) return CurvePoint::at_infinity();
        Rational den = 2 * p.y + a1 * p.x + a3;
        lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / den;
        nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / den;
    } else {
        Rational dx = q.x - p.x;
        lambda = (q.y - p.y) / dx;
        nu = (p.y * q.x - q.y * p.x) / dx;
    }
    Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint Curve::multiply(long n, const CurvePoint& p) const {
    if (n < 0) return multiply(-n, negate(p));
    CurvePoint acc, base = p;
    while (n > 0) {
        if (n & 1) acc = add(acc, base);
        n >>= 1;
        if (n) base = add(base, base);
    }
    return acc;
}

int Curve::order(const CurvePoint& p, int bound) const {
    CurvePoint q = p;
    for (int n = 1; n <= bound; ++n) {
        if (q.infinity) return n;
        q = add(q, p);
    }
    return 0;
}

std::string Curve::to_string() const {
    std::ostringstream os;
    os << "[" << isodescent::to_string(a1) << ", " << isodescent::to_string(a2) << ", "
       << isodescent::to_string(a3) << ", " << isodescent::to_string(a4) << ", " << isodescent::to_string(a6)
       << "]";
    return os.str();
}

const Curve& Family::curve(CurveLabel l) const {
    switch (l) {
        case CurveLabel::Et: return E;
        case CurveLabel::EtPrime: return Ep;
        case CurveLabel::EtDoublePrime: return Epp;
        case CurveLabel::ESmall: return Esmall;
        case CurveLabel::EPrimeSmall: return Epsmall;
        default: throw DomainError("no such family member");
    }
}

Family build_family(const Rational& t) {
    if (t == 0) throw DegenerateParameter("t = 0: every model is singular (factor t)");
    Rational t2 = t * t;
    Family f;
    f.t = t;
    f.a = -1 / (4 * t2);
    f.A = (t2 + 4) / 64;
    f.E = make_curve(0, t2 + 2, 0, 1, 0, CurveLabel::Et);
    f.Ep = make_curve(0, -2 * (t2 - 4), 0, (t2 + 4) * (t2 + 4), 0, CurveLabel::EtPrime);
    f.Epp = make_curve(0, t2 - 4, 0, -4 * t2, 0, CurveLabel::EtDoublePrime);
    f.Esmall = make_curve(1, f.a, f.a, 0, 0, CurveLabel::ESmall);
    f.Epsmall = make_curve(1, f.A, f.A, 0, 0, CurveLabel::EPrimeSmall);
    return f;
}

Rational t_from_r(const Rational& r) {
    if (r == 0 || r == 1 || r == -1) throw DegenerateParameter("r must avoid 0 and +-1");
    Rational r2 = r * r;
    Rational t = (r2 * r2 - 6 * r2 + 1) / (2 * r * r2 - 2 * r);
    if (t == 0) throw DegenerateParameter("r gives t = 0");
    return t;
}

Rational t_from_s(const Rational& s) {
    if (s == 0) throw DegenerateParameter("s must be nonzero");
    Rational t = (s * s - 1) / s;
    if (t == 0) throw DegenerateParameter("s = +-1 gives t = 0");
    return t;
}

CurvePoint transform(const Family& f, const CurvePoint& p, CurveLabel from, CurveLabel to) {
    if (from == to) return p;
    if (p.infinity) {
        bool ok = (from == CurveLabel::Et && to == CurveLabel::ESmall) ||
                  (from == CurveLabel::ESmall && to == CurveLabel::Et) ||
                  (from == CurveLabel::EtPrime && to == CurveLabel::EPrimeSmall) ||
                  (from == CurveLabel::EPrimeSmall && to == CurveLabel::EtPrime);
        if (!ok) throw DomainError("unsupported transform " + label_name(from) + " -> " + label_name(to));
        return p;
    }
    const Rational& t = f.t;
    Rational t2 = t * t;
    if (from == CurveLabel::Et && to == CurveLabel::ESmall)
        return CurvePoint::affine((p.x + 1) / (4 * t2), (p.y - t * p.x) / (8 * t2 * t));
    if (from == CurveLabel::ESmall && to == CurveLabel::Et) {
        Rational u = 4 * t2 * p.x - 1;
        return CurvePoint::affine(u, 8 * t2 * t * p.y + t * u);
    }
    if (from == CurveLabel::EtPrime && to == CurveLabel::EPrimeSmall)
        return CurvePoint::affine((p.x - (t2 + 4)) / 64, (p.y - 4 * p.x) / 512);
    if (from == CurveLabel::EPrimeSmall && to == CurveLabel::EtPrime) {
        Rational U = 64 * p.x + t2 + 4;
        return CurvePoint::affine(U, 512 * p.y + 4 * U);
    }
    throw DomainError("unsupported transform " + label_name(from) + " -> " + label_name(to));
}

}  // namespace isodescent
