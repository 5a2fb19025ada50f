#include "isodescent/isogeny.hpp"

namespace isodescent {

IsogenyMap isogeny_info(IsogenyName n) {
    switch (n) {
        case IsogenyName::Phi: return {n, CurveLabel::ESmall, CurveLabel::EPrimeSmall, 4};
        case IsogenyName::PhiHat: return {n, CurveLabel::EPrimeSmall, CurveLabel::ESmall, 4};
        case IsogenyName::Varphi: return {n, CurveLabel::Et, CurveLabel::EtDoublePrime, 2};
        case IsogenyName::VarphiHat: return {n, CurveLabel::EtDoublePrime, CurveLabel::Et, 2};
        case IsogenyName::Eta: return {n, CurveLabel::EtPrime, CurveLabel::EtDoublePrime, 2};
        case IsogenyName::EtaHat: return {n, CurveLabel::EtDoublePrime, CurveLabel::EtPrime, 2};
    }
    throw DomainError("unknown isogeny");
}

std::string isogeny_name(IsogenyName n) {
    switch (n) {
        case IsogenyName::Phi: return "phi";
        case IsogenyName::PhiHat: return "phi_hat";
        case IsogenyName::Varphi: return "varphi";
        case IsogenyName::VarphiHat: return "varphi_hat";
        case IsogenyName::Eta: return "eta";
        case IsogenyName::EtaHat: return "eta_hat";
    }
    return "?";
}

CurvePoint phi(const Family& f, const CurvePoint& p) {
    if (p.infinity) return p;
    const Rational &x = p.x, &y = p.y, &a = f.a, &t = f.t;
    Rational den = 8 * x * (x + a);
    // kernel: (0,0), (0,-a), (-a,0)
    if (den == 0) return CurvePoint::at_infinity();
    Rational s = 2 * y + x + a;
    Rational r = t * (x + 2 * a) * s / den;
    Rational X = -f.A + r * r;
    Rational q = (s - 2 * t * x * (x + 2 * a)) / den;
    Rational q2 = q * q;
    Rational Y = X * X - (x + a) * (x + a) * q2 * q2;
    return CurvePoint::affine(X, Y);
}

CurvePoint phi_hat(const Family& f, const CurvePoint& p) {
    if (p.infinity) return p;
    const Rational &X = p.x, &Y = p.y, &A = f.A, &t = f.t;
    Rational den = 2 * t * (X + A) * (X + 2 * A);
    // (-A, 0) is the only rational kernel point; X = -2A has no rational points.
    if (den == 0) return CurvePoint::at_infinity();
    Rational r = X * (2 * Y + X + A) / den;
    Rational x = -f.a + r * r;
    Rational g = pairing_g(f, p);
    Rational g2 = g * g;
    return CurvePoint::affine(x, x * x - g2 * g2);
}

CurvePoint varphi(const Family&, const CurvePoint& p) {
    if (p.infinity || p.x == 0) return CurvePoint::at_infinity();
    const Rational &u = p.x, &v = p.y;
    return CurvePoint::affine((u + 1) * (u + 1) / u, (1 - u * u) / (u * u) * v);
}

CurvePoint varphi_hat(const Family& f, const CurvePoint& p) {
    Rational t2 = f.t * f.t;
    if (p.infinity || p.x + t2 == 0) return CurvePoint::at_infinity();
    const Rational &u = p.x, &v = p.y;
    Rational s = u + t2;
    return CurvePoint::affine(v * v / (4 * s * s), -(-4 * t2 + 2 * t2 * u + u * u) / (8 * s * s) * v);
}

CurvePoint eta(const Family& f, const CurvePoint& p) {
    if (p.infinity || p.x == 0) return CurvePoint::at_infinity();
    const Rational &U = p.x, &V = p.y;
    Rational t2p4 = f.t * f.t + 4;
    return CurvePoint::affine(V * V / (4 * U * U), (t2p4 * t2p4 - U * U) / (8 * U * U) * V);
}

CurvePoint eta_hat(const Family& f, const CurvePoint& p) {
    if (p.infinity || p.x == 0) return CurvePoint::at_infinity();
    const Rational &u = p.x, &v = p.y;
    Rational t2 = f.t * f.t;
    return CurvePoint::affine(v * v / (u * u), (-4 * t2 - u * u) / (u * u) * v);
}

CurvePoint apply(const Family& f, IsogenyName n, const CurvePoint& p) {
    if (!f.curve(isogeny_info(n).domain).contains(p)) throw DomainError("point not on the isogeny domain");
    switch (n) {
        case IsogenyName::Phi: return phi(f, p);
        case IsogenyName::PhiHat: return phi_hat(f, p);
        case IsogenyName::Varphi: return varphi(f, p);
        case IsogenyName::VarphiHat: return varphi_hat(f, p);
        case IsogenyName::Eta: return eta(f, p);
        case IsogenyName::EtaHat: return eta_hat(f, p);
    }
    throw DomainError("unknown isogeny");
}

Rational pairing_f(const Family&, const CurvePoint& p) {
    if (p.infinity) throw PoleError("f has its pole at O");
    return p.x * p.x - p.y;
}

Rational pairing_g(const Family& f, const CurvePoint& p) {
    if (p.infinity) throw PoleError("g has a pole at O");
    const Rational &X = p.x, &Y = p.y, &A = f.A, &t = f.t;
    Rational den = 4 * t * (X + A) * (X + 2 * A);
    if (den == 0) throw PoleError("g has a pole at " + p.to_string());
    return (2 * (X + 2 * A) * (2 * Y + X + A) - t * X * (X + A)) / den;
}

}  // namespace isodescent
