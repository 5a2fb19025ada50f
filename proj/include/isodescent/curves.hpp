#pragma once

#include "isodescent/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isodescent {

enum class CurveLabel { Et, EtPrime, EtDoublePrime, ESmall, EPrimeSmall, Generic };

std::string label_name(CurveLabel l);

struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rational x, Rational y) { return CurvePoint{false, std::move(x), std::move(y)}; }
    std::string to_string() const;
    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct Curve {
    Rational a1, a2, a3, a4, a6;
    CurveLabel label = CurveLabel::Generic;

    Rational discriminant() const;
    bool contains(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint multiply(long n, const CurvePoint& p) const;
    // Order of a torsion point, or 0 if no n <= bound kills it.
    int order(const CurvePoint& p, int bound = 12) const;
    std::string to_string() const;
};

Curve make_curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6,
                 CurveLabel label = CurveLabel::Generic);

struct DegenerateParameter : DomainError {
    using DomainError::DomainError;
};

struct Family {
    Rational t, a, A;
    Curve E, Ep, Epp, Esmall, Epsmall;
    const Curve& curve(CurveLabel l) const;
};

Family build_family(const Rational& t);
Rational t_from_r(const Rational& r);
Rational t_from_s(const Rational& s);

// Coordinate changes E_t <-> E_small and E'_t <-> E'_small.
CurvePoint transform(const Family& f, const CurvePoint& p, CurveLabel from, CurveLabel to);

enum class TorsionShape { Z4, Z8, Z2xZ4, Z2xZ8, Other };
std::string shape_name(TorsionShape s);

struct TorsionClass {
    TorsionShape shape = TorsionShape::Z4;
    std::optional<Rational> s, r, gamma;
};

TorsionClass torsion_classify(const Rational& t);
TorsionClass torsion_classify_prime(const Rational& t);
// Order-8 point on E'_small attached to gamma.
CurvePoint order8_point(const Rational& gamma);

struct TorsionGroup {
    std::vector<CurvePoint> points;
    std::vector<int> invariants;  // cyclic factor orders, e.g. {2, 8}
    std::vector<CurvePoint> generators;
    TorsionShape shape() const;
};

TorsionGroup torsion_points(const Curve& c);

// Rational roots of a polynomial given by ascending coefficients, without multiplicity.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace isodescent
