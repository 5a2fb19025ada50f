#include "isodescent/curves.hpp"

#include "poly.hpp"

#include <algorithm>
#include <numeric>
#include <map>

namespace isodescent {

std::string shape_name(TorsionShape s) {
    switch (s) {
        case TorsionShape::Z4: return "Z/4";
        case TorsionShape::Z8: return "Z/8";
        case TorsionShape::Z2xZ4: return "Z/2 x Z/4";
        case TorsionShape::Z2xZ8: return "Z/2 x Z/8";
        case TorsionShape::Other: return "other";
    }
    return "?";
}

TorsionClass torsion_classify(const Rational& t) {
    if (t == 0) throw DomainError("t must be nonzero");
    TorsionClass c;
    c.shape = TorsionShape::Z4;
    auto root = sqrt_exact(t * t + 4);
    if (!root) return c;
    c.shape = TorsionShape::Z2xZ4;
    // s^2 - t s - 1 = 0
    for (int sg : {1, -1}) {
        Rational s = (t + sg * *root) / 2;
        if (!c.s) c.s = s;
        auto w = sqrt_exact(s * s + 1);
        if (!w) continue;
        // r^2 - 2 s r - 1 = 0
        c.shape = TorsionShape::Z2xZ8;
        c.s = s;
        c.r = s + *w;
        return c;
    }
    return c;
}

TorsionClass torsion_classify_prime(const Rational& t) {
    if (t == 0) throw DomainError("t must be nonzero");
    TorsionClass c;
    c.shape = TorsionShape::Z4;
    auto root = sqrt_exact(t * t + 4);
    if (!root) return c;
    auto g = sqrt_exact(t + *root);
    if (!g) return c;
    c.shape = TorsionShape::Z8;
    c.gamma = *g;
    return c;
}

CurvePoint order8_point(const Rational& g) {
    if (g == 0) throw DomainError("gamma must be nonzero");
    Rational g2 = g * g, g4 = g2 * g2;
    Rational common = (g4 + 4) * (g2 + 2 * g + 2);
    return CurvePoint::affine(common / (64 * g2 * g), (g4 + 4) * common / (1024 * g4 * g));
}

TorsionShape TorsionGroup::shape() const {
    if (invariants == std::vector<int>{4}) return TorsionShape::Z4;
    if (invariants == std::vector<int>{8}) return TorsionShape::Z8;
    if (invariants == std::vector<int>{2, 4}) return TorsionShape::Z2xZ4;
    if (invariants == std::vector<int>{2, 8}) return TorsionShape::Z2xZ8;
    return TorsionShape::Other;
}

namespace {

using poly::Poly;

struct ShortModel {
    Rational A, B;      // y^2 = x^3 + A x + B
    Rational b2, a1, a3;  // to map back
};

ShortModel short_model(const Curve& c) {
    Rational b2 = c.a1 * c.a1 + 4 * c.a2;
    Rational b4 = 2 * c.a4 + c.a1 * c.a3;
    Rational b6 = c.a3 * c.a3 + 4 * c.a6;
    Rational c4 = b2 * b2 - 24 * b4;
    Rational c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    return {-27 * c4, -54 * c6, b2, c.a1, c.a3};
}

CurvePoint to_long(const ShortModel& m, const Rational& X, const Rational& Y) {
    Rational x = (X - 3 * m.b2) / 36;
    Rational y = (Y / 108 - m.a1 * x - m.a3) / 2;
    return CurvePoint::affine(x, y);
}

// gcd of #E(F_p) over several good primes bounds the torsion order.
long torsion_order_bound(const ShortModel& m) {
    Rational disc = 4 * m.A * m.A * m.A + 27 * m.B * m.B;
    long g = 0;
    int used = 0;
    for (unsigned long p = 5; used < 12 && p < 2000; p += 2) {
        Integer pp = p;
        if (!is_probable_prime(pp)) continue;
        if (mpz_divisible_ui_p(m.A.get_den().get_mpz_t(), p) || mpz_divisible_ui_p(m.B.get_den().get_mpz_t(), p))
            continue;
        if (mpz_divisible_ui_p(disc.get_num().get_mpz_t(), p)) continue;
        auto reduce = [&](const Rational& q) {
            Integer inv, den = q.get_den(), r;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
            r = q.get_num() * inv;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
            return r;
        };
        Integer A = reduce(m.A), B = reduce(m.B);
        long count = static_cast<long>(p) + 1;
        for (unsigned long x = 0; x < p; ++x) {
            Integer X = x;
            Integer f = X * X * X + A * X + B;
            mpz_mod(f.get_mpz_t(), f.get_mpz_t(), pp.get_mpz_t());
            count += mpz_legendre(f.get_mpz_t(), pp.get_mpz_t());
        }
        g = std::gcd(g, count);
        ++used;
    }
    return g;
}

Poly cubic(const ShortModel& m) { return {m.B, m.A, 0, 1}; }

// Odd-index division polynomials psi_n(x) via the standard recursion, even
// indices stored as psi_n / (2y).
std::map<int, Poly> division_polys(const ShortModel& m, int nmax) {
    const Rational &A = m.A, &B = m.B;
    Poly f = cubic(m);
    Poly f2x16 = poly::scale(poly::mul(f, f), 16);
    std::map<int, Poly> P;
    P[0] = {};
    P[1] = {1};
    P[2] = {1};
    P[3] = {-A * A, 12 * B, 6 * A, 0, 3};
    P[4] = poly::scale(Poly{-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1}, 2);
    for (int n = 5; n <= nmax; ++n) {
        int k = n / 2;
        auto sq = [&](int i) { return poly::mul(P.at(i), P.at(i)); };
        auto cube = [&](int i) { return poly::mul(sq(i), P.at(i)); };
        if (n % 2 == 1) {
            Poly first = poly::mul(P.at(k + 2), cube(k));
            Poly second = poly::mul(P.at(k - 1), cube(k + 1));
            if (k % 2 == 0) first = poly::mul(first, f2x16);
            else second = poly::mul(second, f2x16);
            P[n] = poly::sub(first, second);
        } else {
            Poly inner = poly::sub(poly::mul(P.at(k + 2), sq(k - 1)), poly::mul(P.at(k - 2), sq(k + 1)));
            P[n] = poly::mul(P.at(k), inner);
        }
    }
    return P;
}

void add_affine_points(const ShortModel& m, const Curve& c, const std::vector<Rational>& xs, std::vector<CurvePoint>& out) {
    for (auto& X : xs) {
        Rational rhs = X * X * X + m.A * X + m.B;
        auto Y = sqrt_exact(rhs);
        if (!Y) continue;
        for (int sg : {1, -1}) {
            CurvePoint p = to_long(m, X, sg * *Y);
            if (c.contains(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            if (*Y == 0) break;
        }
    }
}

}  // namespace

TorsionGroup torsion_points(const Curve& c) {
    ShortModel m = short_model(c);
    long bound = torsion_order_bound(m);
    std::vector<CurvePoint> two_part{CurvePoint::at_infinity()};
    // 2-power torsion: close {O} under halving.
    for (size_t i = 0; i < two_part.size(); ++i) {
        CurvePoint q = two_part[i];
        std::vector<CurvePoint> halves;
        if (q.infinity) {
            add_affine_points(m, c, rational_roots(cubic(m)), halves);
        } else {
            Rational X0 = 36 * q.x + 3 * m.b2;
            Poly quart = {m.A * m.A - 4 * X0 * m.B, -8 * m.B - 4 * X0 * m.A, -2 * m.A, -4 * X0, 1};
            std::vector<CurvePoint> cand;
            add_affine_points(m, c, rational_roots(quart), cand);
            for (auto& p : cand)
                if (c.add(p, p) == q) halves.push_back(p);
        }
        for (auto& h : halves)
            if (std::find(two_part.begin(), two_part.end(), h) == two_part.end()) two_part.push_back(h);
    }
    std::vector<CurvePoint> odd_part{CurvePoint::at_infinity()};
    long odd = bound;
    while (odd % 2 == 0 && odd > 0) odd /= 2;
    for (int n : {3, 5, 7, 9}) {
        if (odd % n != 0) continue;
        auto P = division_polys(m, n);
        std::vector<CurvePoint> pts;
        add_affine_points(m, c, rational_roots(P.at(n)), pts);
        for (auto& p : pts)
            if (std::find(odd_part.begin(), odd_part.end(), p) == odd_part.end()) odd_part.push_back(p);
    }
    TorsionGroup g;
    for (auto& a : two_part)
        for (auto& b : odd_part) g.points.push_back(c.add(a, b));
    // invariants from the 2-rank and the largest order
    int two_torsion = 0, max_order = 1;
    CurvePoint gen;
    for (auto& p : g.points) {
        int o = c.order(p, 16);
        if (o <= 2) ++two_torsion;
        if (o > max_order) {
            max_order = o;
            gen = p;
        }
    }
    int n = static_cast<int>(g.points.size());
    g.generators.push_back(gen);
    if (two_torsion == 4) {
        g.invariants = {2, n / 2};
        CurvePoint half = c.multiply(max_order / 2, gen);
        for (auto& p : g.points)
            if (c.order(p, 2) == 2 && !(p == half)) {
                g.generators.insert(g.generators.begin(), p);
                break;
            }
    } else {
        g.invariants = {n};
    }
    return g;
}

}  // namespace isodescent
