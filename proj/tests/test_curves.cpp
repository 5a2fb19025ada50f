#include "isodescent/descent.hpp"

#include <doctest.h>

#include <algorithm>

using namespace isodescent;

namespace {

Rational Q(const char* s) { return parse_rational(s); }
CurvePoint pt(const char* x, const char* y) { return CurvePoint::affine(Q(x), Q(y)); }

bool contains_point(const std::vector<CurvePoint>& v, const CurvePoint& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

// Points of infinite order on E_t coming from the fixture rows for a given r.
std::vector<CurvePoint> fixture_points(const Rational& r) {
    std::vector<CurvePoint> out;
    for (auto& row : load_table3(std::string(ISODESCENT_DATA_DIR) + "/table3.csv"))
        if (row.r == r) out.push_back(psi_prime(row.z, row.w, row.d, t_from_r(r)));
    return out;
}

}  // namespace

TEST_CASE("build_family examples") {
    auto f8 = build_family(8);
    CHECK(f8.a == Q("-1/256"));
    CHECK(f8.Esmall.a2 == Q("-1/256"));
    CHECK(f8.Esmall.a1 == 1);
    CHECK(f8.A == Q("17/16"));
    CHECK(f8.Epsmall.contains(pt("-1/2", "-3/4")));
    CHECK(build_family(Q("3/2")).a == Q("-1/9"));
    auto f = build_family(Q("3/2"));
    CHECK(f.Epp.a2 == Q("9/4") - 4);
    CHECK(f.Epp.a4 == -9);
    for (auto l : {CurveLabel::Et, CurveLabel::EtPrime, CurveLabel::EtDoublePrime, CurveLabel::ESmall,
                   CurveLabel::EPrimeSmall})
        CHECK(f.curve(l).discriminant() != 0);
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(build_family(0), DegenerateParameter);
    CHECK_THROWS_AS(t_from_r(1), DomainError);
    CHECK_THROWS_AS(t_from_r(0), DomainError);
    CHECK_THROWS_AS(t_from_s(0), DomainError);
    CHECK_THROWS_AS(build_family(t_from_s(1)), DegenerateParameter);
    CHECK(t_from_r(Q("15/56")) == Q("-5651521/4890480"));
    CHECK(t_from_s(2) == Q("3/2"));
}

TEST_CASE("group law examples") {
    for (const char* ts : {"8", "3/2", "-7/5"}) {
        Rational t = Q(ts);
        auto f = build_family(t);
        CurvePoint P = CurvePoint::affine(-1, t);
        CHECK(f.E.contains(P));
        CHECK(f.E.multiply(2, P) == CurvePoint::affine(0, 0));
        CHECK(f.E.multiply(4, P).infinity);
        CHECK(f.E.add(P, CurvePoint::at_infinity()) == P);
        CHECK(f.E.order(P) == 4);
    }
}

TEST_CASE("transform examples") {
    auto f = build_family(8);
    CHECK(transform(f, CurvePoint::affine(-1, -8), CurveLabel::Et, CurveLabel::ESmall) == CurvePoint::affine(0, 0));
    CHECK(transform(f, CurvePoint::affine(-1, 8), CurveLabel::Et, CurveLabel::ESmall) == CurvePoint::affine(0, -f.a));
    CHECK(transform(f, CurvePoint::at_infinity(), CurveLabel::Et, CurveLabel::ESmall).infinity);
    CurvePoint P = pt("5/128", "3/2048");
    CurvePoint u = transform(f, P, CurveLabel::ESmall, CurveLabel::Et);
    CHECK(f.E.contains(u));
    CHECK(transform(f, u, CurveLabel::Et, CurveLabel::ESmall) == P);
    CurvePoint Q1 = pt("-1/2", "-3/4");
    CurvePoint U = transform(f, Q1, CurveLabel::EPrimeSmall, CurveLabel::EtPrime);
    CHECK(f.Ep.contains(U));
    CHECK(transform(f, U, CurveLabel::EtPrime, CurveLabel::EPrimeSmall) == Q1);
    CHECK_THROWS_AS(transform(f, P, CurveLabel::ESmall, CurveLabel::EtPrime), DomainError);
}

TEST_CASE("torsion_classify examples") {
    CHECK(torsion_classify(8).shape == TorsionShape::Z4);
    auto c = torsion_classify(Q("3/2"));
    CHECK(c.shape == TorsionShape::Z2xZ4);
    REQUIRE(c.s);
    CHECK((*c.s * *c.s - 1) / *c.s == Q("3/2"));
    auto d = torsion_classify(Q("-5651521/4890480"));
    CHECK(d.shape == TorsionShape::Z2xZ8);
    REQUIRE(d.r);
    REQUIRE(d.s);
    CHECK((*d.r * *d.r - 1) / (2 * *d.r) == *d.s);
    CHECK((*d.s * *d.s - 1) / *d.s == Q("-5651521/4890480"));
}

TEST_CASE("torsion_classify_prime examples") {
    auto c = torsion_classify_prime(Q("3/2"));
    CHECK(c.shape == TorsionShape::Z8);
    REQUIRE(c.gamma);
    CHECK(*c.gamma == 2);
    CurvePoint R = order8_point(*c.gamma);
    CHECK(R == pt("25/64", "125/1024"));
    auto f = build_family(Q("3/2"));
    CHECK(f.Epsmall.contains(R));
    CHECK(f.Epsmall.multiply(8, R).infinity);
    CHECK_FALSE(f.Epsmall.multiply(4, R).infinity);
    CHECK(torsion_classify_prime(8).shape == TorsionShape::Z4);
}

TEST_CASE("torsion_points examples") {
    auto f = build_family(8);
    auto g = torsion_points(f.E);
    CHECK(g.points.size() == 4);
    CHECK(g.invariants == std::vector<int>{4});
    for (long n = 0; n < 4; ++n) CHECK(contains_point(g.points, f.E.multiply(n, CurvePoint::affine(-1, 8))));

    // E''_t = u(u-4)(u+t^2) always has its full 2-torsion
    for (const char* ts : {"8", "3/2", "5"}) {
        auto h = build_family(Q(ts));
        auto tp = torsion_points(h.Epp);
        for (auto& p : {CurvePoint::affine(0, 0), CurvePoint::affine(4, 0), CurvePoint::affine(-h.t * h.t, 0),
                        CurvePoint::at_infinity()})
            CHECK(contains_point(tp.points, p));
    }

    auto f2 = build_family(Q("3/2"));
    auto g2 = torsion_points(f2.E);
    CHECK(g2.points.size() == 8);
    CHECK(g2.shape() == TorsionShape::Z2xZ4);
    CurvePoint a = transform(f2, pt("-1/3", "2/9"), CurveLabel::ESmall, CurveLabel::Et);
    CurvePoint b = transform(f2, CurvePoint::affine(0, 0), CurveLabel::ESmall, CurveLabel::Et);
    CHECK(contains_point(g2.points, a));
    CHECK(contains_point(g2.points, b));
    CHECK(f2.E.order(a) == 2);
    CHECK(f2.E.order(b) == 4);
}

TEST_CASE("the rational point [2]Q exists exactly when t^2+4 is a square") {
    auto f = build_family(Q("3/2"));
    Rational alpha2 = *sqrt_exact(f.t * f.t + 4) / f.t;
    CHECK(alpha2 == Q("5/3"));
    CurvePoint P = CurvePoint::affine(-(1 + alpha2) / 8, (1 + alpha2) * (1 + alpha2) / 32);
    CHECK(P == pt("-1/3", "2/9"));
    CHECK(f.Esmall.contains(P));
    CHECK(f.Esmall.multiply(4, P).infinity);
    CHECK_FALSE(sqrt_exact(Rational(68)).has_value());
}

TEST_CASE("property: group law on torsion and fixture points") {
    for (const char* rs : {"15/56", "11/69"}) {
        Rational r = Q(rs);
        auto f = build_family(t_from_r(r));
        auto pts = torsion_points(f.E).points;
        auto fx = fixture_points(r);
        std::vector<CurvePoint> sample(pts.begin(), pts.begin() + 6);
        sample.insert(sample.end(), fx.begin(), fx.begin() + 2);
        sample.push_back(f.E.add(fx[0], fx[1]));
        for (auto& P : sample) REQUIRE(f.E.contains(P));
        for (auto& P : sample)
            for (auto& Q2 : sample) {
                REQUIRE(f.E.add(P, Q2) == f.E.add(Q2, P));
                for (size_t k = 0; k < sample.size(); k += 3) {
                    auto& R = sample[k];
                    REQUIRE(f.E.add(f.E.add(P, Q2), R) == f.E.add(P, f.E.add(Q2, R)));
                }
            }
        CurvePoint acc = CurvePoint::at_infinity();
        for (long n = 0; n <= 16; ++n) {
            REQUIRE(f.E.multiply(n, fx[2]) == acc);
            REQUIRE(f.E.multiply(-n, fx[2]) == f.E.negate(acc));
            acc = f.E.add(acc, fx[2]);
        }
    }
}

TEST_CASE("property: transform conjugates the group law") {
    for (const char* rs : {"15/56", "12/97"}) {
        Rational r = Q(rs);
        auto f = build_family(t_from_r(r));
        auto fx = fixture_points(r);
        auto tors = torsion_points(f.E).points;
        std::vector<CurvePoint> sample = fx;
        sample.insert(sample.end(), tors.begin(), tors.end());
        for (auto& P : sample)
            for (auto& Q2 : fx) {
                auto lhs = transform(f, f.E.add(P, Q2), CurveLabel::Et, CurveLabel::ESmall);
                auto rhs = f.Esmall.add(transform(f, P, CurveLabel::Et, CurveLabel::ESmall),
                                        transform(f, Q2, CurveLabel::Et, CurveLabel::ESmall));
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("property: closed-form torsion criteria agree with explicit torsion") {
    std::vector<Rational> ts;
    for (long n = 1; n <= 12; ++n) ts.push_back(n);
    for (const char* s : {"3/2", "-3/2", "8/3", "15/4", "1/2", "5/6", "-7/3", "24/5", "2/7", "35/6"}) ts.push_back(Q(s));
    for (const char* r : {"15/56", "24/65", "11/69", "7/88", "12/97", "2/3", "3/5", "1/2", "5/7", "4/9"})
        ts.push_back(t_from_r(Q(r)));
    for (const char* s : {"3", "4", "5", "2/3", "3/4", "5/2", "7/3", "-5", "6/5", "9/4"}) ts.push_back(t_from_s(Q(s)));
    for (const char* s : {"-1", "-8", "1/3", "7/11", "-13/4", "40/9", "100", "21/20"}) ts.push_back(Q(s));
    REQUIRE(ts.size() >= 50);
    for (auto& t : ts) {
        auto f = build_family(t);
        CAPTURE(to_string(t));
        auto g = torsion_points(f.E);
        REQUIRE(g.shape() == torsion_classify(t).shape);
        auto gp = torsion_points(f.Ep);
        REQUIRE(gp.shape() == torsion_classify_prime(t).shape);
        for (auto& p : g.points) REQUIRE(f.E.contains(p));
    }
}
