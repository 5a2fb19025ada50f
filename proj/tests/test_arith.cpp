#include "isodescent/arith.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace isodescent;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

std::map<Integer, int> fmap(std::initializer_list<std::pair<long, int>> l) {
    std::map<Integer, int> m;
    for (auto& [p, e] : l) m[Integer(p)] = e;
    return m;
}

std::vector<long> primes_of(const PlaceSet& s) {
    std::vector<long> v;
    for (auto& p : s.primes) v.push_back(p.get_si());
    return v;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-200000, 200000), den(1, 50000);
    long n = 0;
    while (n == 0) n = num(rng);
    return make_rational(Integer(n), Integer(den(rng)));
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(to_string(Q("6/-4")) == "-3/2");
    CHECK(to_string(Q("0/7")) == "0");
    CHECK(Q("10/4").get_den() == 2);
    CHECK_THROWS_AS(Q("1/0"), DomainError);
    CHECK_THROWS_AS(Q("abc"), DomainError);
}

TEST_CASE("factorize examples") {
    auto f = factorize(4890480);
    CHECK(f.sign == 1);
    CHECK(f.exps == fmap({{2, 4}, {3, 1}, {5, 1}, {7, 1}, {41, 1}, {71, 1}}));
    CHECK(factorize(1).exps.empty());
    auto g = factorize(-68);
    CHECK(g.sign == -1);
    CHECK(g.exps == fmap({{2, 2}, {17, 1}}));
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize handles large cofactors") {
    Integer a("1000000007"), b("998244353"), c("2305843009213693951");
    auto f = factorize(a * b * c * 12);
    CHECK(f.exps.at(a) == 1);
    CHECK(f.exps.at(b) == 1);
    CHECK(f.exps.at(c) == 1);
    CHECK(recompose(f) == a * b * c * 12);
}

TEST_CASE("sigma_set examples") {
    CHECK(primes_of(sigma_set(8)) == std::vector<long>{2, 17});
    CHECK(primes_of(sigma_set(Q("3/2"))) == std::vector<long>{2, 3, 5});
    CHECK(primes_of(sigma_set(Q("-5651521/4890480"))) ==
          std::vector<long>{2, 3, 5, 7, 41, 71, 1231, 3361, 4591});
    CHECK(sigma_set(8).includes_infinity);
    CHECK_THROWS_AS(sigma_set(0), DomainError);
}

TEST_CASE("kummer_class examples") {
    auto a = kummer_class(Q("-1/256"), 4);
    CHECK(a.sign == -1);
    CHECK(a.exps.empty());
    auto b = kummer_class(32, 4);
    CHECK(b.sign == 1);
    CHECK(b.exps == fmap({{2, 1}}));
    auto c = kummer_class(Q("-1/9"), 4);
    CHECK(c.sign == -1);
    CHECK(c.exps == fmap({{3, 2}}));
    CHECK_THROWS_AS(kummer_class(0, 2), DomainError);
}

TEST_CASE("class_representative examples") {
    CHECK(class_representative(kummer_from_factors(-1, fmap({{3, 2}}), 4)) == -9);
    CHECK(class_representative(kummer_from_factors(1, {}, 4)) == 1);
    CHECK(class_representative(kummer_from_factors(1, fmap({{2, 2}}), 4)) == 4);
    // squares are kept as fourth-power class representatives
    CHECK(class_representative(kummer_class(parse_product("-1*5651521^2"), 4)) == parse_product("-1*5651521^2"));
}

TEST_CASE("parse_product and parse_kummer") {
    CHECK(parse_product("-1*3^2*5") == -45);
    CHECK(parse_product("41*71*8617^2") == Rational(41 * 71) * 8617 * 8617);
    CHECK(parse_kummer("-1*3^2", 4) == kummer_class(-9, 4));
    CHECK(parse_kummer("1*2^5", 4) == kummer_class(2, 4));
    CHECK_THROWS_AS(parse_product("2^"), DomainError);
}

TEST_CASE("exact square roots") {
    CHECK(is_square(Q("25/4")));
    CHECK(*sqrt_exact(Q("25/4")) == Q("5/2"));
    CHECK_FALSE(is_square(68));
    CHECK(is_square(0));
    CHECK(*sqrt_exact(0) == 0);
    CHECK_FALSE(sqrt_exact(-4).has_value());
    CHECK(*root_exact(Q("16/81"), 4) == Q("2/3"));
}

TEST_CASE("padic_sqrt_exists examples") {
    CHECK(padic_sqrt_exists(PadicElement::from_rational(16, 17, 10)));
    CHECK_FALSE(padic_sqrt_exists(PadicElement::from_rational(3, 2, 10)));
    CHECK_FALSE(padic_sqrt_exists(PadicElement::from_rational(10, 5, 10)));
    CHECK_THROWS_AS(padic_sqrt_exists(PadicElement::from_rational(17, 2, 2)), PrecisionError);
    CHECK_THROWS_AS(padic_sqrt_exists(PadicElement::from_rational(0, 3, 4)), PrecisionError);
}

TEST_CASE("p-adic arithmetic refuses to lose all precision") {
    auto x = PadicElement::from_rational(5, 3, 4), y = PadicElement::from_rational(-5, 3, 4);
    CHECK_THROWS_AS(x + y, PrecisionError);
    auto z = x * PadicElement::from_rational(Q("1/9"), 3, 4);
    CHECK(z.valuation == -2);
    CHECK(z.unit == 5);
}

TEST_CASE("property: kummer_class is a homomorphism and projects") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng);
        for (int m : {2, 4}) {
            REQUIRE(kummer_class(a * b, m) == kummer_class(a, m) * kummer_class(b, m));
            Rational r = random_rational(rng), rk = m == 2 ? Rational(r * r) : Rational(r * r * r * r);
            REQUIRE(kummer_class(a * rk, m) == kummer_class(a, m));
            REQUIRE(kummer_class(class_representative(kummer_class(a, m)), m) == kummer_class(a, m));
        }
        REQUIRE(kummer_class(a, 4).project(2) == kummer_class(a, 2));
        REQUIRE((kummer_class(a, 4) * kummer_class(a, 4).inverse()).is_identity());
    }
}

TEST_CASE("property: factorize recomposes") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> dist(-999999999999LL, 999999999999LL);
    for (int i = 0; i < 1000; ++i) {
        long long n = 0;
        while (n == 0) n = dist(rng);
        auto f = factorize(Integer(std::to_string(n)));
        REQUIRE(recompose(f) == Integer(std::to_string(n)));
        for (auto& [p, e] : f.exps) {
            REQUIRE(e > 0);
            REQUIRE(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
        }
    }
}

// Exhaustive oracle: p^v u (u a unit) is a square in Q_p iff y^2 = x has a
// solution modulo p^(v+1), or 2^(v+3) when p = 2.
TEST_CASE("property: padic_sqrt_exists matches exhaustive squares mod p^k") {
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        long m0 = p == 2 ? 3 : 1;
        for (int k = 1; k <= 6; ++k) {
            double size = std::pow(double(p), k + m0);
            if (size > 2e7) break;
            long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            // squares modulo p^j for j <= k - 1 + m0
            std::vector<std::set<long>> squares(k + m0 + 1);
            for (int j = 1; j <= k - 1 + m0; ++j) {
                long pj = 1;
                for (int i = 0; i < j; ++i) pj *= p;
                for (long y = 0; y < pj; ++y) squares[j].insert(static_cast<long>((__int128)y * y % pj));
            }
            for (long x = 1; x < pk; ++x) {
                long v = 0, u = x;
                while (u % p == 0) u /= p, ++v;
                long j = v + m0;
                long pj = 1;
                for (int i = 0; i < j; ++i) pj *= p;
                bool oracle = squares[j].count(x % pj) > 0;
                auto el = PadicElement::from_rational(x, p, static_cast<unsigned>(k + m0));
                REQUIRE(padic_sqrt_exists(el) == oracle);
                REQUIRE(is_padic_square(Rational(x), p) == oracle);
            }
        }
    }
}

TEST_CASE("sqrt_mod_prime_power lifts") {
    std::mt19937_64 rng(5);
    for (long p : {2, 3, 5, 7, 13, 17}) {
        for (unsigned k = 1; k <= 8; ++k) {
            Integer pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
            for (int i = 0; i < 20; ++i) {
                Integer y = Integer(static_cast<long>(rng() % 100000)) * 2 + 1;
                if (p != 2 && y % p == 0) continue;
                Integer u = y * y % pk;
                Integer r = sqrt_mod_prime_power(u, p, k);
                Integer diff = r * r - u;
                REQUIRE(mpz_divisible_p(diff.get_mpz_t(), pk.get_mpz_t()) != 0);
            }
        }
    }
}
