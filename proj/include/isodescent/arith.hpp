#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isodescent {

using Integer = mpz_class;
// mpq_class keeps lowest terms with a positive denominator once canonicalized;
// every constructor path below canonicalizes.
using Rational = mpq_class;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& s);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// factorization

struct Factorization {
    int sign = 1;
    std::map<Integer, int> exps;
};

bool is_probable_prime(const Integer& n);
Factorization factorize(const Integer& n);
Integer recompose(const Factorization& f);

struct PlaceSet {
    std::vector<Integer> primes;  // sorted, always contains 2
    bool includes_infinity = true;
    bool contains(const Integer& p) const;
    std::string to_string() const;
};

PlaceSet sigma_set(const Rational& t);

// Kummer classes in Q^x / (Q^x)^k

struct KummerClass {
    int modulus = 2;
    int sign = 1;
    std::map<Integer, int> exps;

    KummerClass operator*(const KummerClass& o) const;
    KummerClass inverse() const;
    KummerClass project(int new_modulus) const;
    bool is_identity() const { return sign == 1 && exps.empty(); }
    std::string to_string() const;

    friend bool operator==(const KummerClass& a, const KummerClass& b) {
        return a.modulus == b.modulus && a.sign == b.sign && a.exps == b.exps;
    }
    friend bool operator<(const KummerClass& a, const KummerClass& b);
};

KummerClass kummer_class(const Rational& q, int modulus);
KummerClass kummer_from_factors(int sign, const std::map<Integer, int>& exps, int modulus);
Rational class_representative(const KummerClass& c);
Rational parse_product(const std::string& s);  // "-1*3^2*5"
KummerClass parse_kummer(const std::string& s, int modulus);

// True iff a/b is a perfect k-th power in Q^x; avoids factoring large values.
bool same_class(const Rational& a, const Rational& b, int modulus);

bool is_square(const Rational& q);
std::optional<Rational> sqrt_exact(const Rational& q);
std::optional<Integer> root_exact(const Integer& n, unsigned k);
std::optional<Rational> root_exact(const Rational& q, unsigned k);

// p-adic helpers on exact rationals

constexpr long kInfValuation = 1L << 40;

long valuation(const Integer& n, const Integer& p);
long valuation(const Rational& q, const Integer& p);
// q * p^-v(q) reduced modulo p^k; q must be nonzero.
Integer unit_residue(const Rational& q, const Integer& p, unsigned k);
// Exact rationals always have decidable square class.
bool is_padic_square(const Rational& q, const Integer& p);
Integer sqrt_mod_prime_power(const Integer& u, const Integer& p, unsigned k);

struct PadicElement {
    Integer prime;
    long valuation = 0;
    Integer unit;        // residue mod prime^precision
    unsigned precision = 1;
    bool zero = false;   // zero to this precision

    static PadicElement from_rational(const Rational& q, const Integer& p, unsigned precision);
    PadicElement operator*(const PadicElement& o) const;
    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-() const;
};

bool padic_sqrt_exists(const PadicElement& x);

}  // namespace isodescent
