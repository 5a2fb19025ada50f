#include "isodescent/arith.hpp"

namespace isodescent {

static Integer ppow(const Integer& p, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

PadicElement PadicElement::from_rational(const Rational& q, const Integer& p, unsigned precision) {
    if (precision == 0) throw PrecisionError("p-adic precision must be positive");
    PadicElement x;
    x.prime = p;
    x.precision = precision;
    if (q == 0) {
        x.zero = true;
        x.unit = 0;
        return x;
    }
    x.valuation = isodescent::valuation(q, p);
    x.unit = unit_residue(q, p, precision);
    return x;
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
    if (prime != o.prime) throw DomainError("mixed primes");
    PadicElement r;
    r.prime = prime;
    r.precision = std::min(precision, o.precision);
    if (zero || o.zero) {
        r.zero = true;
        r.unit = 0;
        return r;
    }
    r.valuation = valuation + o.valuation;
    r.unit = unit * o.unit % ppow(prime, r.precision);
    return r;
}

PadicElement PadicElement::operator-() const {
    PadicElement r = *this;
    if (!zero) {
        Integer m = ppow(prime, precision);
        r.unit = (m - unit) % m;
    }
    return r;
}

// Cancellation may eat relative precision; running out is an error, never a silent zero.
PadicElement PadicElement::operator+(const PadicElement& o) const {
    if (prime != o.prime) throw DomainError("mixed primes");
    if (zero) return o;
    if (o.zero) return *this;
    long v = std::min(valuation, o.valuation);
    long abs_prec = std::min(valuation + static_cast<long>(precision), o.valuation + static_cast<long>(o.precision));
    unsigned rel = static_cast<unsigned>(abs_prec - v);
    Integer m = ppow(prime, rel);
    Integer s = unit * ppow(prime, static_cast<unsigned long>(valuation - v)) +
                o.unit * ppow(prime, static_cast<unsigned long>(o.valuation - v));
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    if (s == 0) throw PrecisionError("p-adic sum cancelled below working precision");
    PadicElement r;
    r.prime = prime;
    long extra = ::isodescent::valuation(s, prime);
    r.valuation = v + extra;
    r.precision = rel - static_cast<unsigned>(extra);
    r.unit = Integer(s / ppow(prime, static_cast<unsigned long>(extra))) % ppow(prime, r.precision);
    return r;
}

bool padic_sqrt_exists(const PadicElement& x) {
    if (x.zero) throw PrecisionError("square test on a p-adic zero is undetermined");
    if (x.valuation % 2 != 0) return false;
    if (x.prime == 2) {
        if (x.precision < 3) throw PrecisionError("2-adic square test needs the unit mod 8");
        return x.unit % 8 == 1;
    }
    Integer u = x.unit % x.prime;
    return mpz_legendre(u.get_mpz_t(), x.prime.get_mpz_t()) == 1;
}

}  // namespace isodescent
