#include "isodescent/arith.hpp"

#include <algorithm>
#include <cctype>

namespace isodescent {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

static Integer parse_integer(const std::string& s) {
    std::string body = s;
    body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (body.empty()) throw DomainError("empty integer");
    size_t i = (body[0] == '-' || body[0] == '+') ? 1 : 0;
    if (i == body.size()) throw DomainError("bad integer: " + s);
    for (size_t j = i; j < body.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(body[j]))) throw DomainError("bad integer: " + s);
    if (body[0] == '+') body.erase(0, 1);
    return Integer(body, 10);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::optional<Integer> root_exact(const Integer& n, unsigned k) {
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = root_exact(Integer(-n), k);
        if (!r) return std::nullopt;
        return Integer(-*r);
    }
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> root_exact(const Rational& q, unsigned k) {
    auto n = root_exact(q.get_num(), k);
    if (!n) return std::nullopt;
    auto d = root_exact(q.get_den(), k);
    if (!d) return std::nullopt;
    return make_rational(*n, *d);
}

bool is_square(const Rational& q) { return sqrt_exact(q).has_value(); }

std::optional<Rational> sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    return root_exact(q, 2);
}

bool same_class(const Rational& a, const Rational& b, int modulus) {
    if (a == 0 || b == 0) throw DomainError("same_class of zero");
    Rational q = a / b;
    if (modulus % 2 == 0 && q < 0) return false;
    return root_exact(q, static_cast<unsigned>(modulus)).has_value();
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) return kInfValuation;
    if (p == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    Integer m = n;
    return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& q, const Integer& p) {
    if (q == 0) return kInfValuation;
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer unit_residue(const Rational& q, const Integer& p, unsigned k) {
    if (q == 0) throw DomainError("unit_residue of zero");
    Integer num = q.get_num(), den = q.get_den();
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    Integer mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Integer r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool is_padic_square(const Rational& q, const Integer& p) {
    if (q == 0) return true;
    if (valuation(q, p) % 2 != 0) return false;
    if (p == 2) return unit_residue(q, p, 3) == 1;
    Integer u = unit_residue(q, p, 1);
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

// Square root of a unit u modulo p^k, u assumed a square there.
Integer sqrt_mod_prime_power(const Integer& u, const Integer& p, unsigned k) {
    Integer mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
    if (p == 2) {
        if (k <= 3) return Integer(1);
        Integer r = 1;
        for (unsigned j = 3; j < k; ++j) {
            Integer m;
            mpz_ui_pow_ui(m.get_mpz_t(), 2, j + 1);
            Integer diff = r * r - u;
            if (mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()) == 0) {
                Integer step;
                mpz_ui_pow_ui(step.get_mpz_t(), 2, j - 1);
                r += step;
            }
        }
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks mod p, then Newton lifting.
    Integer u0 = u % p;
    if (u0 < 0) u0 += p;
    Integer q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer c, tt, r, e = (q + 1) / 2;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(tt.get_mpz_t(), u0.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(r.get_mpz_t(), u0.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned m = s;
    while (tt != 1) {
        unsigned i = 0;
        Integer t2 = tt;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Integer b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        tt = tt * c % p;
        r = r * b % p;
    }
    Integer pk = p;
    for (unsigned j = 1; j < k; ++j) {
        pk *= p;
        Integer inv, two_r = 2 * r;
        mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), pk.get_mpz_t());
        r = r - (r * r - u) * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pk.get_mpz_t());
    }
    return r;
}

}  // namespace isodescent
