#include "poly.hpp"

#include "isodescent/curves.hpp"

#include <algorithm>
#include <set>

namespace isodescent::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, -1)); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    trim(r);
    return r;
}

Poly derivative(const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
    trim(r);
    return r;
}

static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (!r.empty() && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        Rational c = r.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    trim(q);
}

Poly rem(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Poly quot(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, 1 / a.back());
    return a;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace isodescent::poly

namespace isodescent {

namespace {

using poly::Poly;

std::vector<Integer> to_integer_poly(const Poly& p) {
    Integer l = 1;
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (auto& c : p) {
        Rational v = c * l;
        out.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (g != 0)
        for (auto& c : out) c /= g;
    return out;
}

Integer eval_mod(const std::vector<Integer>& f, const Integer& x, const Integer& m) {
    Integer r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        r = r * x + *it;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

// Degree and squarefreeness mod p, via Euclid over F_p.
bool good_reduction_prime(const std::vector<Integer>& f, unsigned long p) {
    auto red = [&](const std::vector<Integer>& g) {
        std::vector<unsigned long> r;
        for (auto& c : g) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto a = red(f);
    if (a.size() != f.size()) return false;
    std::vector<unsigned long> b;
    for (size_t i = 1; i < a.size(); ++i) b.push_back((a[i] * (i % p)) % p);
    while (!b.empty() && b.back() == 0) b.pop_back();
    auto inv = [&](unsigned long v) {
        Integer r, vv = v, pp = p;
        mpz_invert(r.get_mpz_t(), vv.get_mpz_t(), pp.get_mpz_t());
        return r.get_ui();
    };
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            unsigned long c = a.back() * inv(b.back()) % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

std::optional<Rational> reconstruct(const Integer& a, const Integer& m, const Integer& nbound, const Integer& dbound) {
    Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 > nbound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > dbound) return std::nullopt;
    return make_rational(t1 < 0 ? Integer(-r1) : r1, abs(t1));
}

}  // namespace

// Roots mod a prime of good reduction, Newton-lifted past the Cauchy-style height
// bound |num| <= |a0|, den <= |lc|, then rationally reconstructed and checked exactly.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    Poly f = coeffs;
    poly::trim(f);
    if (f.empty()) throw DomainError("roots of the zero polynomial");
    std::set<Rational> roots;
    size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        f.erase(f.begin(), f.begin() + static_cast<long>(low));
    }
    if (poly::degree(f) >= 2) f = poly::quot(f, poly::gcd(f, poly::derivative(f)));
    if (poly::degree(f) == 1) {
        roots.insert(-f[0] / f[1]);
    } else if (poly::degree(f) > 1) {
        auto g = to_integer_poly(f);
        unsigned long p = 3;
        for (;; p += 2) {
            if (!is_probable_prime(Integer(p))) continue;
            if (good_reduction_prime(g, p)) break;
        }
        Integer a0 = abs(g.front()), lc = abs(g.back());
        Integer bound = 2 * a0 * lc + 1;
        std::vector<Integer> dg;
        for (size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));
        Integer pp = p;
        for (unsigned long r = 0; r < p; ++r) {
            if (eval_mod(g, Integer(r), pp) != 0) continue;
            Integer x = r, m = pp;
            while (m <= bound) {
                m *= m;
                Integer fx = eval_mod(g, x, m), dfx = eval_mod(dg, x, m), inv;
                mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t());
                x = x - fx * inv;
                mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
            }
            auto q = reconstruct(x, m, a0, lc);
            if (q && poly::eval(f, *q) == 0) roots.insert(*q);
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace isodescent
