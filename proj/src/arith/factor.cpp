#include "isodescent/arith.hpp"

#include <algorithm>
#include <sstream>

namespace isodescent {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_base(const Integer& n, const Integer& d, unsigned s, unsigned long a) {
    Integer x, base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return Integer(2);
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = q * abs(diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    if (auto r = root_exact(n, 2)) {
        std::map<Integer, int> sub;
        factor_into(*r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Integer f = rho_factor(n);
    factor_into(f, out);
    factor_into(Integer(n / f), out);
}

}  // namespace

// Deterministic for n < 3.3e24 with the first thirteen prime bases; above that
// the same bases are followed by GMP's BPSW-style test.
bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned long b : bases)
        if (!miller_rabin_base(n, d, s, b)) return false;
    static const Integer det_bound("3317044064679887385961981", 10);
    if (n < det_bound) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorize(0)");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        Integer pp = p;
        if (pp * pp > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
            f.exps[pp] = e;
        }
    }
    if (m != 1) factor_into(m, f.exps);
    return f;
}

Integer recompose(const Factorization& f) {
    Integer n = f.sign;
    for (auto& [p, e] : f.exps) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        n *= pe;
    }
    return n;
}

bool PlaceSet::contains(const Integer& p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::string PlaceSet::to_string() const {
    std::ostringstream os;
    os << "{";
    for (auto& p : primes) os << p.get_str() << ", ";
    os << "inf}";
    return os.str();
}

PlaceSet sigma_set(const Rational& t) {
    if (t == 0) throw DomainError("t must be nonzero");
    std::map<Integer, int> all;
    all[2] = 1;
    Rational t2p4 = t * t + 4;
    for (const Integer& n : {Integer(t.get_num()), Integer(t.get_den()), Integer(t2p4.get_num()), Integer(t2p4.get_den())}) {
        Integer m = abs(n);
        if (m <= 1) continue;
        for (auto& [p, e] : factorize(m).exps) all[p] = 1;
    }
    PlaceSet s;
    for (auto& [p, e] : all) s.primes.push_back(p);
    return s;
}

}  // namespace isodescent
