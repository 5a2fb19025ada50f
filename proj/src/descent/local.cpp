#include "isodescent/descent.hpp"

#include <sstream>

namespace isodescent {

namespace {

Rational rpow(const Integer& p, long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(1) / Rational(r) : Rational(r);
}

Integer binom(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// p-adic approximation y of sqrt(x), |y - sqrt(x)|_p <= p^-prec; x a nonzero p-adic square.
Rational sqrt_approx(const Rational& x, const Integer& p, long prec) {
    long v = valuation(x, p), a = v / 2;
    long k = std::max(prec - a, 1L) + (p == 2 ? 3 : 0);
    Integer u = unit_residue(x, p, static_cast<unsigned>(k + 2));
    Integer r = sqrt_mod_prime_power(u, p, static_cast<unsigned>(k + 2));
    return Rational(r) * rpow(p, a);
}

// A chart: find x in x0 + p^k Z_p with G(x) a nonzero square in Q_p; with a
// twist, additionally require y + tt*x (equivalently (y - tt*x)/d) to be a
// nonzero square for one choice of y = +-sqrt(G(x)).
struct ChartSearch {
    std::vector<Rational> G;  // ascending coefficients
    Integer p;
    Rational tt, d;
    bool with_twist = false;
    long slack = 1;
    std::string cert;

    std::vector<Rational> taylor(const Rational& x0, const Rational& h) const {
        size_t n = G.size();
        std::vector<Rational> out(n);
        Rational hp = 1;
        for (size_t j = 0; j < n; ++j) {
            Rational s = 0, xp = 1;
            for (size_t i = j; i < n; ++i) {
                s += G[i] * Rational(binom(static_cast<unsigned>(i), static_cast<unsigned>(j))) * xp;
                xp *= x0;
            }
            out[j] = s * hp;
            hp *= h;
        }
        return out;
    }

    void note(const char* what, const Rational& x0, long k) {
        std::ostringstream os;
        os << what << " at " << to_string(x0) << " + " << p.get_str() << "^" << k << " Z_" << p.get_str();
        cert = os.str();
    }

    bool solve(const Rational& x0, long k) {
        if (k > kMaxRefinementDepth)
            throw PrecisionError("local refinement exceeded depth " + std::to_string(kMaxRefinementDepth) + " at p=" +
                                 p.get_str());
        auto c = taylor(x0, rpow(p, k));
        const Rational& c0 = c[0];
        long m = kInfValuation;
        for (size_t j = 1; j < c.size(); ++j) m = std::min(m, valuation(c[j], p));
        long v0 = valuation(c0, p);
        if (c0 != 0 && v0 + slack <= m) {
            // square class of G is constant on the class
            if (!is_padic_square(c0, p)) return false;
            if (!with_twist) {
                note("G square-class constant", x0, k);
                return true;
            }
            long e = m - v0;
            long vy = v0 / 2 + e - (p == 2 ? 1 : 0);
            long lam = std::min(vy, valuation(tt, p) + k);
            Rational Y = sqrt_approx(c0, p, lam + 2);
            bool undecided = false;
            for (int sg : {1, -1}) {
                Rational y = sg * Y;
                std::optional<bool> dec;
                const Rational Lp = y + tt * x0;
                const Rational Lm = (y - tt * x0) / d;
                const long shift_m = valuation(d, p);
                if (Lp != 0 && valuation(Lp, p) + slack <= lam) dec = is_padic_square(Lp, p);
                else if (Lm != 0 && valuation(Lm, p) + slack <= lam - shift_m) dec = is_padic_square(Lm, p);
                if (dec && *dec) {
                    note(sg > 0 ? "twist square on + branch" : "twist square on - branch", x0, k);
                    return true;
                }
                if (!dec) undecided = true;
            }
            if (!undecided) return false;
        } else {
            long vd = valuation(c[1], p) - k;
            if (c0 == 0 || (v0 > 2 * vd && v0 - vd >= k)) {
                // a simple root of G lies in the class (Hensel)
                if (!with_twist) {
                    note("Hensel root of G", x0, k);
                    return true;
                }
                long gmin = kInfValuation;
                for (auto& cj : c) gmin = std::min(gmin, valuation(cj, p));
                long lam = std::min(valuation(tt, p) + k, gmin / 2);
                const Rational Lp = tt * x0;
                const Rational Lm = -tt * x0 / d;
                const long shift_m = valuation(d, p);
                if (Lp != 0 && valuation(Lp, p) + slack <= lam) {
                    if (is_padic_square(Lp, p)) {
                        note("twist square near Hensel root", x0, k);
                        return true;
                    }
                    return false;
                }
                if (Lm != 0 && valuation(Lm, p) + slack <= lam - shift_m) {
                    if (is_padic_square(Lm, p)) {
                        note("twist square near Hensel root", x0, k);
                        return true;
                    }
                    return false;
                }
            }
        }
        Rational step = rpow(p, k);
        for (Integer r = 0; r < p; ++r)
            if (solve(x0 + Rational(r) * step, k + 1)) return true;
        return false;
    }
};

bool real_quartic(const Rational& d, const Rational& b, const Rational& c) {
    if (d > 0 || c < 0) return true;
    return b * d < 0 && b * b - 4 * c >= 0;
}

// Charts: Z in Z_p with G1(Z) = (d^2 + b d Z^2 + c Z^4)/d, and Z = 1/x, x in pZ_p,
// with G2(x) = (d^2 x^4 + b d x^2 + c)/d.
LocalResult run_charts(const Rational& d, const Rational& b, const Rational& c, const Integer& p,
                       const Rational& tt, bool twist) {
    ChartSearch cs;
    cs.p = p;
    cs.tt = tt;
    cs.d = d;
    cs.with_twist = twist;
    cs.slack = p == 2 ? 3 : 1;
    cs.G = {d, 0, b, 0, c / d};
    if (cs.solve(Rational(0), 0)) return {true, "Z-chart: " + cs.cert};
    cs.G = {c / d, 0, b, 0, d};
    if (cs.solve(Rational(0), 1)) return {true, "1/Z-chart: " + cs.cert};
    return {false, "no class of either chart carries a point"};
}

}  // namespace

LocalResult local_solvable_quartic(const QuarticSpace& s, const Place& v) {
    if (v.infinite) {
        bool ok = real_quartic(s.d, s.b, s.c);
        return {ok, ok ? "real point" : "quartic has the wrong sign on R"};
    }
    return run_charts(s.d, s.b, s.c, v.p, Rational(0), false);
}

// C'_{d,t}(Q_v) is nonempty iff the quartic space with (b,c) = (t^2+2, 1) has a
// point with W + tZ a nonzero square (the image of eta_*).
LocalResult local_solvable_biquadratic(const BiquadraticSpace& s, const Place& v) {
    Rational b = s.t * s.t + 2;
    if (v.infinite) {
        bool ok = s.d > 0 || real_quartic(s.d, b, Rational(1));
        return {ok, ok ? "real point" : "no real point"};
    }
    return run_charts(s.d, b, Rational(1), v.p, s.t, true);
}

}  // namespace isodescent
