#include "isodescent/descent.hpp"

#include <array>
#include <numeric>

namespace isodescent {

namespace {

// Quadratic-residue sieve over a few small moduli; an integer that fails any
// of them is not a square.
struct SquareSieve {
    static constexpr std::array<uint32_t, 7> moduli{64, 63, 65, 11, 17, 19, 23};
    std::array<std::vector<char>, 7> is_qr;

    SquareSieve() {
        for (size_t i = 0; i < moduli.size(); ++i) {
            is_qr[i].assign(moduli[i], 0);
            for (uint32_t x = 0; x < moduli[i]; ++x) is_qr[i][(x * x) % moduli[i]] = 1;
        }
    }
};

const SquareSieve& sieve() {
    static const SquareSieve s;
    return s;
}

uint32_t mod_small(const Integer& n, uint32_t q) { return static_cast<uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), q)); }

}  // namespace

// With d = a/b and t = P/Q, w = m/n gives rational z exactly when
// ab(abP^2 m^2 n^2 - Q^2 (b m^2 - a n^2)^2) is a square and the resulting s = z^2 is a square.
std::vector<SpacePoint> search_points(const BiquadraticSpace& sp, long height_bound) {
    if (height_bound < 1) throw DomainError("height bound must be at least 1");
    const Integer a = sp.d.get_num(), b = sp.d.get_den(), P = sp.t.get_num(), Q = sp.t.get_den();
    const auto& sv = sieve();
    std::array<std::array<uint32_t, 4>, 7> red{};
    for (size_t i = 0; i < sv.moduli.size(); ++i)
        red[i] = {mod_small(a, sv.moduli[i]), mod_small(b, sv.moduli[i]), mod_small(P, sv.moduli[i]),
                  mod_small(Q, sv.moduli[i])};
    std::vector<SpacePoint> out;
    auto push = [&](const Rational& z, const Rational& w) {
        for (auto& p : out)
            if (p.z == z && p.w == w) return;
        out.push_back({z, w});
    };
    for (long n = 1; n <= height_bound; ++n) {
        for (long m = -height_bound; m <= height_bound; ++m) {
            if (std::gcd(m, n) != 1) continue;
            bool pass = true;
            for (size_t i = 0; i < sv.moduli.size() && pass; ++i) {
                const uint64_t q = sv.moduli[i];
                uint64_t mm = static_cast<uint64_t>(((m % static_cast<long>(q)) + static_cast<long>(q)) % static_cast<long>(q));
                uint64_t nn = static_cast<uint64_t>(n) % q;
                auto [ra, rb, rP, rQ] = red[i];
                uint64_t m2 = mm * mm % q, n2 = nn * nn % q;
                uint64_t ab = uint64_t(ra) * rb % q;
                uint64_t first = ab * (uint64_t(rP) * rP % q) % q * m2 % q * n2 % q;
                uint64_t inner = (uint64_t(rb) * m2 % q + q - uint64_t(ra) * n2 % q) % q;
                uint64_t second = uint64_t(rQ) * rQ % q * (inner * inner % q) % q;
                uint64_t k = ab * ((first + q - second) % q) % q;
                pass = sv.is_qr[i][k] != 0;
            }
            if (!pass) continue;
            Integer M = m, N = n;
            Integer inner = b * M * M - a * N * N;
            Integer K = a * b * (a * b * P * P * M * M * N * N - Q * Q * inner * inner);
            if (K < 0) continue;
            Integer root;
            if (!mpz_perfect_square_p(K.get_mpz_t())) continue;
            mpz_sqrt(root.get_mpz_t(), K.get_mpz_t());
            Rational w = make_rational(M, N);
            if (w * w == sp.d) continue;  // z = 0 fiber
            // sqrt(Delta') = sqrt(K) / (Q b^2 |d| n^2), s = 2t^2 w +- 2t sqrt(Delta')
            Rational sqrt_delta = Rational(root) / (Rational(Q * b * b) * abs(sp.d) * Rational(N * N));
            for (int sg : {1, -1}) {
                Rational s = 2 * sp.t * sp.t * w + sg * 2 * sp.t * sqrt_delta;
                if (s <= 0) continue;
                auto z = sqrt_exact(s);
                if (z && on_space_prime(*z, w, sp)) push(*z, w);
            }
        }
    }
    return out;
}

std::vector<SpacePoint> search_points(const QuarticSpace& sp, long height_bound) {
    if (height_bound < 1) throw DomainError("height bound must be at least 1");
    std::vector<SpacePoint> out;
    for (long n = 1; n <= height_bound; ++n) {
        for (long m = -height_bound; m <= height_bound; ++m) {
            if (std::gcd(m, n) != 1 || (m < 0)) continue;
            Rational Z = make_rational(Integer(m), Integer(n));
            Rational Z2 = Z * Z;
            Rational rhs = (sp.d * sp.d + sp.b * sp.d * Z2 + sp.c * Z2 * Z2) / sp.d;
            auto W = sqrt_exact(rhs);
            if (W) out.push_back({Z, *W});
        }
    }
    return out;
}

}  // namespace isodescent
