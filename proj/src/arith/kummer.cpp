#include "isodescent/arith.hpp"

#include <charconv>
#include <sstream>

namespace isodescent {

static int mod_pos(long e, int m) {
    long r = e % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

KummerClass kummer_from_factors(int sign, const std::map<Integer, int>& exps, int modulus) {
    if (modulus != 2 && modulus != 4) throw DomainError("modulus must be 2 or 4");
    KummerClass c;
    c.modulus = modulus;
    c.sign = sign < 0 ? -1 : 1;
    for (auto& [p, e] : exps) {
        int r = mod_pos(e, modulus);
        if (r != 0) c.exps[p] = r;
    }
    return c;
}

KummerClass kummer_class(const Rational& q, int modulus) {
    if (q == 0) throw DomainError("kummer_class of zero");
    std::map<Integer, int> exps;
    for (auto& [p, e] : factorize(q.get_num()).exps) exps[p] += e;
    if (q.get_den() != 1)
        for (auto& [p, e] : factorize(q.get_den()).exps) exps[p] -= e;
    return kummer_from_factors(q < 0 ? -1 : 1, exps, modulus);
}

KummerClass KummerClass::operator*(const KummerClass& o) const {
    if (modulus != o.modulus) throw DomainError("mixed Kummer moduli");
    std::map<Integer, int> e = exps;
    for (auto& [p, k] : o.exps) e[p] += k;
    return kummer_from_factors(sign * o.sign, e, modulus);
}

KummerClass KummerClass::inverse() const {
    std::map<Integer, int> e;
    for (auto& [p, k] : exps) e[p] = -k;
    return kummer_from_factors(sign, e, modulus);
}

KummerClass KummerClass::project(int new_modulus) const {
    if (modulus % new_modulus != 0) throw DomainError("projection needs a divisor modulus");
    return kummer_from_factors(sign, exps, new_modulus);
}

bool operator<(const KummerClass& a, const KummerClass& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    if (a.sign != b.sign) return a.sign > b.sign;
    return a.exps < b.exps;
}

std::string KummerClass::to_string() const {
    std::ostringstream os;
    os << (sign < 0 ? "-1" : "1");
    for (auto& [p, e] : exps) {
        os << "*" << p.get_str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Rational class_representative(const KummerClass& c) {
    Integer n = c.sign;
    for (auto& [p, e] : c.exps) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        n *= pe;
    }
    return Rational(n);
}

// Accepts products like "-1*5651521^2" or "2*29*33*215530^2"; factors may be composite.
Rational parse_product(const std::string& s) {
    Rational value = 1;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '*')) {
        auto caret = part.find('^');
        Rational base = parse_rational(part.substr(0, caret));
        long e = 1;
        if (caret != std::string::npos) {
            std::string es = part.substr(caret + 1);
            auto [end, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
            if (es.empty() || ec != std::errc() || end != es.data() + es.size())
                throw DomainError("bad exponent in " + s);
        }
        if (e < 0) throw DomainError("negative exponent in " + s);
        for (long i = 0; i < e; ++i) value *= base;
    }
    return value;
}

KummerClass parse_kummer(const std::string& s, int modulus) { return kummer_class(parse_product(s), modulus); }

}  // namespace isodescent
