#include "isodescent/descent.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace isodescent {

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::VarphiHat: return "varphi_hat";
        case Direction::Eta: return "eta";
        case Direction::Varphi: return "varphi";
        case Direction::EtaHat: return "eta_hat";
    }
    return "?";
}

std::pair<Rational, Rational> direction_coeffs(const Rational& t, Direction d) {
    Rational t2 = t * t;
    switch (d) {
        case Direction::VarphiHat: return {t2 + 2, Rational(1)};
        case Direction::Eta: return {t2 - 4, -4 * t2};
        case Direction::Varphi: return {-2 * (t2 + 2), t2 * (t2 + 4)};
        case Direction::EtaHat: return {-2 * (t2 - 4), (t2 + 4) * (t2 + 4)};
    }
    throw DomainError("unknown direction");
}

int SelmerGroup::log2_size() const {
    int n = 0;
    while ((size_t{1} << n) < elements.size()) ++n;
    return n;
}

bool SelmerGroup::contains(const KummerClass& c) const {
    return std::binary_search(elements.begin(), elements.end(), c);
}

std::vector<KummerClass> subgroup_span(const std::vector<KummerClass>& gens, int modulus) {
    std::set<KummerClass> span{kummer_from_factors(1, {}, modulus)};
    for (auto& g0 : gens) {
        KummerClass g = g0.modulus == modulus ? g0 : g0.project(modulus);
        if (span.count(g)) continue;
        std::set<KummerClass> next = span;
        KummerClass power = g;
        while (!power.is_identity()) {
            for (auto& s : span) next.insert(s * power);
            power = power * g;
        }
        span = std::move(next);
    }
    return {span.begin(), span.end()};
}

static int class_order(const KummerClass& c) {
    if (c.is_identity()) return 1;
    KummerClass sq = c * c;
    return sq.is_identity() ? 2 : 4;
}

std::vector<KummerClass> subgroup_basis(const std::vector<KummerClass>& elements, int modulus) {
    std::vector<KummerClass> order = elements;
    auto height = [](const KummerClass& c) -> Rational { return abs(class_representative(c)); };
    std::stable_sort(order.begin(), order.end(), [&](const KummerClass& a, const KummerClass& b) {
        int oa = class_order(a), ob = class_order(b);
        if (oa != ob) return oa > ob;
        return height(a) < height(b);
    });
    std::vector<KummerClass> basis;
    std::set<KummerClass> span{kummer_from_factors(1, {}, modulus)};
    for (auto& c : order) {
        if (span.count(c)) continue;
        basis.push_back(c);
        auto s = subgroup_span(basis, modulus);
        span = std::set<KummerClass>(s.begin(), s.end());
        if (span.size() == elements.size()) break;
    }
    return basis;
}

namespace {

std::string local_key(const Rational& d, const Integer& p, int modulus) {
    long v = valuation(d, p);
    long vm = ((v % modulus) + modulus) % modulus;
    Integer u;
    if (p == 2) {
        u = unit_residue(d, p, modulus == 2 ? 3 : 4);
    } else {
        Integer base = unit_residue(d, p, 1);
        Integer pm1 = p - 1;
        Integer g;
        Integer m = modulus;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), pm1.get_mpz_t());
        Integer e = pm1 / g;
        mpz_powm(u.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    }
    return std::to_string(vm) + ":" + u.get_str();
}

struct Memo {
    std::mutex mu;
    std::map<std::string, bool> table;
};

// Runs fn over [0, n) on up to `jobs` threads; fn must be thread-safe.
void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned j = 0; j < std::min<size_t>(jobs, n); ++j)
        pool.emplace_back([&] {
            try {
                for (size_t i = next++; i < n; i = next++) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

using LocalTest = std::function<LocalResult(const Rational& d, const Place& v)>;

// Membership of d: every place of sigma (real first, 2 last) must pass.
bool everywhere_locally_solvable(const Rational& d, const PlaceSet& sigma, int modulus, const std::string& tag,
                                 const std::string& t_str, const LocalTest& test, Memo& memo,
                                 SolvabilityCache* cache) {
    std::vector<Place> order{Place::infinity()};
    for (auto it = sigma.primes.rbegin(); it != sigma.primes.rend(); ++it) order.push_back(Place::prime(*it));
    for (auto& v : order) {
        std::string lk = v.infinite ? (d > 0 ? "+" : "-") : local_key(d, v.p, modulus);
        std::string key = tag + "|" + v.to_string() + "|" + lk;
        std::optional<bool> verdict;
        {
            std::lock_guard<std::mutex> lock(memo.mu);
            auto it = memo.table.find(key);
            if (it != memo.table.end()) verdict = it->second;
        }
        if (!verdict && cache) verdict = cache->lookup(key);
        if (!verdict) {
            LocalResult r = test(d, v);
            verdict = r.solvable;
            if (cache) cache->record(key, t_str, to_string(d), tag, v.to_string(), r.solvable, r.certificate);
        }
        {
            std::lock_guard<std::mutex> lock(memo.mu);
            memo.table[key] = *verdict;
        }
        if (!*verdict) return false;
    }
    return true;
}

SelmerGroup finish(std::string name, int modulus, std::vector<KummerClass> elems) {
    std::sort(elems.begin(), elems.end());
    SelmerGroup g;
    g.isogeny = std::move(name);
    g.modulus = modulus;
    g.elements = std::move(elems);
    g.generators = subgroup_basis(g.elements, modulus);
    return g;
}

}  // namespace

SelmerGroup selmer_quartic(const Rational& b, const Rational& c, const PlaceSet& sigma, const std::string& name,
                           const SelmerOptions& opt) {
    size_t np = sigma.primes.size();
    size_t total = size_t{2} << np;
    std::vector<char> keep(total, 0);
    Memo memo;
    std::string tag = "quartic b=" + to_string(b) + " c=" + to_string(c);
    LocalTest test = [&](const Rational& d, const Place& v) {
        return local_solvable_quartic(space_doubleprime(d, b, c), v);
    };
    parallel_for(total, opt.jobs, [&](size_t mask) {
        Integer d = (mask & 1) ? -1 : 1;
        for (size_t i = 0; i < np; ++i)
            if (mask >> (i + 1) & 1) d *= sigma.primes[i];
        if (d == 1) {
            keep[mask] = 1;  // identity class is always present
            return;
        }
        keep[mask] = everywhere_locally_solvable(Rational(d), sigma, 2, tag, "", test, memo, opt.cache);
    });
    std::vector<KummerClass> elems;
    for (size_t mask = 0; mask < total; ++mask) {
        if (!keep[mask]) continue;
        std::map<Integer, int> e;
        for (size_t i = 0; i < np; ++i)
            if (mask >> (i + 1) & 1) e[sigma.primes[i]] = 1;
        elems.push_back(kummer_from_factors((mask & 1) ? -1 : 1, e, 2));
    }
    return finish(name, 2, std::move(elems));
}

SelmerGroup selmer_2isogeny(const Rational& t, Direction dir, const SelmerOptions& opt) {
    auto [b, c] = direction_coeffs(t, dir);
    return selmer_quartic(b, c, sigma_set(t), direction_name(dir), opt);
}

// Candidates are lifts of S^(varphi_hat) classes: each prime exponent e or e+2 mod 4.
SelmerGroup selmer_4isogeny(const Rational& t, const SelmerGroup& s_vh, const SelmerOptions& opt) {
    PlaceSet sigma = sigma_set(t);
    size_t np = sigma.primes.size();
    size_t lifts = size_t{1} << np;
    size_t total = s_vh.elements.size() * lifts;
    std::vector<char> keep(total, 0);
    Memo memo;
    std::string tag = "biquadratic t=" + to_string(t);
    LocalTest test = [&](const Rational& d, const Place& v) {
        return local_solvable_biquadratic(space_prime(d, t), v);
    };
    auto exponents = [&](size_t idx) {
        const KummerClass& base = s_vh.elements[idx / lifts];
        size_t lift = idx % lifts;
        std::map<Integer, int> e;
        for (size_t i = 0; i < np; ++i) {
            auto it = base.exps.find(sigma.primes[i]);
            int k = (it == base.exps.end() ? 0 : it->second) + ((lift >> i & 1) ? 2 : 0);
            if (k) e[sigma.primes[i]] = k;
        }
        return kummer_from_factors(base.sign, e, 4);
    };
    parallel_for(total, opt.jobs, [&](size_t idx) {
        KummerClass k = exponents(idx);
        if (k.is_identity()) {
            keep[idx] = 1;
            return;
        }
        keep[idx] = everywhere_locally_solvable(class_representative(k), sigma, 4, tag, to_string(t), test, memo,
                                                opt.cache);
    });
    std::vector<KummerClass> elems;
    for (size_t idx = 0; idx < total; ++idx)
        if (keep[idx]) elems.push_back(exponents(idx));
    return finish("phi_hat", 4, std::move(elems));
}

SizeRelation selmer_size_relation(const SelmerGroup& s_eta, const SelmerGroup& s_vh, const SelmerGroup* s_phi4) {
    SizeRelation r;
    r.predicted_log2 = s_eta.log2_size() + s_vh.log2_size() - 1;
    if (s_phi4) r.computed_log2 = s_phi4->log2_size();
    return r;
}

}  // namespace isodescent
