#include "isodescent/descent.hpp"

#include <algorithm>
#include <set>

namespace isodescent {

std::vector<KummerClass> torsion_delta_prime_images(const Family& f, const TorsionGroup& tors) {
    std::set<KummerClass> out;
    for (auto& p : tors.points) out.insert(delta_prime(f, p));
    return {out.begin(), out.end()};
}

static int log2_of(size_t n) {
    int k = 0;
    while ((size_t{1} << k) < n) ++k;
    return k;
}

// Free rank seen by the fourth-power image: dim over F_2 of I / (T + 2I), where
// I is the span of all known classes and T the span of the torsion images.
int rank_lower_from_images(const std::vector<KummerClass>& torsion_images,
                           const std::vector<KummerClass>& point_classes) {
    std::vector<KummerClass> all = torsion_images;
    all.insert(all.end(), point_classes.begin(), point_classes.end());
    auto span_I = subgroup_span(all, 4);
    std::vector<KummerClass> sub = torsion_images;
    for (auto& c : span_I) sub.push_back(c * c);
    auto span_sub = subgroup_span(sub, 4);
    return log2_of(span_I.size()) - log2_of(span_sub.size());
}

namespace {

int pair_dim(const Rational& b, const Rational& c, const PlaceSet& sigma, const std::string& name,
             const SelmerOptions& opt) {
    return selmer_quartic(b, c, sigma, name, opt).log2_size();
}

// y^2 = x(x^2 + b x + c) and its 2-isogenous partner y^2 = x(x^2 - 2b x + b^2 - 4c).
IsogenyPairBound extra_pair(const std::string& name, const Rational& b, const Rational& c, const PlaceSet& sigma,
                            const SelmerOptions& opt) {
    IsogenyPairBound pb;
    pb.name = name;
    pb.dim_forward = pair_dim(b, c, sigma, name, opt);
    pb.dim_backward = pair_dim(-2 * b, b * b - 4 * c, sigma, name + "_dual", opt);
    return pb;
}

}  // namespace

// Every pair below has c and b^2 - 4c supported on Sigma, so Sigma-supported classes suffice.
RankBounds rank_bounds(const Rational& t, const SelmerGroup& s_vh, const SelmerGroup& s_eta, const SelmerGroup& s_v,
                       const SelmerGroup& s_eh, const std::vector<KummerClass>& torsion_images,
                       const std::vector<KummerClass>& point_classes, const SelmerOptions& opt) {
    RankBounds rb;
    PlaceSet sigma = sigma_set(t);
    Rational t2 = t * t;
    rb.pairs.push_back({"varphi", s_v.log2_size(), s_vh.log2_size()});
    rb.pairs.push_back({"eta", s_eta.log2_size(), s_eh.log2_size()});
    // E''_t translated to its 2-torsion point (4,0)
    rb.pairs.push_back(extra_pair("Epp_4", t2 + 8, 4 * (t2 + 4), sigma, opt));
    if (auto root = sqrt_exact(t2 + 4)) {
        // E_t has full 2-torsion; translate to (u1,0) and (u2,0)
        Rational u1 = (-(t2 + 2) + t * *root) / 2, u2 = 1 / u1;
        rb.pairs.push_back(extra_pair("Et_u1", 2 * u1 - u2, u1 * (u1 - u2), sigma, opt));
        rb.pairs.push_back(extra_pair("Et_u2", 2 * u2 - u1, u2 * (u2 - u1), sigma, opt));
    }
    rb.upper = rb.pairs.front().bound();
    for (auto& p : rb.pairs) rb.upper = std::min(rb.upper, p.bound());
    rb.lower = rank_lower_from_images(torsion_images, point_classes);
    return rb;
}

std::vector<KummerClass> sha_candidates(const SelmerGroup& s_phi4, const std::vector<KummerClass>& known_image) {
    auto span = subgroup_span(known_image, 4);
    std::set<KummerClass> known(span.begin(), span.end());
    std::vector<KummerClass> out;
    for (auto& c : s_phi4.elements)
        if (!known.count(c)) out.push_back(c);
    return out;
}

}  // namespace isodescent
