#include "isodescent/descent.hpp"

#include <set>

namespace isodescent {

DescentReport analyze(const Rational& t, const DescentOptions& opt) {
    DescentReport rep;
    Family f = build_family(t);
    rep.t = t;
    rep.height = opt.height;
    rep.sigma = sigma_set(t);
    rep.torsion_E = torsion_classify(t);
    rep.torsion_Ep = torsion_classify_prime(t);
    rep.s = rep.torsion_E.s;
    rep.r = rep.torsion_E.r;
    rep.torsion_points_E = torsion_points(f.E);
    rep.torsion_points_Ep = torsion_points(f.Ep);
    if (rep.torsion_Ep.gamma) rep.order8_point = order8_point(*rep.torsion_Ep.gamma);

    rep.s_varphi_hat = selmer_2isogeny(t, Direction::VarphiHat, opt.selmer);
    rep.s_eta = selmer_2isogeny(t, Direction::Eta, opt.selmer);
    rep.s_varphi = selmer_2isogeny(t, Direction::Varphi, opt.selmer);
    rep.s_eta_hat = selmer_2isogeny(t, Direction::EtaHat, opt.selmer);
    if (opt.enumerate_phi4) rep.s_phi4 = selmer_4isogeny(t, rep.s_varphi_hat, opt.selmer);
    rep.size_relation = selmer_size_relation(rep.s_eta, rep.s_varphi_hat, rep.s_phi4 ? &*rep.s_phi4 : nullptr);

    auto torsion_images = torsion_delta_prime_images(f, rep.torsion_points_E);
    std::vector<KummerClass> point_classes;
    for (auto& row : opt.fixtures) {
        if (t_from_r(row.r) != t || row.z == 0) continue;
        FoundPoint fp;
        fp.d = row.d;
        fp.d_class = kummer_class(row.d, 4);
        fp.point = {row.z, row.w};
        fp.image = psi_prime(row.z, row.w, row.d, t);
        fp.source = "fixture";
        point_classes.push_back(fp.d_class);
        rep.found_points.push_back(std::move(fp));
    }

    if (rep.s_phi4) {
        // Search one representative per coset of the known image; a failed
        // coset is marked unresolved and not revisited.
        std::vector<KummerClass> known = torsion_images;
        known.insert(known.end(), point_classes.begin(), point_classes.end());
        std::vector<KummerClass> failed;
        auto covered = [&]() {
            auto span = subgroup_span(known, 4);
            std::set<KummerClass> cov(span.begin(), span.end());
            for (auto& g : failed)
                for (auto& k : span) cov.insert(g * k);
            return cov;
        };
        std::set<KummerClass> cov = covered();
        for (auto& cls : rep.s_phi4->elements) {
            if (cov.count(cls)) continue;
            Rational d = class_representative(cls);
            auto pts = search_points(space_prime(d, t), opt.height);
            if (pts.empty()) {
                failed.push_back(cls);
            } else {
                FoundPoint fp;
                fp.d = d;
                fp.d_class = cls;
                fp.point = pts.front();
                fp.image = psi_prime(fp.point.z, fp.point.w, d, t);
                fp.source = "search";
                point_classes.push_back(cls);
                known.push_back(cls);
                rep.found_points.push_back(std::move(fp));
            }
            cov = covered();
        }
        known.insert(known.end(), point_classes.begin(), point_classes.end());
        rep.unresolved_classes = sha_candidates(*rep.s_phi4, known);
        size_t resolved = rep.s_phi4->elements.size() - rep.unresolved_classes.size();
        int q = 0;
        while ((size_t{1} << q) * resolved < rep.s_phi4->elements.size()) ++q;
        rep.unresolved_quotient_log2 = q;
    }
    rep.rank = rank_bounds(t, rep.s_varphi_hat, rep.s_eta, rep.s_varphi, rep.s_eta_hat, torsion_images, point_classes,
                           opt.selmer);
    return rep;
}

}  // namespace isodescent
