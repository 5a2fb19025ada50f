#include "isodescent/cli.hpp"

#include <sstream>

namespace isodescent::cli {

using nlohmann::json;

namespace {

json classes_json(const std::vector<KummerClass>& cs) {
    json a = json::array();
    for (auto& c : cs) a.push_back(c.to_string());
    return a;
}

json opt_rational(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

json torsion_json(const TorsionClass& tc, const TorsionGroup& g) {
    json pts = json::array(), gens = json::array();
    for (auto& p : g.points) pts.push_back(point_json(p));
    for (auto& p : g.generators) gens.push_back(point_json(p));
    return {{"shape", shape_name(tc.shape)},
            {"witness", {{"s", opt_rational(tc.s)}, {"r", opt_rational(tc.r)}, {"gamma", opt_rational(tc.gamma)}}},
            {"order", g.points.size()},
            {"invariants", g.invariants},
            {"generators", gens},
            {"points", pts}};
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        std::string v = j.is_string() ? j.get<std::string>() : j.dump();
        bool quote = v.find(',') != std::string::npos || v.find('"') != std::string::npos;
        if (quote) {
            std::string q = "\"";
            for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            v = q + "\"";
        }
        os << path << "," << v << "\n";
    }
}

std::string list_classes(const std::vector<KummerClass>& cs, size_t limit) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cs.size() && i < limit; ++i) os << (i ? ", " : "") << to_string(class_representative(cs[i]));
    if (cs.size() > limit) os << ", ...";
    os << "}";
    return os.str();
}

}  // namespace

json point_json(const CurvePoint& p) {
    if (p.infinity) return "infinity";
    return {{"x", to_string(p.x)}, {"y", to_string(p.y)}};
}

json selmer_json(const SelmerGroup& g) {
    return {{"isogeny", g.isogeny},
            {"modulus", g.modulus},
            {"log2_size", g.log2_size()},
            {"generators", classes_json(g.generators)},
            {"elements", classes_json(g.elements)}};
}

json report_json(const DescentReport& rep, const InputEcho& in, const RunStats* stats) {
    json primes = json::array();
    for (auto& p : rep.sigma.primes) primes.push_back(p.get_str());
    json selmer = {{"varphi_hat", selmer_json(rep.s_varphi_hat)},
                   {"eta", selmer_json(rep.s_eta)},
                   {"varphi", selmer_json(rep.s_varphi)},
                   {"eta_hat", selmer_json(rep.s_eta_hat)},
                   {"phi_hat", rep.s_phi4 ? selmer_json(*rep.s_phi4) : json(nullptr)}};
    json found = json::array();
    for (auto& fp : rep.found_points)
        found.push_back({{"d", to_string(fp.d)},
                         {"d_class", fp.d_class.to_string()},
                         {"z", to_string(fp.point.z)},
                         {"w", to_string(fp.point.w)},
                         {"image", point_json(fp.image)},
                         {"source", fp.source}});
    json pairs = json::array();
    for (auto& p : rep.rank.pairs)
        pairs.push_back(
            {{"name", p.name}, {"dim_forward", p.dim_forward}, {"dim_backward", p.dim_backward}, {"bound", p.bound()}});
    json relation = {{"predicted_log2", rep.size_relation.predicted_log2},
                     {"computed_log2", rep.size_relation.computed_log2 < 0 ? json(nullptr)
                                                                           : json(rep.size_relation.computed_log2)},
                     {"matches", rep.size_relation.matches()}};
    json unresolved = nullptr;
    if (rep.s_phi4)
        unresolved = {{"label", "unresolved at height " + std::to_string(rep.height)},
                      {"count", rep.unresolved_classes.size()},
                      {"quotient_log2", rep.unresolved_quotient_log2},
                      {"classes", classes_json(rep.unresolved_classes)}};
    json doc = {
        {"schema_version", kSchemaVersion},
        {"input",
         {{"parameter", in.param},
          {"value", to_string(in.value)},
          {"height", in.height},
          {"fixtures", in.fixtures.empty() ? json(nullptr) : json(in.fixtures)}}},
        {"report",
         {{"t", to_string(rep.t)},
          {"r", opt_rational(rep.r)},
          {"s", opt_rational(rep.s)},
          {"sigma", {{"primes", primes}, {"infinity", true}}},
          {"torsion",
           {{"E_t", torsion_json(rep.torsion_E, rep.torsion_points_E)},
            {"E_prime_t", torsion_json(rep.torsion_Ep, rep.torsion_points_Ep)},
            {"order8_point_small", rep.order8_point ? point_json(*rep.order8_point) : json(nullptr)}}},
          {"selmer", selmer},
          {"size_relation", relation},
          {"found_points", found},
          {"rank", {{"lower", rep.rank.lower}, {"upper", rep.rank.upper}, {"pairs", pairs}}},
          {"unresolved", unresolved}}}};
    if (stats)
        doc["statistics"] = {
            {"seconds", stats->seconds}, {"cache_hits", stats->cache_hits}, {"cache_misses", stats->cache_misses}};
    return doc;
}

std::string to_csv(const json& doc) {
    std::ostringstream os;
    os << "path,value\n";
    flatten(doc, "", os);
    return os.str();
}

std::string report_text(const DescentReport& rep) {
    std::ostringstream os;
    os << "t = " << to_string(rep.t) << "\n";
    if (rep.r) os << "r = " << to_string(*rep.r) << "\n";
    os << "Sigma = " << rep.sigma.to_string() << "\n";
    os << "torsion E_t: " << shape_name(rep.torsion_E.shape) << ", E'_t: " << shape_name(rep.torsion_Ep.shape) << "\n";
    if (rep.order8_point) os << "order-8 point on E'_small: " << rep.order8_point->to_string() << "\n";
    auto line = [&](const char* label, const SelmerGroup& g) {
        os << label << ": 2^" << g.log2_size() << " " << list_classes(g.elements, 16) << "\n";
    };
    line("S(varphi_hat)", rep.s_varphi_hat);
    line("S(eta)", rep.s_eta);
    line("S(varphi)", rep.s_varphi);
    line("S(eta_hat)", rep.s_eta_hat);
    if (rep.s_phi4) line("S(phi_hat)", *rep.s_phi4);
    os << "size relation: predicted 2^" << rep.size_relation.predicted_log2;
    if (rep.size_relation.computed_log2 >= 0)
        os << ", enumerated 2^" << rep.size_relation.computed_log2
           << (rep.size_relation.matches() ? "" : " (mismatch)");
    os << "\n";
    for (auto& fp : rep.found_points)
        os << "point on C'_d, d = " << to_string(fp.d) << ": (z,w) = (" << to_string(fp.point.z) << ", "
           << to_string(fp.point.w) << ") -> " << fp.image.to_string() << " [" << fp.source << "]\n";
    os << "rank bounds: " << rep.rank.lower << " <= R <= " << rep.rank.upper << "\n";
    for (auto& p : rep.rank.pairs)
        os << "  pair " << p.name << ": " << p.dim_forward << " + " << p.dim_backward << " - 2 = " << p.bound() << "\n";
    if (rep.s_phi4)
        os << "unresolved at height " << rep.height << ": " << rep.unresolved_classes.size()
           << " classes, quotient 2^" << rep.unresolved_quotient_log2 << "\n";
    return os.str();
}

}  // namespace isodescent::cli
