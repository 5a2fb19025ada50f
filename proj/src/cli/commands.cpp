#include "isodescent/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#ifndef ISODESCENT_DATA_DIR
#define ISODESCENT_DATA_DIR "data"
#endif

namespace isodescent::cli {

std::string default_fixtures_path() { return std::string(ISODESCENT_DATA_DIR) + "/table3.csv"; }

namespace {

bool same_set(const std::vector<KummerClass>& got, const std::vector<long>& want, int modulus) {
    std::set<KummerClass> a(got.begin(), got.end()), b;
    for (long q : want) b.insert(kummer_class(Rational(q), modulus));
    return a == b;
}

std::string show(const std::vector<KummerClass>& cs) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cs.size(); ++i) os << (i ? ", " : "") << to_string(class_representative(cs[i]));
    return os.str() + "}";
}

std::string show_primes(const PlaceSet& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.primes.size(); ++i) os << (i ? "," : "") << s.primes[i].get_str();
    return os.str();
}

CurvePoint pt(const char* x, const char* y) { return CurvePoint::affine(parse_rational(x), parse_rational(y)); }

bool has_point(const std::vector<SpacePoint>& pts, const Rational& z, const Rational& w) {
    for (auto& p : pts)
        if (p.z == z && p.w == w) return true;
    return false;
}

struct Checker {
    std::vector<CheckResult> out;
    void operator()(std::string name, bool ok, std::string detail = "") {
        out.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
    }
};

void check_example_t8(Checker& ck) {
    Rational t(8);
    Family f = build_family(t);
    ck("3.1 Sigma = {2,17,inf}", show_primes(sigma_set(t)) == "2,17", show_primes(sigma_set(t)));
    ck("3.1 torsion E_t is Z/4", torsion_classify(t).shape == TorsionShape::Z4 && torsion_points(f.E).points.size() == 4);
    ck("3.1 torsion E'_t is Z/4",
       torsion_classify_prime(t).shape == TorsionShape::Z4 && torsion_points(f.Ep).points.size() == 4);
    auto eta_g = selmer_2isogeny(t, Direction::Eta);
    auto vh = selmer_2isogeny(t, Direction::VarphiHat);
    auto p4 = selmer_4isogeny(t, vh);
    ck("3.1 S(eta) = {+-1, +-2}", same_set(eta_g.elements, {1, -1, 2, -2}, 2), show(eta_g.elements));
    ck("3.1 S(varphi_hat) = {+-1}", same_set(vh.elements, {1, -1}, 2), show(vh.elements));
    ck("3.1 S(phi_hat) = {+-1, +-4}", same_set(p4.elements, {1, -1, 4, -4}, 4), show(p4.elements));
    ck("3.1 search finds (16,10) on C'_4", has_point(search_points(space_prime(4, t), 16), 16, 10));
    ck("3.1 search finds (4,0) on C'_-1", has_point(search_points(space_prime(-1, t), 16), 4, 0));
    CurvePoint P = pt("5/128", "3/2048"), Q = pt("-1/2", "-3/4");
    ck("3.1 psi'(16,10) = (5/128, 3/2048)", psi_prime_small(16, 10, 4) == P);
    ck("3.1 psi' on E_t agrees with the small model",
       transform(f, psi_prime(16, 10, 4, t), CurveLabel::Et, CurveLabel::ESmall) == P);
    ck("3.1 phi(5/128,3/2048) = [2](-1/2,-3/4)", phi(f, P) == f.Epsmall.multiply(2, Q));
    ck("3.1 phi_hat(-1/2,-3/4) = [2](5/128,3/2048)", phi_hat(f, Q) == f.Esmall.multiply(2, P));
    ck("3.1 delta'(0,0) = -1", delta_prime_small(f, CurvePoint::affine(0, 0)) == kummer_class(-1, 4));
    ck("3.1 f(5/128,3/2048) = 1/16384 ~ 4",
       pairing_f(f, P) == Rational(1, 16384) && delta_prime_small(f, P) == kummer_class(4, 4));
    DescentOptions opt;
    opt.height = 16;
    auto rep = analyze(t, opt);
    ck("3.1 rank bounds (1,1)", rep.rank.lower == 1 && rep.rank.upper == 1,
       std::to_string(rep.rank.lower) + "," + std::to_string(rep.rank.upper));
    ck("3.1 no unresolved classes", rep.unresolved_classes.empty(), show(rep.unresolved_classes));
}

void check_example_t32(Checker& ck) {
    Rational t(3, 2);
    Family f = build_family(t);
    ck("3.2 Sigma = {2,3,5,inf}", show_primes(sigma_set(t)) == "2,3,5", show_primes(sigma_set(t)));
    ck("3.2 torsion E_t is Z/2 x Z/4",
       torsion_classify(t).shape == TorsionShape::Z2xZ4 && torsion_points(f.E).shape() == TorsionShape::Z2xZ4);
    auto tp = torsion_classify_prime(t);
    CurvePoint R = pt("25/64", "125/1024");
    ck("3.2 torsion E'_t is Z/8 with gamma = 2",
       tp.shape == TorsionShape::Z8 && tp.gamma && *tp.gamma == 2 && torsion_points(f.Ep).shape() == TorsionShape::Z8);
    ck("3.2 R(2) = (25/64, 125/1024) of order 8", order8_point(2) == R && f.Epsmall.order(R) == 8);
    auto vh = selmer_2isogeny(t, Direction::VarphiHat);
    auto p4 = selmer_4isogeny(t, vh);
    ck("3.2 S(phi_hat) = {1, -9}", same_set(p4.elements, {1, -9}, 4), show(p4.elements));
    ck("3.2 search finds (3,-3) on C'_-9", has_point(search_points(space_prime(-9, t), 3), 3, -3));
    CurvePoint P = pt("-1/3", "2/9");
    ck("3.2 psi'(3,-3) = (-1/3, 2/9)", psi_prime_small(3, -3, -9) == P);
    // The printed second coordinate -125/1024 is off the curve; both curve points over X = 25/64 are checked.
    CurvePoint R4 = f.Epsmall.multiply(4, R);
    ck("3.2 phi(-1/3,2/9) = [4](25/64, +-Y)",
       phi(f, P) == R4 && f.Epsmall.multiply(4, f.Epsmall.negate(R)) == R4, phi(f, P).to_string());
    ck("3.2 phi_hat(25/64,125/1024) = (-1/3,2/9) + (0,0)",
       phi_hat(f, R) == f.Esmall.add(P, CurvePoint::affine(0, 0)));
    ck("3.2 f(-1/3,2/9) ~ -9", delta_prime_small(f, P) == kummer_class(-9, 4));
    DescentOptions opt;
    opt.height = 10;
    auto rep = analyze(t, opt);
    ck("3.2 rank bounds (0,0)", rep.rank.lower == 0 && rep.rank.upper == 0,
       std::to_string(rep.rank.lower) + "," + std::to_string(rep.rank.upper));
}

struct TableRow {
    const char* r;
    const char* sigma;
    int lower, upper;
    std::vector<long> eta, vh;
    int phi4_log2;
};

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {"15/56", "2,3,5,7,41,71,1231,3361,4591", 2, 4, {-1, 2, 3, 5, 7, 41, 71}, {-1, 2, 3, 5, 7, 41, 71}, 13},
        {"24/65", "2,3,5,7,13,23,41,89,967,4801", 2, 4, {-1, 2, 3, 5, 13, 41, 89}, {-1, 2, 3, 5, 13, 41, 89}, 13},
        {"11/69", "2,3,5,7,11,23,29,223,2441,3079", 2, 4, {-1, 2, 5, 23, 29, 33}, {-1, 2, 5, 23, 29, 33}, 11},
        {"7/88", "2,3,5,7,11,19,23,79,113,281,7793", 2, 4, {-1, 2, 7, 11, 15, 57, 113, 843}, {-1, 2, 7, 57, 165}, 12},
        {"12/97", "2,3,5,7,17,41,97,109,233,991,11593", 1, 4, {-1, 2, 51, 291, 1635, 57965}, {-1, 2, 51, 291, 1635},
         10},
    };
    return rows;
}

std::vector<KummerClass> span_of(const std::vector<long>& gens) {
    std::vector<KummerClass> g;
    for (long q : gens) g.push_back(kummer_class(Rational(q), 2));
    return subgroup_span(g, 2);
}

void check_table1(Checker& ck, const std::string& fixtures) {
    auto rows = load_table3(fixtures);
    for (auto& row : table_rows()) {
        Rational t = t_from_r(parse_rational(row.r));
        auto sig = sigma_set(t);
        ck(std::string("table1 r=") + row.r + " Sigma", show_primes(sig) == row.sigma, show_primes(sig));
        DescentOptions opt;
        opt.fixtures = rows;
        opt.enumerate_phi4 = false;
        auto rep = analyze(t, opt);
        ck(std::string("table1 r=") + row.r + " rank bounds", rep.rank.lower == row.lower && rep.rank.upper == row.upper,
           std::to_string(rep.rank.lower) + "," + std::to_string(rep.rank.upper));
    }
}

void check_table2(Checker& ck) {
    for (auto& row : table_rows()) {
        Rational t = t_from_r(parse_rational(row.r));
        auto eta_g = selmer_2isogeny(t, Direction::Eta);
        auto vh = selmer_2isogeny(t, Direction::VarphiHat);
        auto want_eta = span_of(row.eta), want_vh = span_of(row.vh);
        ck(std::string("table2 r=") + row.r + " S(eta) as a subgroup", eta_g.elements == want_eta,
           "size 2^" + std::to_string(eta_g.log2_size()));
        ck(std::string("table2 r=") + row.r + " S(varphi_hat) as a subgroup", vh.elements == want_vh,
           "size 2^" + std::to_string(vh.log2_size()));
        auto rel = selmer_size_relation(eta_g, vh, nullptr);
        ck(std::string("table2 r=") + row.r + " predicted #S(phi_hat) = 2^" + std::to_string(row.phi4_log2),
           rel.predicted_log2 == row.phi4_log2, "2^" + std::to_string(rel.predicted_log2));
        if (std::string(row.r) == "11/69") {
            auto p4 = selmer_4isogeny(t, vh);
            ck("table2 r=11/69 enumerated #S(phi_hat) = 2^11", p4.log2_size() == 11,
               "2^" + std::to_string(p4.log2_size()));
        }
    }
}

void check_table3(Checker& ck, const std::string& fixtures) {
    auto checks = verify_table3(load_table3(fixtures));
    for (auto& c : checks) {
        std::string name = "table3 r=" + to_string(c.row.r) + " d=" + c.row.d_expr;
        std::string detail;
        if (!c.on_space) detail += "residual " + to_string(c.residual) + "; ";
        if (!c.image_on_curve) detail += "image off E_t; ";
        if (!c.class_matches) detail += "delta' class differs; ";
        ck(name, c.ok(), detail);
    }
}

int exit_for(const std::vector<CheckResult>& rs) {
    for (auto& r : rs)
        if (!r.pass) return 1;
    return 0;
}

Rational resolve_t(const std::string& t, const std::string& r, const std::string& s, InputEcho& echo) {
    int given = !t.empty() + !r.empty() + !s.empty();
    if (given != 1) throw DomainError("exactly one of --t, --r, --s is required");
    if (!t.empty()) {
        echo.param = "t";
        echo.value = parse_rational(t);
        if (echo.value == 0) throw DegenerateParameter("t = 0 is degenerate");
        return echo.value;
    }
    if (!r.empty()) {
        echo.param = "r";
        echo.value = parse_rational(r);
        return t_from_r(echo.value);
    }
    echo.param = "s";
    echo.value = parse_rational(s);
    return t_from_s(echo.value);
}

std::string cache_path(const std::string& flag) {
    if (const char* env = std::getenv("ISODESCENT_CACHE"); env && *env) return env;
    return flag;
}

}  // namespace

std::vector<CheckResult> verify_paper(const std::string& which, const std::string& fixtures_path) {
    static const std::set<std::string> known{"3.1", "3.2", "table1", "table2", "table3", "all"};
    if (!known.count(which)) throw DomainError("unknown check set: " + which);
    Checker ck;
    bool all = which == "all";
    if (all || which == "3.1") check_example_t8(ck);
    if (all || which == "3.2") check_example_t32(ck);
    if (all || which == "table1") check_table1(ck, fixtures_path);
    if (all || which == "table2") check_table2(ck);
    if (all || which == "table3") check_table3(ck, fixtures_path);
    return ck.out;
}

int run(int argc, char** argv) {
    CLI::App app{"isodescent: explicit 4-isogeny and 2-isogeny descent on v^2 = u^3 + (t^2+2)u^2 + u"};
    app.require_subcommand(1);

    std::string t_arg, r_arg, s_arg, fixtures, cache_flag, format = "json";
    long height = 100;
    bool stats = false, no_phi4 = false;
    unsigned jobs = 1;
    auto* analyze_cmd = app.add_subcommand("analyze", "full descent report for one curve");
    analyze_cmd->add_option("--t", t_arg, "parameter t");
    analyze_cmd->add_option("--r", r_arg, "parameter r, t = (r^4-6r^2+1)/(2r^3-2r)");
    analyze_cmd->add_option("--s", s_arg, "parameter s, t = (s^2-1)/s");
    analyze_cmd->add_option("--height", height, "search height bound")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--fixtures", fixtures, "CSV of known points (r,d,z,w)");
    analyze_cmd->add_option("--cache", cache_flag, "local solvability cache file");
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    analyze_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--stats", stats, "append timing and cache statistics");
    analyze_cmd->add_flag("--no-phi4", no_phi4, "skip the fourth-power Selmer enumeration");

    std::string which = "all", vfixtures = default_fixtures_path();
    auto* verify_cmd = app.add_subcommand("verify-paper", "reproduce the worked examples and tables");
    verify_cmd->add_option("--which", which)->check(CLI::IsMember({"3.1", "3.2", "table1", "table2", "table3", "all"}));
    verify_cmd->add_option("--fixtures", vfixtures, "CSV of known points (r,d,z,w)");

    std::string st_arg, isogeny = "phi4", sformat = "text", scache;
    unsigned sjobs = 1;
    auto* selmer_cmd = app.add_subcommand("selmer", "list one Selmer group");
    selmer_cmd->add_option("--t", st_arg, "parameter t")->required();
    selmer_cmd->add_option("--isogeny", isogeny)
        ->check(CLI::IsMember({"phi4", "eta", "varphi", "varphi-hat", "eta-hat"}));
    selmer_cmd->add_option("--jobs", sjobs, "worker threads")->check(CLI::PositiveNumber);
    selmer_cmd->add_option("--cache", scache, "local solvability cache file");
    selmer_cmd->add_option("--format", sformat)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) {
            auto start = std::chrono::steady_clock::now();
            InputEcho echo;
            Rational t = resolve_t(t_arg, r_arg, s_arg, echo);
            echo.height = height;
            echo.fixtures = fixtures;
            SolvabilityCache cache(cache_path(cache_flag));
            DescentOptions opt;
            opt.height = height;
            opt.enumerate_phi4 = !no_phi4;
            opt.selmer.jobs = jobs;
            opt.selmer.cache = &cache;
            if (!fixtures.empty()) opt.fixtures = load_table3(fixtures);
            auto rep = analyze(t, opt);
            // the torsion witness is not unique; prefer the one the user supplied
            if (echo.param == "r") {
                rep.r = echo.value;
                rep.s = (echo.value * echo.value - 1) / (2 * echo.value);
            } else if (echo.param == "s") {
                rep.s = echo.value;
            }
            RunStats rs;
            rs.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rs.cache_hits = cache.hits();
            rs.cache_misses = cache.misses();
            auto doc = report_json(rep, echo, stats ? &rs : nullptr);
            if (format == "json") std::cout << doc.dump(2) << "\n";
            else if (format == "csv") std::cout << to_csv(doc);
            else std::cout << report_text(rep);
            return 0;
        }
        if (*verify_cmd) {
            auto results = verify_paper(which, vfixtures);
            size_t failed = 0;
            for (auto& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                failed += !r.pass;
            }
            std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
            return exit_for(results);
        }
        if (*selmer_cmd) {
            Rational t = parse_rational(st_arg);
            if (t == 0) throw DegenerateParameter("t = 0 is degenerate");
            build_family(t);
            SolvabilityCache cache(cache_path(scache));
            SelmerOptions opt;
            opt.jobs = sjobs;
            opt.cache = &cache;
            SelmerGroup g;
            if (isogeny == "phi4") g = selmer_4isogeny(t, selmer_2isogeny(t, Direction::VarphiHat, opt), opt);
            else if (isogeny == "eta") g = selmer_2isogeny(t, Direction::Eta, opt);
            else if (isogeny == "varphi") g = selmer_2isogeny(t, Direction::Varphi, opt);
            else if (isogeny == "varphi-hat") g = selmer_2isogeny(t, Direction::VarphiHat, opt);
            else g = selmer_2isogeny(t, Direction::EtaHat, opt);
            if (sformat == "json") {
                std::cout << nlohmann::json{{"schema_version", kSchemaVersion}, {"t", to_string(t)}, {"selmer", selmer_json(g)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "S(" << g.isogeny << ") in Q*/Q*^" << g.modulus << ", size 2^" << g.log2_size() << "\n";
                std::cout << "generators:";
                for (auto& c : g.generators) std::cout << " " << to_string(class_representative(c));
                std::cout << "\nelements:";
                for (auto& c : g.elements) std::cout << " " << to_string(class_representative(c));
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace isodescent::cli
