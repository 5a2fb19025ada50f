// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "isodescent/cli.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace isodescent;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> notes;
};

void absorb(Outcome& o, const std::vector<cli::CheckResult>& rs) {
    size_t ok = 0;
    for (auto& r : rs) {
        if (r.pass) {
            ++ok;
        } else {
            o.pass = false;
            o.notes.push_back("failed: " + r.name + (r.detail.empty() ? "" : " [" + r.detail + "]"));
        }
    }
    o.detail << ok << "/" << rs.size() << " checks";
}

void report(int n, const Outcome& o) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail.str() << ")\n";
    for (auto& note : o.notes) std::cout << "    " << note << "\n";
}

std::string fixtures() { return cli::default_fixtures_path(); }

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    absorb(o, cli::verify_paper("3.1", fixtures()));
    double s = since(t0);
    o.detail << ", " << s << " s";
    if (s >= 10) o.pass = false, o.notes.push_back("runtime exceeds 10 s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    absorb(o, cli::verify_paper("3.2", fixtures()));
    double s = since(t0);
    o.detail << ", " << s << " s";
    if (s >= 10) o.pass = false, o.notes.push_back("runtime exceeds 10 s");
    auto f = build_family(Rational(3, 2));
    CurvePoint printed = CurvePoint::affine(Rational(25, 64), Rational(-125, 1024));
    CurvePoint R = CurvePoint::affine(Rational(25, 64), Rational(125, 1024));
    if (!f.Epsmall.contains(printed))
        o.notes.push_back("note: (25/64, -125/1024) is not on E'_small; phi(-1/3, 2/9) = [4]R = [4](-R) with -R = " +
                          f.Epsmall.negate(R).to_string() + " is what was verified");
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto t0 = Clock::now();
    for (const char* r : {"15/56", "24/65", "11/69", "7/88", "12/97"}) sigma_set(t_from_r(parse_rational(r)));
    double sig = since(t0);
    absorb(o, cli::verify_paper("table1", fixtures()));
    o.detail << ", Sigma sets in " << sig << " s, total " << since(t0) << " s";
    if (sig >= 30) o.pass = false, o.notes.push_back("Sigma computation exceeds 30 s");
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto t0 = Clock::now();
    absorb(o, cli::verify_paper("table2", fixtures()));
    o.detail << ", " << since(t0) << " s";
    // Beyond the criterion: direct enumeration for the two rows where it disagrees with the relation.
    for (const char* r : {"15/56", "24/65"}) {
        Rational t = t_from_r(parse_rational(r));
        auto vh = selmer_2isogeny(t, Direction::VarphiHat);
        auto rel = selmer_size_relation(selmer_2isogeny(t, Direction::Eta), vh, nullptr);
        auto p4 = selmer_4isogeny(t, vh);
        std::ostringstream os;
        os << "note: r=" << r << " direct enumeration gives #S(phi_hat) = 2^" << p4.log2_size()
           << ", relation predicts 2^" << rel.predicted_log2;
        if (p4.log2_size() != rel.predicted_log2)
            os << " (a split multiplicative prime with trivial local image removes one square-class lift)";
        o.notes.push_back(os.str());
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto t0 = Clock::now();
    absorb(o, cli::verify_paper("table3", fixtures()));
    double s = since(t0);
    o.detail << ", " << s << " s";
    if (s >= 60) o.pass = false, o.notes.push_back("runtime exceeds 60 s");
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto sweep = oracle::local_sweep();
    o.detail << "local: " << sweep.instances - sweep.mismatches.size() << "/" << sweep.instances << " agree";
    if (!sweep.mismatches.empty()) {
        o.pass = false;
        for (size_t i = 0; i < sweep.mismatches.size() && i < 10; ++i) o.notes.push_back(sweep.mismatches[i]);
    }
    size_t points = 0;
    for (auto& s : oracle::isogeny_samples(fixtures()))
        for (auto& P : s.pts) {
            auto why = oracle::isogeny_identity_failure(s.f, P);
            if (!why.empty()) {
                o.pass = false;
                o.notes.push_back("isogeny identity failed: " + why + " at " + P.to_string());
                break;
            }
            ++points;
        }
    o.detail << "; isogeny identities on " << points << " points";
    if (points < 200) o.pass = false, o.notes.push_back("fewer than 200 sampled points");
    auto k = oracle::kummer_law_failure();
    o.detail << "; Kummer laws on 1000 rationals";
    if (!k.empty()) o.pass = false, o.notes.push_back("Kummer law failed: " + k);
    return o;
}

Outcome criterion7() {
    Outcome o;
    auto t0 = Clock::now();
    DescentOptions opt;
    opt.height = 1000;
    opt.fixtures = load_table3(fixtures());
    auto rep = analyze(t_from_r(parse_rational("11/69")), opt);
    o.detail << "r=11/69 height 1000: " << rep.unresolved_classes.size() << " unresolved classes, quotient 2^"
             << rep.unresolved_quotient_log2 << ", " << since(t0) << " s";
    if (rep.unresolved_quotient_log2 < 4) o.pass = false;
    o.notes.push_back("note: reported as candidates only; ranks and Sha orders conditional on BSD are not reproduced");
    return o;
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(1);
    const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7};
    bool all = true;
    for (int i = 0; i < 7; ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        report(i + 1, o);
        all = all && o.pass;
        std::cout.flush();
    }
    return all ? 0 : 1;
}
