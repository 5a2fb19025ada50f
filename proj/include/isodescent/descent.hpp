#pragma once

#include "isodescent/isogeny.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace isodescent {

// connecting homomorphisms

// Representative value of delta' at a point of E_t (fourth-power classes).
Rational delta_prime_value(const Family& f, const CurvePoint& p_on_Et);
KummerClass delta_prime(const Family& f, const CurvePoint& p_on_Et);
KummerClass delta_prime_small(const Family& f, const CurvePoint& p_on_Esmall);
// Square classes along the dual of varphi: (u,v) -> u, (0,0) -> 1.
KummerClass delta_doubleprime(const Family& f, const CurvePoint& p_on_Et);

// homogeneous spaces

struct QuarticSpace {  // d W^2 = d^2 + b d Z^2 + c Z^4
    Rational d, b, c;
};

struct BiquadraticSpace {  // d (w - z^2/(4t^2)) z^2 = (w^2 - d)^2
    Rational d, t;
};

QuarticSpace space_doubleprime(const Rational& d, const Rational& b, const Rational& c);
BiquadraticSpace space_prime(const Rational& d, const Rational& t);
bool on_space(const Rational& Z, const Rational& W, const QuarticSpace& s);
bool on_space_prime(const Rational& z, const Rational& w, const BiquadraticSpace& s);

struct SpecialFiber : DomainError {
    using DomainError::DomainError;
};

CurvePoint psi_prime(const Rational& z, const Rational& w, const Rational& d, const Rational& t);
CurvePoint psi_prime_small(const Rational& z, const Rational& w, const Rational& d);
std::pair<Rational, Rational> eta_star(const Rational& z, const Rational& w, const Rational& d, const Rational& t);
CurvePoint psi_doubleprime(const Rational& Z, const Rational& W, const Rational& d);

// local solvability

struct Place {
    bool infinite = false;
    Integer p;
    static Place infinity() { return Place{true, 0}; }
    static Place prime(Integer q) { return Place{false, std::move(q)}; }
    std::string to_string() const { return infinite ? "inf" : p.get_str(); }
};

struct LocalResult {
    bool solvable = false;
    std::string certificate;
};

LocalResult local_solvable_quartic(const QuarticSpace& s, const Place& v);
LocalResult local_solvable_biquadratic(const BiquadraticSpace& s, const Place& v);

// Depth cap for the residue-class refinement; exceeding it raises PrecisionError.
constexpr int kMaxRefinementDepth = 200;

// Selmer groups

enum class Direction { VarphiHat, Eta, Varphi, EtaHat };
std::string direction_name(Direction d);
std::pair<Rational, Rational> direction_coeffs(const Rational& t, Direction d);

struct SelmerGroup {
    std::string isogeny;
    int modulus = 2;
    std::vector<KummerClass> generators;
    std::vector<KummerClass> elements;  // sorted
    int log2_size() const;
    bool contains(const KummerClass& c) const;
};

// Append-only line-delimited verdict store keyed by local class.
class SolvabilityCache {
public:
    explicit SolvabilityCache(std::string path = "");
    std::optional<bool> lookup(const std::string& key);
    void record(const std::string& key, const std::string& t, const std::string& d, const std::string& tag,
                const std::string& place, bool verdict, const std::string& certificate);
    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }

private:
    std::string path_;
    std::unordered_map<std::string, bool> table_;
    std::mutex mu_;
    size_t hits_ = 0, misses_ = 0;
};

struct SelmerOptions {
    unsigned jobs = 1;
    SolvabilityCache* cache = nullptr;
};

// Square classes supported on primes whose spaces d W^2 = d^2 + b d Z^2 + c Z^4 are everywhere locally solvable.
SelmerGroup selmer_quartic(const Rational& b, const Rational& c, const PlaceSet& sigma, const std::string& name,
                           const SelmerOptions& opt = {});
SelmerGroup selmer_2isogeny(const Rational& t, Direction dir, const SelmerOptions& opt = {});
SelmerGroup selmer_4isogeny(const Rational& t, const SelmerGroup& s_varphi_hat, const SelmerOptions& opt = {});

struct SizeRelation {
    int computed_log2 = -1;  // -1 when the 4-Selmer group was not enumerated
    int predicted_log2 = 0;
    bool matches() const { return computed_log2 < 0 || computed_log2 == predicted_log2; }
};
SizeRelation selmer_size_relation(const SelmerGroup& s_eta, const SelmerGroup& s_varphi_hat, const SelmerGroup* s_phi4);

// subgroup utilities for Kummer classes
std::vector<KummerClass> subgroup_span(const std::vector<KummerClass>& gens, int modulus);
std::vector<KummerClass> subgroup_basis(const std::vector<KummerClass>& elements, int modulus);

// global points

struct SpacePoint {
    Rational z, w;
};

std::vector<SpacePoint> search_points(const BiquadraticSpace& s, long height_bound);
std::vector<SpacePoint> search_points(const QuarticSpace& s, long height_bound);

struct Table3Row {
    Rational r;
    std::string d_expr;
    Rational d, z, w;
};

std::vector<Table3Row> load_table3(const std::string& path);

struct Table3Check {
    Table3Row row;
    bool on_space = false, image_on_curve = false, class_matches = false;
    Rational residual;  // lhs - rhs of the space equation
    CurvePoint image;   // on E_t
    bool ok() const { return on_space && image_on_curve && class_matches; }
};

std::vector<Table3Check> verify_table3(const std::vector<Table3Row>& rows);

// rank bounds and unresolved classes

struct IsogenyPairBound {
    std::string name;
    int dim_forward = 0, dim_backward = 0;
    int bound() const { return dim_forward + dim_backward - 2; }
};

struct RankBounds {
    int lower = 0, upper = 0;
    std::vector<IsogenyPairBound> pairs;
};

// Known image of E_t(Q) in fourth-power classes.
std::vector<KummerClass> torsion_delta_prime_images(const Family& f, const TorsionGroup& tors);
int rank_lower_from_images(const std::vector<KummerClass>& torsion_images, const std::vector<KummerClass>& point_classes);

struct FoundPoint {
    KummerClass d_class;
    Rational d;
    SpacePoint point;
    CurvePoint image;  // on E_t
    std::string source;  // "search" or "fixture"
};

struct DescentOptions {
    long height = 100;
    std::vector<Table3Row> fixtures;  // rows for this t are used
    bool enumerate_phi4 = true;
    SelmerOptions selmer;
};

struct DescentReport {
    Rational t;
    std::optional<Rational> r, s;
    PlaceSet sigma;
    TorsionClass torsion_E, torsion_Ep;
    TorsionGroup torsion_points_E, torsion_points_Ep;
    std::optional<CurvePoint> order8_point;
    SelmerGroup s_varphi_hat, s_eta, s_varphi, s_eta_hat;
    std::optional<SelmerGroup> s_phi4;
    SizeRelation size_relation;
    std::vector<FoundPoint> found_points;
    RankBounds rank;
    std::vector<KummerClass> unresolved_classes;  // Selmer classes outside the known image
    int unresolved_quotient_log2 = 0;
    long height = 0;
};

DescentReport analyze(const Rational& t, const DescentOptions& opt);

// Rank bound from every rational 2-isogeny pair available on E_t and E''_t.
RankBounds rank_bounds(const Rational& t, const SelmerGroup& s_varphi_hat, const SelmerGroup& s_eta,
                       const SelmerGroup& s_varphi, const SelmerGroup& s_eta_hat,
                       const std::vector<KummerClass>& torsion_images, const std::vector<KummerClass>& point_classes,
                       const SelmerOptions& opt = {});

std::vector<KummerClass> sha_candidates(const SelmerGroup& s_phi4, const std::vector<KummerClass>& known_image);

}  // namespace isodescent
