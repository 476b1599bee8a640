#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcfloer/floer.hpp"
#include "gcfloer/gc_core.hpp"
#include "gcfloer/novikov.hpp"
#include "gcfloer/potential.hpp"

namespace gcfloer {

using json = nlohmann::ordered_json;

// A named space plus its parameters. `lambda` holds (l1, l2) for Fl3, (lam)
// for Gr24/Gr25, and the profile for custom.
struct SpaceSpec {
    std::string name;  // Fl3, Gr24, Gr25 or custom
    std::vector<Rational> lambda;
    FlagShape shape;  // custom only
};

// Profile used for polytopes and fibers (Gr24: (lam, lam, -lam, -lam)).
Space fiber_space(const SpaceSpec& s);
// Profile used for potentials (Gr24: (2lam, 2lam, 0, 0)).
Space potential_space(const SpaceSpec& s);

struct PointReport {
    GCPoint u;
    bool inside = false;
    std::vector<int> active;
    std::vector<Diamond> diamonds;
    std::optional<FiberDescriptor> fiber;

    bool operator==(const PointReport&) const;
};

struct PolytopeReport {
    std::string space;
    GCPolytope polytope;
    std::optional<PointReport> point;
};
PolytopeReport polytope_report(const SpaceSpec& s, const std::optional<GCPoint>& at, double tol = 1e-9);

struct PotentialReport {
    std::string space;
    std::vector<Rational> lambda;
    LaurentPoly potential;
    std::string text;
};
PotentialReport potential_report(const SpaceSpec& s, TermRule rule = TermRule::Facet);

struct CriticalRow {
    std::vector<cplx> y;
    double residual = 0;
    cplx value;
    cplx hessian_det;
    bool operator==(const CriticalRow&) const = default;
};

struct CandidateRow {
    std::string label;
    double residual = 0;
    std::vector<Rational> valuations;
    bool interior = false;
    bool nondegenerate = false;
    bool operator==(const CandidateRow&) const = default;
};

struct CriticalReport {
    std::string space;
    std::vector<Rational> lambda;
    double T0 = 0.5;
    std::uint64_t seed = 0;
    int starts = 0;
    std::vector<CriticalRow> points;
    std::vector<CandidateRow> candidates;  // empty unless requested
    bool operator==(const CriticalReport&) const = default;
};
CriticalReport critical_report(const SpaceSpec& s, const SolverConfig& cfg, bool verify_closed_form);

struct QHReport {
    std::string space;
    std::vector<cplx> q;
    std::vector<cplx> eigenvalues;
    // match only
    std::vector<Rational> lambda;
    double T0 = 0;
    std::vector<cplx> critical_values;
    std::optional<bool> matched;
    std::vector<int> pairing;
    double worst = 0;
    double tol = 0;
    bool operator==(const QHReport&) const = default;
};
QHReport qh_report(const std::string& space, const std::vector<cplx>& q);
// Critical values at T0 against the c1 eigenvalues at the matching q.
QHReport match_report(const SpaceSpec& s, double T0, double tol, const SolverConfig& base);

struct FloerReport {
    std::string space;
    std::vector<Rational> lambda;
    Rational t;
    cplx b;
    bool pair = false;
    FloerComplex complex;
    std::string ring;  // Lambda0 or Lambda
    NovikovModuleDecomp hf;
};
FloerReport floer_report(const SpaceSpec& s, Rational t, cplx x, bool pair, const std::string& ring);

json to_json(const PolytopeReport& r);
json to_json(const PotentialReport& r);
json to_json(const CriticalReport& r);
json to_json(const QHReport& r);
json to_json(const FloerReport& r);

PolytopeReport polytope_report_from_json(const json& j);
PotentialReport potential_report_from_json(const json& j);
CriticalReport critical_report_from_json(const json& j);
QHReport qh_report_from_json(const json& j);
FloerReport floer_report_from_json(const json& j);

bool same(const NovikovSeries& a, const NovikovSeries& b);
bool same(const PolytopeReport& a, const PolytopeReport& b);
bool same(const PotentialReport& a, const PotentialReport& b);
bool same(const FloerReport& a, const FloerReport& b);

}  // namespace gcfloer
