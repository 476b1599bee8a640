#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcfloer/gc_core.hpp"
#include "gcfloer/numerics.hpp"
#include "gcfloer/rational.hpp"

namespace gcfloer {

// coeff * T^t_exp * prod_j y_j^y_exp[j]
struct LaurentTerm {
    cplx coeff{1.0};
    Rational t_exp{0};
    std::vector<int> y_exp;
};

struct LaurentPoly {
    std::vector<LaurentTerm> terms;
    std::vector<GCIndex> labels;  // y_j is labels[j]

    int nvars() const { return static_cast<int>(labels.size()); }
};

// Facet: one term per facet inequality (matches the displayed examples).
// Literal: one term per emitted inequality, facet or not.
enum class TermRule { Facet, Literal };

LaurentPoly build_potential(const GCPolytope& p, TermRule rule = TermRule::Facet);
LaurentPoly build_potential(const FlagShape& shape, const EigenProfile& profile, TermRule rule = TermRule::Facet);

// "T^2 y2^-1 + y2 y1^-1 + ..." in term order.
std::string to_string(const LaurentPoly& po);

cplx evaluate(const LaurentPoly& po, const std::vector<cplx>& y, double T0);
// Same, in log coordinates y = e^x.
cplx evaluate_log(const LaurentPoly& po, const std::vector<cplx>& x, double T0);

// Component j is y_j d/dy_j of po.
std::vector<LaurentPoly> log_gradient(const LaurentPoly& po);
std::vector<cplx> log_gradient_at(const LaurentPoly& po, const std::vector<cplx>& x, double T0);
ComplexMatrix log_hessian_at(const LaurentPoly& po, const std::vector<cplx>& x, double T0);

struct SolverConfig {
    double T0 = 0.5;
    int starts = 2000;
    std::uint64_t seed = 0;
    double newton_tol = 1e-10;
    double dedupe_tol = 1e-6;
    int max_iters = 100;

    void validate() const;
};

struct CriticalPoint {
    std::vector<cplx> x;  // imaginary parts in (-pi, pi]
    std::vector<cplx> y;
    double residual = 0;
    cplx value;
    cplx hessian_det;
};

std::vector<CriticalPoint> find_critical_points(const LaurentPoly& po, const SolverConfig& cfg);

struct HessianCheck {
    bool nondegenerate = false;
    cplx det;             // raw determinant
    double normalized = 0;  // |det| after dividing each row by its norm
};

// Throws InvalidInput when the log-gradient residual at y exceeds 1e-8.
HessianCheck hessian_nondegenerate(const LaurentPoly& po, const std::vector<cplx>& y, double T0);
// The predicate without the criticality precondition.
HessianCheck hessian_check_unchecked(const LaurentPoly& po, const std::vector<cplx>& x, double T0);

// c * T^e
struct MonomialValue {
    cplx c;
    Rational e;
};

struct CriticalCandidate {
    std::string label;
    std::function<std::vector<cplx>(double)> at;  // y as a function of T0
    std::optional<std::vector<MonomialValue>> exact;

    static CriticalCandidate monomial(std::string label, std::vector<MonomialValue> v);
};

struct CandidateReport {
    double max_residual = 0;
    std::vector<Rational> valuations;
    bool valuations_exact = false;  // false: fitted from two T0 values
    bool interior = false;
    cplx value_coeff;
    double value_exponent = 0;  // fitted exponent of the critical value
};

// Needs at least two T0 values; the first two drive the exponent fits.
CandidateReport verify_candidate(const LaurentPoly& po, const GCPolytope& p, const CriticalCandidate& cand,
                                 const std::vector<double>& T0_list);

// Closed-form critical points of the displayed examples.
std::vector<CriticalCandidate> fl3_closed_form_candidates(double l1, double l2);
std::vector<CriticalCandidate> gr24_closed_form_candidates(Rational lam);
// Literal: y6^5 = Q^5 as printed. Corrected: y6^5 = Q^2, the relation implied by
// the other displayed equations.
enum class Gr25Relation { Literal, Corrected };
std::vector<CriticalCandidate> gr25_closed_form_candidates(Rational lam, Gr25Relation rel);

}  // namespace gcfloer
