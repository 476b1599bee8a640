#pragma once

#include <array>
#include <string>
#include <vector>

#include "gcfloer/numerics.hpp"
#include "gcfloer/rational.hpp"

namespace gcfloer {

// Partial flag manifold F(n_1, ..., n_r, n).
struct FlagShape {
    std::vector<int> steps;
    int n = 0;

    void validate() const;
    int dimension() const;  // complex dimension N
};

// lambda_1 >= ... >= lambda_n, constant on the blocks of the shape.
struct EigenProfile {
    std::vector<Rational> values;

    std::vector<double> as_doubles() const;
};

void require_profile_matches(const FlagShape& shape, const EigenProfile& profile);

// (i, k) refers to lambda_i^{(k)}, the i-th largest eigenvalue of the
// upper-left k x k block.
struct GCIndex {
    int i = 0;
    int k = 0;
    bool operator==(const GCIndex&) const = default;
};

struct GCIndexSet {
    std::vector<GCIndex> pairs;  // level k descending, then i ascending

    int size() const { return static_cast<int>(pairs.size()); }
    int position(int i, int k) const;  // -1 for a constant entry
};

GCIndexSet index_set(const FlagShape& shape, const EigenProfile& profile);

struct GCPoint {
    std::vector<double> u;
};

// One slot of the pattern: a coordinate of GCPoint or a constant.
struct GCEntry {
    int i = 0;
    int k = 0;
    int var = -1;  // index into GCPoint::u, or -1
    Rational value{0};

    bool constant() const { return var < 0; }
};

// upper >= lower
struct GCInequality {
    GCEntry upper;
    GCEntry lower;
    bool facet = false;
};

struct GCPolytope {
    FlagShape shape;
    EigenProfile profile;
    GCIndexSet index;
    std::vector<GCInequality> inequalities;

    int facet_count() const;
    int dimension() const { return index.size(); }
};

GCPolytope build_polytope(const FlagShape& shape, const EigenProfile& profile);

// Linear form sum coeffs[j]*u_j >= rhs for one inequality.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool strict = false;
};
LinearConstraint as_linear(const GCInequality& q, int dim);

// Exact feasibility of a system of (possibly strict) linear inequalities by
// Fourier-Motzkin elimination.
bool fm_feasible(std::vector<LinearConstraint> system, int dim);

struct Containment {
    bool inside = false;
    std::vector<int> active;  // inequality indices tight within tol
};

Containment contains(const GCPolytope& p, const GCPoint& u, double tol);

// Value of lambda_i^{(k)} at u (k = n gives the profile).
double pattern_value(const GCPolytope& p, const GCPoint& u, int i, int k);

// lambda_j^{(m)} = lambda_{j+1}^{(m)}; forces lambda_{j+1}^{(m+1)} and
// lambda_j^{(m-1)} to the same value.
struct Diamond {
    int level = 0;
    int pos = 0;
    bool operator==(const Diamond&) const = default;
};

std::vector<Diamond> detect_diamonds(const FlagShape& shape, const EigenProfile& profile, const GCPoint& u,
                                     double tol);

GCPoint gc_map(const HermitianMatrix& x, const FlagShape& shape, const EigenProfile& profile);

enum class SpaceId { Fl3, Gr24, Gr25 };
std::string to_string(SpaceId s);
SpaceId parse_space(const std::string& s);

struct Space {
    FlagShape shape;
    EigenProfile profile;
};

// diag(l1, 0, -l2)
Space fl3_space(Rational l1, Rational l2);
// diag(2 lam, 2 lam, 0, 0); the profile used for the potential
Space gr24_space(Rational lam);
// diag(lam, lam, -lam, -lam); the profile used for the U(2) fibers
Space gr24_fiber_space(Rational lam);
// diag(lam, lam, 0, 0, 0)
Space gr25_space(Rational lam);

enum class FiberKind { Torus, S3, U2, U2xT2, UnknownNonsmooth };
std::string to_string(FiberKind k);

struct FiberDescriptor {
    FiberKind kind = FiberKind::Torus;
    int real_dimension = 0;
    bool lagrangian = false;
    std::vector<std::string> annotations;
};

FiberDescriptor classify_fiber(SpaceId space, const GCPolytope& p, const GCPoint& u, double tol);

HermitianMatrix fl3_s3_point(double l1, double l2, std::array<cplx, 2> a);
HermitianMatrix gr2n_un_point(int n, double lam, double t, const ComplexMatrix& A);
// requires lam > s1 > s2 > t > 0
HermitianMatrix gr25_L1_point(double lam, double s1, double s2, double t, double th1, double th2,
                              const ComplexMatrix& B);
// requires 0 < s1 < s2 < t < lam; the reversal-conjugate of an L1 point
HermitianMatrix gr25_L2_point(double lam, double s1, double s2, double t, double th1, double th2,
                              const ComplexMatrix& B);

// Reversal permutation matrix of size n.
ComplexMatrix reversal(int n);

}  // namespace gcfloer
