#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gcfloer/novikov.hpp"
#include "gcfloer/numerics.hpp"
#include "gcfloer/rational.hpp"

namespace gcfloer {

enum class DiskLabel { Beta1, Beta2 };
std::string to_string(DiskLabel l);

struct DiskClass {
    DiskLabel label = DiskLabel::Beta1;
    Rational area;
    int maslov = 4;
};

// beta_i has area lambda_i
DiskClass fl3_disk_class(DiskLabel label, Rational l1, Rational l2);
// beta_1 has area lambda + t, beta_2 has lambda - t
DiskClass gr24_disk_class(DiskLabel label, Rational lam, Rational t);

// ([Z1:Z2:Z3], [Z23:Z31:Z12]) in P^2 x P^2
struct Fl3Point {
    std::array<cplx, 3> z;
    std::array<cplx, 3> w;
};

// A vector of polynomials in z (ascending coefficients), one per
// homogeneous coordinate.
struct PolyCurve {
    std::vector<std::vector<cplx>> coords;

    std::vector<cplx> at(cplx z) const;
    std::vector<cplx> derivative_at(cplx z) const;
};

// Bidegree (1,1) curve through w(infinity) and w(0) = ([a1:a2:r], [a1bar:a2bar:-1/r]),
// r = sqrt(l1/l2). The disk is the restriction to the upper half-plane.
struct DiskMapFl3 {
    std::array<cplx, 2> a;
    cplx c;
    int sign = 1;  // sign of Im c
    double l1 = 1, l2 = 1;

    Fl3Point operator()(cplx z) const;
    Fl3Point at_infinity() const;
    DiskLabel label() const { return sign > 0 ? DiskLabel::Beta1 : DiskLabel::Beta2; }
    // Z1 W1 + Z2 W2 + Z3 W3
    cplx plucker_residual(cplx z) const;
    std::array<PolyCurve, 2> factors() const;
};

DiskMapFl3 fl3_disk(std::array<cplx, 2> a, int sign, double l1 = 1, double l2 = 1);

// F(z) = r (I - (c - cbar)/(z - cbar) a a^*), r = sqrt((lam - t)/(lam + t)).
struct DiskMapGr {
    int n = 2;
    std::vector<cplx> a;
    cplx c;
    double lam = 1, t = 0;

    ComplexMatrix operator()(cplx z) const;
    ComplexMatrix at_infinity() const;
    double scale() const;  // r
    DiskLabel label() const { return c.imag() < 0 ? DiskLabel::Beta1 : DiskLabel::Beta2; }
    // Plucker coordinates of [I; F(z)] for n = 2, divided by the common
    // linear factor; order Z12, Z13, Z14, Z23, Z24, Z34.
    PolyCurve plucker_curve() const;
};

DiskMapGr gr_disk(int n, std::vector<cplx> a, cplx c, double lam, double t);

// Plucker coordinates of the column span of a 4 x 2 matrix.
std::array<cplx, 6> plucker_24(const ComplexMatrix& m);

// Winding number of det(F(x)/r) along R u {infinity}, x increasing.
int det_winding(const DiskMapGr& d, int samples = 4000);

struct AreaOptions {
    int radial = 64;
    int angular = 64;
    double rel_tol = 1e-7;  // agreement demanded between the grid and a coarser one
    cplx center{0, 1};      // point of the upper half-plane sent to the disk center
};

// Integral over the upper half-plane of sum_j weight_j * f_j^* omega_FS,
// omega_FS normalized so a line has area 1. Throws NonConvergence when the
// default grid and a 3/4-size grid disagree. The map overloads choose the
// center from where the pulled-back density peaks.
double disk_area(const std::vector<PolyCurve>& factors, const std::vector<double>& weights,
                 const AreaOptions& opt = {});
double disk_area(const DiskMapFl3& d, const AreaOptions& opt = {});
// Uses omega = 2 lam omega_FS on P^5; n = 2 only.
double disk_area(const DiskMapGr& d, const AreaOptions& opt = {});

Fl3Point involution_fl3(const Fl3Point& p, double l1, double l2);
std::array<cplx, 6> involution_gr24(double t, const std::array<cplx, 6>& z, double lam);

// Projective distance: 1 - |<u,v>|^2 / (|u|^2 |v|^2), zero iff u ~ v.
double projective_distance(const std::vector<cplx>& u, const std::vector<cplx>& v);
double projective_distance(const Fl3Point& p, const Fl3Point& q);

// Plucker images of orbit points: top eigenvector and the wedge of the top two.
Fl3Point fl3_plucker(const HermitianMatrix& x);
// Span of the two top eigenvectors of a point of the (lam,lam,-lam,-lam) orbit.
std::array<cplx, 6> gr24_plucker(const HermitianMatrix& x);

// int_0^{2pi} (1/k!)(theta x/2pi)^k (1/l!)((1 - theta/2pi) y)^l (1 - cos theta) dtheta/2pi
cplx open_gw_integral(int k, int l, cplx x, cplx y, double tol = 1e-14);
inline cplx open_gw_integral(int k, int l, cplx x, double tol = 1e-14) { return open_gw_integral(k, l, x, x, tol); }

struct SeriesSum {
    cplx value;
    double tail_bound = 0;  // max(|x|,|y|)^(K+1) / (K+1)!
};
// sum over k + l <= K
SeriesSum open_gw_series(cplx x, cplx y, int K = 40, double tol = 1e-14);

struct BoundingCochain {
    cplx x;  // coefficient of e1, imaginary part in (-pi, pi]

    explicit BoundingCochain(cplx v = 0);
};

// Floer differentials; column j is the image of basis element j.
struct FloerComplex {
    std::vector<std::string> basis;
    NovikovMatrix d{0, 0};
};

// basis {e0, e3}; e3 -> (T^l1 + T^l2) e0
FloerComplex m1_fl3(Rational l1, Rational l2);

enum class CoefficientSource { ClosedForm, Series };
// basis {e0, e1, e3, e1e3}; e3 -> (e^x T^{lam+t} + e^{-x} T^{lam-t}) e0,
// e1e3 -> the same coefficient times e1.
FloerComplex m1b_gr24(Rational lam, Rational t, const BoundingCochain& b,
                      CoefficientSource src = CoefficientSource::ClosedForm);

struct PairCoefficients {
    cplx e3;    // 16/(3 pi) from the series
    cplx e1e3;  // twice e3
};
PairCoefficients pair_coefficients(int K = 40);
// b = i pi/2 e1 against -b at t = 0.
FloerComplex delta_pair_gr24(Rational lam, int K = 40);

// (2 lam/pi) arctan sqrt((lam^2 - t^2)/t^2); h(0) = lam.
double displacement_energy_bound(double lam, double t);

}  // namespace gcfloer
