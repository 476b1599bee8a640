#include "gcfloer/floer.hpp"

#include <cmath>
#include <numbers>

#include "gcfloer/errors.hpp"

namespace gcfloer {

using std::numbers::pi;

std::string to_string(DiskLabel l) { return l == DiskLabel::Beta1 ? "beta1" : "beta2"; }

DiskClass fl3_disk_class(DiskLabel label, Rational l1, Rational l2) {
    if (!(l1 > Rational(0) && l2 > Rational(0))) throw InvalidInput("Fl(3) disk classes need l1, l2 > 0");
    return {label, label == DiskLabel::Beta1 ? l1 : l2, 4};
}

DiskClass gr24_disk_class(DiskLabel label, Rational lam, Rational t) {
    if (!(-lam < t && t < lam)) throw InvalidInput("Gr(2,4) disk classes need -lambda < t < lambda");
    return {label, label == DiskLabel::Beta1 ? lam + t : lam - t, 4};
}

namespace {

cplx poly_eval(const std::vector<cplx>& p, cplx z) {
    cplx s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * z + *it;
    return s;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<cplx> poly_sub(std::vector<cplx> a, const std::vector<cplx>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// p / (z - root), remainder discarded
std::vector<cplx> poly_deflate(const std::vector<cplx>& p, cplx root) {
    if (p.size() <= 1) return {0.0};
    std::vector<cplx> q(p.size() - 1);
    cplx carry = 0;
    for (size_t i = p.size() - 1; i >= 1; --i) {
        carry = p[i] + carry * root;
        q[i - 1] = carry;
    }
    return q;
}

cplx ipow(cplx b, int e) {
    cplx r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

double norm2(const std::vector<cplx>& v) {
    double s = 0;
    for (auto x : v) s += std::norm(x);
    return s;
}

void require_unit(double n2, const char* what) {
    if (std::abs(n2 - 1.0) > 1e-12) throw InvalidInput(std::string(what) + " must be a unit vector");
}

}  // namespace

std::vector<cplx> PolyCurve::at(cplx z) const {
    std::vector<cplx> out;
    for (const auto& p : coords) out.push_back(poly_eval(p, z));
    return out;
}

std::vector<cplx> PolyCurve::derivative_at(cplx z) const {
    std::vector<cplx> out;
    for (const auto& p : coords) {
        std::vector<cplx> d;
        for (size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * p[i]);
        out.push_back(poly_eval(d, z));
    }
    return out;
}

// ---- Fl(3) ----

DiskMapFl3 fl3_disk(std::array<cplx, 2> a, int sign, double l1, double l2) {
    if (!(l1 > 0 && l2 > 0)) throw InvalidInput("fl3_disk needs l1, l2 > 0");
    if (sign != 1 && sign != -1) throw InvalidInput("fl3_disk sign must be +1 or -1");
    require_unit(std::norm(a[0]) + std::norm(a[1]), "a");
    if (std::abs(a[0] - 1.0) < 1e-12) throw InvalidInput("a1 = 1 is the excluded chart");
    const cplx rho = -(a[0] - 1.0) / (std::conj(a[0]) - 1.0);
    cplx c = std::sqrt(rho);
    if (c.imag() * sign < 0) c = -c;
    return {a, c, sign, l1, l2};
}

std::array<PolyCurve, 2> DiskMapFl3::factors() const {
    const double r = std::sqrt(l1 / l2);
    const cplx cb = std::conj(c);
    PolyCurve z{{{a[0], c}, {a[1]}, {r, r * c}}};
    PolyCurve w{{{std::conj(a[0]), cb}, {std::conj(a[1])}, {-1.0 / r, -cb / r}}};
    return {z, w};
}

Fl3Point DiskMapFl3::operator()(cplx z) const {
    auto f = factors();
    auto zz = f[0].at(z), ww = f[1].at(z);
    return {{zz[0], zz[1], zz[2]}, {ww[0], ww[1], ww[2]}};
}

Fl3Point DiskMapFl3::at_infinity() const {
    const double r = std::sqrt(l1 / l2);
    return {{1.0, 0.0, r}, {1.0, 0.0, -1.0 / r}};
}

cplx DiskMapFl3::plucker_residual(cplx z) const {
    auto p = (*this)(z);
    return p.z[0] * p.w[0] + p.z[1] * p.w[1] + p.z[2] * p.w[2];
}

// ---- Gr(n, 2n) ----

DiskMapGr gr_disk(int n, std::vector<cplx> a, cplx c, double lam, double t) {
    if (n < 1) throw InvalidInput("gr_disk needs n >= 1");
    if (static_cast<int>(a.size()) != n) throw InvalidInput("gr_disk: a must have n entries");
    const double na = norm2(a);
    if (!(na > 0)) throw InvalidInput("gr_disk: a must be nonzero");
    for (auto& v : a) v /= std::sqrt(na);
    if (std::abs(std::abs(c) - 1.0) > 1e-12) throw InvalidInput("gr_disk needs |c| = 1");
    if (std::abs(c.imag()) < 1e-14) throw InvalidInput("gr_disk needs non-real c");
    if (!(lam > 0 && std::abs(t) < lam)) throw InvalidInput("gr_disk needs -lambda < t < lambda");
    return {n, std::move(a), c, lam, t};
}

double DiskMapGr::scale() const { return std::sqrt((lam - t) / (lam + t)); }

ComplexMatrix DiskMapGr::operator()(cplx z) const {
    const cplx f = (c - std::conj(c)) / (z - std::conj(c));
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = scale() * ((i == j ? 1.0 : 0.0) - f * a[i] * std::conj(a[j]));
    return m;
}

ComplexMatrix DiskMapGr::at_infinity() const { return scale() * ComplexMatrix::identity(n); }

std::array<cplx, 6> plucker_24(const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 2) throw InvalidInput("plucker_24 needs a 4 x 2 matrix");
    static constexpr int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::array<cplx, 6> out;
    for (int p = 0; p < 6; ++p) {
        int i = idx[p][0], j = idx[p][1];
        out[p] = m(i, 0) * m(j, 1) - m(j, 0) * m(i, 1);
    }
    return out;
}

PolyCurve DiskMapGr::plucker_curve() const {
    if (n != 2) throw InvalidInput("plucker_curve is implemented for n = 2");
    // (z - cbar) [I; F(z)] has entries linear in z
    const cplx cb = std::conj(c);
    const double r = scale();
    std::vector<std::vector<std::vector<cplx>>> m(4, std::vector<std::vector<cplx>>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double d = i == j ? 1.0 : 0.0;
            m[i][j] = {-cb * d, d};
            m[2 + i][j] = {r * (-cb * d - (c - cb) * a[i] * std::conj(a[j])), r * d};
        }
    static constexpr int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    PolyCurve out;
    for (const auto& [i, j] : idx) {
        auto minor = poly_sub(poly_mul(m[i][0], m[j][1]), poly_mul(m[j][0], m[i][1]));
        out.coords.push_back(poly_deflate(minor, cb));
    }
    return out;
}

int det_winding(const DiskMapGr& d, int samples) {
    // x = tan(phi/2) sweeps R once as phi runs over (-pi, pi)
    auto value = [&](double phi) {
        if (std::abs(std::abs(phi) - pi) < 1e-15) return determinant(d.at_infinity()) / std::pow(d.scale(), d.n);
        return determinant(d(std::tan(phi / 2))) / std::pow(d.scale(), d.n);
    };
    double total = 0;
    cplx prev = value(-pi);
    for (int s = 1; s <= samples; ++s) {
        cplx cur = value(-pi + 2 * pi * s / samples);
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2 * pi)));
}

// ---- areas ----

namespace {

// (1/pi) (|f|^2 |f'|^2 - |<f, f'>|^2) / |f|^4, with the numerator in Lagrange form
double fs_density(const PolyCurve& c, cplx z) {
    auto f = c.at(z), g = c.derivative_at(z);
    double num = 0;
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j) num += std::norm(f[i] * g[j] - f[j] * g[i]);
    double n2 = norm2(f);
    return num / (pi * n2 * n2);
}

double area_on_grid(const std::vector<PolyCurve>& factors, const std::vector<double>& weights, cplx z0, int nr,
                    int na) {
    const auto gr = gauss_legendre(nr), ga = gauss_legendre(na);
    const cplx z0b = std::conj(z0);
    const double jac0 = std::norm(z0 - z0b);
    double s = 0;
    for (int p = 0; p < nr; ++p) {
        const double rho = 0.5 * (gr.nodes[p] + 1), wr = 0.5 * gr.weights[p];
        for (int q = 0; q < na; ++q) {
            const double phi = pi * (ga.nodes[q] + 1), wa = pi * ga.weights[q];
            const cplx w = std::polar(rho, phi);
            // w = (z - z0)/(z - z0bar)
            const cplx z = (z0 - z0b * w) / (1.0 - w);
            const double jac = jac0 / std::norm((1.0 - w) * (1.0 - w));
            double dens = 0;
            for (size_t k = 0; k < factors.size(); ++k) dens += weights[k] * fs_density(factors[k], z);
            s += wr * wa * rho * dens * jac;
        }
    }
    return s;
}

}  // namespace

double disk_area(const std::vector<PolyCurve>& factors, const std::vector<double>& weights, const AreaOptions& opt) {
    if (factors.size() != weights.size()) throw InvalidInput("disk_area: one weight per factor");
    if (!(opt.center.imag() > 0)) throw InvalidInput("disk_area: center must lie in the upper half-plane");
    if (opt.radial < 8 || opt.angular < 8) throw InvalidInput("disk_area: grid too small");
    const double fine = area_on_grid(factors, weights, opt.center, opt.radial, opt.angular);
    const double coarse = area_on_grid(factors, weights, opt.center, opt.radial * 3 / 4, opt.angular * 3 / 4);
    if (!std::isfinite(fine) || std::abs(fine - coarse) > opt.rel_tol * std::max(1.0, std::abs(fine)))
        throw NonConvergence("disk_area: quadrature grids disagree", fine);
    return fine;
}

namespace {

// A line f0 + z f1 has FS density peaked at z* = -<f1, f0>/|f1|^2 with
// width |f0 ^ f1| / |f1|^2; center on the matching point of the upper half-plane.
cplx line_center(const PolyCurve& c) {
    std::vector<cplx> f0, f1;
    for (const auto& p : c.coords) {
        f0.push_back(p.empty() ? 0.0 : p[0]);
        f1.push_back(p.size() > 1 ? p[1] : 0.0);
    }
    cplx ip = 0;
    for (size_t i = 0; i < f0.size(); ++i) ip += std::conj(f1[i]) * f0[i];
    const double n1 = norm2(f1);
    if (!(n1 > 0)) return {0, 1};
    const cplx zs = -ip / n1;
    const double width = std::sqrt(std::max(0.0, norm2(f0) * n1 - std::norm(ip))) / n1;
    return {zs.real(), std::max(std::hypot(zs.imag(), width), 1e-3)};
}

AreaOptions centered(AreaOptions opt, const std::vector<PolyCurve>& factors) {
    cplx s = 0;
    for (const auto& f : factors) s += line_center(f);
    opt.center = s / static_cast<double>(factors.size());
    return opt;
}

}  // namespace

double disk_area(const DiskMapFl3& d, const AreaOptions& opt) {
    auto f = d.factors();
    return disk_area({f[0], f[1]}, {d.l1, d.l2}, centered(opt, {f[0], f[1]}));
}

double disk_area(const DiskMapGr& d, const AreaOptions& opt) {
    auto pc = d.plucker_curve();
    return disk_area({pc}, {2 * d.lam}, centered(opt, {pc}));
}

// ---- involutions ----

Fl3Point involution_fl3(const Fl3Point& p, double l1, double l2) {
    if (!(l1 > 0 && l2 > 0)) throw InvalidInput("involution_fl3 needs l1, l2 > 0");
    return {{std::conj(p.w[0]), std::conj(p.w[1]), -(l1 / l2) * std::conj(p.w[2])},
            {std::conj(p.z[0]), std::conj(p.z[1]), -(l2 / l1) * std::conj(p.z[2])}};
}

std::array<cplx, 6> involution_gr24(double t, const std::array<cplx, 6>& z, double lam) {
    if (!(lam > 0 && std::abs(t) < lam)) throw InvalidInput("involution_gr24 needs -lambda < t < lambda");
    const double q = (lam + t) / (lam - t);
    return {q * std::conj(z[5]), std::conj(z[4]), -std::conj(z[3]), -std::conj(z[2]), std::conj(z[1]),
            std::conj(z[0]) / q};
}

double projective_distance(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    if (u.size() != v.size()) throw InvalidInput("projective_distance: size mismatch");
    cplx ip = 0;
    for (size_t i = 0; i < u.size(); ++i) ip += std::conj(u[i]) * v[i];
    const double nu = norm2(u), nv = norm2(v);
    if (!(nu > 0 && nv > 0)) throw InvalidInput("homogeneous coordinates must be nonzero");
    return std::max(0.0, 1.0 - std::norm(ip) / (nu * nv));
}

double projective_distance(const Fl3Point& p, const Fl3Point& q) {
    auto v = [](const std::array<cplx, 3>& a) { return std::vector<cplx>(a.begin(), a.end()); };
    return projective_distance(v(p.z), v(q.z)) + projective_distance(v(p.w), v(q.w));
}

Fl3Point fl3_plucker(const HermitianMatrix& x) {
    if (x.rows() != 3 || x.cols() != 3) throw InvalidInput("fl3_plucker needs a 3 x 3 matrix");
    require_hermitian(x);
    auto es = hermitian_eigensystem(x);
    const auto& v = es.vectors;
    auto minor = [&](int i, int j) { return v(i, 0) * v(j, 1) - v(j, 0) * v(i, 1); };
    return {{v(0, 0), v(1, 0), v(2, 0)}, {minor(1, 2), minor(2, 0), minor(0, 1)}};
}

std::array<cplx, 6> gr24_plucker(const HermitianMatrix& x) {
    if (x.rows() != 4 || x.cols() != 4) throw InvalidInput("gr24_plucker needs a 4 x 4 matrix");
    require_hermitian(x);
    auto es = hermitian_eigensystem(x);
    ComplexMatrix top(4, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) top(i, j) = es.vectors(i, j);
    return plucker_24(top);
}

// ---- disk-count integrals ----

cplx open_gw_integral(int k, int l, cplx x, cplx y, double tol) {
    if (k < 0 || l < 0) throw InvalidInput("open_gw_integral needs k, l >= 0");
    const double fk = std::tgamma(k + 1.0), fl = std::tgamma(l + 1.0);
    return integrate_periodic(
        [&](double th) {
            const double s = th / (2 * pi);
            return ipow(s * x, k) / fk * ipow((1 - s) * y, l) / fl * (1 - std::cos(th));
        },
        tol);
}

SeriesSum open_gw_series(cplx x, cplx y, int K, double tol) {
    if (K < 0) throw InvalidInput("open_gw_series needs K >= 0");
    SeriesSum out{0.0, 0.0};
    for (int total = 0; total <= K; ++total)
        for (int k = 0; k <= total; ++k) out.value += open_gw_integral(k, total - k, x, y, tol);
    const double m = std::max(std::abs(x), std::abs(y));
    out.tail_bound = std::exp((K + 1) * std::log(std::max(m, 1e-300)) - std::lgamma(K + 2.0));
    return out;
}

// ---- Floer differentials ----

BoundingCochain::BoundingCochain(cplx v) {
    double im = std::remainder(v.imag(), 2 * pi);  // in [-pi, pi]
    if (im <= -pi) im += 2 * pi;
    x = {v.real(), im};
}

FloerComplex m1_fl3(Rational l1, Rational l2) {
    if (!(l1 > Rational(0) && l2 > Rational(0))) throw InvalidInput("m1_fl3 needs l1, l2 > 0");
    FloerComplex out{{"e0", "e3"}, NovikovMatrix(2, 2)};
    out.d(0, 1) = NovikovSeries::monomial(1.0, l1) + NovikovSeries::monomial(1.0, l2);
    return out;
}

FloerComplex m1b_gr24(Rational lam, Rational t, const BoundingCochain& b, CoefficientSource src) {
    if (!(lam > Rational(0))) throw InvalidInput("m1b_gr24 needs lambda > 0");
    if (!(-lam < t && t < lam)) throw InvalidInput("m1b_gr24 needs -lambda < t < lambda");
    cplx plus = std::exp(b.x), minus = std::exp(-b.x);
    if (src == CoefficientSource::Series) {
        plus = open_gw_series(b.x, b.x).value;
        minus = open_gw_series(-b.x, -b.x).value;
    }
    NovikovSeries coeff = NovikovSeries::monomial(plus, lam + t) + NovikovSeries::monomial(minus, lam - t);
    FloerComplex out{{"e0", "e1", "e3", "e1e3"}, NovikovMatrix(4, 4)};
    out.d(0, 2) = coeff;
    out.d(1, 3) = coeff;
    return out;
}

PairCoefficients pair_coefficients(int K) {
    const cplx x{0, pi / 2};
    // one integral per class; both classes have area lambda at t = 0
    const cplx per_class = open_gw_series(x, -x, K).value;
    return {2.0 * per_class, 4.0 * per_class};
}

FloerComplex delta_pair_gr24(Rational lam, int K) {
    if (!(lam > Rational(0))) throw InvalidInput("delta_pair_gr24 needs lambda > 0");
    const auto pc = pair_coefficients(K);
    FloerComplex out{{"e0", "e1", "e3", "e1e3"}, NovikovMatrix(4, 4)};
    out.d(0, 2) = NovikovSeries::monomial(pc.e3, lam);
    out.d(1, 3) = NovikovSeries::monomial(pc.e1e3, lam);
    return out;
}

double displacement_energy_bound(double lam, double t) {
    if (!(lam > 0)) throw InvalidInput("displacement_energy_bound needs lambda > 0");
    if (std::abs(t) > lam) throw InvalidInput("displacement_energy_bound needs |t| <= lambda");
    if (t == 0) return lam;
    return 2 * lam / pi * std::atan(std::sqrt((lam * lam - t * t) / (t * t)));
}

}  // namespace gcfloer
