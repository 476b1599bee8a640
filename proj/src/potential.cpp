#include "gcfloer/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "gcfloer/errors.hpp"

namespace gcfloer {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    double w = std::remainder(a, 2 * kPi);
    if (w <= -kPi) w += 2 * kPi;
    return w;
}

cplx term_value(const LaurentTerm& t, const std::vector<cplx>& x, double T0) {
    cplx s = std::log(T0) * to_double(t.t_exp);
    for (size_t j = 0; j < x.size(); ++j)
        if (t.y_exp[j] != 0) s += static_cast<double>(t.y_exp[j]) * x[j];
    return t.coeff * std::exp(s);
}

std::vector<cplx> logs_of(const std::vector<cplx>& y) {
    std::vector<cplx> x(y.size());
    for (size_t j = 0; j < y.size(); ++j) {
        if (y[j] == cplx(0)) throw InvalidInput("y coordinate " + std::to_string(j + 1) + " is zero");
        x[j] = std::log(y[j]);
    }
    return x;
}

double inf_norm(const std::vector<cplx>& v) {
    double m = 0;
    for (auto z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

LaurentPoly build_potential(const GCPolytope& p, TermRule rule) {
    LaurentPoly po;
    po.labels = p.index.pairs;
    const int N = p.dimension();
    std::map<std::pair<Rational, std::vector<int>>, size_t> seen;
    for (const auto& q : p.inequalities) {
        if (rule == TermRule::Facet && !q.facet) continue;
        LaurentTerm t;
        t.y_exp.assign(N, 0);
        if (q.upper.constant())
            t.t_exp += q.upper.value;
        else
            t.y_exp[q.upper.var] += 1;
        if (q.lower.constant())
            t.t_exp -= q.lower.value;
        else
            t.y_exp[q.lower.var] -= 1;
        auto key = std::make_pair(t.t_exp, t.y_exp);
        if (auto it = seen.find(key); it != seen.end()) {
            po.terms[it->second].coeff += t.coeff;
            continue;
        }
        seen[key] = po.terms.size();
        po.terms.push_back(t);
    }
    return po;
}

LaurentPoly build_potential(const FlagShape& shape, const EigenProfile& profile, TermRule rule) {
    return build_potential(build_polytope(shape, profile), rule);
}

std::string to_string(const LaurentPoly& po) {
    std::ostringstream os;
    for (size_t k = 0; k < po.terms.size(); ++k) {
        const auto& t = po.terms[k];
        if (k) os << " + ";
        std::vector<std::string> parts;
        if (t.coeff != cplx(1.0)) {
            std::ostringstream c;
            c << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag() << "i)";
            parts.push_back(c.str());
        }
        if (t.t_exp != 0) parts.push_back("T^" + to_string(t.t_exp));
        for (size_t j = 0; j < t.y_exp.size(); ++j) {
            if (t.y_exp[j] == 0) continue;
            std::string s = "y" + std::to_string(j + 1);
            if (t.y_exp[j] != 1) s += "^" + std::to_string(t.y_exp[j]);
            parts.push_back(s);
        }
        if (parts.empty()) parts.push_back("1");
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    }
    return os.str();
}

cplx evaluate(const LaurentPoly& po, const std::vector<cplx>& y, double T0) {
    if (static_cast<int>(y.size()) != po.nvars()) throw InvalidInput("wrong number of y coordinates");
    return evaluate_log(po, logs_of(y), T0);
}

cplx evaluate_log(const LaurentPoly& po, const std::vector<cplx>& x, double T0) {
    if (!(T0 > 0 && T0 < 1)) throw InvalidInput("T0 must lie in (0, 1)");
    cplx s = 0;
    for (const auto& t : po.terms) s += term_value(t, x, T0);
    return s;
}

std::vector<LaurentPoly> log_gradient(const LaurentPoly& po) {
    std::vector<LaurentPoly> out(po.nvars());
    for (int j = 0; j < po.nvars(); ++j) {
        out[j].labels = po.labels;
        for (const auto& t : po.terms)
            if (t.y_exp[j] != 0) {
                LaurentTerm d = t;
                d.coeff *= static_cast<double>(t.y_exp[j]);
                out[j].terms.push_back(d);
            }
    }
    return out;
}

std::vector<cplx> log_gradient_at(const LaurentPoly& po, const std::vector<cplx>& x, double T0) {
    std::vector<cplx> g(po.nvars(), 0.0);
    for (const auto& t : po.terms) {
        cplx v = term_value(t, x, T0);
        for (int j = 0; j < po.nvars(); ++j)
            if (t.y_exp[j] != 0) g[j] += static_cast<double>(t.y_exp[j]) * v;
    }
    return g;
}

ComplexMatrix log_hessian_at(const LaurentPoly& po, const std::vector<cplx>& x, double T0) {
    const int N = po.nvars();
    ComplexMatrix h(N, N);
    for (const auto& t : po.terms) {
        cplx v = term_value(t, x, T0);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (t.y_exp[i] != 0 && t.y_exp[j] != 0) h(i, j) += static_cast<double>(t.y_exp[i] * t.y_exp[j]) * v;
    }
    return h;
}

void SolverConfig::validate() const {
    if (!(T0 > 0 && T0 < 1)) throw InvalidInput("T0 must lie in (0, 1)");
    if (!(newton_tol > 0)) throw InvalidInput("newton_tol must be positive");
    if (!(dedupe_tol > 0)) throw InvalidInput("dedupe_tol must be positive");
    if (starts < 1 || max_iters < 1) throw InvalidInput("starts and max_iters must be positive");
}

HessianCheck hessian_check_unchecked(const LaurentPoly& po, const std::vector<cplx>& x, double T0) {
    ComplexMatrix h = log_hessian_at(po, x, T0);
    HessianCheck out;
    out.det = determinant(h);
    ComplexMatrix n = h;
    for (int i = 0; i < n.rows(); ++i) {
        double r = 0;
        for (int j = 0; j < n.cols(); ++j) r += std::norm(n(i, j));
        r = std::sqrt(r);
        if (r == 0) return out;
        for (int j = 0; j < n.cols(); ++j) n(i, j) /= r;
    }
    out.normalized = std::abs(determinant(n));
    out.nondegenerate = out.normalized > 1e-10;
    return out;
}

HessianCheck hessian_nondegenerate(const LaurentPoly& po, const std::vector<cplx>& y, double T0) {
    auto x = logs_of(y);
    double r = inf_norm(log_gradient_at(po, x, T0));
    if (r > 1e-8) throw InvalidInput("not a critical point: log-gradient residual " + std::to_string(r));
    return hessian_check_unchecked(po, x, T0);
}

namespace {

std::optional<std::vector<cplx>> newton(const LaurentPoly& po, std::vector<cplx> x, const SolverConfig& cfg) {
    for (int it = 0; it < cfg.max_iters; ++it) {
        auto g = log_gradient_at(po, x, cfg.T0);
        double r = inf_norm(g);
        if (!std::isfinite(r)) return std::nullopt;
        if (r < cfg.newton_tol) return x;
        for (auto& v : g) v = -v;
        auto dx = solve_linear(log_hessian_at(po, x, cfg.T0), g);
        if (!dx) return std::nullopt;
        double step = inf_norm(*dx);
        if (!std::isfinite(step)) return std::nullopt;
        double scale = step > 2.0 ? 2.0 / step : 1.0;
        for (size_t j = 0; j < x.size(); ++j) {
            x[j] += scale * (*dx)[j];
            if (std::abs(x[j].real()) > 200) return std::nullopt;
        }
    }
    return std::nullopt;
}

bool same_point(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
    double scale = std::max(1.0, std::max(inf_norm(a), inf_norm(b)));
    for (size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j].real() - b[j].real()) > tol * scale) return false;
        if (std::abs(wrap_angle(a[j].imag() - b[j].imag())) > tol * scale) return false;
    }
    return true;
}

}  // namespace

std::vector<CriticalPoint> find_critical_points(const LaurentPoly& po, const SolverConfig& cfg) {
    cfg.validate();
    const int N = po.nvars();
    const double span = -3 * std::log(cfg.T0);
    std::vector<std::vector<cplx>> found;
    for (int s = 0; s < cfg.starts; ++s) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> mod(-span, span), arg(-kPi, kPi);
        std::vector<cplx> x0(N);
        for (auto& v : x0) {
            double re = mod(rng);
            v = cplx(re, arg(rng));
        }
        auto x = newton(po, x0, cfg);
        if (!x) continue;
        for (auto& v : *x) v = cplx(v.real(), wrap_angle(v.imag()));
        if (!hessian_check_unchecked(po, *x, cfg.T0).nondegenerate) continue;
        bool dup = false;
        for (const auto& f : found)
            if (same_point(f, *x, cfg.dedupe_tol)) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(*x);
    }
    std::vector<CriticalPoint> out;
    for (const auto& x : found) {
        CriticalPoint c;
        c.x = x;
        for (auto v : x) c.y.push_back(std::exp(v));
        c.residual = inf_norm(log_gradient_at(po, x, cfg.T0));
        c.value = evaluate_log(po, x, cfg.T0);
        c.hessian_det = hessian_check_unchecked(po, x, cfg.T0).det;
        out.push_back(std::move(c));
    }
    // canonical order: by critical value, then by y
    auto key = [](const CriticalPoint& c) {
        std::vector<double> k{std::round(c.value.real() * 1e8), std::round(c.value.imag() * 1e8)};
        for (auto y : c.y) {
            k.push_back(std::round(y.real() * 1e8));
            k.push_back(std::round(y.imag() * 1e8));
        }
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

CriticalCandidate CriticalCandidate::monomial(std::string label, std::vector<MonomialValue> v) {
    CriticalCandidate c;
    c.label = std::move(label);
    c.exact = v;
    c.at = [v](double T0) {
        std::vector<cplx> y;
        for (const auto& m : v) y.push_back(m.c * std::pow(T0, to_double(m.e)));
        return y;
    };
    return c;
}

CandidateReport verify_candidate(const LaurentPoly& po, const GCPolytope& p, const CriticalCandidate& cand,
                                 const std::vector<double>& T0_list) {
    if (T0_list.size() < 2) throw InvalidInput("verify_candidate needs two T0 values");
    CandidateReport rep;
    for (double T0 : T0_list) {
        auto x = logs_of(cand.at(T0));
        rep.max_residual = std::max(rep.max_residual, inf_norm(log_gradient_at(po, x, T0)));
    }
    const double a = T0_list[0], b = T0_list[1];
    const double la = std::log(a), lb = std::log(b);
    if (cand.exact) {
        for (const auto& m : *cand.exact) rep.valuations.push_back(m.e);
        rep.valuations_exact = true;
    } else {
        auto ya = cand.at(a), yb = cand.at(b);
        for (size_t j = 0; j < ya.size(); ++j)
            rep.valuations.push_back(rational_approx(std::log(std::abs(ya[j]) / std::abs(yb[j])) / (la - lb), 1000));
    }
    GCPoint u;
    for (const auto& v : rep.valuations) u.u.push_back(to_double(v));
    auto c = contains(p, u, 1e-9);
    rep.interior = c.inside && c.active.empty();

    cplx wa = evaluate(po, cand.at(a), a), wb = evaluate(po, cand.at(b), b);
    rep.value_exponent = std::log(std::abs(wa) / std::abs(wb)) / (la - lb);
    rep.value_coeff = wa / std::pow(a, rep.value_exponent);
    return rep;
}

std::vector<CriticalCandidate> fl3_closed_form_candidates(double l1, double l2) {
    std::vector<CriticalCandidate> out;
    for (int k = 0; k < 3; ++k)
        for (int sign : {1, -1}) {
            CriticalCandidate c;
            c.label = "y3 branch " + std::to_string(k) + (sign > 0 ? ", y2 +" : ", y2 -");
            c.at = [=](double T0) {
                // profile (l1, 0, -l2): Q1 = T^l1, Q2 = 1, Q3 = T^-l2
                const double Q1 = std::pow(T0, l1), Q2 = 1.0, Q3 = std::pow(T0, -l2);
                cplx y3 = std::polar(std::cbrt(Q1 * Q2 * Q3), 2 * kPi * k / 3);
                cplx y2 = static_cast<double>(sign) * std::sqrt(Q3 * (y3 + Q2));
                cplx y1 = y3 * y3 / y2;
                return std::vector<cplx>{y1, y2, y3};
            };
            out.push_back(c);
        }
    return out;
}

std::vector<CriticalCandidate> gr24_closed_form_candidates(Rational lam) {
    // Q = T^{2 lam}
    std::vector<CriticalCandidate> out;
    const cplx I(0, 1);
    for (int i = 0; i < 4; ++i) {
        // zeta = i^i Q^{1/4}: y1 = y4 = zeta^2, y2 = zeta^3 / sqrt2, y3 = sqrt2 zeta
        cplx sgn = std::pow(-1.0, i), ii = std::pow(I, i);
        out.push_back(CriticalCandidate::monomial(
            "i=" + std::to_string(i), {{sgn, lam},
                                       {ii * ii * ii * std::pow(0.25, 0.25), lam * Rational(3, 2)},
                                       {ii * std::pow(4.0, 0.25), lam / 2},
                                       {sgn, lam}}));
    }
    return out;
}

std::vector<CriticalCandidate> gr25_closed_form_candidates(Rational lam, Gr25Relation rel) {
    std::vector<CriticalCandidate> out;
    const double lamd = to_double(lam);
    for (int j = 0; j < 5; ++j)
        for (int sign : {1, -1}) {
            std::string label = "zeta^" + std::to_string(j) + (sign > 0 ? ", +" : ", -");
            if (rel == Gr25Relation::Corrected) {
                // y6 = zeta^j Q^{2/5}, y4 = Q(-1 +- sqrt5)/(2 y6)
                cplx z = std::polar(1.0, 2 * kPi * j / 5);
                cplx r = (-1.0 + sign * std::sqrt(5.0)) / 2.0;
                cplx c6 = z, c4 = r / z, c5 = c6 * c6 / c4;
                out.push_back(CriticalCandidate::monomial(label, {{1.0 / c6, lam * Rational(3, 5)},
                                                                  {1.0 / c5, lam * Rational(4, 5)},
                                                                  {1.0 / c4, lam * Rational(2, 5)},
                                                                  {c4, lam * Rational(3, 5)},
                                                                  {c5, lam * Rational(1, 5)},
                                                                  {c6, lam * Rational(2, 5)}}));
                continue;
            }
            CriticalCandidate c;
            c.label = label;
            c.at = [=](double T0) {
                const double Q = std::pow(T0, lamd);
                cplx y6 = std::polar(Q, 2 * kPi * j / 5);  // y6^5 = Q^5
                // Q y4 = y6 (y6^3 - y4^2)  <=>  y6 y4^2 + Q y4 - y6^4 = 0
                cplx disc = std::sqrt(Q * Q + 4.0 * std::pow(y6, 5));
                cplx y4 = (-Q + static_cast<double>(sign) * disc) / (2.0 * y6);
                cplx y5 = y6 * y6 / y4;
                return std::vector<cplx>{Q / y6, Q / y5, Q / y4, y4, y5, y6};
            };
            out.push_back(c);
        }
    return out;
}

}  // namespace gcfloer
