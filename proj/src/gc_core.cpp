#include "gcfloer/gc_core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "gcfloer/errors.hpp"

namespace gcfloer {

void FlagShape::validate() const {
    if (steps.empty()) throw InvalidInput("flag shape needs at least one step");
    int prev = 0;
    for (int s : steps) {
        if (s <= prev) throw InvalidInput("flag steps must be strictly increasing and positive");
        prev = s;
    }
    if (prev >= n) throw InvalidInput("last flag step must be smaller than the ambient dimension");
    if (n > 8) throw InvalidInput("ambient dimension above 8 is not supported");
}

int FlagShape::dimension() const {
    validate();
    int N = 0, prev = 0;
    for (int s : steps) {
        N += (s - prev) * (n - s);
        prev = s;
    }
    return N;
}

std::vector<double> EigenProfile::as_doubles() const {
    std::vector<double> d;
    for (const auto& v : values) d.push_back(to_double(v));
    return d;
}

void require_profile_matches(const FlagShape& shape, const EigenProfile& profile) {
    shape.validate();
    if (static_cast<int>(profile.values.size()) != shape.n)
        throw InvalidInput("profile length does not match the ambient dimension");
    std::vector<bool> drop(shape.n, false);
    for (int s : shape.steps) drop[s - 1] = true;
    for (int i = 0; i + 1 < shape.n; ++i) {
        const auto& a = profile.values[i];
        const auto& b = profile.values[i + 1];
        if (drop[i] && !(a > b)) {
            std::ostringstream os;
            os << "profile must drop strictly after position " << i + 1;
            throw InvalidInput(os.str());
        }
        if (!drop[i] && a != b) {
            std::ostringstream os;
            os << "profile must be constant across positions " << i + 1 << " and " << i + 2;
            throw InvalidInput(os.str());
        }
    }
}

int GCIndexSet::position(int i, int k) const {
    for (int p = 0; p < size(); ++p)
        if (pairs[p].i == i && pairs[p].k == k) return p;
    return -1;
}

GCIndexSet index_set(const FlagShape& shape, const EigenProfile& profile) {
    require_profile_matches(shape, profile);
    const int n = shape.n;
    GCIndexSet I;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i)
            if (profile.values[i - 1] != profile.values[i + n - k - 1]) I.pairs.push_back({i, k});
    if (I.size() != shape.dimension()) throw std::logic_error("index set size differs from dim_C");
    return I;
}

int GCPolytope::facet_count() const {
    return static_cast<int>(std::count_if(inequalities.begin(), inequalities.end(),
                                          [](const GCInequality& q) { return q.facet; }));
}

namespace {

GCEntry make_entry(const FlagShape& shape, const EigenProfile& profile, const GCIndexSet& I, int i, int k) {
    GCEntry e;
    e.i = i;
    e.k = k;
    if (k == shape.n) {
        e.value = profile.values[i - 1];
        return e;
    }
    e.var = I.position(i, k);
    if (e.var < 0) e.value = profile.values[i - 1];
    return e;
}

void normalize(LinearConstraint& c) {
    for (const auto& a : c.coeffs)
        if (a != 0) {
            Rational s = a < 0 ? Rational(-a) : a;
            for (auto& b : c.coeffs) b /= s;
            c.rhs /= s;
            return;
        }
}

}  // namespace

LinearConstraint as_linear(const GCInequality& q, int dim) {
    LinearConstraint c{std::vector<Rational>(dim, Rational(0)), Rational(0), false};
    if (q.upper.constant())
        c.rhs -= q.upper.value;
    else
        c.coeffs[q.upper.var] += 1;
    if (q.lower.constant())
        c.rhs += q.lower.value;
    else
        c.coeffs[q.lower.var] -= 1;
    return c;
}

bool fm_feasible(std::vector<LinearConstraint> rows, int dim) {
    std::vector<bool> eliminated(dim, false);
    for (int step = 0;; ++step) {
        // drop trivial rows, detect contradictions, dedupe by coefficient vector
        std::map<std::vector<Rational>, LinearConstraint, bool (*)(const std::vector<Rational>&,
                                                                   const std::vector<Rational>&)>
            uniq([](const std::vector<Rational>& a, const std::vector<Rational>& b) {
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
        for (auto& r : rows) {
            bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& a) { return a == 0; });
            if (zero) {
                if (r.strict ? !(r.rhs < 0) : r.rhs > 0) return false;
                continue;
            }
            normalize(r);
            auto it = uniq.find(r.coeffs);
            if (it == uniq.end()) {
                uniq.emplace(r.coeffs, r);
            } else if (r.rhs > it->second.rhs || (r.rhs == it->second.rhs && r.strict)) {
                it->second = r;
            }
        }
        rows.clear();
        for (auto& [key, r] : uniq) rows.push_back(r);
        if (rows.empty()) return true;

        int best = -1;
        long best_cost = 0;
        for (int v = 0; v < dim; ++v) {
            if (eliminated[v]) continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coeffs[v] > 0) ++pos;
                if (r.coeffs[v] < 0) ++neg;
            }
            if (pos + neg == 0) {
                eliminated[v] = true;
                continue;
            }
            long cost = pos * neg - pos - neg;
            if (best < 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best < 0) return true;  // only tautologies remain (handled above) - unreachable in practice
        eliminated[best] = true;
        std::vector<LinearConstraint> next, pos, neg;
        for (auto& r : rows) {
            if (r.coeffs[best] > 0)
                pos.push_back(r);
            else if (r.coeffs[best] < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational a = p.coeffs[best], b = -q.coeffs[best];
                LinearConstraint c{std::vector<Rational>(dim), b * p.rhs + a * q.rhs, p.strict || q.strict};
                for (int v = 0; v < dim; ++v) c.coeffs[v] = b * p.coeffs[v] + a * q.coeffs[v];
                c.coeffs[best] = 0;
                next.push_back(std::move(c));
            }
        rows = std::move(next);
    }
}

GCPolytope build_polytope(const FlagShape& shape, const EigenProfile& profile) {
    GCPolytope p{shape, profile, index_set(shape, profile), {}};
    const int n = shape.n;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) {
            GCEntry mid = make_entry(shape, profile, p.index, i, k);
            GCEntry up = make_entry(shape, profile, p.index, i, k + 1);
            GCEntry down = make_entry(shape, profile, p.index, i + 1, k + 1);
            if (!mid.constant() || !up.constant()) p.inequalities.push_back({up, mid, false});
            if (!mid.constant() || !down.constant()) p.inequalities.push_back({mid, down, false});
        }
    const int dim = p.dimension();
    for (size_t j = 0; j < p.inequalities.size(); ++j) {
        std::vector<LinearConstraint> sys;
        for (size_t o = 0; o < p.inequalities.size(); ++o)
            if (o != j) sys.push_back(as_linear(p.inequalities[o], dim));
        LinearConstraint neg = as_linear(p.inequalities[j], dim);
        for (auto& a : neg.coeffs) a = -a;
        neg.rhs = -neg.rhs;
        neg.strict = true;
        sys.push_back(neg);
        p.inequalities[j].facet = fm_feasible(std::move(sys), dim);
    }
    return p;
}

namespace {

double entry_value(const GCEntry& e, const GCPoint& u) {
    return e.constant() ? to_double(e.value) : u.u.at(e.var);
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Containment contains(const GCPolytope& p, const GCPoint& u, double tol) {
    if (static_cast<int>(u.u.size()) != p.dimension()) throw InvalidInput("point has the wrong number of entries");
    Containment c{true, {}};
    for (size_t j = 0; j < p.inequalities.size(); ++j) {
        double slack = entry_value(p.inequalities[j].upper, u) - entry_value(p.inequalities[j].lower, u);
        if (slack < -tol) c.inside = false;
        if (std::abs(slack) <= tol) c.active.push_back(static_cast<int>(j));
    }
    return c;
}

double pattern_value(const GCPolytope& p, const GCPoint& u, int i, int k) {
    if (k == p.shape.n) return to_double(p.profile.values.at(i - 1));
    int pos = p.index.position(i, k);
    if (pos < 0) return to_double(p.profile.values.at(i - 1));
    return u.u.at(pos);
}

std::vector<Diamond> detect_diamonds(const FlagShape& shape, const EigenProfile& profile, const GCPoint& u,
                                     double tol) {
    GCPolytope p{shape, profile, index_set(shape, profile), {}};
    if (static_cast<int>(u.u.size()) != p.dimension()) throw InvalidInput("point has the wrong number of entries");
    std::vector<Diamond> out;
    for (int m = 2; m <= shape.n - 1; ++m)
        for (int j = 1; j < m; ++j) {
            const std::array<std::pair<int, int>, 4> slots{
                {{j, m}, {j + 1, m}, {j + 1, m + 1}, {j, m - 1}}};
            std::array<double, 4> v;
            bool all_const = true;
            for (int s = 0; s < 4; ++s) {
                auto [i, k] = slots[s];
                v[s] = pattern_value(p, u, i, k);
                if (k < shape.n && p.index.position(i, k) >= 0) all_const = false;
            }
            if (all_const) continue;
            auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            if (*hi - *lo <= tol) out.push_back({m, j});
        }
    return out;
}

GCPoint gc_map(const HermitianMatrix& x, const FlagShape& shape, const EigenProfile& profile) {
    GCIndexSet I = index_set(shape, profile);
    require_hermitian(x, 1e-10);
    if (x.rows() != shape.n) throw InvalidInput("matrix size does not match the flag shape");
    auto ev = hermitian_eigenvalues(x);
    auto lam = profile.as_doubles();
    for (int i = 0; i < shape.n; ++i)
        if (std::abs(ev[i] - lam[i]) > 1e-8) {
            std::ostringstream os;
            os.precision(12);
            os << "matrix is not on the orbit: eigenvalue " << i + 1 << " is " << ev[i] << ", expected " << lam[i];
            throw InvalidInput(os.str());
        }
    GCPoint u{std::vector<double>(I.size())};
    for (int k = shape.n - 1; k >= 1; --k) {
        auto e = hermitian_eigenvalues(x.leading_block(k));
        for (int i = 1; i <= k; ++i) {
            int pos = I.position(i, k);
            if (pos >= 0) {
                u.u[pos] = e[i - 1];
            } else if (std::abs(e[i - 1] - lam[i - 1]) > 1e-8) {
                std::ostringstream os;
                os << "constant entry (" << i << "," << k << ") is " << e[i - 1] << ", expected " << lam[i - 1];
                throw InvalidInput(os.str());
            }
        }
    }
    return u;
}

std::string to_string(SpaceId s) {
    switch (s) {
        case SpaceId::Fl3: return "Fl3";
        case SpaceId::Gr24: return "Gr24";
        case SpaceId::Gr25: return "Gr25";
    }
    return "?";
}

SpaceId parse_space(const std::string& s) {
    if (s == "Fl3") return SpaceId::Fl3;
    if (s == "Gr24") return SpaceId::Gr24;
    if (s == "Gr25") return SpaceId::Gr25;
    throw InvalidInput("unknown space '" + s + "' (expected Fl3, Gr24 or Gr25)");
}

Space fl3_space(Rational l1, Rational l2) {
    if (!(l1 > 0 && l2 > 0)) throw InvalidInput("Fl3 needs l1, l2 > 0");
    return {{{1, 2}, 3}, {{l1, Rational(0), -l2}}};
}

Space gr24_space(Rational lam) {
    if (!(lam > 0)) throw InvalidInput("lambda must be positive");
    return {{{2}, 4}, {{2 * lam, 2 * lam, Rational(0), Rational(0)}}};
}

Space gr24_fiber_space(Rational lam) {
    if (!(lam > 0)) throw InvalidInput("lambda must be positive");
    return {{{2}, 4}, {{lam, lam, -lam, -lam}}};
}

Space gr25_space(Rational lam) {
    if (!(lam > 0)) throw InvalidInput("lambda must be positive");
    Rational z(0);
    return {{{2}, 5}, {{lam, lam, z, z, z}}};
}

std::string to_string(FiberKind k) {
    switch (k) {
        case FiberKind::Torus: return "torus";
        case FiberKind::S3: return "S3";
        case FiberKind::U2: return "U2";
        case FiberKind::U2xT2: return "U2xT2";
        case FiberKind::UnknownNonsmooth: return "unknown-nonsmooth";
    }
    return "?";
}

namespace {

bool all_near(const std::vector<double>& u, std::initializer_list<int> idx, double t, double tol) {
    for (int i : idx)
        if (std::abs(u[i] - t) > tol) return false;
    return true;
}

void require_space(SpaceId space, const FlagShape& shape) {
    bool ok = false;
    switch (space) {
        case SpaceId::Fl3: ok = shape.n == 3 && shape.steps == std::vector<int>{1, 2}; break;
        case SpaceId::Gr24: ok = shape.n == 4 && shape.steps == std::vector<int>{2}; break;
        case SpaceId::Gr25: ok = shape.n == 5 && shape.steps == std::vector<int>{2}; break;
    }
    if (!ok) throw InvalidInput("polytope shape does not match space " + to_string(space));
}

}  // namespace

FiberDescriptor classify_fiber(SpaceId space, const GCPolytope& p, const GCPoint& u, double tol) {
    require_space(space, p.shape);
    Containment c = contains(p, u, tol);
    if (!c.inside) throw InvalidInput("point is not in the polytope");
    const int N = p.dimension();
    auto diamonds = detect_diamonds(p.shape, p.profile, u, tol);
    if (diamonds.empty()) {
        if (c.active.empty()) return {FiberKind::Torus, N, true, {}};
        std::vector<std::vector<Rational>> normals;
        for (int j : c.active) normals.push_back(as_linear(p.inequalities[j], N).coeffs);
        return {FiberKind::Torus, N - rational_rank(normals), false, {}};
    }
    const auto lam = p.profile.as_doubles();
    const auto& x = u.u;
    switch (space) {
        case SpaceId::Fl3:
            if (all_near(x, {0, 1, 2}, lam[1], tol)) return {FiberKind::S3, 3, true, {}};
            break;
        case SpaceId::Gr24: {
            double a = lam[0], b = lam[3], t = x[0];
            if (all_near(x, {0, 1, 2, 3}, t, tol) && t > b + tol && t < a - tol) {
                FiberDescriptor f{FiberKind::U2, 4, true, {}};
                if (std::abs(t - 0.5 * (a + b)) > tol) f.annotations.push_back("displaceable");
                return f;
            }
            break;
        }
        case SpaceId::Gr25: {
            double a = lam[0], b = lam[4];
            if (all_near(x, {0, 1, 2, 3, 4, 5}, x[0], tol)) {
                if (x[0] > b + tol && x[0] < a - tol) return {FiberKind::U2, 4, false, {}};
                break;
            }
            double t1 = x[2];
            if (all_near(x, {2, 3, 4, 5}, t1, tol) && a - tol > x[1] && x[1] > x[0] + tol && x[0] > t1 + tol &&
                t1 > b + tol)
                return {FiberKind::U2xT2, 6, true, {"displaceable", "HF vanishes over Λ"}};
            double t2 = x[0];
            if (all_near(x, {0, 1, 2, 3}, t2, tol) && t2 < a - tol && t2 > x[5] + tol && x[5] > x[4] + tol &&
                x[4] > b + tol)
                return {FiberKind::U2xT2, 6, true, {"displaceable", "HF vanishes over Λ"}};
            break;
        }
    }
    return {FiberKind::UnknownNonsmooth, -1, false, {}};
}

HermitianMatrix fl3_s3_point(double l1, double l2, std::array<cplx, 2> a) {
    if (!(l1 > 0 && l2 > 0)) throw InvalidInput("fl3_s3_point needs l1, l2 > 0");
    if (std::abs(std::norm(a[0]) + std::norm(a[1]) - 1.0) > 1e-12) throw InvalidInput("a must be a unit vector");
    double r = std::sqrt(l1 * l2);
    cplx z1 = r * a[0], z2 = r * a[1];
    return ComplexMatrix{{0, 0, z1}, {0, 0, z2}, {std::conj(z1), std::conj(z2), l1 - l2}};
}

HermitianMatrix gr2n_un_point(int n, double lam, double t, const ComplexMatrix& A) {
    if (n < 1 || 2 * n > 8) throw InvalidInput("gr2n_un_point supports 1 <= n <= 4");
    if (!(std::abs(t) < lam)) throw InvalidInput("gr2n_un_point needs -lambda < t < lambda");
    if (A.rows() != n || A.cols() != n || unitarity_defect(A) > 1e-10) throw InvalidInput("A must be an n x n unitary");
    double s = std::sqrt(lam * lam - t * t);
    ComplexMatrix x(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = t;
        x(n + i, n + i) = -t;
        for (int j = 0; j < n; ++j) {
            x(i, n + j) = s * std::conj(A(j, i));
            x(n + i, j) = s * A(i, j);
        }
    }
    return x;
}

HermitianMatrix gr25_L1_point(double lam, double s1, double s2, double t, double th1, double th2,
                              const ComplexMatrix& B) {
    if (!(lam > s1 && s1 > s2 && s2 > t && t > 0)) throw InvalidInput("gr25_L1_point needs lambda > s1 > s2 > t > 0");
    if (B.rows() != 2 || B.cols() != 2 || unitarity_defect(B) > 1e-10) throw InvalidInput("B must be a 2 x 2 unitary");
    ComplexMatrix Z(5, 2);
    double r = std::sqrt(t / lam);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Z(i, j) = r * B(i, j);
    double d = lam * (lam - s2);
    cplx e1 = std::polar(1.0, th1), e2 = std::polar(1.0, th2);
    Z(2, 0) = std::sqrt((s2 - t) * (lam - s1) / d) * e1;
    Z(2, 1) = -std::sqrt((lam - t) * (s1 - s2) / d) * e1;
    Z(3, 0) = std::sqrt((s2 - t) * (s1 - s2) / d) * e2;
    Z(3, 1) = std::sqrt((lam - t) * (lam - s1) / d) * e2;
    Z(4, 0) = std::sqrt((lam - s2) / lam);
    Z(4, 1) = 0;
    return cplx(lam) * (Z * Z.adjoint());
}

ComplexMatrix reversal(int n) {
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i) g(i, n - 1 - i) = 1;
    return g;
}

HermitianMatrix gr25_L2_point(double lam, double s1, double s2, double t, double th1, double th2,
                              const ComplexMatrix& B) {
    if (!(0 < s1 && s1 < s2 && s2 < t && t < lam)) throw InvalidInput("gr25_L2_point needs 0 < s1 < s2 < t < lambda");
    ComplexMatrix g = reversal(5);
    return g * gr25_L1_point(lam, lam - s1, lam - s2, lam - t, th1, th2, B) * g;
}

}  // namespace gcfloer
