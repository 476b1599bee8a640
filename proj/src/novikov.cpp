#include "gcfloer/novikov.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gcfloer/errors.hpp"

namespace gcfloer {

NovikovSeries::NovikovSeries(Rational cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw InvalidInput("Novikov truncation must be non-negative");
}

NovikovSeries NovikovSeries::monomial(cplx c, Rational e, Rational cutoff) {
    NovikovSeries s(cutoff);
    s.add_term(e, c);
    return s;
}

void NovikovSeries::add_term(Rational e, cplx c) {
    if (e >= cutoff_) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Rational& x) { return t.exponent < x; });
    if (it != terms_.end() && it->exponent == e) {
        it->coeff += c;
        if (std::abs(it->coeff) < kPruneThreshold) terms_.erase(it);
        return;
    }
    if (std::abs(c) < kPruneThreshold) return;
    terms_.insert(it, Term{e, c});
}

NovikovSeries NovikovSeries::with_cutoff(Rational c) const {
    NovikovSeries s(c);
    for (const auto& t : terms_) s.add_term(t.exponent, t.coeff);
    return s;
}

std::optional<Rational> NovikovSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
}

cplx NovikovSeries::leading_coefficient() const { return terms_.empty() ? cplx(0) : terms_.front().coeff; }

bool NovikovSeries::leaves_lambda0() const { return !terms_.empty() && terms_.front().exponent < 0; }

int NovikovSeries::drop_below(double threshold) {
    auto before = terms_.size();
    std::erase_if(terms_, [threshold](const Term& t) { return std::abs(t.coeff) < threshold; });
    return static_cast<int>(before - terms_.size());
}

cplx NovikovSeries::evaluate(double T0) const {
    cplx s = 0;
    for (const auto& t : terms_) s += t.coeff * std::pow(T0, to_double(t.exponent));
    return s;
}

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
    NovikovSeries s(std::min(a.cutoff(), b.cutoff()));
    for (const auto& t : a.terms()) s.add_term(t.exponent, t.coeff);
    for (const auto& t : b.terms()) s.add_term(t.exponent, t.coeff);
    return s;
}

NovikovSeries operator-(const NovikovSeries& a) { return scalar_mul(-1.0, a); }

NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b) { return a + (-b); }

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
    Rational cut = std::min(a.cutoff(), b.cutoff());
    std::map<Rational, cplx> acc;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            Rational e = x.exponent + y.exponent;
            if (e < cut) acc[e] += x.coeff * y.coeff;
        }
    NovikovSeries s(cut);
    for (const auto& [e, c] : acc) s.add_term(e, c);
    return s;
}

NovikovSeries scalar_mul(cplx s, const NovikovSeries& a) {
    NovikovSeries r(a.cutoff());
    for (const auto& t : a.terms()) r.add_term(t.exponent, s * t.coeff);
    return r;
}

NovikovSeries operator*(cplx s, const NovikovSeries& a) { return scalar_mul(s, a); }

std::optional<Rational> valuation(const NovikovSeries& a) { return a.valuation(); }

NovikovSeries invert(const NovikovSeries& a) {
    if (a.is_zero()) throw InvalidInput("cannot invert the zero series");
    const Rational v = *a.valuation();
    const cplx c = a.leading_coefficient();
    // a = c T^v (1 + r) with val(r) > 0;  1/a = c^{-1} T^{-v} sum_k (-r)^k
    const Rational work = a.cutoff() + v;
    NovikovSeries minus_r(work > 0 ? work : Rational(0));
    for (size_t i = 1; i < a.terms().size(); ++i)
        minus_r.add_term(a.terms()[i].exponent - v, -a.terms()[i].coeff / c);
    NovikovSeries sum = NovikovSeries::one(minus_r.cutoff());
    NovikovSeries power = sum;
    for (int k = 0; k < 100000 && !power.is_zero(); ++k) {
        power = power * minus_r;
        sum = sum + power;
        if (k == 99999) throw NonConvergence("Novikov inverse: geometric series did not terminate");
    }
    NovikovSeries out(a.cutoff());
    for (const auto& t : sum.terms()) out.add_term(t.exponent - v, t.coeff / c);
    return out;
}

NovikovMatrix::NovikovMatrix(int rows, int cols, Rational cutoff)
    : rows_(rows), cols_(cols), cutoff_(cutoff), a_(static_cast<size_t>(rows) * cols, NovikovSeries(cutoff)) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

bool NovikovMatrix::is_zero(double threshold) const {
    for (const auto& s : a_)
        for (const auto& t : s.terms())
            if (std::abs(t.coeff) >= threshold) return false;
    return true;
}

NovikovMatrix operator*(const NovikovMatrix& a, const NovikovMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("Novikov matrix product shape mismatch");
    NovikovMatrix c(a.rows(), b.cols(), std::min(a.cutoff(), b.cutoff()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            NovikovSeries s(c.cutoff());
            for (int k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

SmithData smith_valuations(const NovikovMatrix& m) {
    SmithData out;
    std::vector<std::vector<NovikovSeries>> a(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i].push_back(m(i, j));
    bool warned = false;
    while (!a.empty() && !a[0].empty()) {
        int pi = -1, pj = -1;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a[i].size(); ++j) {
                auto& e = a[i][j];
                if (e.drop_below(kPivotThreshold) > 0 && !warned) {
                    out.warnings.push_back("near-degenerate coefficient below 1e-10 treated as zero");
                    warned = true;
                }
                if (e.is_zero()) continue;
                if (pi < 0) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    continue;
                }
                const auto& best = a[pi][pj];
                auto ve = *e.valuation(), vb = *best.valuation();
                if (ve < vb || (ve == vb && std::abs(e.leading_coefficient()) > std::abs(best.leading_coefficient()))) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                }
            }
        if (pi < 0) break;
        out.pivots.push_back(*a[pi][pj].valuation());
        ++out.rank;
        NovikovSeries inv = invert(a[pi][pj]);
        for (size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == pi || a[i][pj].is_zero()) continue;
            NovikovSeries f = a[i][pj] * inv;
            for (size_t j = 0; j < a[i].size(); ++j) a[i][j] = a[i][j] - f * a[pi][j];
        }
        a.erase(a.begin() + pi);
        for (auto& row : a) row.erase(row.begin() + pj);
    }
    std::sort(out.pivots.begin(), out.pivots.end());
    return out;
}

namespace {

void require_lambda0(const NovikovMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).leaves_lambda0()) throw InvalidInput("matrix entry has a negative T-exponent");
}

void require_differential(const NovikovMatrix& d) {
    if (d.rows() != d.cols()) throw InvalidInput("a differential must be a square matrix");
    require_lambda0(d);
    if (!(d * d).is_zero(kPivotThreshold)) throw NotADifferential();
}

}  // namespace

NovikovModuleDecomp module_presentation(const NovikovMatrix& d) {
    require_differential(d);
    SmithData s = smith_valuations(d);
    NovikovModuleDecomp out{d.rows() - 2 * s.rank, {}, s.warnings};
    for (const auto& e : s.pivots)
        if (e > 0) out.torsion.push_back(e);
    return out;
}

NovikovModuleDecomp module_presentation_field(const NovikovMatrix& d) {
    require_differential(d);
    SmithData s = smith_valuations(d);
    return {d.rows() - 2 * s.rank, {}, s.warnings};
}

NovikovModuleDecomp cokernel_decomposition(const NovikovMatrix& m) {
    require_lambda0(m);
    SmithData s = smith_valuations(m);
    NovikovModuleDecomp out{m.rows() - s.rank, {}, s.warnings};
    for (const auto& e : s.pivots)
        if (e > 0) out.torsion.push_back(e);
    return out;
}

}  // namespace gcfloer
