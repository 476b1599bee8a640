#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "gcfloer/errors.hpp"
#include "gcfloer/potential.hpp"

using namespace gcfloer;
using std::numbers::pi;
using TermKey = std::pair<Rational, std::vector<int>>;

namespace {

std::multiset<TermKey> term_keys(const LaurentPoly& po) {
    std::multiset<TermKey> out;
    for (const auto& t : po.terms) {
        CHECK(t.coeff == cplx(1.0));
        out.insert({t.t_exp, t.y_exp});
    }
    return out;
}

LaurentPoly potential_of(const Space& s, TermRule rule = TermRule::Facet) {
    return build_potential(s.shape, s.profile, rule);
}

// Independent symbolic derivative: differentiate each term by hand-rolled
// power rule on a dictionary keyed by y-exponent.
std::map<std::vector<int>, cplx> symbolic_log_derivative(const LaurentPoly& po, int j) {
    std::map<std::vector<int>, cplx> out;
    for (const auto& t : po.terms) {
        int e = t.y_exp[j];
        if (e) out[t.y_exp] += cplx(e) * t.coeff;
    }
    return out;
}

std::vector<cplx> random_x(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cplx> x(n);
    for (auto& v : x) v = cplx(u(rng), 3 * u(rng));
    return x;
}

}  // namespace

TEST_CASE("Fl(3) potential matches the displayed six terms") {
    // profile (l1, 0, -l2): Q1 = T^l1, Q2 = 1, Q3 = T^-l2
    Rational l1(3, 10), l2(7, 10);
    auto po = potential_of(fl3_space(l1, l2));
    std::multiset<TermKey> want{
        {l1, {-1, 0, 0}},  // Q1/y1
        {0, {1, 0, 0}},    // y1/Q2
        {0, {0, -1, 0}},   // Q2/y2
        {l2, {0, 1, 0}},   // y2/Q3
        {0, {1, 0, -1}},   // y1/y3
        {0, {0, -1, 1}},   // y3/y2
    };
    CHECK(term_keys(po) == want);
}

TEST_CASE("Gr(2,4) potential matches the displayed six terms") {
    auto po = potential_of(gr24_space(1));
    // Q = T^2: Q/y2 + y2/y1 + y1/y3 + y3 + y2/y4 + y4/y3
    std::multiset<TermKey> want{
        {2, {0, -1, 0, 0}}, {0, {-1, 1, 0, 0}}, {0, {1, 0, -1, 0}},
        {0, {0, 0, 1, 0}},  {0, {0, 1, 0, -1}}, {0, {0, 0, -1, 1}},
    };
    CHECK(term_keys(po) == want);
    CHECK(to_string(po).find("T^2 y2^-1") != std::string::npos);
}

TEST_CASE("Gr(2,5) potential matches the displayed nine terms") {
    auto po = potential_of(gr25_space(1));
    // Q/y2 + y2/y1 + y1/y3 + y2/y4 + y4/y3 + y3/y5 + y5 + y4/y6 + y6/y5
    std::multiset<TermKey> want{
        {1, {0, -1, 0, 0, 0, 0}}, {0, {-1, 1, 0, 0, 0, 0}}, {0, {1, 0, -1, 0, 0, 0}},
        {0, {0, 1, 0, -1, 0, 0}}, {0, {0, 0, -1, 1, 0, 0}}, {0, {0, 0, 1, 0, -1, 0}},
        {0, {0, 0, 0, 0, 1, 0}},  {0, {0, 0, 0, 1, 0, -1}}, {0, {0, 0, 0, 0, -1, 1}},
    };
    CHECK(term_keys(po) == want);
}

TEST_CASE("literal summation adds the non-facet terms") {
    auto lit = potential_of(gr24_space(1), TermRule::Literal);
    CHECK(lit.terms.size() == 8);
    auto keys = term_keys(lit);
    CHECK(keys.count({2, {-1, 0, 0, 0}}) == 1);  // Q/y1
    CHECK(keys.count({0, {1, 0, 0, 0}}) == 1);   // y1
    CHECK(potential_of(gr25_space(1), TermRule::Literal).terms.size() == 12);
}

TEST_CASE("term count equals facet count") {
    std::vector<Space> spaces{fl3_space(1, 1), fl3_space(2, 1), gr24_space(1), gr25_space(1),
                              {FlagShape{{2}, 3}, EigenProfile{{1, 1, 0}}},
                              {FlagShape{{1}, 2}, EigenProfile{{1, 0}}}};
    for (const auto& s : spaces) {
        auto p = build_polytope(s.shape, s.profile);
        CHECK(static_cast<int>(build_potential(p).terms.size()) == p.facet_count());
    }
    CHECK(potential_of({FlagShape{{1}, 2}, EigenProfile{{1, 0}}}).terms.size() == 2);
}

TEST_CASE("evaluate") {
    LaurentPoly po;
    po.labels = {{1, 1}};
    po.terms.push_back({1.0, 0, {1}});
    CHECK(std::abs(evaluate(po, {5.0}, 0.5) - 5.0) < 1e-14);
    CHECK_THROWS_AS(evaluate(po, {0.0}, 0.5), InvalidInput);
    CHECK_THROWS_AS(evaluate(po, {1.0}, 1.5), InvalidInput);
    po.terms.push_back({1.0, 2, {-1}});
    CHECK(std::abs(evaluate(po, {2.0}, 0.5) - 2.125) < 1e-14);
}

TEST_CASE("log gradient of Q/y") {
    LaurentPoly po;
    po.labels = {{1, 1}};
    po.terms.push_back({1.0, 1, {-1}});
    auto g = log_gradient(po);
    REQUIRE(g[0].terms.size() == 1);
    CHECK(g[0].terms[0].coeff == cplx(-1.0));
    CHECK(g[0].terms[0].t_exp == Rational(1));
}

TEST_CASE("Gr(2,4) y3 component is -y1/y3 + y3 - y4/y3") {
    auto po = potential_of(gr24_space(1));
    auto g = log_gradient(po);
    std::map<std::vector<int>, cplx> got;
    for (const auto& t : g[2].terms) got[t.y_exp] += t.coeff;
    std::map<std::vector<int>, cplx> want{{{1, 0, -1, 0}, -1.0}, {{0, 0, 1, 0}, 1.0}, {{0, 0, -1, 1}, -1.0}};
    CHECK(got == want);
    for (int j = 0; j < 4; ++j) {
        std::map<std::vector<int>, cplx> from_grad;
        for (const auto& t : g[j].terms) from_grad[t.y_exp] += t.coeff;
        CHECK(from_grad == symbolic_log_derivative(po, j));
    }
}

TEST_CASE("log gradient and Hessian agree with central differences") {
    std::mt19937_64 rng(3);
    for (const auto& s : {fl3_space(1, 1), gr24_space(1), gr25_space(1)}) {
        auto po = potential_of(s);
        const int N = po.nvars();
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_x(rng, N);
            auto g = log_gradient_at(po, x, 0.5);
            auto h = log_hessian_at(po, x, 0.5);
            const double eps = 1e-5;
            for (int j = 0; j < N; ++j) {
                auto xp = x, xm = x;
                xp[j] += eps;
                xm[j] -= eps;
                cplx fd = (evaluate_log(po, xp, 0.5) - evaluate_log(po, xm, 0.5)) / (2 * eps);
                CHECK(std::abs(fd - g[j]) < 1e-7 * std::max(1.0, std::abs(g[j])));
                auto gp = log_gradient_at(po, xp, 0.5), gm = log_gradient_at(po, xm, 0.5);
                for (int i = 0; i < N; ++i)
                    CHECK(std::abs((gp[i] - gm[i]) / (2 * eps) - h(i, j)) < 1e-6 * std::max(1.0, std::abs(h(i, j))));
            }
        }
    }
}

TEST_CASE("Hessian of y + 1/y at y = 1") {
    LaurentPoly po;
    po.labels = {{1, 1}};
    po.terms.push_back({1.0, 0, {1}});
    po.terms.push_back({1.0, 0, {-1}});
    auto h = hessian_nondegenerate(po, {1.0}, 0.5);
    CHECK(h.nondegenerate);
    CHECK(std::abs(h.det - 2.0) < 1e-14);
    CHECK_THROWS_AS(hessian_nondegenerate(po, {2.0}, 0.5), InvalidInput);
}

TEST_CASE("Gr(2,4) closed-form critical points") {
    Rational lam = 1;
    auto p = build_polytope(gr24_space(lam).shape, gr24_space(lam).profile);
    auto po = build_potential(p);
    auto cands = gr24_closed_form_candidates(lam);
    REQUIRE(cands.size() == 4);
    for (int i = 0; i < 4; ++i) {
        auto rep = verify_candidate(po, p, cands[i], {0.5, 0.3});
        CHECK(rep.max_residual < 1e-9);
        CHECK(rep.valuations == std::vector<Rational>{1, Rational(3, 2), Rational(1, 2), 1});
        CHECK(rep.interior);
        // 4 sqrt2 i^i Q^{1/4}, Q = T^2
        CHECK(std::abs(rep.value_exponent - 0.5) < 1e-10);
        CHECK(std::abs(rep.value_coeff - 4 * std::sqrt(2.0) * std::pow(cplx(0, 1), i)) < 1e-8);
        CHECK(hessian_nondegenerate(po, cands[i].at(0.5), 0.5).nondegenerate);
    }
}

TEST_CASE("Fl(3) closed-form critical points share an interior valuation") {
    auto s = fl3_space(1, 1);
    auto p = build_polytope(s.shape, s.profile);
    auto po = build_potential(p);
    auto cands = fl3_closed_form_candidates(1, 1);
    REQUIRE(cands.size() == 6);
    std::set<std::vector<Rational>> vals;
    for (const auto& c : cands) {
        auto rep = verify_candidate(po, p, c, {0.5, 0.3});
        CHECK(rep.max_residual < 1e-9);
        CHECK(rep.interior);
        vals.insert(rep.valuations);
        CHECK(hessian_nondegenerate(po, c.at(0.5), 0.5).nondegenerate);
    }
    CHECK(vals.size() == 1);
    CHECK(*vals.begin() == std::vector<Rational>{Rational(1, 2), Rational(-1, 2), 0});
}

TEST_CASE("Gr(2,5): printed relation y6^5 = Q^5 is not critical, y6^5 = Q^2 is") {
    Rational lam = 1;
    auto p = build_polytope(gr25_space(lam).shape, gr25_space(lam).profile);
    auto po = build_potential(p);
    double worst_literal = 0;
    for (const auto& c : gr25_closed_form_candidates(lam, Gr25Relation::Literal))
        worst_literal = std::max(worst_literal, verify_candidate(po, p, c, {0.6, 0.4}).max_residual);
    CHECK(worst_literal > 1e-3);
    for (const auto& c : gr25_closed_form_candidates(lam, Gr25Relation::Corrected)) {
        auto rep = verify_candidate(po, p, c, {0.6, 0.4});
        CHECK(rep.max_residual < 1e-9);
        CHECK(rep.interior);
        CHECK(std::abs(rep.value_exponent - 0.2) < 1e-10);
        CHECK(hessian_nondegenerate(po, c.at(0.6), 0.6).nondegenerate);
    }
}

TEST_CASE("solver counts for the three examples") {
    struct Case {
        Space s;
        double T0;
        size_t count;
    };
    for (const auto& c : {Case{fl3_space(1, 1), 0.5, 6}, Case{gr24_space(1), 0.5, 4}, Case{gr25_space(1), 0.6, 10}}) {
        auto po = potential_of(c.s);
        SolverConfig cfg;
        cfg.T0 = c.T0;
        auto pts = find_critical_points(po, cfg);
        CHECK(pts.size() == c.count);
        for (const auto& pt : pts) CHECK(pt.residual < cfg.newton_tol);
    }
}

TEST_CASE("solver is deterministic and stable under reseeding and more starts") {
    auto po = potential_of(gr24_space(1));
    SolverConfig cfg;
    cfg.starts = 500;
    auto a = find_critical_points(po, cfg), b = find_critical_points(po, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].y == b[i].y);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cfg.seed = seed;
        CHECK(find_critical_points(po, cfg).size() == 4);
    }
    cfg.starts = 1000;
    CHECK(find_critical_points(po, cfg).size() == 4);
}

TEST_CASE("numeric critical points biject with closed forms") {
    auto check = [](const LaurentPoly& po, const std::vector<CriticalCandidate>& cands, double T0) {
        SolverConfig cfg;
        cfg.T0 = T0;
        auto pts = find_critical_points(po, cfg);
        REQUIRE(pts.size() == cands.size());
        std::vector<int> hits(cands.size(), 0);
        for (const auto& pt : pts) {
            int matches = 0;
            for (size_t c = 0; c < cands.size(); ++c) {
                auto y = cands[c].at(T0);
                bool same = true;
                for (size_t j = 0; j < y.size(); ++j)
                    if (std::abs(y[j] - pt.y[j]) > 1e-6 * std::max(1.0, std::abs(y[j]))) same = false;
                if (same) {
                    ++matches;
                    ++hits[c];
                }
            }
            CHECK(matches == 1);
        }
        for (int h : hits) CHECK(h == 1);
    };
    check(potential_of(fl3_space(1, 1)), fl3_closed_form_candidates(1, 1), 0.5);
    check(potential_of(fl3_space(2, 1)), fl3_closed_form_candidates(2, 1), 0.5);
    check(potential_of(gr24_space(1)), gr24_closed_form_candidates(1), 0.5);
    check(potential_of(gr25_space(1)), gr25_closed_form_candidates(1, Gr25Relation::Corrected), 0.6);
}

TEST_CASE("solver config validation") {
    SolverConfig cfg;
    cfg.T0 = 1.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg.T0 = 0.5;
    cfg.newton_tol = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}
