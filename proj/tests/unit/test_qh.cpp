#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "gcfloer/errors.hpp"
#include "gcfloer/potential.hpp"
#include "gcfloer/qh.hpp"
#include "oracles/qh_oracle.hpp"

using namespace gcfloer;
using std::numbers::pi;

namespace {

QPoly column_entry(const QHMatrix& m, const std::string& row, const std::string& col) {
    int i = static_cast<int>(std::find(m.basis.begin(), m.basis.end(), row) - m.basis.begin());
    int j = static_cast<int>(std::find(m.basis.begin(), m.basis.end(), col) - m.basis.begin());
    REQUIRE(i < m.dim());
    REQUIRE(j < m.dim());
    return m.entries[i][j];
}

// Everything in column col that is nonzero, as label -> poly.
std::map<std::string, QPoly> column(const QHMatrix& m, const std::string& col) {
    std::map<std::string, QPoly> out;
    int j = static_cast<int>(std::find(m.basis.begin(), m.basis.end(), col) - m.basis.begin());
    for (int i = 0; i < m.dim(); ++i)
        if (!m.entries[i][j].empty()) out[m.basis[i]] = m.entries[i][j];
    return out;
}

std::vector<cplx> critical_values(const Space& s, double T0) {
    SolverConfig cfg;
    cfg.T0 = T0;
    std::vector<cplx> out;
    for (const auto& p : find_critical_points(build_potential(s.shape, s.profile), cfg)) out.push_back(p.value);
    return out;
}

}  // namespace

TEST_CASE("partitions in the 2x2 box") {
    auto p = partitions_in_box(2, 4);
    REQUIRE(p.size() == 6);
    CHECK(p.front() == Partition{0, 0});
    CHECK(p.back() == Partition{2, 2});
    CHECK(partitions_in_box(2, 5).size() == 10);
    CHECK(partitions_in_box(3, 6).size() == 20);
}

TEST_CASE("Gr(2,4) quantum Pieri examples") {
    auto m = sigma1_matrix(2, 4);
    CHECK(column(m, "(2,2)") == std::map<std::string, QPoly>{{"(1)", {{{1}, 1}}}});
    CHECK(column(m, "(2,1)") == std::map<std::string, QPoly>{{"(2,2)", {{{0}, 1}}}, {"()", {{{1}, 1}}}});
    CHECK(column(m, "()") == std::map<std::string, QPoly>{{"(1)", {{{0}, 1}}}});
    CHECK(column_entry(m, "(1,1)", "(1)") == QPoly{{{0}, 1}});
}

TEST_CASE("quantum Pieri matches the rim-hook oracle entry for entry") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto parts = partitions_in_box(k, n);
            auto m = sigma1_matrix(k, n);
            for (size_t j = 0; j < parts.size(); ++j) {
                auto want = oracle::sigma1_times(parts[j], k, n);
                oracle::Expansion got;
                for (size_t i = 0; i < parts.size(); ++i)
                    for (const auto& [deg, c] : m.entries[i][j]) got[{parts[i], deg[0]}] += c;
                CHECK(got == want);
            }
        }
}

TEST_CASE("sigma1 range checks") {
    CHECK_THROWS_AS(sigma1_matrix(0, 4), InvalidInput);
    CHECK_THROWS_AS(sigma1_matrix(4, 4), InvalidInput);
    CHECK_THROWS_AS(sigma1_matrix(2, 7), InvalidInput);
}

TEST_CASE("classical sigma1 is nilpotent of index k(n-k)+1") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            ComplexMatrix m = sigma1_matrix(k, n).specialize({0.0});
            ComplexMatrix p = ComplexMatrix::identity(m.rows());
            const int top = k * (n - k);
            for (int e = 0; e < top; ++e) p = p * m;
            CHECK(max_abs(p) > 0.5);
            CHECK(max_abs(p * m) == 0);
        }
}

TEST_CASE("trace of c1 vanishes") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            cplx s = 0;
            for (auto v : c1_eigenvalues_grassmannian(k, n, 0.3)) s += v;
            CHECK(std::abs(s) < 1e-9);
            CHECK(std::abs((static_cast<double>(n) * sigma1_matrix(k, n).specialize({0.3})).trace()) < 1e-12);
        }
}

TEST_CASE("c1 eigenvalues scale as q^(1/n)") {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{1, 3}, std::pair{3, 6}}) {
        auto base = c1_eigenvalues_grassmannian(k, n, 0.2);
        for (double s : {0.5, 3.0}) {
            auto scaled = c1_eigenvalues_grassmannian(k, n, 0.2 * s);
            for (auto& v : base) v *= std::pow(s, 1.0 / n);
            CHECK(multiset_match(base, scaled, 1e-7).matched);
            for (auto& v : base) v /= std::pow(s, 1.0 / n);
        }
    }
}

TEST_CASE("P^1: eigenvalues of 2 sigma1 are +-2 sqrt(q)") {
    const double q = 0.09;
    auto ev = c1_eigenvalues_grassmannian(1, 2, q);
    CHECK(multiset_match(ev, {0.6, -0.6}, 1e-12).matched);
}

TEST_CASE("Gr(2,4): four critical values plus a double zero") {
    const double Q = 0.0625;
    auto ev = c1_eigenvalues_grassmannian(2, 4, Q);
    std::vector<cplx> want{0.0, 0.0};
    for (int j = 0; j < 4; ++j) want.push_back(4 * std::sqrt(2.0) * std::pow(cplx(0, 1), j) * std::pow(Q, 0.25));
    CHECK(multiset_match(ev, want, 1e-7).matched);
    // cross-module: Q = T^2 at T0 = 0.5
    auto cv = critical_values(gr24_space(1), 0.5);
    CHECK(multiset_match(cv, c1_eigenvalues_grassmannian(2, 4, 0.25), 1e-7, true).matched);
}

TEST_CASE("Gr(2,5): eigenvalues are 5 (sums of two fifth roots of -Q)") {
    const double T0 = 0.6, Q = T0;
    auto ev = c1_eigenvalues_grassmannian(2, 5, Q);
    std::vector<cplx> printed, negated;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            cplx z = std::polar(1.0, 2 * pi * i / 5) + std::polar(1.0, 2 * pi * j / 5);
            printed.push_back(5.0 * z * std::pow(Q, 0.2));
            negated.push_back(-5.0 * z * std::pow(Q, 0.2));
        }
    CHECK(multiset_match(ev, negated, 1e-7).matched);
    // the printed set is the negative of the actual spectrum
    CHECK_FALSE(multiset_match(ev, printed, 1e-7).matched);
    CHECK(multiset_match(critical_values(gr25_space(1), T0), ev, 1e-7).matched);
}

TEST_CASE("Fl(3) quantum Monk: classical part") {
    auto m = fl3_sigma_matrix(1);
    // sigma_{s1} * sigma_e = sigma_{s1}
    CHECK(column(m, "123") == std::map<std::string, QPoly>{{"213", {{{0, 0}, 1}}}});
    // sigma_{s1}^2 = sigma_{312} + q1  (x1^2 is the Schubert polynomial of 312)
    CHECK(column(m, "213") == std::map<std::string, QPoly>{{"312", {{{0, 0}, 1}}}, {"123", {{{1, 0}, 1}}}});
    CHECK_THROWS_AS(fl3_sigma_matrix(3), InvalidInput);
}

TEST_CASE("Fl(3) c1 at q = 0 is nilpotent") {
    for (auto v : fl3_c1_eigenvalues(0.0, 0.0)) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("Fl(3) c1 eigenvalues are the critical values") {
    for (auto [l1, l2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}}) {
        const double T0 = 0.5;
        auto cv = critical_values(fl3_space(l1, l2), T0);
        REQUIRE(cv.size() == 6);
        auto [q1, q2] = fl3_q_parameters(std::pow(T0, l1), 1.0, std::pow(T0, -l2));
        auto ev = fl3_c1_eigenvalues(q1, q2);
        CHECK(multiset_match(cv, ev, 1e-7).matched);
    }
}

TEST_CASE("multiset matching") {
    CHECK(multiset_match({1.0, cplx(0, 1)}, {cplx(0, 1), 1.0}, 1e-12).matched);
    CHECK_FALSE(multiset_match({1.0}, {1.1}, 0.01).matched);
    CHECK_THROWS_AS(multiset_match({1.0}, {1.0, 0.0}, 0.1), InvalidInput);
    CHECK(multiset_match({1.0}, {1.0, 0.0}, 0.1, true).matched);
    // greedy would pair 0.0 with 0.05 first and strand 0.1
    auto m = multiset_match({0.0, 0.1}, {0.05, -0.05}, 0.09);
    CHECK(m.matched);
    CHECK(m.pairing == std::vector<int>{1, 0});
}
