#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gcfloer/errors.hpp"
#include "gcfloer/numerics.hpp"

using namespace gcfloer;
using std::numbers::pi;

namespace {

double eigen_residual(const ComplexMatrix& m, const EigenSystem& es) {
    double worst = 0;
    const int n = m.rows();
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < n; ++i) {
            cplx r = -es.values[j] * es.vectors(i, j);
            for (int k = 0; k < n; ++k) r += m(i, k) * es.vectors(k, j);
            s += std::norm(r);
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = cplx(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("hermitian eigenvalues of a diagonal matrix") {
    auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal({3, 1, -2}));
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(3).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(1).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(-2).epsilon(1e-14));
}

TEST_CASE("hermitian eigenvalues of the S3 fiber matrix") {
    double l1 = 2, l2 = 1, z1 = std::sqrt(l1 * l2);
    ComplexMatrix m{{0, 0, z1}, {0, 0, 0}, {z1, 0, l1 - l2}};
    auto es = hermitian_eigensystem(m);
    CHECK(std::abs(es.values[0] - 2) < 1e-12);
    CHECK(std::abs(es.values[1] - 0) < 1e-12);
    CHECK(std::abs(es.values[2] + 1) < 1e-12);
    CHECK(eigen_residual(m, es) < 1e-10);
}

TEST_CASE("hermitian eigenvalues of the swap matrix") {
    auto ev = hermitian_eigenvalues(ComplexMatrix{{0, 1}, {1, 0}});
    CHECK(std::abs(ev[0] - 1) < 1e-14);
    CHECK(std::abs(ev[1] + 1) < 1e-14);
}

TEST_CASE("non-Hermitian input is rejected") {
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{0, 1}, {2, 0}}), InvalidInput);
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{cplx(0, 1)}}), InvalidInput);
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), InvalidInput);
}

TEST_CASE("eigenpairs reconstruct random Hermitian matrices") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            auto m = random_hermitian(n, rng);
            auto es = hermitian_eigensystem(m);
            CHECK(eigen_residual(m, es) < 1e-10);
            CHECK(std::is_sorted(es.values.rbegin(), es.values.rend()));
            CHECK(unitarity_defect(es.vectors) < 1e-12);
        }
}

TEST_CASE("eigenvalues are invariant under unitary conjugation") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 8; ++n) {
        auto m = random_hermitian(n, rng);
        auto U = random_unitary(n, rng);
        auto a = hermitian_eigenvalues(m);
        auto b = hermitian_eigenvalues(U * m * U.adjoint());
        for (int i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
    }
}

TEST_CASE("eigenvalues sum to the trace") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 8; ++n) {
        auto m = random_hermitian(n, rng);
        auto ev = hermitian_eigenvalues(m);
        double s = 0;
        for (double v : ev) s += v;
        CHECK(std::abs(s - m.trace().real()) < 1e-10);
    }
}

TEST_CASE("random unitary is unitary") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 8; ++n) CHECK(unitarity_defect(random_unitary(n, rng)) < 1e-13);
}

TEST_CASE("complex eigenvalues of the identity") {
    auto ev = complex_eigenvalues(ComplexMatrix::identity(3));
    REQUIRE(ev.size() == 3);
    for (auto z : ev) CHECK(std::abs(z - 1.0) < 1e-14);
}

TEST_CASE("complex eigenvalues of a companion matrix are roots of z^4 - q") {
    cplx q(0.3, -1.2);
    ComplexMatrix c(4, 4);
    for (int i = 1; i < 4; ++i) c(i, i - 1) = 1;
    c(0, 3) = q;
    auto ev = complex_eigenvalues(c);
    REQUIRE(ev.size() == 4);
    for (auto z : ev) CHECK(std::abs(std::pow(z, 4) - q) < 1e-12);
    // distinct roots
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(std::abs(ev[i] - ev[j]) > 0.5);
    // ordering contract
    for (int i = 0; i + 1 < 4; ++i)
        CHECK((ev[i].real() < ev[i + 1].real() ||
               (ev[i].real() == ev[i + 1].real() && ev[i].imag() <= ev[i + 1].imag())));
}

TEST_CASE("complex eigenvalues satisfy the determinant residual bound") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 12; ++n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
        auto ev = complex_eigenvalues(m);
        REQUIRE(static_cast<int>(ev.size()) == n);
        double bound = 1e-8 * std::pow(frobenius_norm(m), n);
        for (auto z : ev) CHECK(std::abs(determinant(m - z * ComplexMatrix::identity(n))) < bound);
        cplx s = 0;
        for (auto z : ev) s += z;
        CHECK(std::abs(s - m.trace()) < 1e-9 * (1 + std::abs(m.trace())));
    }
}

TEST_CASE("complex eigenvalues reject non-square input") {
    CHECK_THROWS_AS(complex_eigenvalues(ComplexMatrix(2, 3)), InvalidInput);
}

TEST_CASE("determinant of a permutation and a triangular matrix") {
    CHECK(std::abs(determinant(ComplexMatrix{{0, 1}, {1, 0}}) + 1.0) < 1e-15);
    CHECK(std::abs(determinant(ComplexMatrix{{2, 5, 1}, {0, cplx(0, 3), 7}, {0, 0, -1}}) - cplx(0, -6)) < 1e-14);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1") {
    auto r = gauss_legendre(16);
    double wsum = 0;
    for (double w : r.weights) wsum += w;
    CHECK(std::abs(wsum - 2) < 1e-14);
    for (int d = 0; d <= 31; ++d) {
        double s = 0;
        for (int i = 0; i < 16; ++i) s += r.weights[i] * std::pow(r.nodes[i], d);
        double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
        CHECK(std::abs(s - exact) < 1e-13);
    }
}

TEST_CASE("integrate_periodic: mean of 1 - cos") {
    auto v = integrate_periodic([](double th) { return cplx(1 - std::cos(th)); }, 1e-12);
    CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("integrate_periodic: pair integrand gives 16/(3 pi)") {
    auto v = integrate_periodic(
        [](double th) { return std::exp(cplx(0, th / 2)) * std::exp(cplx(0, -pi / 2)) * (1 - std::cos(th)); },
        1e-12);
    CHECK(std::abs(2.0 * v - 16.0 / (3 * pi)) < 1e-11);
}

TEST_CASE("integrate_periodic: e^x from the split exponential") {
    double x = 0.3;
    auto v = integrate_periodic(
        [x](double th) {
            double s = th / (2 * pi);
            return cplx(std::exp(s * x) * std::exp((1 - s) * x) * (1 - std::cos(th)));
        },
        1e-12);
    CHECK(std::abs(v - std::exp(0.3)) < 1e-12);
}

TEST_CASE("integrate_periodic: exact means of trigonometric polynomials") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<cplx> c(2 * kPanelOrder + 1);
        for (auto& z : c) z = cplx(g(rng), g(rng));
        auto f = [&](double th) {
            cplx s = 0;
            for (int k = -kPanelOrder; k <= kPanelOrder; ++k) s += c[k + kPanelOrder] * std::exp(cplx(0, k * th));
            return s;
        };
        CHECK(std::abs(integrate_periodic(f, 1e-12) - c[kPanelOrder]) < 1e-12);
    }
}

TEST_CASE("integrate_periodic is linear") {
    auto f = [](double th) { return cplx(std::exp(std::sin(th)), th * th); };
    auto g = [](double th) { return cplx(std::cos(3 * th) * th, 1.0 / (2 + std::cos(th))); };
    cplx a(1.5, -0.25), b(-0.75, 2);
    auto lhs = integrate_periodic([&](double th) { return a * f(th) + b * g(th); }, 1e-12);
    auto rhs = a * integrate_periodic(f, 1e-12) + b * integrate_periodic(g, 1e-12);
    CHECK(std::abs(lhs - rhs) < 1e-11);
}

TEST_CASE("integrate_periodic errors") {
    auto f = [](double th) { return cplx(th); };
    CHECK_THROWS_AS(integrate_periodic(f, 0.0), InvalidInput);
    CHECK_THROWS_AS(integrate_periodic(f, -1.0), InvalidInput);
    try {
        integrate_periodic([](double th) { return cplx(std::sqrt(th)); }, 1e-300);
        FAIL("expected non-convergence");
    } catch (const NonConvergence& e) {
        // mean of sqrt(theta) over [0, 2 pi] is (2/3) sqrt(2 pi)
        CHECK(std::abs(e.last_estimate - (2.0 / 3.0) * std::sqrt(2 * pi)) < 1e-6);
    }
}

TEST_CASE("approx_equal switches between absolute and relative") {
    CHECK(approx_equal(0.5, 0.5 + 5e-9, 1e-8));
    CHECK_FALSE(approx_equal(0.5, 0.5 + 2e-8, 1e-8));
    CHECK(approx_equal(100.0, 100.0 + 5e-7, 1e-8));
    CHECK_FALSE(approx_equal(100.0, 100.0 + 2e-6, 1e-8));
}
