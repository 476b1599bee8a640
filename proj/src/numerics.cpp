#include "gcfloer/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gcfloer/errors.hpp"

namespace gcfloer {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (static_cast<size_t>(rows) * cols != a_.size())
        throw InvalidInput("rows*cols does not match entry count");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw InvalidInput("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    int n = static_cast<int>(d.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::leading_block(int k) const {
    if (k > rows_ || k > cols_) throw InvalidInput("leading block larger than matrix");
    ComplexMatrix b(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
    return b;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix b(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) b(j, i) = std::conj((*this)(i, j));
    return b;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix b(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) b(j, i) = (*this)(i, j);
    return b;
}

cplx ComplexMatrix::trace() const {
    cplx s = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            cplx aik = a(i, k);
            if (aik == cplx(0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum shape mismatch");
    ComplexMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a + cplx(-1.0) * b;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0;
    for (auto z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0;
    for (auto z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_row_norm(const ComplexMatrix& a) {
    double m = 0;
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0;
        for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
        m = std::max(m, std::sqrt(s));
    }
    return m;
}

void require_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.square() || m.rows() < 1) throw InvalidInput("Hermitian matrix must be square with dim >= 1");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (std::abs(m(j, i) - std::conj(m(i, j))) > tol) {
                std::ostringstream os;
                os << "matrix is not Hermitian at (" << i << "," << j << ")";
                throw InvalidInput(os.str());
            }
}

double unitarity_defect(const ComplexMatrix& u) {
    return max_abs(u.adjoint() * u - ComplexMatrix::identity(u.cols()));
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& m) {
    require_hermitian(m);
    const int n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, frobenius_norm(m));

    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; sweep < 100 && off_norm() > 1e-13 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // phase e^{-i phi} on q makes the (p,q) entry real, then a real rotation kills it
                cplx ph = std::conj(a(p, q)) / r;
                double app = a(p, p).real(), aqq = a(q, q).real();
                double theta = (aqq - app) / (2.0 * r);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                cplx gpp = c, gpq = s, gqp = -s * ph, gqq = c * ph;
                for (int k = 0; k < n; ++k) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
    }
    if (off_norm() > 1e-13 * scale) throw NonConvergence("Jacobi eigensolver did not converge in 100 sweeps");

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
    return hermitian_eigensystem(m).values;
}

namespace {

// Householder reduction to upper Hessenberg form, in place.
void to_hessenberg(ComplexMatrix& h) {
    const int n = h.rows();
    for (int k = 0; k + 2 < n; ++k) {
        double alpha_norm = 0;
        for (int i = k + 1; i < n; ++i) alpha_norm += std::norm(h(i, k));
        alpha_norm = std::sqrt(alpha_norm);
        double tail = 0;
        for (int i = k + 2; i < n; ++i) tail += std::norm(h(i, k));
        if (tail == 0.0) continue;
        std::vector<cplx> u(n, 0.0);
        cplx x0 = h(k + 1, k);
        cplx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : cplx(1.0);
        u[k + 1] = x0 + phase * alpha_norm;
        for (int i = k + 2; i < n; ++i) u[i] = h(i, k);
        double un = 0;
        for (int i = k + 1; i < n; ++i) un += std::norm(u[i]);
        // H <- (I - 2uu*/|u|^2) H (I - 2uu*/|u|^2)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int i = k + 1; i < n; ++i) s += std::conj(u[i]) * h(i, j);
            s *= 2.0 / un;
            for (int i = k + 1; i < n; ++i) h(i, j) -= u[i] * s;
        }
        for (int i = 0; i < n; ++i) {
            cplx s = 0;
            for (int j = k + 1; j < n; ++j) s += h(i, j) * u[j];
            s *= 2.0 / un;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(u[j]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
    cplx tr = a + d, det = a * d - b * c;
    cplx disc = std::sqrt(tr * tr / 4.0 - det);
    cplx l1 = tr / 2.0 + disc, l2 = tr / 2.0 - disc;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<cplx> complex_eigenvalues(const ComplexMatrix& m) {
    if (!m.square()) throw InvalidInput("complex_eigenvalues needs a square matrix");
    const int n = m.rows();
    std::vector<cplx> eig;
    if (n == 0) return eig;
    ComplexMatrix h = m;
    to_hessenberg(h);
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::max(max_abs(m), 1e-300);

    int hi = n - 1, iter = 0, total = 0;
    while (hi >= 0) {
        if (hi == 0) {
            eig.push_back(h(0, 0));
            break;
        }
        int l = hi;
        while (l > 0) {
            double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = scale;
            if (std::abs(h(l, l - 1)) <= eps * s) break;
            --l;
        }
        if (l == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (++total > 300 * n) throw NonConvergence("QR eigenvalue iteration did not converge");
        cplx mu;
        if (iter < 2) {
            mu = 0.0;
        } else if (iter % 11 == 10) {
            mu = h(hi, hi) + std::abs(h(hi, hi - 1)) * cplx(0.75, 0.5);
        } else {
            mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        }
        ++iter;

        for (int k = l; k <= hi; ++k) h(k, k) -= mu;
        std::vector<cplx> cs(hi - l), sn(hi - l);
        for (int k = l; k < hi; ++k) {
            cplx x = h(k, k), y = h(k + 1, k);
            double r = std::hypot(std::abs(x), std::abs(y));
            cplx c = 1.0, s = 0.0;
            if (r > 0) {
                c = x / r;
                s = y / r;
            }
            cs[k - l] = c;
            sn[k - l] = s;
            // rows k, k+1 <- G^* [row k; row k+1], G^* = [[conj c, conj s], [-s, c]]
            for (int j = k; j <= hi; ++j) {
                cplx a = h(k, j), b = h(k + 1, j);
                h(k, j) = std::conj(c) * a + std::conj(s) * b;
                h(k + 1, j) = -s * a + c * b;
            }
        }
        for (int k = l; k < hi; ++k) {
            cplx c = cs[k - l], s = sn[k - l];
            for (int i = l; i <= std::min(k + 1, hi); ++i) {
                cplx a = h(i, k), b = h(i, k + 1);
                h(i, k) = a * c + b * s;
                h(i, k + 1) = -a * std::conj(s) + b * std::conj(c);
            }
        }
        for (int k = l; k <= hi; ++k) h(k, k) += mu;
    }
    std::sort(eig.begin(), eig.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eig;
}

cplx determinant(const ComplexMatrix& m) {
    if (!m.square()) throw InvalidInput("determinant needs a square matrix");
    ComplexMatrix a = m;
    const int n = a.rows();
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == cplx(0)) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            cplx f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

std::optional<std::vector<cplx>> solve_linear(const ComplexMatrix& m, std::vector<cplx> b) {
    if (!m.square() || static_cast<int>(b.size()) != m.rows()) throw InvalidInput("solve_linear shape mismatch");
    ComplexMatrix a = m;
    const int n = a.rows();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == cplx(0)) return std::nullopt;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            cplx f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int j = k + 1; j < n; ++j) b[k] -= a(k, j) * b[j];
        b[k] /= a(k, k);
    }
    return b;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix q(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> v(n);
        for (auto& z : v) z = cplx(g(rng), g(rng));
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < j; ++p) {
                cplx d = 0;
                for (int i = 0; i < n; ++i) d += std::conj(q(i, p)) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= d * q(i, p);
            }
        double nv = 0;
        for (auto z : v) nv += std::norm(z);
        nv = std::sqrt(nv);
        for (int i = 0; i < n; ++i) q(i, j) = v[i] / nv;
    }
    return q;
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw InvalidInput("Gauss-Legendre order must be positive");
    GaussRule r{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = w;
    }
    return r;
}

cplx integrate_periodic(const std::function<cplx(double)>& f, double tol) {
    if (!(tol > 0)) throw InvalidInput("integrate_periodic: tol must be positive");
    static const GaussRule rule = gauss_legendre(kPanelOrder);
    const double two_pi = 2 * std::numbers::pi;
    auto composite = [&](long panels) {
        cplx s = 0;
        double h = two_pi / panels;
        for (long p = 0; p < panels; ++p) {
            double mid = (p + 0.5) * h;
            for (int i = 0; i < kPanelOrder; ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        }
        return s * (0.5 * h) / two_pi;
    };
    long panels = 1;
    cplx prev = composite(panels);
    for (int d = 0; d < 20; ++d) {
        panels *= 2;
        cplx cur = composite(panels);
        if (std::abs(cur - prev) < tol / 2) return cur;
        prev = cur;
    }
    throw NonConvergence("integrate_periodic: no convergence after 20 panel doublings", prev);
}

bool approx_equal(double expected, double got, double tol) {
    double err = std::abs(expected - got);
    return std::abs(expected) < 1 ? err < tol : err < tol * std::abs(expected);
}

bool approx_equal(cplx expected, cplx got, double tol) {
    double err = std::abs(expected - got);
    return std::abs(expected) < 1 ? err < tol : err < tol * std::abs(expected);
}

}  // namespace gcfloer
