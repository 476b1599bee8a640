#include "gcfloer/qh.hpp"

#include <algorithm>
#include <functional>

#include "gcfloer/errors.hpp"

namespace gcfloer {

std::string to_string(const Partition& p) {
    std::string s = "(";
    bool first = true;
    for (int v : p) {
        if (v == 0) break;
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

std::vector<Partition> partitions_in_box(int k, int n) {
    if (k < 1 || k >= n) throw InvalidInput("need 1 <= k < n");
    std::vector<Partition> out;
    Partition cur(k, 0);
    std::function<void(int, int)> rec = [&](int row, int cap) {
        if (row == k) {
            out.push_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur[row] = v;
            rec(row + 1, v);
        }
        cur[row] = 0;
    };
    rec(0, n - k);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        int sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        return sa < sb;
    });
    return out;
}

ComplexMatrix QHMatrix::specialize(const std::vector<cplx>& q) const {
    if (static_cast<int>(q.size()) != nparams) throw InvalidInput("wrong number of quantum parameters");
    ComplexMatrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (const auto& [deg, c] : entries[i][j]) {
                cplx term = static_cast<double>(c);
                for (int p = 0; p < nparams; ++p) term *= std::pow(q[p], deg[p]);
                m(i, j) += term;
            }
    return m;
}

QHMatrix sigma1_matrix(int k, int n) {
    if (k < 1 || k >= n || n > 6) throw InvalidInput("sigma1_matrix needs 1 <= k < n <= 6");
    auto parts = partitions_in_box(k, n);
    QHMatrix m;
    m.nparams = 1;
    for (const auto& p : parts) m.basis.push_back(to_string(p));
    m.entries.assign(parts.size(), std::vector<QPoly>(parts.size()));
    auto index = [&](const Partition& p) {
        return static_cast<int>(std::find(parts.begin(), parts.end(), p) - parts.begin());
    };
    for (size_t j = 0; j < parts.size(); ++j) {
        const auto& lam = parts[j];
        for (int r = 0; r < k; ++r)
            if (lam[r] < n - k && (r == 0 || lam[r - 1] > lam[r])) {
                Partition mu = lam;
                ++mu[r];
                m.entries[index(mu)][j][{0}] += 1;
            }
        if (lam[0] == n - k && lam[k - 1] >= 1) {
            Partition mu(k, 0);
            for (int r = 1; r < k; ++r) mu[r - 1] = lam[r] - 1;
            m.entries[index(mu)][j][{1}] += 1;
        }
    }
    return m;
}

namespace {

std::vector<cplx> eigenvalues_of(const QHMatrix& m, const std::vector<cplx>& q, double scale) {
    // the transpose is upper triangular at q = 0, which the Hessenberg step keeps exact
    return complex_eigenvalues((scale * m.specialize(q)).transpose());
}

int inversions(const std::vector<int>& w) {
    int c = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++c;
    return c;
}

std::string perm_label(const std::vector<int>& w) {
    std::string s;
    for (int v : w) s += std::to_string(v);
    return s;
}

}  // namespace

std::vector<cplx> c1_eigenvalues_grassmannian(int k, int n, cplx q) {
    return eigenvalues_of(sigma1_matrix(k, n), {q}, static_cast<double>(n));
}

std::vector<std::vector<int>> fl3_schubert_basis() {
    return {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
}

QHMatrix fl3_sigma_matrix(int i) {
    if (i != 1 && i != 2) throw InvalidInput("Fl(3) has simple reflections s1 and s2 only");
    auto basis = fl3_schubert_basis();
    QHMatrix m;
    m.nparams = 2;
    for (const auto& w : basis) m.basis.push_back(perm_label(w));
    m.entries.assign(basis.size(), std::vector<QPoly>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        const auto& w = basis[j];
        const int lw = inversions(w);
        // transpositions t_ab with a <= i < b (1-based positions)
        for (int a = 1; a <= i; ++a)
            for (int b = i + 1; b <= 3; ++b) {
                auto v = w;
                std::swap(v[a - 1], v[b - 1]);
                const int lv = inversions(v);
                const auto row = static_cast<size_t>(std::find(basis.begin(), basis.end(), v) - basis.begin());
                if (lv == lw + 1) {
                    m.entries[row][j][{0, 0}] += 1;
                } else if (lv == lw - (2 * (b - a) - 1)) {
                    std::vector<int> deg{0, 0};
                    for (int c = a; c < b; ++c) deg[c - 1] += 1;  // q_a ... q_{b-1}
                    m.entries[row][j][deg] += 1;
                }
            }
    }
    return m;
}

QHMatrix fl3_c1_matrix() {
    QHMatrix a = fl3_sigma_matrix(1), b = fl3_sigma_matrix(2);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            for (auto& [deg, c] : a.entries[i][j]) c *= 2;
            for (const auto& [deg, c] : b.entries[i][j]) a.entries[i][j][deg] += 2 * c;
        }
    return a;
}

std::vector<cplx> fl3_c1_eigenvalues(cplx q1, cplx q2) { return eigenvalues_of(fl3_c1_matrix(), {q1, q2}, 1.0); }

std::pair<cplx, cplx> fl3_q_parameters(double Q1, double Q2, double Q3, Fl3QConvention conv) {
    if (conv == Fl3QConvention::Ratio) return {Q1 / Q2, Q2 / Q3};
    return {Q2 / Q3, Q1 / Q2};
}

MultisetMatch multiset_match(std::vector<cplx> a, std::vector<cplx> b, double tol, bool pad_zeros) {
    if (a.size() != b.size()) {
        if (!pad_zeros) throw InvalidInput("multiset sizes differ: " + std::to_string(a.size()) + " vs " +
                                           std::to_string(b.size()));
        auto& shorter = a.size() < b.size() ? a : b;
        shorter.resize(std::max(a.size(), b.size()), 0.0);
    }
    const size_t n = a.size();
    // Kuhn's augmenting paths on the graph of pairs closer than tol
    std::vector<int> owner(n, -1);  // owner[j] = index in a matched to b[j]
    std::function<bool(size_t, std::vector<char>&)> augment = [&](size_t i, std::vector<char>& seen) {
        for (size_t j = 0; j < n; ++j) {
            if (seen[j] || std::abs(a[i] - b[j]) >= tol) continue;
            seen[j] = 1;
            if (owner[j] < 0 || augment(static_cast<size_t>(owner[j]), seen)) {
                owner[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    MultisetMatch out;
    out.pairing.assign(n, -1);
    out.matched = true;
    for (size_t i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        if (!augment(i, seen)) out.matched = false;
    }
    for (size_t j = 0; j < n; ++j)
        if (owner[j] >= 0) {
            out.pairing[owner[j]] = static_cast<int>(j);
            out.worst = std::max(out.worst, std::abs(a[owner[j]] - b[j]));
        }
    return out;
}

}  // namespace gcfloer
