#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcfloer/numerics.hpp"

namespace gcfloer {

// Weakly decreasing, padded with zeros to length k.
using Partition = std::vector<int>;

std::string to_string(const Partition& p);

// All partitions in the k x (n-k) box, ordered by size, then reverse-lex.
std::vector<Partition> partitions_in_box(int k, int n);

// Polynomial in one or more quantum parameters with integer coefficients,
// keyed by the degree vector.
using QPoly = std::map<std::vector<int>, long>;

struct QHMatrix {
    std::vector<std::string> basis;
    int nparams = 1;
    // entries[i][j]: coefficient of basis i in (class * basis j)
    std::vector<std::vector<QPoly>> entries;

    int dim() const { return static_cast<int>(basis.size()); }
    ComplexMatrix specialize(const std::vector<cplx>& q) const;
};

// Quantum multiplication by sigma_1 on QH*(Gr(k, n)); 1 <= k < n <= 6.
QHMatrix sigma1_matrix(int k, int n);
// Eigenvalues of c_1 = n sigma_1 at the given q.
std::vector<cplx> c1_eigenvalues_grassmannian(int k, int n, cplx q);

// Schubert basis of Fl(3) by permutations in one-line notation.
std::vector<std::vector<int>> fl3_schubert_basis();
// Quantum multiplication by sigma_{s_i}, i in {1, 2} (quantum Monk rule).
QHMatrix fl3_sigma_matrix(int i);
// c_1 = 2 (sigma_{s1} + sigma_{s2})
QHMatrix fl3_c1_matrix();
std::vector<cplx> fl3_c1_eigenvalues(cplx q1, cplx q2);

// How the Novikov constants Q1, Q2, Q3 of the Fl(3) profile feed q1, q2.
enum class Fl3QConvention { Ratio, SwappedRatio };
std::pair<cplx, cplx> fl3_q_parameters(double Q1, double Q2, double Q3, Fl3QConvention conv = Fl3QConvention::Ratio);

struct MultisetMatch {
    bool matched = false;
    std::vector<int> pairing;  // pairing[i] = index in b matched with a[i], -1 if none
    double worst = 0;          // largest paired distance
};

// Perfect matching with every paired distance < tol. With pad_zeros the
// shorter side is padded with zeros first; otherwise sizes must agree.
MultisetMatch multiset_match(std::vector<cplx> a, std::vector<cplx> b, double tol, bool pad_zeros = false);

}  // namespace gcfloer
