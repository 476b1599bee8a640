#pragma once

// Rim-hook oracle for sigma_1 * sigma_lambda in QH*(Gr(k, n)): multiply
// classically among partitions with at most k rows (no width bound), then
// strip n-rim hooks via beta-numbers beta_i = mu_i + k - i. Removing a hook
// subtracts n from one beta-number; the sign is (-1)^{k - height}.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Part = std::vector<int>;
// (partition in the box, q-degree) -> coefficient
using Expansion = std::map<std::pair<Part, int>, long>;

inline bool reduce_rim_hooks(Part mu, int k, int n, Part& out, int& degree, int& sign) {
    degree = 0;
    sign = 1;
    while (mu[0] > n - k) {
        std::vector<int> beta(k);
        for (int i = 0; i < k; ++i) beta[i] = mu[i] + k - 1 - i;
        bool done = false;
        for (int i = 0; i < k && !done; ++i) {
            int nb = beta[i] - n;
            if (nb < 0 || std::count(beta.begin(), beta.end(), nb)) continue;
            int between = 0;
            for (int j = 0; j < k; ++j)
                if (beta[j] > nb && beta[j] < beta[i]) ++between;
            int height = between + 1;
            if ((k - height) % 2) sign = -sign;
            beta[i] = nb;
            std::sort(beta.rbegin(), beta.rend());
            for (int j = 0; j < k; ++j) mu[j] = beta[j] - (k - 1 - j);
            ++degree;
            done = true;
        }
        if (!done) return false;
    }
    out = mu;
    return true;
}

inline Expansion sigma1_times(const Part& lam, int k, int n) {
    Expansion e;
    for (int r = 0; r < k; ++r) {
        if (r > 0 && lam[r - 1] == lam[r]) continue;
        Part mu = lam;
        ++mu[r];
        Part red;
        int d, s;
        if (reduce_rim_hooks(mu, k, n, red, d, s)) e[{red, d}] += s;
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
}

}  // namespace oracle
