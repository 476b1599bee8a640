#pragma once

// Determinantal-divisor oracle: over a valuation ring the k-th invariant
// factor valuation is d_k - d_{k-1}, where d_k is the least valuation among
// all k x k minors. Minors are expanded along the first row, so nothing here
// shares code with the pivoting elimination.

#include <functional>
#include <optional>
#include <vector>

#include "gcfloer/novikov.hpp"

namespace oracle {

using gcfloer::NovikovMatrix;
using gcfloer::NovikovSeries;
using gcfloer::Rational;

inline NovikovSeries minor_det(const NovikovMatrix& m, const std::vector<int>& r, const std::vector<int>& c) {
    if (r.size() == 1) return m(r[0], c[0]);
    NovikovSeries s(m.cutoff());
    std::vector<int> rest_r(r.begin() + 1, r.end());
    for (size_t j = 0; j < c.size(); ++j) {
        if (m(r[0], c[j]).is_zero()) continue;
        std::vector<int> rest_c;
        for (size_t q = 0; q < c.size(); ++q)
            if (q != j) rest_c.push_back(c[q]);
        NovikovSeries term = m(r[0], c[j]) * minor_det(m, rest_r, rest_c);
        s = (j % 2 == 0) ? s + term : s - term;
    }
    return s;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

struct InvariantFactors {
    int rank = 0;
    std::vector<Rational> valuations;  // e_1 <= e_2 <= ...
};

inline InvariantFactors invariant_factors(const NovikovMatrix& m) {
    InvariantFactors out;
    Rational prev = 0;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<int>> rs, cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        std::optional<Rational> best;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                auto v = minor_det(m, r, c).valuation();
                if (v && (!best || *v < *best)) best = v;
            }
        if (!best) break;
        out.rank = k;
        out.valuations.push_back(*best - prev);
        prev = *best;
    }
    return out;
}

}  // namespace oracle
