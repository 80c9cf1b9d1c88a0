#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace gkt::testing {

// Independent integer re-derivation of the cube order and the dyadic centres.
inline std::vector<std::pair<int, int>> oracle_pairs(std::size_t count) {
    std::vector<std::pair<int, int>> out;
    for (int d = 2; out.size() < count; ++d) {
        std::vector<std::pair<int, int>> diag;
        if (d == 2) {
            diag = {{1, 1}};
        } else if (d == 3) {
            diag = {{2, 1}, {1, 2}};
        } else if (d % 2 == 0) {
            for (int l = 1; l <= d - 1; ++l) diag.emplace_back(l, d - l);
        } else {
            for (int l = d - 2; l >= 1; --l) diag.emplace_back(l, d - l);
            diag.emplace_back(d - 1, 1);
        }
        for (auto p : diag)
            if (out.size() < count) out.push_back(p);
    }
    return out;
}

// Dyadic p / 2^q in lowest terms, listed stage by stage.
inline std::vector<std::pair<std::int64_t, int>> oracle_dyadics(std::size_t count) {
    std::vector<std::pair<std::int64_t, int>> out;
    std::set<std::pair<std::int64_t, int>> seen;
    for (int q = 0; out.size() < count; ++q) {
        const std::int64_t den = std::int64_t{1} << q;
        for (std::int64_t a = 0; a <= q * den && out.size() < count; ++a) {
            for (std::int64_t p : {a, -a}) {
                if (a == 0 && p != 0) continue;
                std::int64_t pp = p;
                int qq = q;
                while (qq > 0 && pp % 2 == 0) {
                    pp /= 2;
                    --qq;
                }
                if (seen.insert({pp, qq}).second && out.size() < count) out.emplace_back(pp, qq);
                if (a == 0) break;
            }
        }
    }
    return out;
}

/// Sum of 2^-k over the first K 1-d cubes whose closed interval contains 0.
inline double oracle_origin_mass(std::size_t count) {
    const auto pairs = oracle_pairs(count);
    int max_rational = 1;
    for (const auto& p : pairs) max_rational = std::max(max_rational, p.second);
    const auto dy = oracle_dyadics(static_cast<std::size_t>(max_rational));
    double mass = 0.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [p, q] = dy[static_cast<std::size_t>(pairs[k].second - 1)];
        const int level = pairs[k].first;
        // |p| / 2^q <= 2^-(level+1)  <=>  |p| 2^(level+1) <= 2^q
        const std::int64_t ap = p < 0 ? -p : p;
        const bool covers = ap == 0 || (level + 1 < 62 - q && (ap << (level + 1)) <= (std::int64_t{1} << q));
        if (covers) mass += std::ldexp(1.0, -static_cast<int>(k + 1));
    }
    return mass;
}

}  // namespace gkt::testing
