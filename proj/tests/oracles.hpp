#pragma once

// Test-only oracles, kept independent of the enumeration engine they
// check: a plain box scan over [-box, box]^rank with 64-bit arithmetic
// (exact in this range) bucketing classes by square and degree.

#include "dpfano/lattice.hpp"

#include <map>

namespace dpfano::testing {

struct NamedLattice {
    std::string name;
    LatticePtr lattice;
    IntVec polarization;
};

inline const std::vector<NamedLattice>& shipped_lattices() {
    static const std::vector<NamedLattice> lattices = {
        {"B-i-2", make_lattice("B-i-2", {"H", "C"}, {{18, 6}, {6, 0}}), {1, 0}},
        {"B-i-3", make_lattice("B-i-3", {"H", "C"}, {{16, 6}, {6, 0}}), {1, 0}},
        {"B-ii", make_lattice("B-ii", {"H", "F", "B"}, {{6, 4, 6}, {4, 0, 3}, {6, 3, 2}}), {1, 0, 0}},
        {"B-iii-2", make_lattice("B-iii-2", {"H", "G", "B"}, {{6, 2, 9}, {2, -2, 6}, {9, 6, 6}}),
         {1, 0, 0}},
        {"B-iii-3",
         make_lattice("B-iii-3", {"Ha", "Hb", "F", "B"},
                      {{0, 2, 2, 0}, {2, 0, 2, 3}, {2, 2, 0, 3}, {0, 3, 3, -2}}),
         {1, 1, 0, 0}},
        {"B-iii-4", make_lattice("B-iii-4", {"H", "G", "B"}, {{6, 2, 11}, {2, -2, 8}, {11, 8, 8}}),
         {1, 0, 0}},
    };
    return lattices;
}

using Bucket = std::map<std::pair<long long, long long>, std::vector<IntVec>>;

// Buckets every box point with square in [-2, 2] (even) and degree in
// [1, max_degree] by (square, degree), sorted lexicographically.
inline Bucket box_scan(const NamedLattice& nl, long long box = 30, long long max_degree = 12) {
    const int n = nl.lattice->rank();
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = nl.lattice->gram()[i][j].convert_to<long long>();
    std::vector<long long> hrow(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            hrow[j] += nl.polarization[i].convert_to<long long>() * g[i][j];

    Bucket out;
    std::vector<long long> v(n, 0);
    auto visit = [&](auto&& self, int level) -> void {
        if (level == n - 1) {
            const long long a = g[n - 1][n - 1];
            long long b = 0, c = 0, dprefix = 0;
            for (int i = 0; i + 1 < n; ++i) {
                b += 2 * g[i][n - 1] * v[i];
                dprefix += hrow[i] * v[i];
                for (int j = 0; j + 1 < n; ++j) c += g[i][j] * v[i] * v[j];
            }
            for (long long t = -box; t <= box; ++t) {
                const long long square = a * t * t + b * t + c;
                const long long degree = dprefix + hrow[n - 1] * t;
                if (square < -2 || square > 2 || square % 2 != 0) continue;
                if (degree < 1 || degree > max_degree) continue;
                v[n - 1] = t;
                IntVec coords(n);
                for (int i = 0; i < n; ++i) coords[i] = Int(v[i]);
                out[{square, degree}].push_back(std::move(coords));
            }
            v[n - 1] = 0;
            return;
        }
        for (long long t = -box; t <= box; ++t) {
            v[level] = t;
            self(self, level + 1);
        }
        v[level] = 0;
    };
    visit(visit, 0);
    for (auto& [key, vecs] : out)
        std::sort(vecs.begin(), vecs.end(),
                  [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return out;
}

} // namespace dpfano::testing
