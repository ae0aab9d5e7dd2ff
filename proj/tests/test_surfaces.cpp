#include "dpfano/surfaces.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dpfano;

namespace {

// Independent line-count oracle: classes a*h - sum b_i e_i with square -1
// and anticanonical degree 1, enumerated by recursion on the b_i with
// partial-sum pruning. Deliberately not the lattice-point engine.
int count_lines_oracle(int n) {
    long long total = 0;
    // 3a - sum(b) = 1 and a^2 - sum(b^2) = -1
    for (long long a = -10; a <= 10; ++a) {
        const long long need_sum = 3 * a - 1;
        const long long need_sq = a * a + 1;
        std::vector<long long> b(n, 0);
        auto rec = [&](auto&& self, int i, long long sum_left, long long sq_left) -> void {
            if (i == n) {
                if (sum_left == 0 && sq_left == 0) ++total;
                return;
            }
            const long long remaining = n - i;
            for (long long v = -12; v <= 12; ++v) {
                const long long s = sum_left - v, q = sq_left - v * v;
                if (q < 0) continue;
                // Cauchy-Schwarz: the rest must satisfy s^2 <= remaining' * q
                const long long rest = remaining - 1;
                if (rest == 0) {
                    if (s == 0 && q == 0) ++total;
                    continue;
                }
                if (s * s > rest * q) continue;
                b[i] = v;
                self(self, i + 1, s, q);
            }
        };
        if (n == 0) {
            if (need_sum == 0 && need_sq == 0) ++total;
        } else {
            rec(rec, 0, need_sum, need_sq);
        }
    }
    return static_cast<int>(total);
}

} // namespace

TEST_CASE("del Pezzo lattice construction") {
    auto dp = make_del_pezzo(6);
    CHECK(dp.lattice->rank() == 7);
    CHECK(pairing(dp.canonical, dp.canonical) == 3); // K^2 = 9 - n
    CHECK_THROWS_AS(make_del_pezzo(9), std::invalid_argument);
    CHECK_THROWS_AS(make_del_pezzo(-1), std::invalid_argument);
}

TEST_CASE("(-1)-class counts match the classical line counts and the oracle") {
    const std::map<int, int> classical = {{3, 6}, {4, 10}, {5, 16}, {6, 27}, {7, 56}, {8, 240}};
    for (const auto& [n, expected] : classical) {
        INFO("n = " << n);
        auto dp = make_del_pezzo(n);
        const auto lines = minus_one_classes(dp);
        CHECK(static_cast<int>(lines.size()) == expected);
        CHECK(count_lines_oracle(n) == expected);
        for (const auto& l : lines) {
            CHECK(pairing(l, l) == -1);
            CHECK(pairing(dp.canonical, l) == -1);
        }
    }
    CHECK(minus_one_classes(make_del_pezzo(0)).empty());
    CHECK(minus_one_classes(make_del_pezzo(5)).size() == 16);
}

TEST_CASE("nefness against the lines of a cubic surface") {
    auto dp = make_del_pezzo(6);
    const DivisorClass neg_k = -dp.canonical;
    CHECK(nef_on_del_pezzo(dp, neg_k).nef);

    // 2(-K) - e1 - e6 is nef
    const DivisorClass l = dp.cls({6, -3, -2, -2, -2, -2, -3});
    const auto r = nef_on_del_pezzo(dp, l);
    CHECK(r.nef);
    CHECK(r.lines.size() == 27);

    const auto bad = nef_on_del_pezzo(dp, dp.cls({1, -1, -1, -1, 0, 0, 0}));
    CHECK_FALSE(bad.nef);
    const DivisorClass witness = dp.cls({1, -1, -1, 0, 0, 0, 0});
    CHECK(std::any_of(bad.violators.begin(), bad.violators.end(),
                      [&](const DivisorClass& v) { return v.coords == witness.coords; }));

    CHECK_THROWS_AS(nef_on_del_pezzo(make_del_pezzo(1), dp.cls({1, 0, 0, 0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("adjunction genus") {
    // product surface with an elliptic base: B = 2a + 5b has genus 6
    auto prod = make_product_surface(1);
    CHECK(adjunction_genus(prod.canonical, prod.cls({2, 5})) == 6);

    // trivial canonical class: genus 1 + B^2/2
    auto k3 = make_lattice("k3", {"H", "C"}, {{18, 6}, {6, 0}});
    DivisorClass zero(k3, {0, 0});
    DivisorClass b(k3, {1, -1}); // square 6
    CHECK(adjunction_genus(zero, b) == 4);
    auto sq8 = make_lattice("sq8", {"B"}, {{8}});
    CHECK(adjunction_genus(DivisorClass(sq8, {0}), DivisorClass(sq8, {1})) == 5);

    // a line in the plane
    auto dp0 = make_del_pezzo(0);
    CHECK(adjunction_genus(dp0.canonical, dp0.cls({1})) == 0);

    // anticanonical members are elliptic for every n
    for (int n = 0; n <= 8; ++n) {
        auto dp = make_del_pezzo(n);
        CHECK(adjunction_genus(dp.canonical, -dp.canonical) == 1);
    }

    // inconsistent classes are rejected: negative genus and odd parity
    auto dp1 = make_del_pezzo(1);
    CHECK_THROWS_AS(adjunction_genus(dp1.canonical, dp1.cls({0, 2})), std::invalid_argument);
    auto odd = make_lattice("odd", {"x"}, {{1}});
    CHECK_THROWS_AS(adjunction_genus(DivisorClass(odd, {0}), DivisorClass(odd, {1})),
                    std::invalid_argument);
}

TEST_CASE("cubic-surface class arithmetic for the two quartic curves") {
    auto dp = make_del_pezzo(6);
    const DivisorClass b = dp.cls({3, -1, -1, -1, -1, -1, 0});
    const DivisorClass gamma = dp.cls({3, 0, -1, -1, -1, -1, -1});
    CHECK(pairing(b, gamma) == 5);
    CHECK(pairing(-dp.canonical, b) == 4);
    CHECK(pairing(-dp.canonical, gamma) == 4);
    CHECK(adjunction_genus(dp.canonical, b) == 1);
    CHECK(adjunction_genus(dp.canonical, gamma) == 1);
}

TEST_CASE("ruled surface model and restriction arithmetic") {
    auto g = make_ruled_surface(1, -16,
                                {{"H", {0, 4}}, {"G", {-1, 0}}, {"E", {1, 11}}});
    CHECK(pairing(g.canonical, g.cls({0, 1})) == -2); // K.f = -2
    CHECK(pairing(g.cls({0, 1}), g.cls({0, 1})) == 0);

    const DivisorClass b = g.cls({1, 11});
    CHECK(pairing(b, g.cls({0, 1})) == 1); // a section
    CHECK(adjunction_genus(g.canonical, b) == 1);

    // the four ambient degrees: sigma*O(1).B, G.B, F_W.B, (-K_W).B
    CHECK(pairing(g.restrictions.at("H"), b) == 4);
    CHECK(pairing(g.restrictions.at("G"), b) == 5);
    const DivisorClass fw = restricted_class(g, {{"H", 2}, {"G", -1}});
    CHECK(pairing(fw, b) == 3);
    const DivisorClass kw = restricted_class(g, {{"H", 4}, {"G", -1}});
    CHECK(pairing(kw, b) == 11);

    // -K_Z restricted to the exceptional ruled surface is five fiber classes
    const DivisorClass kz = restricted_class(g, {{"H", 4}, {"G", -1}, {"E", -1}});
    CHECK(kz.coords == IntVec{0, 5});

    CHECK(restricted_class(g, {}).is_zero());
    CHECK_THROWS_AS(restricted_class(g, {{"missing", 1}}), std::invalid_argument);
}

TEST_CASE("product surface model") {
    auto s = make_product_surface(1);
    CHECK(pairing(s.cls({1, 0}), s.cls({1, 0})) == 0);
    CHECK(pairing(s.cls({0, 1}), s.cls({0, 1})) == 0);
    CHECK(pairing(s.cls({1, 0}), s.cls({0, 1})) == 1);

    const DivisorClass b = s.cls({2, 5});
    CHECK(pairing(s.cls({1, 0}), b) == 5);         // F.B
    CHECK(pairing(s.cls({0, 3}), b) == 6);         // H.B
    CHECK(pairing(s.cls({2, 9}), b) == 28);        // (-K_W).B
    CHECK(adjunction_genus(s.canonical, b) == 6);
}
