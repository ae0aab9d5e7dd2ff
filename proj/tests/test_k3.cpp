#include "dpfano/k3.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dpfano;

namespace {

PolarizedK3Model bi2_model() {
    auto lat = make_lattice("B-i-2", {"H", "C"}, {{18, 6}, {6, 0}});
    return {lat, DivisorClass(lat, {1, 0}), {{"C", DivisorClass(lat, {0, 1})}}, {"C"}};
}

PolarizedK3Model bi3_model() {
    auto lat = make_lattice("B-i-3", {"H", "C"}, {{16, 6}, {6, 0}});
    return {lat, DivisorClass(lat, {1, 0}), {{"C", DivisorClass(lat, {0, 1})}}, {"C"}};
}

PolarizedK3Model bii_model() {
    auto lat = make_lattice("B-ii", {"H", "F", "B"}, {{6, 4, 6}, {4, 0, 3}, {6, 3, 2}});
    return {lat, DivisorClass(lat, {1, 0, 0})};
}

PolarizedK3Model biii2_model() {
    auto lat = make_lattice("B-iii-2", {"H", "G", "B"}, {{6, 2, 9}, {2, -2, 6}, {9, 6, 6}});
    return {lat, DivisorClass(lat, {1, 0, 0})};
}

PolarizedK3Model biii3_model() {
    auto lat = make_lattice("B-iii-3", {"Ha", "Hb", "F", "B"},
                            {{0, 2, 2, 0}, {2, 0, 2, 3}, {2, 2, 0, 3}, {0, 3, 3, -2}});
    return {lat, DivisorClass(lat, {1, 1, 0, 0})};
}

PolarizedK3Model biii4_model() {
    auto lat = make_lattice("B-iii-4", {"H", "G", "B"}, {{6, 2, 11}, {2, -2, 8}, {11, 8, 8}});
    return {lat, DivisorClass(lat, {1, 0, 0})};
}

DivisorClass cls(const PolarizedK3Model& m, IntVec v) { return {m.lattice(), std::move(v)}; }

} // namespace

TEST_CASE("model construction enforces the K3 lattice invariants") {
    auto odd = make_lattice("odd", {"a"}, {{2}});
    CHECK_NOTHROW(PolarizedK3Model(odd, DivisorClass(odd, {1})));
    auto truly_odd = make_lattice("odd2", {"a", "b"}, {{1, 0}, {0, -1}});
    CHECK_THROWS_AS(PolarizedK3Model(truly_odd, DivisorClass(truly_odd, {1, 0})),
                    std::invalid_argument);
    auto negdef = make_lattice("neg", {"a"}, {{-2}});
    CHECK_THROWS_AS(PolarizedK3Model(negdef, DivisorClass(negdef, {1})), std::invalid_argument);
    auto hyp = make_lattice("hyp", {"e", "f"}, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(PolarizedK3Model(hyp, DivisorClass(hyp, {1, 0})), std::invalid_argument);
}

TEST_CASE("section counts by Riemann-Roch") {
    auto m = bi2_model();
    CHECK(h0_rr(m, m.polarization()) == 11);
    CHECK(h0_rr(m, m.named_class("C")) == 2);
    CHECK(h0_rr(m, cls(m, {0, 0})) == 1);

    auto b2 = bii_model();
    CHECK(h0_rr(b2, cls(b2, {1, -1, 0})) == 1); // a (-2)-class is rigid
    CHECK_THROWS_AS(h0_rr(b2, cls(b2, {0, 1, -1})), std::invalid_argument); // square -4
    CHECK_THROWS_AS(h0_rr(b2, -b2.polarization()), std::invalid_argument);  // negative degree

    // the dimension counts the catalog relies on: 11, 26, 5, 2, 1
    auto b3 = biii3_model();
    CHECK(h0_rr(b3, cls(b3, {2, 2, 2, 0})) == 26);
    CHECK(h0_rr(m, cls(m, {1, -1})) == 5);
}

TEST_CASE("effectivity candidates") {
    auto m = bii_model();
    CHECK(effective_candidate(m, cls(m, {0, 1, 0})));   // F^2 = 0, H.F = 4
    CHECK(effective_candidate(m, cls(m, {2, 1, -1})));  // square 12, degree 10
    CHECK_FALSE(effective_candidate(m, -m.polarization()));
    CHECK(effective_candidate(m, cls(m, {0, 0, 0})));
}

TEST_CASE("base-point-freeness") {
    auto m = bi2_model();
    CHECK(bpf_check(m, m.polarization()).pass);

    auto b3 = biii3_model();
    const auto f = bpf_check(b3, cls(b3, {0, 0, 1, 0}));
    CHECK(f.pass);
    CHECK(f.route == "fixed part free");

    // hyperbolic plane: e + f fails with both rulings as witnesses
    auto hyp = make_lattice("hyp", {"e", "f"}, {{0, 1}, {1, 0}});
    PolarizedK3Model hm(hyp, DivisorClass(hyp, {1, 1}));
    const auto r = bpf_check(hm, hm.polarization());
    CHECK_FALSE(r.pass);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].coords == IntVec{0, 1});
    CHECK(r.witnesses[1].coords == IntVec{1, 0});

    CHECK_THROWS_AS(bpf_check(m, cls(m, {1, -2})), std::invalid_argument); // square -6
}

TEST_CASE("very-ampleness clauses") {
    for (const auto& m : {bii_model(), bi3_model(), biii2_model(), biii4_model()})
        CHECK(very_ample_check(m, m.polarization()).pass);

    auto b3 = biii3_model();
    const auto r = very_ample_check(b3, b3.polarization());
    CHECK_FALSE(r.pass);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].cls.coords == IntVec{0, 1, 0, 0});
    CHECK(r.witnesses[1].cls.coords == IntVec{1, 0, 0, 0});
    for (const auto& w : r.witnesses) {
        CHECK(w.clause == VeryAmpleClause::IsotropicSmallDegree);
        CHECK(pairing(w.cls, w.cls) == 0);
        CHECK(pairing(b3.polarization(), w.cls) == 2);
    }
    CHECK(very_ample_check(b3, cls(b3, {1, 1, 1, 0})).pass); // H + F embeds the surface

    // the divisibility clause: L = 2D with D^2 = 2
    auto two = make_lattice("two", {"a"}, {{2}});
    PolarizedK3Model tm(two, DivisorClass(two, {2}));
    const auto half = very_ample_check(tm, tm.polarization());
    CHECK_FALSE(half.pass);
    REQUIRE(half.witnesses.size() == 1);
    CHECK(half.witnesses[0].clause == VeryAmpleClause::HalfPolarization);
    CHECK(half.witnesses[0].cls.coords == IntVec{1});

    CHECK_THROWS_AS(very_ample_check(tm, DivisorClass(two, {1})), std::invalid_argument); // L^2 = 2 < 4
}

TEST_CASE("very ample implies base point free on every catalog polarization") {
    const std::vector<PolarizedK3Model> models = {bi2_model(), bi3_model(), bii_model(),
                                                  biii2_model(), biii3_model(), biii4_model()};
    for (const auto& m : models) {
        if (very_ample_check(m, m.polarization()).pass) CHECK(bpf_check(m, m.polarization()).pass);
    }
}

TEST_CASE("quadric embedding smoothness") {
    CHECK(quadric_embedding_check(bii_model()).pass);
    CHECK(quadric_embedding_check(biii2_model()).pass);
    CHECK(quadric_embedding_check(biii4_model()).pass);

    auto deg3 = make_lattice("deg3", {"e", "f"}, {{0, 3}, {3, 0}});
    PolarizedK3Model dm(deg3, DivisorClass(deg3, {1, 1})); // H^2 = 6
    const auto r = quadric_embedding_check(dm);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].coords == IntVec{0, 1});
    CHECK(r.witnesses[1].coords == IntVec{1, 0});

    CHECK_THROWS_AS(quadric_embedding_check(bi2_model()), std::invalid_argument); // H^2 = 18
}

TEST_CASE("nefness certificates") {
    auto b2 = bii_model();
    CHECK(nef_check(b2, cls(b2, {2, 1, -1})).nef);
    auto b32 = biii2_model();
    CHECK(nef_check(b32, cls(b32, {3, -1, -1})).nef);
    auto b33 = biii3_model();
    CHECK(nef_check(b33, cls(b33, {2, 2, 0, -1})).nef);

    // a degree-zero (-2)-class violates nefness in either orientation
    auto split = make_lattice("split", {"h", "e"}, {{4, 0}, {0, -2}});
    PolarizedK3Model sm(split, DivisorClass(split, {1, 0}));
    const auto r = nef_check(sm, cls(sm, {1, 1}));
    CHECK_FALSE(r.nef);
    REQUIRE(r.violators.size() == 2);
    CHECK(r.violators[0].coords == IntVec{0, -1});
    CHECK(r.violators[1].coords == IntVec{0, 1});
}

TEST_CASE("nef classes stay nonnegative under an extended enumeration") {
    const std::vector<std::pair<PolarizedK3Model, IntVec>> nef_cases = {
        {bii_model(), {2, 1, -1}},
        {biii2_model(), {3, -1, -1}},
        {biii3_model(), {2, 2, 0, -1}},
        {bi2_model(), {1, -1}},
    };
    for (const auto& [m, coords] : nef_cases) {
        DivisorClass l = cls(m, coords);
        REQUIRE(nef_check(m, l).nef);
        const Int bound = 2 * pairing(m.polarization(), l);
        for (const auto& d : minus_two_up_to(m, bound)) {
            if (!effective_candidate(m, d)) continue;
            CHECK(pairing(l, d) >= 0);
        }
    }
}

TEST_CASE("movability searches leave only the zero vector") {
    auto b2 = bii_model();
    const auto f = movable_check(b2, cls(b2, {0, 1, 0}));
    CHECK(f.movable);
    REQUIRE(f.feasible.size() == 1);
    CHECK(f.feasible[0] == IntVec{0});
    CHECK(f.fixed_candidates.size() == 1); // only C2 has degree < 4

    const auto b = movable_check(b2, cls(b2, {0, 0, 1}));
    CHECK(b.movable);
    CHECK(b.fixed_candidates.size() == 2);

    const auto m32 = biii2_model();
    CHECK(movable_check(m32, cls(m32, {0, 0, 1})).movable);
    const auto m34 = biii4_model();
    CHECK(movable_check(m34, cls(m34, {0, 0, 1})).movable);
    const auto m33 = biii3_model();
    CHECK(movable_check(m33, cls(m33, {0, 0, 1, 0})).movable);
}

TEST_CASE("movability feasibility is monotone on the catalog searches") {
    struct Search {
        PolarizedK3Model model;
        IntVec l;
    };
    const std::vector<Search> searches = {{bii_model(), {0, 1, 0}},
                                          {bii_model(), {0, 0, 1}},
                                          {biii2_model(), {0, 0, 1}},
                                          {biii4_model(), {0, 0, 1}}};
    for (const auto& s : searches) {
        const DivisorClass l = cls(s.model, s.l);
        const auto result = movable_check(s.model, l);
        const auto& cands = result.fixed_candidates;
        const Int budget = pairing(s.model.polarization(), l) - 1;
        std::vector<Int> degrees;
        for (const auto& c : cands) degrees.push_back(pairing(s.model.polarization(), c));

        auto feasible = [&](const IntVec& a) {
            DivisorClass m = l;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != 0) m = m - a[i] * cands[i];
            if (pairing(m, m) < 0 || pairing(s.model.polarization(), m) <= 0) return false;
            if (pairing(m, l) < 0) return false;
            for (const auto& c : cands)
                if (pairing(m, c) < 0) return false;
            return true;
        };
        std::vector<IntVec> region;
        IntVec a(cands.size(), 0);
        auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
            if (i == cands.size()) { region.push_back(a); return; }
            for (Int v = 0; v * degrees[i] <= left; ++v) {
                a[i] = v;
                self(self, i + 1, left - v * degrees[i]);
            }
            a[i] = 0;
        };
        rec(rec, 0, budget);

        auto same_support_geq = [](const IntVec& lo, const IntVec& hi) {
            for (std::size_t i = 0; i < lo.size(); ++i) {
                if ((lo[i] == 0) != (hi[i] == 0)) return false;
                if (hi[i] < lo[i]) return false;
            }
            return true;
        };
        for (const auto& lo : region) {
            if (feasible(lo)) continue;
            for (const auto& hi : region)
                if (same_support_geq(lo, hi)) CHECK_FALSE(feasible(hi));
        }
    }
}

TEST_CASE("the printed genus-5 fixed-part polynomial omits its quadratic terms") {
    // exact: M^2 = 8 - 2a^2 - 2b^2 - 2c^2 - 16a - 34b - 24c + 12ac + 6bc
    // printed: M^2 = 8 - (18a + 36b + 26c) + 12ac + 6bc
    // The two agree on {0,1}^3 (where a^2 = a) and diverge beyond; the
    // conclusion that only (0,0,0) is feasible is unaffected.
    auto m = biii4_model();
    const DivisorClass b = cls(m, {0, 0, 1});
    const std::vector<DivisorClass> c = {cls(m, {0, 1, 0}), cls(m, {3, -1, -1}), cls(m, {4, -3, -1})};
    auto exact = [&](Int a0, Int a1, Int a2) {
        const DivisorClass mm = b - a0 * c[0] - a1 * c[1] - a2 * c[2];
        return pairing(mm, mm);
    };
    auto printed = [&](Int a0, Int a1, Int a2) {
        return 8 - (18 * a0 + 36 * a1 + 26 * a2) + 12 * a0 * a2 + 6 * a1 * a2;
    };
    for (Int a0 = 0; a0 <= 1; ++a0)
        for (Int a1 = 0; a1 <= 1; ++a1)
            for (Int a2 = 0; a2 <= 1; ++a2) CHECK(exact(a0, a1, a2) == printed(a0, a1, a2));
    CHECK(exact(2, 0, 0) != printed(2, 0, 0));
    CHECK(exact(0, 2, 0) != printed(0, 2, 0));

    const auto search = movable_check(m, b);
    CHECK(search.movable);
}

TEST_CASE("Brill-Noether generality") {
    auto m = bi2_model();
    const auto r = bn_general_check(m);
    CHECK(r.pass);
    CHECK(r.h0_h == 11);
    REQUIRE(r.candidates.size() == 2);
    CHECK(r.candidates[0].l.coords == IntVec{0, 1});
    CHECK(r.candidates[1].l.coords == IntVec{1, -1});
    for (const auto& c : r.candidates) CHECK(c.h0_l * c.h0_n == 10);

    CHECK(bn_general_check(bi3_model()).pass);

    // failing model: H = C + (H - C) with h0 product 4 >= h0(H) = 4
    auto bad = make_lattice("bn-fail", {"H", "C"}, {{4, 2}, {2, 0}});
    PolarizedK3Model bm(bad, DivisorClass(bad, {1, 0}), {{"C", DivisorClass(bad, {0, 1})}}, {"C"});
    const auto f = bn_general_check(bm);
    CHECK_FALSE(f.pass);
    REQUIRE_FALSE(f.failures.empty());
    CHECK(f.failures[0].l.coords == IntVec{0, 1});
    CHECK(f.failures[0].h0_l * f.failures[0].h0_n >= f.h0_h);
}

TEST_CASE("relative nefness certificate") {
    auto m4 = biii4_model();
    const auto r = relative_nef_check(m4, cls(m4, {3, -1, -1}), cls(m4, {1, -1, 0}));
    CHECK(r.pass);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].cls.coords == IntVec{3, -1, -1});
    CHECK(r.witnesses[0].fiber_degree == 5);

    auto m2 = bii_model();
    const auto trivial = relative_nef_check(m2, cls(m2, {2, 1, -1}), cls(m2, {0, 1, 0}));
    CHECK(trivial.pass);
    CHECK(trivial.witnesses.empty());

    // a fiber-degree-zero violator leaves the certificate inconclusive
    auto split = make_lattice("split", {"h", "e"}, {{4, 0}, {0, -2}});
    PolarizedK3Model sm(split, DivisorClass(split, {1, 0}));
    const auto inc = relative_nef_check(sm, DivisorClass(split, {1, 1}), DivisorClass(split, {0, 1}));
    CHECK_FALSE(inc.pass);
    REQUIRE(inc.witnesses.size() == 1);
    CHECK(inc.witnesses[0].cls.coords == IntVec{0, 1});
    CHECK(inc.witnesses[0].fiber_degree == -2);
}
