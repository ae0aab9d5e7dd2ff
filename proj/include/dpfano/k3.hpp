#pragma once

// Decision procedures for line bundles on a K3 surface presented as a
// polarized lattice: Riemann-Roch section counts, base-point-freeness,
// very-ampleness, the genus-4 quadric-embedding smoothness test, nefness,
// movability, Brill-Noether generality and relative nefness. Each check
// is a certificate backed by a complete class enumeration; witnesses are
// returned, never just verdicts.

#include "dpfano/enumerate.hpp"

#include <map>
#include <set>

namespace dpfano {

// ---------------------------------------------------------------------------
// Polarized model
// ---------------------------------------------------------------------------

class PolarizedK3Model {
public:
    PolarizedK3Model(LatticePtr lattice, DivisorClass polarization,
                     std::map<std::string, DivisorClass> named = {},
                     std::set<std::string> irreducible_marks = {})
        : lattice_(std::move(lattice)), h_(std::move(polarization)),
          named_(std::move(named)), marks_(std::move(irreducible_marks)) {
        require_same_lattice(lattice_, h_.lattice, "polarized model");
        const auto cls = classify(*lattice_);
        if (!cls.is_even)
            throw std::invalid_argument("model on '" + lattice_->label() + "': lattice is not even");
        if (cls.signature != Signature{1, lattice_->rank() - 1, 0})
            throw std::invalid_argument("model on '" + lattice_->label() +
                                        "': signature is not (1," + std::to_string(lattice_->rank() - 1) + ")");
        if (pairing(h_, h_) <= 0)
            throw std::invalid_argument("model on '" + lattice_->label() + "': polarization has H^2 <= 0");
        for (const auto& [name, c] : named_)
            require_same_lattice(lattice_, c.lattice, "named class");
        for (const auto& name : marks_)
            if (!named_.count(name))
                throw std::invalid_argument("irreducible mark '" + name + "' is not a named class");
    }

    const LatticePtr& lattice() const { return lattice_; }
    const DivisorClass& polarization() const { return h_; }
    const std::map<std::string, DivisorClass>& named() const { return named_; }
    const std::set<std::string>& marks() const { return marks_; }

    const DivisorClass& named_class(const std::string& name) const {
        auto it = named_.find(name);
        if (it == named_.end())
            throw std::invalid_argument("unknown class name '" + name + "' in model on '" +
                                        lattice_->label() + "'");
        return it->second;
    }

    Int degree(const DivisorClass& c) const { return pairing(h_, c); }

private:
    LatticePtr lattice_;
    DivisorClass h_;
    std::map<std::string, DivisorClass> named_;
    std::set<std::string> marks_;
};

// All (-2)-classes C with 1 <= H.C <= dmax. Finite since H^2 > 0 forces a
// negative definite residual on each degree slice.
inline std::vector<DivisorClass> minus_two_up_to(const PolarizedK3Model& model, const Int& dmax) {
    return classes_with_square_and_degree(model.lattice(), Int(-2), model.polarization(), Int(1), dmax);
}

// ---------------------------------------------------------------------------
// Riemann-Roch and effectivity
// ---------------------------------------------------------------------------

// Section count by Riemann-Roch, used as an equality throughout: 2 + C^2/2
// for nonzero effective candidates, 1 for the trivial class.
inline Int h0_rr(const PolarizedK3Model& model, const DivisorClass& c) {
    if (c.is_zero()) return 1;
    const Int sq = self_intersection(c);
    if (sq < -2) throw std::invalid_argument("h0_rr: class has square < -2");
    if (sq % 2 != 0) throw std::invalid_argument("h0_rr: class has odd square");
    if (model.degree(c) <= 0) throw std::invalid_argument("h0_rr: class has nonpositive degree");
    return 2 + sq / 2;
}

inline bool effective_candidate(const PolarizedK3Model& model, const DivisorClass& c) {
    if (c.is_zero()) return true;
    return self_intersection(c) >= -2 && model.degree(c) > 0;
}

// ---------------------------------------------------------------------------
// Base-point-freeness
// ---------------------------------------------------------------------------

struct MovableResult {
    bool movable = false;
    std::vector<DivisorClass> fixed_candidates; // the (-2)-classes a fixed part could use
    std::vector<IntVec> feasible;               // coefficient vectors over fixed_candidates
};

inline MovableResult movable_check(const PolarizedK3Model& model, const DivisorClass& l);

struct BpfResult {
    bool pass = false;
    std::vector<DivisorClass> witnesses; // classes D with D^2 = 0, L.D = 1
    std::string route;                   // which criterion decided
};

// Saint-Donat criterion. For L^2 > 0 the obstruction is a class D with
// D^2 = 0 and L.D = 1. For L^2 = 0 that slice is not finite (L itself lies
// in the kernel of L.), and base-point-freeness is equivalent to fixed-part
// freeness, so the movability search decides instead. Nefness of L is the
// caller's responsibility.
inline BpfResult bpf_check(const PolarizedK3Model& model, const DivisorClass& l) {
    const Int sq = pairing(l, l);
    if (sq < 0) throw std::invalid_argument("bpf_check: L^2 < 0");
    BpfResult out;
    if (sq > 0) {
        out.route = "no isotropic class of degree one";
        out.witnesses = enum_classes(model.lattice(), 0, {{l, 1}});
        out.pass = out.witnesses.empty();
    } else {
        out.route = "fixed part free";
        out.pass = movable_check(model, l).movable;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Very-ampleness
// ---------------------------------------------------------------------------

enum class VeryAmpleClause {
    MinusTwoDegreeZero,   // D^2 = -2, L.D = 0
    IsotropicSmallDegree, // D^2 = 0, L.D in {1, 2}
    HalfPolarization      // D^2 = 2, L = 2D
};

inline std::string clause_str(VeryAmpleClause c) {
    switch (c) {
        case VeryAmpleClause::MinusTwoDegreeZero: return "D^2=-2, L.D=0";
        case VeryAmpleClause::IsotropicSmallDegree: return "D^2=0, L.D in {1,2}";
        case VeryAmpleClause::HalfPolarization: return "D^2=2, L=2D";
    }
    return "?";
}

struct VeryAmpleWitness {
    DivisorClass cls;
    VeryAmpleClause clause;
};

struct VeryAmpleResult {
    bool pass = false;
    std::vector<VeryAmpleWitness> witnesses;
};

inline VeryAmpleResult very_ample_check(const PolarizedK3Model& model, const DivisorClass& l) {
    if (pairing(l, l) < 4) throw std::invalid_argument("very_ample_check: requires L^2 >= 4");
    VeryAmpleResult out;
    for (const auto& d : enum_classes(model.lattice(), -2, {{l, 0}}))
        out.witnesses.push_back({d, VeryAmpleClause::MinusTwoDegreeZero});
    for (const Int& target : {Int(1), Int(2)})
        for (const auto& d : enum_classes(model.lattice(), 0, {{l, target}}))
            out.witnesses.push_back({d, VeryAmpleClause::IsotropicSmallDegree});
    // L = 2D forces every coordinate of L to be even and D^2 = L^2 / 4 = 2
    bool halvable = true;
    IntVec half(l.coords.size());
    for (std::size_t i = 0; i < l.coords.size(); ++i) {
        if (l.coords[i] % 2 != 0) { halvable = false; break; }
        half[i] = l.coords[i] / 2;
    }
    if (halvable) {
        DivisorClass d(l.lattice, half);
        if (pairing(d, d) == 2) out.witnesses.push_back({d, VeryAmpleClause::HalfPolarization});
    }
    out.pass = out.witnesses.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Quadric embedding smoothness (genus 4 polarization)
// ---------------------------------------------------------------------------

struct QuadricEmbeddingResult {
    bool pass = false;
    std::vector<DivisorClass> witnesses; // classes with C^2 = 0, H.C = 3
};

// For H^2 = 6 the image under |H| lies on a quadric; absence of any class
// with C^2 = 0 and H.C = 3 rules out the decomposition H = C1 + C2 into
// two isotropic degree-3 halves, so that quadric is smooth.
inline QuadricEmbeddingResult quadric_embedding_check(const PolarizedK3Model& model) {
    if (pairing(model.polarization(), model.polarization()) != 6)
        throw std::invalid_argument("quadric_embedding_check: requires H^2 = 6");
    QuadricEmbeddingResult out;
    out.witnesses = enum_classes(model.lattice(), 0, {{model.polarization(), 3}});
    out.pass = out.witnesses.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Nefness
// ---------------------------------------------------------------------------

struct NefResult {
    bool nef = false;
    std::vector<DivisorClass> checked;   // every (-2)-class that could obstruct
    std::vector<DivisorClass> violators;
};

// A violating effective (-2)-class certifies non-nefness; absence certifies
// nefness, because an irreducible curve pairing negatively with effective L
// is a (-2)-curve in the fixed part of |L|, hence of degree at most H.L.
// Degree-zero (-2)-classes come in effective pairs {D, -D} with unknown
// orientation, so those must pair to zero exactly.
inline NefResult nef_check(const PolarizedK3Model& model, const DivisorClass& l) {
    if (!effective_candidate(model, l))
        throw std::invalid_argument("nef_check: L is not an effectivity candidate");
    if (pairing(l, l) < 0) throw std::invalid_argument("nef_check: L^2 < 0");
    NefResult out;
    const Int budget = model.degree(l);
    for (const auto& d : minus_two_up_to(model, budget)) {
        out.checked.push_back(d);
        if (pairing(l, d) < 0) out.violators.push_back(d);
    }
    for (const auto& d : enum_classes(model.lattice(), -2, {{model.polarization(), 0}})) {
        out.checked.push_back(d);
        if (pairing(l, d) != 0) out.violators.push_back(d);
    }
    out.nef = out.violators.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Movability (fixed part search)
// ---------------------------------------------------------------------------

// The fixed part of |L| is a nonnegative combination N = sum a_i C_i of
// (-2)-classes of degree < H.L. A coefficient vector is feasible when the
// residual M = L - N could still be the movable part: M^2 >= 0, H.M > 0,
// M.L >= 0 and M.C_j >= 0 for every candidate curve. L is movable exactly
// when only a = 0 survives.
inline MovableResult movable_check(const PolarizedK3Model& model, const DivisorClass& l) {
    if (!effective_candidate(model, l) || l.is_zero())
        throw std::invalid_argument("movable_check: L is not a nonzero effectivity candidate");
    if (pairing(l, l) < 0) throw std::invalid_argument("movable_check: L^2 < 0");
    MovableResult out;
    const Int budget = model.degree(l) - 1;
    out.fixed_candidates = minus_two_up_to(model, budget);
    const std::size_t k = out.fixed_candidates.size();

    std::vector<Int> degrees(k);
    for (std::size_t i = 0; i < k; ++i) degrees[i] = model.degree(out.fixed_candidates[i]);

    IntVec a(k, 0);
    auto feasible = [&]() {
        DivisorClass m = l;
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] != 0) m = m - a[i] * out.fixed_candidates[i];
        if (pairing(m, m) < 0) return false;
        if (model.degree(m) <= 0) return false;
        if (pairing(m, l) < 0) return false;
        for (const auto& c : out.fixed_candidates)
            if (pairing(m, c) < 0) return false;
        return true;
    };
    auto recurse = [&](auto&& self, std::size_t i, const Int& left) -> void {
        if (i == k) {
            if (feasible()) out.feasible.push_back(a);
            return;
        }
        for (Int v = 0; v * degrees[i] <= left; ++v) {
            a[i] = v;
            self(self, i + 1, left - v * degrees[i]);
        }
        a[i] = 0;
    };
    recurse(recurse, 0, budget);

    out.movable = out.feasible.size() == 1 &&
                  std::all_of(out.feasible[0].begin(), out.feasible[0].end(),
                              [](const Int& v) { return v == 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Brill-Noether generality
// ---------------------------------------------------------------------------

struct BnCandidate {
    DivisorClass l;
    DivisorClass n;
    Int h0_l;
    Int h0_n;
};

struct BnResult {
    bool pass = false;
    Int h0_h;
    std::vector<BnCandidate> candidates;
    std::vector<BnCandidate> failures; // candidates with h0(L) h0(N) >= h0(H)
};

// Enumerates every splitting H = L + N into nonzero effectivity candidates,
// constrained by the irreducible marks (L.J >= 0 and N.J >= 0 for marked J
// of nonnegative square), and demands h0(H) > h0(L) h0(N) strictly.
// Completeness: 0 < H.L < H^2 and the Hodge bound L^2 <= (H.L)^2 / H^2 make
// the candidate degrees and squares a finite grid of negative definite
// slices.
inline BnResult bn_general_check(const PolarizedK3Model& model) {
    const DivisorClass& h = model.polarization();
    const Int h2 = pairing(h, h);
    BnResult out;
    out.h0_h = h0_rr(model, h);

    std::vector<DivisorClass> marked;
    for (const auto& name : model.marks()) {
        const DivisorClass& j = model.named_class(name);
        if (pairing(j, j) >= 0) marked.push_back(j);
    }

    for (Int d = 1; d < h2; ++d) {
        const Int smax = (d * d) / h2; // floor; Hodge index bound on L^2
        for (Int s = -2; s <= smax; s += 2) {
            for (const auto& l : enum_classes(model.lattice(), s, {{h, d}})) {
                const DivisorClass n = h - l;
                if (n.is_zero()) continue;
                if (!effective_candidate(model, n)) continue;
                bool marks_ok = true;
                for (const auto& j : marked)
                    if (pairing(l, j) < 0 || pairing(n, j) < 0) { marks_ok = false; break; }
                if (!marks_ok) continue;
                BnCandidate cand{l, n, h0_rr(model, l), h0_rr(model, n)};
                if (cand.h0_l * cand.h0_n >= out.h0_h) out.failures.push_back(cand);
                out.candidates.push_back(std::move(cand));
            }
        }
    }
    out.pass = out.failures.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Relative nefness certificate
// ---------------------------------------------------------------------------

struct RelativeNefWitness {
    DivisorClass cls;
    Int fiber_degree; // Ffib . D
};

struct RelativeNefResult {
    bool pass = false; // false means inconclusive, not refuted
    std::vector<RelativeNefWitness> witnesses;
    Int degree_bound;
};

// Certificate that the restriction Lrestr of the relative anticanonical
// divisor obstructs no fiber curve: every (-2)-class pairing negatively
// with Lrestr must have positive fiber degree, and when Lrestr is itself a
// (-2)-class it must be rigid (h0 = 1). Degree-zero (-2)-classes are kept
// in the sweep since either orientation may be the effective one.
inline RelativeNefResult relative_nef_check(const PolarizedK3Model& model, const DivisorClass& lrestr,
                                            const DivisorClass& ffib) {
    RelativeNefResult out;
    const Int l2 = pairing(lrestr, lrestr);
    out.degree_bound = model.degree(lrestr) + abs(l2) + 2;
    bool ok = true;
    for (const auto& d : classes_with_square_and_degree(model.lattice(), Int(-2),
                                                        model.polarization(), Int(0),
                                                        out.degree_bound)) {
        if (pairing(lrestr, d) >= 0) continue;
        const Int fd = pairing(ffib, d);
        out.witnesses.push_back({d, fd});
        if (fd <= 0) ok = false;
    }
    if (l2 == -2 && h0_rr(model, lrestr) != 1) ok = false;
    out.pass = ok;
    return out;
}

} // namespace dpfano
