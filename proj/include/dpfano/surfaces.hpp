#pragma once

// Class arithmetic on the non-K3 surfaces that appear in the catalog:
// blown-up planes (del Pezzo), ruled surfaces over a curve, and products
// C x P^1. Only the lattice shadow of each surface is modeled; restriction
// tables for ambient divisors are case data, not derived here.

#include "dpfano/enumerate.hpp"

#include <map>

namespace dpfano {

// ---------------------------------------------------------------------------
// Del Pezzo lattice (blow-up of the plane at n points)
// ---------------------------------------------------------------------------

struct DelPezzoLattice {
    int n = 0;
    LatticePtr lattice; // basis (h, e1..en), gram diag(1,-1,..,-1)
    DivisorClass canonical; // K = -3h + sum e_i

    DivisorClass cls(IntVec coords) const { return {lattice, std::move(coords)}; }
};

inline DelPezzoLattice make_del_pezzo(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("del Pezzo lattice: n must be in 0..8");
    std::vector<std::string> names{"h"};
    IntMat gram(n + 1, IntVec(n + 1, 0));
    gram[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        names.push_back("e" + std::to_string(i));
        gram[i][i] = -1;
    }
    DelPezzoLattice out;
    out.n = n;
    out.lattice = make_lattice("del-pezzo-" + std::to_string(n), std::move(names), std::move(gram));
    IntVec k(n + 1, 1);
    k[0] = -3;
    out.canonical = DivisorClass(out.lattice, std::move(k));
    return out;
}

// All classes l with l^2 = -1 and K.l = -1. Finite for n <= 8 since the
// orthogonal complement of K is negative definite there.
inline std::vector<DivisorClass> minus_one_classes(const DelPezzoLattice& dp) {
    if (dp.n > 8) throw std::invalid_argument("minus_one_classes: n must be <= 8");
    return enum_classes(dp.lattice, -1, {{dp.canonical, -1}});
}

struct DelPezzoNefResult {
    bool nef = false;
    std::vector<DivisorClass> lines;
    std::vector<DivisorClass> violators;
};

// Valid under the general-position convention, where the (-1)-classes
// generate the effective cone.
inline DelPezzoNefResult nef_on_del_pezzo(const DelPezzoLattice& dp, const DivisorClass& l) {
    if (dp.n < 2 || dp.n > 8)
        throw std::invalid_argument("nef_on_del_pezzo: n must be in 2..8");
    DelPezzoNefResult out;
    out.lines = minus_one_classes(dp);
    for (const auto& line : out.lines)
        if (pairing(l, line) < 0) out.violators.push_back(line);
    out.nef = out.violators.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Adjunction genus
// ---------------------------------------------------------------------------

// g = 1 + (B^2 + B.K)/2; rejects inconsistent classes.
inline Int adjunction_genus(const DivisorClass& canonical, const DivisorClass& b) {
    const Int t = pairing(b, b) + pairing(b, canonical);
    if (t % 2 != 0) throw std::invalid_argument("adjunction_genus: B^2 + B.K is odd");
    const Int g = 1 + t / 2;
    if (g < 0) throw std::invalid_argument("adjunction_genus: negative genus " + g.str());
    return g;
}

// ---------------------------------------------------------------------------
// Ruled surface over a curve (P^1-bundle)
// ---------------------------------------------------------------------------

struct RuledSurfaceModel {
    Int base_genus;
    Int e; // degree of the rank-2 bundle
    LatticePtr lattice;     // basis (h, f), gram [[e,1],[1,0]]
    DivisorClass canonical; // K = -2h + (e + 2g - 2) f
    std::map<std::string, DivisorClass> restrictions;

    DivisorClass cls(IntVec coords) const { return {lattice, std::move(coords)}; }
};

inline RuledSurfaceModel make_ruled_surface(Int base_genus, Int e,
                                            std::map<std::string, IntVec> restriction_coords = {}) {
    RuledSurfaceModel out;
    out.base_genus = base_genus;
    out.e = e;
    out.lattice = make_lattice("ruled-g" + base_genus.str() + "-e" + e.str(), {"h", "f"},
                               IntMat{{e, 1}, {1, 0}});
    out.canonical = DivisorClass(out.lattice, IntVec{-2, e + 2 * base_genus - 2});
    for (auto& [name, coords] : restriction_coords)
        out.restrictions.emplace(name, DivisorClass(out.lattice, coords));
    return out;
}

// Linear combination of restriction-table entries; every name must resolve.
inline DivisorClass restricted_class(const RuledSurfaceModel& model,
                                     const std::vector<std::pair<std::string, Int>>& expression) {
    DivisorClass out(model.lattice, IntVec(2, 0));
    for (const auto& [name, coeff] : expression) {
        auto it = model.restrictions.find(name);
        if (it == model.restrictions.end())
            throw std::invalid_argument("restricted_class: no restriction entry for '" + name + "'");
        out = out + coeff * it->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product surface C x P^1
// ---------------------------------------------------------------------------

struct ProductSurfaceModel {
    Int base_genus; // genus of C
    LatticePtr lattice;     // basis (a, b): a = C x {pt}, b = {pt} x P^1
    DivisorClass canonical; // K = -2a + (2g - 2) b

    DivisorClass cls(IntVec coords) const { return {lattice, std::move(coords)}; }
};

inline ProductSurfaceModel make_product_surface(Int base_genus) {
    ProductSurfaceModel out;
    out.base_genus = base_genus;
    out.lattice = make_lattice("product-g" + base_genus.str(), {"a", "b"}, IntMat{{0, 1}, {1, 0}});
    out.canonical = DivisorClass(out.lattice, IntVec{-2, 2 * base_genus - 2});
    return out;
}

} // namespace dpfano
