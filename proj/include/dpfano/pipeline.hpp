#pragma once

// Threefold-side numerics: blow-up invariants along a curve, the two-ray
// game transforms for del Pezzo fibrations of degree 6 and 5 together with
// the irrationality eliminations from their proofs, and the Hodge number
// bookkeeping through blow-ups, flops and blow-downs.

#include "dpfano/numeric.hpp"

#include <map>
#include <variant>
#include <vector>

namespace dpfano {

// ---------------------------------------------------------------------------
// Blow-up along a smooth curve
// ---------------------------------------------------------------------------

struct BlowupInvariants {
    Int kx3; // (-K_X)^3 after blowing up a genus-g curve B on V
    Int k2e; // (-K_X)^2 . E
    Int ke2; // (-K_X) . E^2
    Int e3;  // E^3
};

inline BlowupInvariants blowup_curve_invariants(const Int& kv3, const Int& kv_dot_b, const Int& g) {
    BlowupInvariants out;
    out.kx3 = kv3 - 2 * kv_dot_b + 2 * g - 2;
    out.k2e = kv_dot_b + 2 - 2 * g;
    out.ke2 = 2 * g - 2;
    out.e3 = -kv_dot_b - 2 * g + 2;
    return out;
}

// ---------------------------------------------------------------------------
// Two-ray game transforms
// ---------------------------------------------------------------------------

struct PipelineInput {
    Int kw3;      // (-K_W)^3
    Int kw_dot_b; // (-K_W) . B
    Int g_b;      // genus of B
    int d;        // fibration degree, 5 or 6
};

struct GameResult {
    Rat kx3;
    Rat kx_dot_c;
    Rat z; // fiber coefficient of the transformed divisor
};

// Closed forms for the output invariants of the degree-6 and degree-5
// games. The degree-5 game presupposes a P^2-bundle, so (-K_W)^3 = 54.
inline GameResult dpd_transform(const PipelineInput& in) {
    GameResult out;
    if (in.d == 6) {
        out.kx3 = Rat(3 * in.kw3 - 16 * in.g_b - 32) / 4;
        out.kx_dot_c = Rat(8 * in.kw_dot_b - 24 * in.g_b - in.kw3 - 32) / 8;
        out.z = Rat(4 * in.kw_dot_b - 8 * in.g_b - in.kw3) / 8;
    } else if (in.d == 5) {
        if (in.kw3 != 54)
            throw std::invalid_argument("dpd_transform: degree-5 game requires (-K_W)^3 = 54");
        out.kx3 = Rat(22 - 2 * in.g_b);
        out.kx_dot_c = Rat(in.kw_dot_b - 2 * in.g_b - 16);
        out.z = Rat(2 * in.kw_dot_b) / 3 - in.g_b - 12;
    } else {
        throw std::invalid_argument("dpd_transform: degree must be 5 or 6");
    }
    return out;
}

// The same invariants re-derived by solving the three intersection-number
// identities of the game proof as a triangular linear system. Kept as an
// independent route; tests assert agreement with the closed forms.
inline GameResult dpd_transform_via_system(const PipelineInput& in) {
    const Rat kw3(in.kw3), kwb(in.kw_dot_b), g(in.g_b);
    const Rat ky3 = kw3 - 2 * kwb + (2 * g - 2); // (-K_Y)^3 = (-K_Z)^3
    const Rat k2e = kwb + 2 - 2 * g;             // (-K_Y)^2 . E_Y
    const Rat ke2 = 2 * g - 2;                   // (-K_Y) . E_Y^2
    GameResult out;
    if (in.d == 6) {
        // D = (1/2)(-K_Y) - (1/2)E_Y + z F_Y
        out.z = (Rat(-2) - ky3 / 4 - ke2 / 4 + k2e / 2) / 2;
        out.kx_dot_c = ky3 / 2 - k2e / 2 + 5 * out.z - 2;
        out.kx3 = ky3 + 2 * out.kx_dot_c + 2;
    } else if (in.d == 5) {
        if (in.kw3 != 54)
            throw std::invalid_argument("dpd_transform_via_system: degree-5 game requires (-K_W)^3 = 54");
        // D = (2/3)(-K_Y) - (1/3)E_Y + z F_Y
        out.z = (Rat(-2) - Rat(4) * ky3 / 9 - ke2 / 9 + Rat(4) * k2e / 9) / 2;
        out.kx_dot_c = Rat(2) * ky3 / 3 - k2e / 3 + 4 * out.z - 2;
        out.kx3 = ky3 + 2 * out.kx_dot_c + 2;
    } else {
        throw std::invalid_argument("dpd_transform_via_system: degree must be 5 or 6");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Feasible contraction triples
// ---------------------------------------------------------------------------

struct FeasibleTriple {
    Int m;
    Rat x;
    Rat y;
    friend bool operator==(const FeasibleTriple&, const FeasibleTriple&) = default;
};

// Fiber-restricted solutions for the class D = x(-K) + yE + zF, degree by
// degree. For d = 6 the system is 5x + 3y = m, 5x^2 - 3y^2 + 6xy = -m with
// integrality 3x - 3y; for d = 5 it is 4x + 5y = m, 4x^2 - 5y^2 + 10xy = -m
// with integrality 5x - 5y. Rationality of x reduces to the discriminant
// (6m^2 + 30m resp. 5m^2 + 20m) being a perfect square.
inline std::vector<FeasibleTriple> dpd_feasible_triples(int d) {
    if (d != 5 && d != 6) throw std::invalid_argument("dpd_feasible_triples: degree must be 5 or 6");
    std::vector<FeasibleTriple> out;
    const Int m_max = (d == 6) ? 4 : 5;
    for (Int m = 0; m <= m_max; ++m) {
        const Int disc = (d == 6) ? 6 * m * m + 30 * m : 5 * m * m + 20 * m;
        const SquareTest sq = test_square(disc);
        if (!sq.is_square) continue;
        for (int sign : {+1, -1}) {
            if (sign < 0 && sq.floor_sqrt == 0) continue;
            Rat x, y;
            if (d == 6) {
                x = Rat(4 * m + sign * sq.floor_sqrt) / 20;
                y = (Rat(m) - 5 * x) / 3;
                if (!is_integer(3 * x - 3 * y)) continue;
                if (5 * x + 3 * y != m || 5 * x * x - 3 * y * y + 6 * x * y != -Rat(m)) continue;
            } else {
                x = Rat(3 * m + sign * sq.floor_sqrt) / 12;
                y = (Rat(m) - 4 * x) / 5;
                if (!is_integer(5 * x - 5 * y)) continue;
                if (4 * x + 5 * y != m || 4 * x * x - 5 * y * y + 10 * x * y != -Rat(m)) continue;
            }
            out.push_back({m, x, y});
        }
    }
    std::sort(out.begin(), out.end(), [](const FeasibleTriple& a, const FeasibleTriple& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.x < b.x;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Irrationality eliminations
// ---------------------------------------------------------------------------

struct EliminationStep {
    std::string label;
    SquareTest radicand; // eliminated iff not a perfect square
};

struct EliminationRecord {
    int d = 0;
    std::vector<EliminationStep> steps;
    bool all_eliminated = false;
};

// Replayable proof record: the divisorial-contraction step needs
// x = +-sqrt(15n)/10 (d=6) resp. x = +-sqrt(90n)/18 (d=5) rational for
// n in {1,2}, and the surface-target step needs sqrt(6) resp. sqrt(5)
// rational. Each radicand is certified non-square by its floor-sqrt.
inline EliminationRecord dpd_eliminations(int d) {
    if (d != 5 && d != 6) throw std::invalid_argument("dpd_eliminations: degree must be 5 or 6");
    EliminationRecord out;
    out.d = d;
    const Int base = (d == 6) ? 15 : 90;
    for (Int n = 1; n <= 2; ++n)
        out.steps.push_back({"divisorial contraction, n=" + n.str(), test_square(base * n)});
    out.steps.push_back({"surface target discriminant", test_square(d == 6 ? Int(6) : Int(5))});
    out.all_eliminated = true;
    for (const auto& s : out.steps)
        if (s.radicand.is_square) out.all_eliminated = false;
    return out;
}

// ---------------------------------------------------------------------------
// Hodge number chains
// ---------------------------------------------------------------------------

struct BlowupStep { Int genus; };
struct FlopStep {};
struct BlowdownStep { Int genus; };
using HodgeStep = std::variant<BlowupStep, FlopStep, BlowdownStep>;

struct HodgeRecord {
    Int value;
    std::vector<std::string> provenance;
};

// h^{1,2} values of the closed list of base threefolds the chains start
// from. Anything else must be supplied as an explicit integer.
inline const std::map<std::string, Int>& h12_base_table() {
    static const std::map<std::string, Int> table = {
        {"P3", 0}, {"Q3", 0}, {"P2xP1", 0},
        {"B(4)", 2}, {"B(5)", 0}, {"V(9)", 3}, {"V(10)", 2},
    };
    return table;
}

inline Int h12_base(const std::string& name) {
    const auto& table = h12_base_table();
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("h12_chain: unknown base threefold '" + name + "'");
    return it->second;
}

// Blow-ups along a genus-g curve add g, flops preserve everything,
// blow-downs of a genus-g curve remove g.
inline HodgeRecord h12_chain(const std::variant<std::string, Int>& base,
                             const std::vector<HodgeStep>& steps) {
    HodgeRecord out;
    if (std::holds_alternative<std::string>(base)) {
        const auto& name = std::get<std::string>(base);
        out.value = h12_base(name);
        out.provenance.push_back("base " + name + " = " + out.value.str());
    } else {
        out.value = std::get<Int>(base);
        out.provenance.push_back("base (explicit) = " + out.value.str());
    }
    for (const auto& step : steps) {
        if (std::holds_alternative<BlowupStep>(step)) {
            const Int g = std::get<BlowupStep>(step).genus;
            out.value += g;
            out.provenance.push_back("blowup g=" + g.str() + " -> " + out.value.str());
        } else if (std::holds_alternative<FlopStep>(step)) {
            out.provenance.push_back("flop -> " + out.value.str());
        } else {
            const Int g = std::get<BlowdownStep>(step).genus;
            out.value -= g;
            out.provenance.push_back("blowdown g=" + g.str() + " -> " + out.value.str());
        }
        if (out.value < 0)
            throw std::invalid_argument("h12_chain: running value went negative");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Side computations
// ---------------------------------------------------------------------------

// Sections of bidegree (m, n) on P^a x P^b.
inline Int h0_bidegree(const Int& a, const Int& b, const Int& m, const Int& n) {
    if (a < 1 || b < 1) throw std::invalid_argument("h0_bidegree: ambient factors need dimension >= 1");
    if (m < 0 || n < 0) throw std::invalid_argument("h0_bidegree: negative bidegree");
    return binomial(m + a, a) * binomial(n + b, b);
}

struct QuadricPencilRecord {
    Int delta; // degree of det of the symmetric matrix; number of singular fibers
    Int euler;
    Int b3;
    Int h12;
};

// Pencil of quadric surfaces in P^3 with simple degenerations: each of the
// delta singular fibers is a quadric cone (Euler number 3) against the
// smooth fiber P^1 x P^1 (Euler number 4), and the Betti numbers away from
// the middle are 1, 0, 2, ., 2, 0, 1.
inline QuadricPencilRecord quadric_pencil_h12(const Int& matrix_size, const Int& entry_degree) {
    if (matrix_size != 4)
        throw std::invalid_argument("quadric_pencil_h12: modeled for 4x4 symmetric matrices only");
    if (entry_degree < 1) throw std::invalid_argument("quadric_pencil_h12: entry degree must be >= 1");
    QuadricPencilRecord out;
    out.delta = matrix_size * entry_degree;
    out.euler = 4 * 2 + out.delta * (3 - 4);
    out.b3 = (1 + 0 + 2 + 2 + 0 + 1) - out.euler;
    if (out.b3 < 0 || out.b3 % 2 != 0)
        throw std::invalid_argument("quadric_pencil_h12: inconsistent third Betti number");
    out.h12 = out.b3 / 2;
    return out;
}

} // namespace dpfano
