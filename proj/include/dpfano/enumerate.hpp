#pragma once

// Complete enumeration of divisor classes with prescribed self-intersection
// and linear constraints. The equality constraints are solved over the
// integers (column echelon reduction with a unimodular transform); the
// residual quadratic form on the solution coset must be negative definite,
// which is certified up front, and the coset is then swept by a
// Fincke-Pohst recursion in exact rational arithmetic. Completeness is
// structural: the certificate bounds the region, nothing is sampled.

#include "dpfano/lattice.hpp"

#include <optional>
#include <utility>

namespace dpfano {

// Raised when the constrained region admits a direction of nonnegative
// square, so the solution set need not be finite.
class UnboundedRegionError : public std::runtime_error {
public:
    UnboundedRegionError(const Lattice& lattice, IntVec direction)
        : std::runtime_error("unbounded enumeration region in lattice '" + lattice.label() +
                             "': direction " + coords_str(direction) + " has square " +
                             square_of(lattice, direction).str()),
          direction_(std::move(direction)) {}

    const IntVec& direction() const { return direction_; }

private:
    static Int square_of(const Lattice& lattice, const IntVec& v) {
        Int s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * lattice.gram()[i][j] * v[j];
        return s;
    }
    IntVec direction_;
};

namespace detail {

// ---------------------------------------------------------------------------
// Integer linear systems: M x = c over the integers
// ---------------------------------------------------------------------------

struct LinearSolution {
    bool solvable = false;
    IntVec particular;          // valid when solvable
    std::vector<IntVec> kernel; // basis of the integer kernel, always valid
};

// Column echelon reduction with gcd steps; U tracks x = U y so kernel
// columns of U span ker M over the integers.
inline LinearSolution solve_integer_linear(const std::vector<IntVec>& rows, const IntVec& targets,
                                           std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<IntVec> a(rows);
    std::vector<IntVec> u(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < m; ++r) a[r][dst] -= q * a[r][src];
        for (std::size_t r = 0; r < n; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
    };

    std::size_t col = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    for (std::size_t r = 0; r < m && col < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = col; j < n; ++j)
                if (a[r][j] != 0 && (best == n || abs(a[r][j]) < abs(a[r][best]))) best = j;
            if (best == n) break; // row has no pivot among the free columns
            bool reduced_all = true;
            for (std::size_t j = col; j < n; ++j) {
                if (j == best || a[r][j] == 0) continue;
                col_sub(j, best, a[r][j] / a[r][best]);
                if (a[r][j] != 0) reduced_all = false;
            }
            if (reduced_all) {
                col_swap(col, best);
                pivots.emplace_back(r, col);
                ++col;
                break;
            }
        }
    }

    LinearSolution out;
    for (std::size_t j = col; j < n; ++j) {
        IntVec k(n);
        for (std::size_t r = 0; r < n; ++r) k[r] = u[r][j];
        out.kernel.push_back(std::move(k));
    }

    IntVec y(n, 0);
    std::size_t next_pivot = 0;
    for (std::size_t r = 0; r < m; ++r) {
        Int residual = targets[r];
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0) residual -= a[r][j] * y[j];
        if (next_pivot < pivots.size() && pivots[next_pivot].first == r) {
            const std::size_t jc = pivots[next_pivot].second;
            ++next_pivot;
            if (residual % a[r][jc] != 0) return out; // not solvable over Z
            y[jc] = residual / a[r][jc];
        } else if (residual != 0) {
            return out;
        }
    }
    out.solvable = true;
    out.particular.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0) out.particular[r] += u[r][j] * y[j];
    return out;
}

// ---------------------------------------------------------------------------
// Fincke-Pohst sweep of one coset p + <kernel>
// ---------------------------------------------------------------------------

struct CompletedForm {
    // Q(v) = sum_i d[i] * (v_i + sum_{j>i} m[i][j] v_j)^2 with all d[i] > 0
    std::vector<Rat> d;
    std::vector<RatVec> m;
};

// LDL-style completion of a positive definite rational matrix; nullopt if
// a pivot fails to be positive (the matrix is not positive definite).
inline std::optional<CompletedForm> complete_squares(std::vector<RatVec> a) {
    const std::size_t k = a.size();
    CompletedForm f;
    f.d.assign(k, Rat(0));
    f.m.assign(k, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i][i] <= 0) return std::nullopt;
        f.d[i] = a[i][i];
        for (std::size_t j = i + 1; j < k; ++j) f.m[i][j] = a[i][j] / a[i][i];
        for (std::size_t r = i + 1; r < k; ++r)
            for (std::size_t c = i + 1; c < k; ++c) a[r][c] -= a[i][r] * a[i][c] / a[i][i];
    }
    return f;
}

// Solve A t = b for positive definite rational A.
inline RatVec solve_spd(std::vector<RatVec> a, RatVec b) {
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t piv = i;
        while (a[piv][i] == 0) ++piv; // invertible, a pivot exists
        std::swap(a[piv], a[i]);
        std::swap(b[piv], b[i]);
        for (std::size_t r = i + 1; r < k; ++r) {
            if (a[r][i] == 0) continue;
            const Rat f = a[r][i] / a[i][i];
            for (std::size_t c = i; c < k; ++c) a[r][c] -= f * a[i][c];
            b[r] -= f * b[i];
        }
    }
    RatVec t(k, Rat(0));
    for (std::size_t ii = k; ii-- > 0;) {
        Rat s = b[ii];
        for (std::size_t c = ii + 1; c < k; ++c) s -= a[ii][c] * t[c];
        t[ii] = s / a[ii][ii];
    }
    return t;
}

struct CosetProblem {
    const Lattice* lattice;
    IntVec particular;
    std::vector<IntVec> kernel;
    Int square;
};

inline Int gram_pair(const Lattice& lattice, const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += lattice.gram()[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

// Certifies that the form restricted to the kernel sublattice is negative
// definite and returns -Gram (positive definite) for the recursion. On
// failure, extracts a concrete direction of nonnegative square.
inline std::vector<RatVec> certify_negative_definite(const Lattice& lattice,
                                                     const std::vector<IntVec>& kernel) {
    const std::size_t k = kernel.size();
    IntMat gn(k, IntVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gn[i][j] = gram_pair(lattice, kernel[i], kernel[j]);

    std::vector<RatVec> minus(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minus[i][j] = Rat(-gn[i][j]);
    if (complete_squares(minus)) return minus;

    const auto inertia = symmetric_inertia(gn);
    for (std::size_t c = 0; c < k; ++c) {
        if (inertia.diagonal[c] < 0) continue;
        // clear denominators of the transform column and map back to lattice coords
        Int common = 1;
        for (const Rat& q : inertia.transform[c]) common = boost::multiprecision::lcm(common, den(q));
        IntVec dir(lattice.rank(), 0);
        bool nonzero = false;
        for (std::size_t j = 0; j < k; ++j) {
            const Int coeff = num(inertia.transform[c][j] * common);
            if (coeff == 0) continue;
            nonzero = true;
            for (int r = 0; r < lattice.rank(); ++r) dir[r] += coeff * kernel[j][r];
        }
        if (nonzero) throw UnboundedRegionError(lattice, dir);
    }
    throw UnboundedRegionError(lattice, IntVec(lattice.rank(), 0));
}

inline void sweep_coset(const CosetProblem& prob, const std::vector<RatVec>& minus_gram,
                        std::vector<IntVec>& out) {
    const Lattice& lattice = *prob.lattice;
    const std::size_t k = prob.kernel.size();

    auto emit_if_exact = [&](const IntVec& t) {
        IntVec x(prob.particular);
        for (std::size_t j = 0; j < k; ++j)
            if (t[j] != 0)
                for (int r = 0; r < lattice.rank(); ++r) x[r] += t[j] * prob.kernel[j][r];
        if (gram_pair(lattice, x, x) == prob.square) out.push_back(std::move(x));
    };

    if (k == 0) {
        if (gram_pair(lattice, prob.particular, prob.particular) == prob.square)
            out.push_back(prob.particular);
        return;
    }

    const auto form = complete_squares(minus_gram);
    if (!form) throw std::logic_error("sweep_coset: form not certified positive definite");
    const CompletedForm& f = *form;

    // Q(p + N t) = square  <=>  Q_A(t - t*) = R  with A = -N^t G N, A t* = b
    RatVec b(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) b[i] = Rat(gram_pair(lattice, prob.kernel[i], prob.particular));
    const RatVec center = solve_spd(minus_gram, b);

    // R = p.p - square + Q_A(t*), and Q_A(t*) = b . t*
    Rat radius = Rat(gram_pair(lattice, prob.particular, prob.particular)) - Rat(prob.square);
    for (std::size_t i = 0; i < k; ++i) radius += b[i] * center[i];
    if (radius < 0) return;

    IntVec t(k, 0);
    // recursion over levels k-1 .. 0; term i depends only on t_j for j >= i
    auto descend = [&](auto&& self, std::size_t level, const Rat& budget) -> void {
        const std::size_t i = level - 1;
        Rat shift = 0; // sum_{j>i} m[i][j] (t_j - center_j)
        for (std::size_t j = i + 1; j < k; ++j) shift += f.m[i][j] * (Rat(t[j]) - center[j]);
        const Rat c = center[i] - shift;
        const Rat q = budget / f.d[i];
        const Int lo = ceil_minus_sqrt(c, q);
        const Int hi = floor_plus_sqrt(c, q);
        for (Int v = lo; v <= hi; ++v) {
            t[i] = v;
            if (i == 0) {
                emit_if_exact(t);
            } else {
                const Rat w = Rat(v) - c;
                self(self, i, budget - f.d[i] * w * w);
            }
        }
        t[i] = 0;
    };
    descend(descend, k, radius);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public enumeration interface
// ---------------------------------------------------------------------------

struct EqualityConstraint {
    DivisorClass against;
    Int value;
};

struct DegreeRange {
    DivisorClass functional; // must have positive square
    Int min;
    Int max;
};

// The set { C : C^2 = square, against_i . C = value_i, min <= functional . C <= max },
// sorted lexicographically by coordinates. Refuses with UnboundedRegionError
// when the residual form on the constraint kernel is not negative definite.
inline std::vector<DivisorClass> enum_classes(const LatticePtr& lattice, const Int& square,
                                              const std::vector<EqualityConstraint>& constraints = {},
                                              const std::optional<DegreeRange>& range = std::nullopt) {
    const std::size_t n = static_cast<std::size_t>(lattice->rank());
    std::vector<IntVec> rows;
    IntVec targets;
    for (const auto& c : constraints) {
        require_same_lattice(lattice, c.against.lattice, "enum_classes constraint");
        IntVec row(n);
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i) s += c.against.coords[i] * lattice->gram()[i][j];
            row[j] = s;
        }
        rows.push_back(std::move(row));
        targets.push_back(c.value);
    }

    if (range && range->min > range->max) return {};

    IntVec degree_row;
    if (range) {
        require_same_lattice(lattice, range->functional.lattice, "enum_classes degree functional");
        if (pairing(range->functional, range->functional) <= 0)
            throw std::invalid_argument("enum_classes: degree functional must have positive square");
        degree_row.assign(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                degree_row[j] += range->functional.coords[i] * lattice->gram()[i][j];
        rows.push_back(degree_row);
        targets.push_back(range->min);
    }

    // Certify finiteness once: the kernel is independent of the targets.
    auto first = detail::solve_integer_linear(rows, targets, n);
    const auto minus_gram = detail::certify_negative_definite(*lattice, first.kernel);

    std::vector<IntVec> found;
    auto run = [&](const detail::LinearSolution& sol) {
        if (!sol.solvable) return;
        detail::CosetProblem prob{lattice.get(), sol.particular, sol.kernel, square};
        detail::sweep_coset(prob, minus_gram, found);
    };

    if (!range) {
        run(first);
    } else {
        run(first);
        for (Int d = range->min + 1; d <= range->max; ++d) {
            targets.back() = d;
            run(detail::solve_integer_linear(rows, targets, n));
        }
    }

    std::sort(found.begin(), found.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<DivisorClass> out;
    out.reserve(found.size());
    for (auto& v : found) out.emplace_back(lattice, std::move(v));
    return out;
}

inline std::vector<DivisorClass> classes_with_square_and_degree(const LatticePtr& lattice,
                                                                const Int& square,
                                                                const DivisorClass& functional,
                                                                const Int& dmin, const Int& dmax) {
    return enum_classes(lattice, square, {}, DegreeRange{functional, dmin, dmax});
}

} // namespace dpfano
