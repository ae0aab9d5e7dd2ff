#pragma once

// Integral lattices of small rank with exact pairing, parity, signature
// and definiteness. A Lattice is an immutable symmetric integer Gram
// matrix with named basis elements; divisor classes are coordinate
// vectors against that basis.

#include "dpfano/numeric.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <vector>

namespace dpfano {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;
using RatVec = std::vector<Rat>;

class Lattice {
public:
    Lattice(std::string label, std::vector<std::string> basis, IntMat gram)
        : label_(std::move(label)), basis_(std::move(basis)), gram_(std::move(gram)) {
        const std::size_t n = basis_.size();
        if (n == 0) throw std::invalid_argument("lattice '" + label_ + "': rank must be >= 1");
        if (gram_.size() != n)
            throw std::invalid_argument("lattice '" + label_ + "': gram rank != basis size");
        for (const auto& row : gram_)
            if (row.size() != n)
                throw std::invalid_argument("lattice '" + label_ + "': gram matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw std::invalid_argument("lattice '" + label_ + "': gram matrix is not symmetric");
    }

    const std::string& label() const { return label_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const IntMat& gram() const { return gram_; }
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    std::string label_;
    std::vector<std::string> basis_;
    IntMat gram_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr make_lattice(std::string label, std::vector<std::string> basis, IntMat gram) {
    return std::make_shared<Lattice>(std::move(label), std::move(basis), std::move(gram));
}

// ---------------------------------------------------------------------------
// Divisor classes
// ---------------------------------------------------------------------------

struct DivisorClass {
    LatticePtr lattice;
    IntVec coords;

    DivisorClass() = default;
    DivisorClass(LatticePtr lat, IntVec c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (!lattice) throw std::invalid_argument("divisor class without lattice");
        if (static_cast<int>(coords.size()) != lattice->rank())
            throw std::invalid_argument("divisor class in '" + lattice->label() +
                                        "': coordinate length != rank");
    }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
    }
};

struct RationalClass {
    LatticePtr lattice;
    RatVec coords;

    RationalClass() = default;
    RationalClass(LatticePtr lat, RatVec c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (!lattice) throw std::invalid_argument("rational class without lattice");
        if (static_cast<int>(coords.size()) != lattice->rank())
            throw std::invalid_argument("rational class in '" + lattice->label() +
                                        "': coordinate length != rank");
    }
};

inline void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* what) {
    if (a.get() != b.get())
        throw std::invalid_argument(std::string(what) + ": classes live in different lattices ('" +
                                    a->label() + "' vs '" + b->label() + "')");
}

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice, b.lattice, "class sum");
    IntVec c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return {a.lattice, std::move(c)};
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice, b.lattice, "class difference");
    IntVec c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
    return {a.lattice, std::move(c)};
}

inline DivisorClass operator-(const DivisorClass& a) {
    IntVec c(a.coords);
    for (auto& x : c) x = -x;
    return {a.lattice, std::move(c)};
}

inline DivisorClass operator*(const Int& k, const DivisorClass& a) {
    IntVec c(a.coords);
    for (auto& x : c) x *= k;
    return {a.lattice, std::move(c)};
}

inline bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.lattice.get() == b.lattice.get() && a.coords == b.coords;
}

// Lexicographic coordinate order; the canonical output order everywhere.
inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less(const DivisorClass& a, const DivisorClass& b) {
    return lex_less(a.coords, b.coords);
}

inline std::string coords_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// Renders a class against its basis names, e.g. "3H-2G-B".
inline std::string class_str(const DivisorClass& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        const Int& x = c.coords[i];
        if (x == 0) continue;
        if (x > 0 && !first) os << "+";
        if (x == -1) os << "-";
        else if (x != 1) os << x << "*";
        os << c.lattice->basis()[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Pairing
// ---------------------------------------------------------------------------

inline Int pairing(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice, b.lattice, "pairing");
    const IntMat& g = a.lattice->gram();
    Int r = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < b.coords.size(); ++j) row += g[i][j] * b.coords[j];
        r += a.coords[i] * row;
    }
    return r;
}

inline Rat pairing(const RationalClass& a, const RationalClass& b) {
    require_same_lattice(a.lattice, b.lattice, "pairing");
    const IntMat& g = a.lattice->gram();
    Rat r = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < b.coords.size(); ++j) row += Rat(g[i][j]) * b.coords[j];
        r += a.coords[i] * row;
    }
    return r;
}

inline RationalClass to_rational(const DivisorClass& a) {
    RatVec c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(a.coords[i]);
    return {a.lattice, std::move(c)};
}

inline Rat pairing(const RationalClass& a, const DivisorClass& b) { return pairing(a, to_rational(b)); }
inline Rat pairing(const DivisorClass& a, const RationalClass& b) { return pairing(to_rational(a), b); }

inline Int self_intersection(const DivisorClass& a) { return pairing(a, a); }

// ---------------------------------------------------------------------------
// Parity and signature
// ---------------------------------------------------------------------------

struct Signature {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct LatticeClassification {
    bool is_even = false;
    Signature signature;
};

namespace detail {

using RatMat = std::vector<std::vector<Rat>>;

// Symmetric Gaussian reduction over the rationals. Returns the inertia of
// the form and, when requested, a congruence transform T (columns) with
// T^t A T diagonal; diagonal entry i is the value of the form on column i.
struct Inertia {
    Signature sig;
    RatMat transform;       // n columns, transform[j] = column j
    RatVec diagonal;        // value of the form on column j
};

inline Inertia symmetric_inertia(const IntMat& gram) {
    const std::size_t n = gram.size();
    RatMat a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(gram[i][j]);

    // transform starts as identity; every symmetric row/col op is mirrored
    RatMat t(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;

    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[i][r], a[j][r]);
        std::swap(t[i], t[j]);
    };
    // col_i += f * col_j (and the mirrored row op)
    auto add_col = [&](std::size_t i, std::size_t j, const Rat& f) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] += f * a[r][j];
        for (std::size_t r = 0; r < n; ++r) a[i][r] += f * a[j][r];
        for (std::size_t r = 0; r < n; ++r) t[r][i] += f * t[r][j];
    };

    Inertia out;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::size_t j = i + 1;
            for (; j < n; ++j)
                if (a[j][j] != 0) break;
            if (j < n) {
                swap_cols(i, j);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) break;
                if (j < n) add_col(i, j, Rat(1));  // a[i][i] becomes 2*a[i][j]
            }
        }
        if (a[i][i] == 0) {
            // whole remaining row is zero: radical direction
            ++out.sig.zeros;
            continue;
        }
        const Rat p = a[i][i];
        if (p > 0) ++out.sig.positives; else ++out.sig.negatives;
        for (std::size_t r = i + 1; r < n; ++r)
            if (a[r][i] != 0) add_col(r, i, -a[r][i] / p);
    }

    out.transform.assign(n, RatVec(n));
    out.diagonal.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r) out.transform[j][r] = t[r][j];
        out.diagonal[j] = a[j][j];
    }
    return out;
}

} // namespace detail

inline LatticeClassification classify(const Lattice& lattice) {
    LatticeClassification out;
    out.is_even = true;
    for (int i = 0; i < lattice.rank(); ++i)
        if (lattice.gram()[i][i] % 2 != 0) out.is_even = false;
    out.signature = detail::symmetric_inertia(lattice.gram()).sig;
    return out;
}

inline LatticeClassification classify(const IntMat& gram) {
    std::vector<std::string> names(gram.size());
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = "b" + std::to_string(i + 1);
    return classify(Lattice("anonymous", names, gram));
}

// ---------------------------------------------------------------------------
// Definiteness of a sublattice
// ---------------------------------------------------------------------------

enum class Definiteness { NegativeDefinite, Degenerate, NotNegativeDefinite };

inline IntMat restricted_gram(const std::vector<DivisorClass>& sub) {
    const std::size_t k = sub.size();
    IntMat g(k, IntVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g[i][j] = pairing(sub[i], sub[j]);
    return g;
}

// Exact definiteness of the Gram matrix of the given classes. A linearly
// dependent family shows up as a zero in the inertia and is reported as
// degenerate rather than rejected.
inline Definiteness sublattice_definiteness(const std::vector<DivisorClass>& sub) {
    if (sub.empty()) return Definiteness::NegativeDefinite;  // rank-0 form, vacuously
    for (std::size_t i = 1; i < sub.size(); ++i)
        require_same_lattice(sub[0].lattice, sub[i].lattice, "sublattice definiteness");
    const Signature sig = detail::symmetric_inertia(restricted_gram(sub)).sig;
    if (sig.zeros > 0) return Definiteness::Degenerate;
    if (sig.positives > 0) return Definiteness::NotNegativeDefinite;
    return Definiteness::NegativeDefinite;
}

inline bool is_negative_definite(const std::vector<DivisorClass>& sub) {
    return sublattice_definiteness(sub) == Definiteness::NegativeDefinite;
}

} // namespace dpfano
