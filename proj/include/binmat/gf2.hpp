#pragma once

// Word-level GF(2) linear algebra on vectors of GF(2)^r packed into the low
// r bits of a uint32_t. Element x of the geometry corresponds to the vector
// whose coordinate i is bit i-1 of x, so vector addition is XOR and the
// standard pairing is popcount(a & x) mod 2.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace binmat {

using Element = std::uint32_t;     // 1 .. 2^r - 1
using Functional = std::uint32_t;  // 1 .. 2^r - 1, a nonzero dual vector

inline int gf2_dot(std::uint32_t a, std::uint32_t x) {
    return std::popcount(a & x) & 1;
}

// Incremental row-echelon basis. Keeps one pivot vector per leading bit, so
// insert/reduce are O(r) word operations and no allocation happens.
class Echelon {
public:
    // Reduces v against the current basis; returns 0 iff v is in the span.
    std::uint32_t reduce(std::uint32_t v) const {
        while (v != 0) {
            const int lead = 31 - std::countl_zero(v);
            if (piv_[lead] == 0) return v;
            v ^= piv_[lead];
        }
        return 0;
    }

    // Returns true when v enlarged the span.
    bool insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        piv_[31 - std::countl_zero(v)] = v;
        ++rank_;
        return true;
    }

    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
    int rank() const { return rank_; }

    // Pivot vectors in increasing leading-bit order.
    std::vector<std::uint32_t> basis() const {
        std::vector<std::uint32_t> b;
        b.reserve(static_cast<std::size_t>(rank_));
        for (int i = 0; i < 32; ++i)
            if (piv_[i] != 0) b.push_back(piv_[i]);
        return b;
    }

private:
    std::array<std::uint32_t, 32> piv_{};
    int rank_ = 0;
};

inline int gf2_rank(std::span<const std::uint32_t> vectors) {
    Echelon e;
    for (auto v : vectors) e.insert(v);
    return e.rank();
}

// All 2^k - 1 nonzero combinations of a basis, Gray-code order.
inline std::vector<std::uint32_t> gf2_span_nonzero(std::span<const std::uint32_t> basis) {
    std::vector<std::uint32_t> out;
    const std::size_t k = basis.size();
    out.reserve((std::size_t{1} << k) - 1);
    std::uint32_t cur = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(s))];
        out.push_back(cur);
    }
    return out;
}

// Brings a basis into fully reduced form: distinct leading bits, and no
// vector contains another's leading bit. With this shape the minimum of a
// coset p + span(basis) is obtained by clearing every pivot bit of p.
inline std::vector<std::uint32_t> gf2_full_reduce(std::vector<std::uint32_t> basis) {
    Echelon e;
    for (auto v : basis) e.insert(v);
    basis = e.basis();
    for (std::size_t i = basis.size(); i-- > 0;) {
        const std::uint32_t lead = std::uint32_t{1} << (31 - std::countl_zero(basis[i]));
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i && (basis[j] & lead)) basis[j] ^= basis[i];
    }
    return basis;
}

inline std::uint32_t gf2_coset_min(std::uint32_t p, std::span<const std::uint32_t> reduced_basis) {
    for (auto b : reduced_basis) {
        const std::uint32_t lead = std::uint32_t{1} << (31 - std::countl_zero(b));
        if (p & lead) p ^= b;
    }
    return p;
}

// Solution set of the system dot(a, coeff_j) = rhs_j, as a particular
// solution plus a fully reduced kernel basis. Empty optional = inconsistent.
struct AffineSolutionSet {
    std::uint32_t particular = 0;
    std::vector<std::uint32_t> kernel;  // fully reduced

    // Smallest solution, skipping zero; 0 means no nonzero solution exists.
    std::uint32_t min_nonzero() const {
        std::uint32_t m = gf2_coset_min(particular, kernel);
        if (m != 0) return m;
        std::uint32_t best = 0;
        for (auto b : kernel)
            if (best == 0 || b < best) best = b;
        return best;
    }
};

std::optional<AffineSolutionSet> gf2_solve(
    std::span<const std::pair<std::uint32_t, int>> equations, int unknowns);

// Inverse of an invertible r x r matrix given by columns; empty when the
// columns are dependent. Row i of the inverse is returned as the integer
// whose bit j is (A^-1)[i][j].
std::optional<std::vector<std::uint32_t>> gf2_invert_columns(
    std::span<const std::uint32_t> cols);

}  // namespace binmat
