#include "binmat/gf2.hpp"

namespace binmat {

std::optional<AffineSolutionSet> gf2_solve(
    std::span<const std::pair<std::uint32_t, int>> equations, int unknowns) {
    // Augmented rows: coefficient vector in bits 1..unknowns, rhs in bit 0.
    // piv[i] holds the echelon row whose leading coefficient bit is i.
    std::array<std::uint64_t, 33> piv{};
    for (auto [coeff, rhs] : equations) {
        std::uint64_t row = (static_cast<std::uint64_t>(coeff) << 1) | (rhs & 1);
        while ((row >> 1) != 0) {
            const int lead = 63 - std::countl_zero(row >> 1);
            if (piv[lead] == 0) break;
            row ^= piv[lead];
        }
        if ((row >> 1) != 0) {
            piv[63 - std::countl_zero(row >> 1)] = row;
        } else if (row & 1) {
            return std::nullopt;  // 0 = 1
        }
    }

    // Gauss-Jordan: leave each pivot coordinate in exactly one row.
    for (int i = 0; i < unknowns; ++i) {
        if (piv[i] == 0) continue;
        for (int j = 0; j < unknowns; ++j) {
            if (j == i || piv[j] == 0) continue;
            if (piv[j] & (std::uint64_t{1} << (i + 1))) piv[j] ^= piv[i];
        }
    }

    AffineSolutionSet sol;
    // Particular solution with all free coordinates zero: row i then reads
    // a_i = rhs_i.
    for (int i = 0; i < unknowns; ++i)
        if (piv[i] != 0 && (piv[i] & 1)) sol.particular |= std::uint32_t{1} << i;

    // One kernel vector per free coordinate f: a_f = 1 and a_i = A[i][f] on
    // pivot coordinates keeps every equation homogeneous.
    for (int f = 0; f < unknowns; ++f) {
        if (piv[f] != 0) continue;
        std::uint32_t v = std::uint32_t{1} << f;
        for (int i = 0; i < unknowns; ++i)
            if (piv[i] != 0 && (piv[i] & (std::uint64_t{1} << (f + 1))))
                v |= std::uint32_t{1} << i;
        sol.kernel.push_back(v);
    }
    sol.kernel = gf2_full_reduce(std::move(sol.kernel));
    return sol;
}

std::optional<std::vector<std::uint32_t>> gf2_invert_columns(
    std::span<const std::uint32_t> cols) {
    const int r = static_cast<int>(cols.size());
    // Row i of the matrix, augmented with row i of the identity: bit j is
    // A[i][j], bit r+j is I[i][j].
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            if (cols[static_cast<std::size_t>(j)] >> i & 1)
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << (r + i);
    }
    for (int c = 0; c < r; ++c) {
        int p = -1;
        for (int i = c; i < r; ++i)
            if (rows[static_cast<std::size_t>(i)] >> c & 1) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        std::swap(rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(p)]);
        for (int i = 0; i < r; ++i)
            if (i != c && (rows[static_cast<std::size_t>(i)] >> c & 1))
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(c)];
    }
    std::vector<std::uint32_t> inv(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i)
        inv[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(rows[static_cast<std::size_t>(i)] >> r);
    return inv;
}

}  // namespace binmat
