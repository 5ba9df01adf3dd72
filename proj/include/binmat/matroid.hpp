#pragma once

// Restrictions of the projective geometry as labeled states: the ground set
// is the set of green points. Includes the cocircuit-trace solver, a frozen
// catalogue of named example matroids, and GL(r,2) canonicalization for
// isomorphism checks between embeddings.

#include <optional>
#include <string>
#include <vector>

#include "binmat/space.hpp"

namespace binmat {

struct Matroid {
    Space space;
    GroundSet ground;

    explicit Matroid(Space s) : space(s), ground(s) {}
    Matroid(Space s, GroundSet g) : space(s), ground(std::move(g)) {
        if (ground.r() != s.r) throw domain_error("ground set rank mismatch");
    }

    static Matroid full(Space s) { return Matroid(s, GroundSet::full_set(s)); }

    friend bool operator==(const Matroid&, const Matroid&) = default;
};

int matroid_rank(const Matroid& m);

// Elements whose removal drops the rank.
GroundSet coloops(const Matroid& m);

// Smallest functional a with cocircuit(a) ∩ ground = d, or nullopt when the
// linear system dot(a, x) = [x in d] (x in ground), a != 0 has no solution.
// Solvable for exactly the traces that are disjoint unions of cocircuits of
// m, plus d = {} when the ground set does not span.
std::optional<Functional> find_cocircuit_with_trace(const Matroid& m, const GroundSet& d);

// An invertible linear map, column-encoded: columns[i] is the image of the
// i-th standard basis vector.
struct LinearMap {
    std::vector<std::uint32_t> columns;

    bool invertible() const {
        return gf2_rank(columns) == static_cast<int>(columns.size());
    }
    Element apply(Element x) const {
        std::uint32_t y = 0;
        while (x) {
            y ^= columns[static_cast<std::size_t>(std::countr_zero(x))];
            x &= x - 1;
        }
        return y;
    }
    GroundSet apply(const GroundSet& g) const {
        GroundSet out(g.space());
        g.for_each([&](Element x) { out.set(apply(x)); });
        return out;
    }
    static LinearMap identity(int r) {
        LinearMap m;
        for (int i = 0; i < r; ++i) m.columns.push_back(std::uint32_t{1} << i);
        return m;
    }
};

// Lexicographically smallest image of the ground set under GL(r,2), where
// masks are compared as numbers. Equal canonical forms = isomorphic as
// labeled restrictions. Table-driven for r <= 4, full group enumeration at
// r = 5, unsupported above.
GroundSet canonical_form(const Matroid& m);

// Fixed labeled embeddings of the catalogue matroids. Supported names:
//   U_{k,k} (k <= r)      {1, 2, 4, ..., 2^(k-1)}, U_{0,0} empty
//   P_k (k <= r)          all points below 2^k
//   A_k (k <= r)          odd-pairing points of P_k: {x < 2^k : dot(2^k-1, x) = 1}
//   U_{2,3}               {1, 2, 3}
//   U_{3,4}               {1, 2, 4, 7}
//   U_{4,5}               {1, 2, 4, 8, 15}
//   F_7                   alias of P_3
//   F_7*                  {9, ..., 15} (rank 4)
//   F_7+U_{1,1}           {1, ..., 8}
//   M(K_4)                {1, ..., 6}
//   M(K_4\e)              {1, ..., 5}
Matroid named_matroid(Space s, const std::string& name);

}  // namespace binmat
