#include "binmat/space.hpp"

#include <set>

namespace binmat {

int dot(const Space& s, Functional a, Element x) {
    s.require_functional(a);
    s.require_element(x);
    return gf2_dot(a, x);
}

GroundSet cocircuit(Space s, Functional a) {
    s.require_functional(a);
    GroundSet g(s);
    const Element n = s.point_count();
    for (Element x = 1; x <= n; ++x)
        if (gf2_dot(a, x)) g.set(x);
    return g;
}

GroundSet hyperplane(Space s, Functional a) {
    return GroundSet::full_set(s) - cocircuit(s, a);
}

int rank(const GroundSet& s) {
    Echelon e;
    s.for_each([&](Element x) { e.insert(x); });
    return e.rank();
}

GroundSet closure(const GroundSet& s) {
    Echelon e;
    s.for_each([&](Element x) { e.insert(x); });
    GroundSet out(s.space());
    const auto basis = e.basis();
    for (auto v : gf2_span_nonzero(basis)) out.set(v);
    return out;
}

bool is_flat(const GroundSet& s) { return closure(s) == s; }

std::vector<GroundSet> flats_of_rank(Space s, int k) {
    if (k < 0 || k > s.r) throw domain_error("flat rank out of range");
    if (k == 0) return {GroundSet::empty_set(s)};
    // Closures of independent k-subsets, built by extending a partial basis
    // with points outside its span.
    std::set<GroundSet> seen;
    std::vector<Element> stack;
    const Element n = s.point_count();
    auto extend = [&](auto&& self, Element start, Echelon e) -> void {
        if (static_cast<int>(stack.size()) == k) {
            GroundSet flat(s);
            for (auto v : gf2_span_nonzero(e.basis())) flat.set(v);
            seen.insert(flat);
            return;
        }
        for (Element x = start; x <= n; ++x) {
            if (e.contains(x)) continue;
            Echelon e2 = e;
            e2.insert(x);
            stack.push_back(x);
            self(self, x + 1, e2);
            stack.pop_back();
        }
    };
    extend(extend, 1, Echelon{});
    return {seen.begin(), seen.end()};
}

std::uint64_t count_affine_subgeometries(Space s) {
    if (s.r < 3) throw domain_error("affine subgeometry count needs r >= 3");
    std::uint64_t count = 0;
    for (const auto& flat : flats_of_rank(s, s.r - 2)) {
        // Each affine copy is flat minus one of its hyperplanes; enumerate
        // the rank-(r-3) flats inside.
        std::set<GroundSet> hyps;
        const auto pts = flat.elements();
        const int m = s.r - 3;
        std::vector<Element> chosen;
        auto extend = [&](auto&& self, std::size_t start, Echelon e) -> void {
            if (static_cast<int>(chosen.size()) == m) {
                GroundSet h(s);
                for (auto v : gf2_span_nonzero(e.basis())) h.set(v);
                hyps.insert(h);
                return;
            }
            for (std::size_t i = start; i < pts.size(); ++i) {
                if (e.contains(pts[i])) continue;
                Echelon e2 = e;
                e2.insert(pts[i]);
                chosen.push_back(pts[i]);
                self(self, i + 1, e2);
                chosen.pop_back();
            }
        };
        extend(extend, 0, Echelon{});
        count += hyps.size();
    }
    const std::uint64_t closed_form =
        ((std::uint64_t{1} << s.r) - 1) * ((std::uint64_t{1} << (s.r - 1)) - 1) *
        ((std::uint64_t{1} << (s.r - 2)) - 1) / 3;
    if (count != closed_form)
        throw std::logic_error("affine subgeometry enumeration disagrees with closed form");
    return count;
}

}  // namespace binmat
