#include "binmat/matroid.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace binmat {

int matroid_rank(const Matroid& m) { return rank(m.ground); }

GroundSet coloops(const Matroid& m) {
    GroundSet out(m.space);
    const int full = rank(m.ground);
    m.ground.for_each([&](Element e) {
        GroundSet g = m.ground;
        g.reset(e);
        if (rank(g) == full - 1) out.set(e);
    });
    return out;
}

std::optional<Functional> find_cocircuit_with_trace(const Matroid& m, const GroundSet& d) {
    if (!d.subset_of(m.ground)) throw domain_error("trace is not within the ground set");
    std::vector<std::pair<std::uint32_t, int>> eqs;
    eqs.reserve(m.ground.count());
    m.ground.for_each([&](Element x) { eqs.emplace_back(x, d.test(x) ? 1 : 0); });
    const auto sol = gf2_solve(eqs, m.space.r);
    if (!sol) return std::nullopt;
    const Functional a = sol->min_nonzero();
    if (a == 0) return std::nullopt;
    return a;
}

namespace {

// Point permutations of the transvection generators x -> x + x_i e_j; they
// generate the whole of GL(r,2).
std::vector<std::vector<std::uint32_t>> transvection_maps(int r) {
    const std::uint32_t n = (std::uint32_t{1} << r) - 1;
    std::vector<std::vector<std::uint32_t>> maps;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            std::vector<std::uint32_t> p(n + 1);
            for (std::uint32_t x = 1; x <= n; ++x)
                p[x] = x ^ (((x >> i) & 1) << j);
            maps.push_back(std::move(p));
        }
    return maps;
}

// canon[mask] = smallest mask in the GL(r,2) orbit, for every subset mask.
std::shared_ptr<const std::vector<std::uint32_t>> canon_table(int r) {
    static std::mutex mu;
    static std::array<std::shared_ptr<const std::vector<std::uint32_t>>, 5> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[static_cast<std::size_t>(r - 1)])
        return cache[static_cast<std::size_t>(r - 1)];

    const std::uint32_t n = (std::uint32_t{1} << r) - 1;
    const std::size_t total = std::size_t{1} << n;
    const auto gens = transvection_maps(r);
    auto table = std::make_shared<std::vector<std::uint32_t>>(total, 0);
    std::vector<bool> visited(total, false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t root = 0; root < total; ++root) {
        if (visited[root]) continue;
        // Ascending scan: the first unvisited mask is its orbit's minimum.
        queue.assign(1, root);
        visited[root] = true;
        (*table)[root] = root;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const std::uint32_t cur = queue[h];
            for (const auto& p : gens) {
                std::uint32_t img = 0;
                std::uint32_t rest = cur;
                while (rest) {
                    const int b = std::countr_zero(rest);
                    img |= std::uint32_t{1} << (p[static_cast<std::size_t>(b) + 1] - 1);
                    rest &= rest - 1;
                }
                if (!visited[img]) {
                    visited[img] = true;
                    (*table)[img] = root;
                    queue.push_back(img);
                }
            }
        }
    }
    cache[static_cast<std::size_t>(r - 1)] = table;
    return table;
}

// Minimum image over all of GL(5,2) by depth-first enumeration of column
// tuples; phi is filled level by level (entries below 2^k are final once
// columns 0..k-1 are chosen).
std::uint32_t min_image_gl5(std::uint32_t mask) {
    constexpr int r = 5;
    constexpr std::uint32_t n = 31;
    std::uint32_t elems[32];
    int ne = 0;
    for (std::uint32_t x = 1; x <= n; ++x)
        if (mask >> (x - 1) & 1) elems[ne++] = x;
    std::uint32_t best = mask;
    std::uint32_t phi[32];
    phi[0] = 0;
    // span_mask bit v: v is in the span of the chosen columns (bit 0 set).
    auto rec = [&](auto&& self, int level, std::uint32_t span_mask) -> void {
        if (level == r) {
            std::uint32_t img = 0;
            for (int i = 0; i < ne; ++i) img |= std::uint32_t{1} << (phi[elems[i]] - 1);
            if (img < best) best = img;
            return;
        }
        for (std::uint32_t c = 1; c <= n; ++c) {
            if (span_mask >> c & 1) continue;
            const std::uint32_t lo = std::uint32_t{1} << level;
            for (std::uint32_t x = 0; x < lo; ++x) phi[lo + x] = phi[x] ^ c;
            std::uint32_t next_span = span_mask;
            std::uint32_t rest = span_mask;
            while (rest) {
                const int v = std::countr_zero(rest);
                next_span |= std::uint32_t{1} << (static_cast<std::uint32_t>(v) ^ c);
                rest &= rest - 1;
            }
            self(self, level + 1, next_span);
        }
    };
    rec(rec, 0, 1);
    return best;
}

}  // namespace

GroundSet canonical_form(const Matroid& m) {
    const int r = m.space.r;
    if (r > 5) throw unsupported_error("canonical form supported for r <= 5");
    if (r <= 4) {
        const auto table = canon_table(r);
        const std::uint32_t mask = static_cast<std::uint32_t>(m.ground.mask64());
        return GroundSet::from_mask64(m.space, (*table)[mask]);
    }
    return GroundSet::from_mask64(m.space,
                                  min_image_gl5(static_cast<std::uint32_t>(m.ground.mask64())));
}

namespace {

Matroid catalogue_set(Space s, int need_rank, std::initializer_list<Element> xs,
                      const std::string& name) {
    if (s.r < need_rank)
        throw domain_error("matroid " + name + " needs rank >= " + std::to_string(need_rank));
    return Matroid(s, GroundSet::of(s, xs));
}

}  // namespace

Matroid named_matroid(Space s, const std::string& name) {
    // U_{k,k}: the first k powers of two.
    if (name.size() >= 6 && name.rfind("U_{", 0) == 0 && name.back() == '}') {
        const auto comma = name.find(',');
        if (comma != std::string::npos) {
            const std::string ks = name.substr(3, comma - 3);
            const std::string ms = name.substr(comma + 1, name.size() - comma - 2);
            if (!ks.empty() && !ms.empty() &&
                ks.find_first_not_of("0123456789") == std::string::npos &&
                ms.find_first_not_of("0123456789") == std::string::npos) {
                const int k = std::stoi(ks);
                const int mm = std::stoi(ms);
                if (k == mm) {
                    if (k > s.r)
                        throw domain_error("matroid " + name + " needs rank >= " +
                                           std::to_string(k));
                    GroundSet g(s);
                    for (int i = 0; i < k; ++i) g.set(Element{1} << i);
                    return Matroid(s, g);
                }
                if (k == 2 && mm == 3) return catalogue_set(s, 2, {1, 2, 3}, name);
                if (k == 3 && mm == 4) return catalogue_set(s, 3, {1, 2, 4, 7}, name);
                if (k == 4 && mm == 5) return catalogue_set(s, 4, {1, 2, 4, 8, 15}, name);
            }
        }
    }
    // P_k: every point below 2^k. A_k: the odd-pairing half of P_k.
    if ((name.rfind("P_", 0) == 0 || name.rfind("A_", 0) == 0) && name.size() > 2 &&
        name.find_first_not_of("0123456789", 2) == std::string::npos) {
        const int k = std::stoi(name.substr(2));
        if (k < 1 || k > s.r)
            throw domain_error("matroid " + name + " needs rank >= " + std::to_string(k));
        GroundSet g(s);
        const Element top = (Element{1} << k) - 1;
        for (Element x = 1; x <= top; ++x)
            if (name[0] == 'P' || gf2_dot(top, x)) g.set(x);
        return Matroid(s, g);
    }
    if (name == "F_7") return named_matroid(s, "P_3");
    if (name == "F_7*") {
        Matroid m = catalogue_set(s, 4, {}, name);
        for (Element x = 9; x <= 15; ++x) m.ground.set(x);
        return m;
    }
    if (name == "F_7+U_{1,1}") {
        Matroid m = catalogue_set(s, 4, {}, name);
        for (Element x = 1; x <= 8; ++x) m.ground.set(x);
        return m;
    }
    if (name == "M(K_4)") return catalogue_set(s, 3, {1, 2, 3, 4, 5, 6}, name);
    if (name == "M(K_4\\e)") return catalogue_set(s, 3, {1, 2, 3, 4, 5}, name);
    throw domain_error("unknown matroid name: " + name);
}

}  // namespace binmat
