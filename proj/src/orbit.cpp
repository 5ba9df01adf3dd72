#include "binmat/orbit.hpp"

#include <algorithm>
#include <sstream>

namespace binmat {

MoveSequence OrbitTable::sequence_to(const GroundSet& g) const {
    const auto it = index.find(g);
    if (it == index.end()) throw domain_error("state was not visited");
    MoveSequence seq;
    std::size_t cur = it->second;
    while (predecessor[cur] >= 0) {
        seq.push_back(via[cur]);
        cur = static_cast<std::size_t>(predecessor[cur]);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

namespace {

struct Expander {
    Space space;
    GroundSet full;
    std::vector<GroundSet> cocirc;  // indexed by functional
    std::vector<Functional> sigma_args;
    std::vector<Functional> lambda_args;
    std::vector<Functional> hyp_args;
    bool omega = false, swap_on = false, swap_off = false;

    Expander(Space s, const GeneratorSet& gens)
        : space(s), full(GroundSet::full_set(s)) {
        if (!gens.any()) throw domain_error("generator set is empty");
        const Element n = s.point_count();
        cocirc.resize(n + 1, GroundSet(s));
        for (Functional a = 1; a <= n; ++a) cocirc[a] = cocircuit(s, a);
        omega = gens.omega;
        swap_on = gens.swap_on;
        swap_off = gens.swap_off;
        if (gens.sigma) {
            if (gens.row_sigma_only)
                for (int i = 0; i < s.r; ++i) sigma_args.push_back(Functional{1} << i);
            else
                for (Functional a = 1; a <= n; ++a) sigma_args.push_back(a);
        }
        if (gens.lambda)
            for (Functional a = 1; a <= n; ++a) lambda_args.push_back(a);
        if (gens.hypcomp)
            for (Functional a = 1; a <= n; ++a) hyp_args.push_back(a);
    }

    GroundSet lambda_image(const GroundSet& g, Functional a) const {
        const GroundSet trace = g & cocirc[a];
        return g ^ (closure(trace) - cocirc[a]);
    }
    GroundSet swap_image(const GroundSet& g, Element f) const {
        GroundSet out(space);
        g.for_each([&](Element x) { out.set(x == f ? x : x ^ f); });
        return out;
    }

    // Neighbours in generator order: omega, sigma, lambda, hypcomp, swaps.
    template <typename Fn>
    void for_each_neighbour(const GroundSet& g, Fn&& fn) const {
        if (omega) fn(Move::omega(), g ^ full);
        for (auto a : sigma_args) fn(Move::sigma(a), g ^ cocirc[a]);
        for (auto a : lambda_args) fn(Move::lambda(a), lambda_image(g, a));
        for (auto a : hyp_args) fn(Move::hyp_comp(a), g ^ (full - cocirc[a]));
        if (swap_on || swap_off) {
            const Element n = space.point_count();
            for (Element f = 1; f <= n; ++f) {
                const bool green = g.test(f);
                if (green && !swap_on) continue;
                if (!green && !swap_off) continue;
                fn(green ? Move::swap_on(f) : Move::swap_off(f), swap_image(g, f));
            }
        }
    }
};

struct Discovery {
    GroundSet state;
    std::size_t pred;
    Move move;
};

// Level-synchronous BFS. Discoveries of a level are merged in sorted state
// order before predecessors are assigned, so the table is deterministic.
// When `target` is given the search stops as soon as it is assigned.
OrbitTable bfs(Space s, const Matroid& start, const GeneratorSet& gens,
               std::optional<std::uint64_t> budget, const GroundSet* target) {
    if (start.space.r != s.r) throw domain_error("start state is in a different space");
    if (s.r >= 5 && !budget)
        throw domain_error("orbit search needs an explicit visit budget for r >= 5");
    const Expander ex(s, gens);

    OrbitTable table;
    table.space = s;
    table.root = start.ground;

    // Flat visited table for the 2^n masks when r <= 4; hash membership
    // above that.
    std::vector<bool> flat;
    const bool use_flat = s.r <= 4;
    if (use_flat) flat.assign(std::size_t{1} << s.point_count(), false);
    auto seen = [&](const GroundSet& g) {
        return use_flat ? static_cast<bool>(flat[static_cast<std::size_t>(g.mask64())])
                        : table.index.count(g) != 0;
    };
    auto insert = [&](const GroundSet& g, std::int64_t pred, Move via) {
        if (use_flat) flat[static_cast<std::size_t>(g.mask64())] = true;
        table.index.emplace(g, table.states.size());
        table.states.push_back(g);
        table.predecessor.push_back(pred);
        table.via.push_back(via);
    };

    insert(start.ground, -1, Move::omega());
    if (target && start.ground == *target) return table;

    std::size_t level_begin = 0;
    while (level_begin < table.states.size()) {
        const std::size_t level_end = table.states.size();
        std::vector<Discovery> found;
        for (std::size_t i = level_begin; i < level_end; ++i) {
            const GroundSet g = table.states[i];
            ex.for_each_neighbour(g, [&](Move mv, GroundSet nxt) {
                if (!seen(nxt)) found.push_back({std::move(nxt), i, mv});
            });
        }
        std::sort(found.begin(), found.end(), [](const Discovery& a, const Discovery& b) {
            if (a.state != b.state) return a.state < b.state;
            if (a.pred != b.pred) return a.pred < b.pred;
            return a.move < b.move;
        });
        for (std::size_t k = 0; k < found.size(); ++k) {
            if (k > 0 && found[k].state == found[k - 1].state) continue;
            if (budget && table.states.size() >= *budget) {
                table.complete = false;
                std::vector<GroundSet> frontier;
                for (std::size_t j = k; j < found.size(); ++j)
                    if (!seen(found[j].state)) frontier.push_back(found[j].state);
                throw orbit_budget_exhausted(std::move(table), std::move(frontier));
            }
            insert(found[k].state, static_cast<std::int64_t>(found[k].pred), found[k].move);
            if (target && found[k].state == *target) return table;
        }
        level_begin = level_end;
    }
    return table;
}

}  // namespace

OrbitTable orbit(Space s, const Matroid& start, const GeneratorSet& gens,
                 std::optional<std::uint64_t> budget) {
    return bfs(s, start, gens, budget, nullptr);
}

std::optional<MoveSequence> reachable(Space s, const Matroid& from, const Matroid& to,
                                      const GeneratorSet& gens,
                                      std::optional<std::uint64_t> budget) {
    if (to.space.r != s.r) throw domain_error("target state is in a different space");
    try {
        const OrbitTable table = bfs(s, from, gens, budget, &to.ground);
        if (!table.contains(to.ground)) return std::nullopt;
        MoveSequence seq = table.sequence_to(to.ground);
        if (replay(from, seq).ground != to.ground)
            throw std::logic_error("extracted sequence does not replay to its target");
        return seq;
    } catch (const orbit_budget_exhausted& e) {
        throw indeterminate_error("visit budget exhausted before reachability was decided");
    }
}

namespace {

std::uint64_t binomial_or_zero(unsigned n, unsigned k) {
    // Zero signals overflow; only used for display totals.
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > ~std::uint64_t{0}) return 0;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

CoverageReport coverage_report(const OrbitTable& table) {
    const Space s = table.space;
    const Element n = s.point_count();
    CoverageReport rep;
    rep.r = s.r;
    rep.with_classes = s.r <= 4;
    rep.rows.resize(n + 1);
    for (Element k = 0; k <= n; ++k) {
        rep.rows[k].size = k;
        rep.rows[k].total_states = binomial_or_zero(n, k);
        rep.total_states += rep.rows[k].total_states;
    }
    for (const auto& g : table.states) ++rep.rows[g.count()].visited_states;
    rep.visited_states = table.size();

    if (rep.with_classes) {
        const std::size_t total = std::size_t{1} << n;
        std::vector<bool> visited_rep(total, false), any_rep(total, false);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Matroid m(s, GroundSet::from_mask64(s, mask));
            const std::uint64_t c = canonical_form(m).mask64();
            if (c == mask) any_rep[mask] = true;
        }
        for (const auto& g : table.states)
            visited_rep[static_cast<std::size_t>(
                canonical_form(Matroid(s, g)).mask64())] = true;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (!any_rep[mask]) continue;
            const auto k = GroundSet::from_mask64(s, mask).count();
            ++rep.rows[k].total_classes;
            ++rep.total_classes;
            if (visited_rep[mask]) {
                ++rep.rows[k].visited_classes;
                ++rep.visited_classes;
            }
        }
    }
    return rep;
}

std::string CoverageReport::to_string() const {
    std::ostringstream os;
    os << "states " << visited_states;
    if (total_states) os << "/" << total_states;
    os << "\n";
    if (with_classes) os << "classes " << visited_classes << "/" << total_classes << "\n";
    for (const auto& row : rows) {
        if (row.visited_states == 0 && row.visited_classes == 0) continue;
        os << "size " << row.size << ": states " << row.visited_states;
        if (row.total_states) os << "/" << row.total_states;
        if (with_classes)
            os << " classes " << row.visited_classes << "/" << row.total_classes;
        os << "\n";
    }
    return os.str();
}

}  // namespace binmat
