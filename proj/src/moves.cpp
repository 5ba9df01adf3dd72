#include "binmat/moves.hpp"

#include <algorithm>

namespace binmat {

std::string to_string(const Move& m) {
    switch (m.tag) {
        case MoveTag::Omega:
            return "omega";
        case MoveTag::Sigma:
            return "sigma a=" + std::to_string(m.arg);
        case MoveTag::Lambda:
            return "lambda a=" + std::to_string(m.arg);
        case MoveTag::HypComp:
            return "hypcomp a=" + std::to_string(m.arg);
        case MoveTag::SwapOn:
            return "swap+ f=" + std::to_string(m.arg);
        case MoveTag::SwapOff:
            return "swap- f=" + std::to_string(m.arg);
    }
    return "?";
}

Matroid apply_omega(const Matroid& m) { return Matroid(m.space, ~m.ground); }

Matroid apply_sigma(const Matroid& m, Functional a) {
    return Matroid(m.space, m.ground ^ cocircuit(m.space, a));
}

Matroid apply_lambda(const Matroid& m, Functional a) {
    const GroundSet coc = cocircuit(m.space, a);
    const GroundSet flip = closure(m.ground & coc) - coc;
    return Matroid(m.space, m.ground ^ flip);
}

Matroid apply_hyperplane_complement(const Matroid& m, Functional a) {
    return Matroid(m.space, m.ground ^ hyperplane(m.space, a));
}

SwapResult apply_pointed_swap(const Matroid& m, Element f) {
    m.space.require_element(f);
    GroundSet g(m.space);
    m.ground.for_each([&](Element x) { g.set(x == f ? x : x ^ f); });
    return {Matroid(m.space, g), m.ground.test(f)};
}

Matroid apply_move(const Matroid& m, const Move& mv) {
    switch (mv.tag) {
        case MoveTag::Omega:
            return apply_omega(m);
        case MoveTag::Sigma:
            m.space.require_functional(mv.arg);
            return apply_sigma(m, mv.arg);
        case MoveTag::Lambda:
            m.space.require_functional(mv.arg);
            return apply_lambda(m, mv.arg);
        case MoveTag::HypComp:
            m.space.require_functional(mv.arg);
            return apply_hyperplane_complement(m, mv.arg);
        case MoveTag::SwapOn: {
            m.space.require_element(mv.arg);
            if (!m.ground.test(mv.arg))
                throw domain_error("swap+ needs a green element, " + std::to_string(mv.arg) +
                                   " is red");
            return apply_pointed_swap(m, mv.arg).matroid;
        }
        case MoveTag::SwapOff: {
            m.space.require_element(mv.arg);
            if (m.ground.test(mv.arg))
                throw domain_error("swap- needs a red element, " + std::to_string(mv.arg) +
                                   " is green");
            return apply_pointed_swap(m, mv.arg).matroid;
        }
    }
    throw domain_error("bad move tag");
}

Matroid replay(const Matroid& start, std::span<const Move> seq) {
    Matroid cur = start;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = apply_move(cur, seq[i]);
        } catch (const domain_error& e) {
            throw replay_error(i, e.what());
        }
    }
    return cur;
}

ReplayTrace replay_traced(const Matroid& start, std::span<const Move> seq) {
    ReplayTrace t{start, {start.ground}};
    t.states.reserve(seq.size() + 1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            t.result = apply_move(t.result, seq[i]);
        } catch (const domain_error& e) {
            throw replay_error(i, e.what());
        }
        t.states.push_back(t.result.ground);
    }
    return t;
}

SigmaOmegaWord normalize_sigma_omega(const Space& s, std::span<const Move> seq) {
    SigmaOmegaWord w;
    for (const auto& m : seq) {
        if (m.tag == MoveTag::Omega) {
            w.omega = !w.omega;
        } else if (m.tag == MoveTag::Sigma) {
            s.require_functional(m.arg);
            w.sigma ^= m.arg;
        } else {
            throw domain_error("normal form defined only for sigma/omega words");
        }
    }
    return w;
}

MoveSequence decompose_into_row_switchings(Space s, Functional a,
                                           std::span<const Element> basis) {
    s.require_functional(a);
    if (basis.size() != static_cast<std::size_t>(s.r))
        throw domain_error("basis must have exactly r elements");
    for (Element b : basis) s.require_element(b);
    const auto inv = gf2_invert_columns(basis);
    if (!inv) throw domain_error("elements do not form a basis");
    // Row i of the inverse is the dual functional of basis element i; a
    // expands over the dual basis with coefficients dot(a, basis[i]).
    MoveSequence out;
    for (int i = 0; i < s.r; ++i)
        if (gf2_dot(a, basis[static_cast<std::size_t>(i)]))
            out.push_back(Move::sigma((*inv)[static_cast<std::size_t>(i)]));
    return out;
}

MoveSequence omega_as_three_hyperplanes(Space s, const GroundSet& flat) {
    if (s.r < 2) throw domain_error("needs rank > 1");
    if (flat.r() != s.r) throw domain_error("flat lives in a different space");
    if (rank(flat) != s.r - 2 || !is_flat(flat))
        throw domain_error("expected a flat of rank r-2");
    // Functionals vanishing on the flat: a 2-dimensional space, so exactly
    // three nonzero choices.
    std::vector<std::pair<std::uint32_t, int>> eqs;
    flat.for_each([&](Element x) { eqs.emplace_back(x, 0); });
    const auto sol = gf2_solve(eqs, s.r);
    if (!sol || sol->kernel.size() != 2)
        throw std::logic_error("annihilator of a rank-(r-2) flat must have dimension 2");
    std::vector<Functional> fs = {sol->kernel[0], sol->kernel[1],
                                  sol->kernel[0] ^ sol->kernel[1]};
    std::sort(fs.begin(), fs.end());
    MoveSequence out;
    for (auto f : fs) out.push_back(Move::hyp_comp(f));
    return out;
}

}  // namespace binmat
