#pragma once

// The operations on labeled states and their algebra: complementation,
// switching, local complementation, complementation inside a hyperplane,
// and pointed swaps, plus replay of move scripts, the sigma/omega normal
// form, the row-cocircuit decomposition of a switching, and the expression
// of complementation as three hyperplane complementations.

#include <span>
#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

enum class MoveTag : std::uint8_t { Omega, Sigma, Lambda, HypComp, SwapOn, SwapOff };

struct Move {
    MoveTag tag;
    std::uint32_t arg = 0;  // functional for Sigma/Lambda/HypComp, element for swaps

    static Move omega() { return {MoveTag::Omega, 0}; }
    static Move sigma(Functional a) { return {MoveTag::Sigma, a}; }
    static Move lambda(Functional a) { return {MoveTag::Lambda, a}; }
    static Move hyp_comp(Functional a) { return {MoveTag::HypComp, a}; }
    static Move swap_on(Element f) { return {MoveTag::SwapOn, f}; }
    static Move swap_off(Element f) { return {MoveTag::SwapOff, f}; }

    friend bool operator==(const Move&, const Move&) = default;
    friend bool operator<(const Move& a, const Move& b) {
        return a.tag != b.tag ? a.tag < b.tag : a.arg < b.arg;
    }
};

using MoveSequence = std::vector<Move>;

std::string to_string(const Move& m);

// Ground set becomes its complement. Involution.
Matroid apply_omega(const Matroid& m);
// Symmetric difference with the cocircuit of a. Involution.
Matroid apply_sigma(const Matroid& m, Functional a);
// Symmetric difference with cl(ground ∩ cocircuit(a)) - cocircuit(a).
// Involution; identity when the trace is empty.
Matroid apply_lambda(const Matroid& m, Functional a);
// Symmetric difference with the hyperplane of a; equals omega after sigma.
Matroid apply_hyperplane_complement(const Matroid& m, Functional a);

struct SwapResult {
    Matroid matroid;
    bool on;  // f was green
};
// Pointed swap at f: every element other than f is translated by f; f keeps
// its colour. Applying the same swap twice restores the state.
SwapResult apply_pointed_swap(const Matroid& m, Element f);

// Applies one tagged move; swap moves require the matching colour of f.
Matroid apply_move(const Matroid& m, const Move& mv);

// Left-to-right application with validation of every swap precondition;
// replay_error names the offending index.
Matroid replay(const Matroid& start, std::span<const Move> seq);

struct ReplayTrace {
    Matroid result;
    std::vector<GroundSet> states;  // start state first, then one per move
};
ReplayTrace replay_traced(const Matroid& start, std::span<const Move> seq);

// Canonical form of a word in sigma and omega moves: at most one switching
// (the XOR of all switching functionals, omitted when zero) followed by at
// most one omega (parity of the omega count).
struct SigmaOmegaWord {
    Functional sigma = 0;  // 0 = no switching component
    bool omega = false;

    MoveSequence to_sequence() const {
        MoveSequence s;
        if (sigma != 0) s.push_back(Move::sigma(sigma));
        if (omega) s.push_back(Move::omega());
        return s;
    }
    friend bool operator==(const SigmaOmegaWord&, const SigmaOmegaWord&) = default;
};
SigmaOmegaWord normalize_sigma_omega(const Space& s, std::span<const Move> seq);

// Switchings over the fundamental cocircuits of the ordered basis whose
// composition equals switching by a on every state.
MoveSequence decompose_into_row_switchings(Space s, Functional a,
                                           std::span<const Element> basis);

// The three hyperplane complementations whose hyperplanes contain the given
// rank-(r-2) flat, ordered by functional value; their composition is omega.
MoveSequence omega_as_three_hyperplanes(Space s, const GroundSet& flat);

}  // namespace binmat
