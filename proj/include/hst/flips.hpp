#pragma once

#include "hst/triangulation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hst {

// An increasing bistellar flip. In even dimension 2d the internal d-simplex
// A is exchanged for B with A wr B and |A| = |B| = d+1. In odd dimension
// 2d+1 the internal set only loses A, and B is the (d+2)-element simplex
// with A wr B locating the flip polytope C(A u B, 2d+1).
struct FlipWitness {
    Simplex removed;
    std::optional<Simplex> inserted;

    bool operator==(const FlipWitness&) const = default;
    bool operator<(const FlipWitness& o) const {
        if (removed != o.removed) return removed < o.removed;
        return inserted < o.inserted;
    }
};

using FlipList = std::vector<std::pair<FlipWitness, Triangulation>>;

/// All increasing flips of T, sorted by witness; empty at the maximum.
FlipList increasing_flips(const Triangulation& t);

/// Exact inverse: (W, T') in decreasing_flips(T) iff (W, T) in
/// increasing_flips(T').
FlipList decreasing_flips(const Triangulation& t);

// Odd dimension only. For mutable A (i.e. A flippable in T) returns the
// unique support <b_1, ..., b_d> cut from the flip simplex B; otherwise the
// lexicographically least support, or nullopt if none exists (which cannot
// happen when e(T) is supporting).
std::optional<Simplex> support_of(const Triangulation& t, const Simplex& a);

// Even dimension only. Given a valid increasing flip (A, B) of some T with
// T <=2 T', lists every <a^_0, a_1, ..., a_d> in e(T') with
// a_0 <= a^_0 < b_0. Empty iff the flipped triangulation stays <=2 T'.
std::vector<Simplex> obstructions(const Triangulation& t_prime, const FlipWitness& w);

} // namespace hst
