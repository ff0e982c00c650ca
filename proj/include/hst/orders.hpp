#pragma once

#include "hst/flips.hpp"
#include "hst/triangulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hst {

// The first higher Stasheff-Tamari order on S(V, n) as an explicit poset:
// nodes are all triangulations, covers are increasing bistellar flips.
// Node 0 is the lower triangulation; there is one source and one sink.
struct HSTPoset {
    LabelSet vertex_set;
    int n = 0;
    std::vector<Triangulation> nodes;
    std::vector<std::pair<int, int>> covers;  // i flips up to j

    /// Reachability of j from i along cover arcs (reflexive).
    bool leq1(int i, int j) const;

    int node_index(const Triangulation& t) const;  // -1 if absent

private:
    mutable std::vector<std::vector<std::uint64_t>> reach_;  // lazy closure
    void ensure_reach() const;
};

/// BFS over increasing flips from the lower triangulation. Throws
/// BudgetExceeded if more than `budget` nodes appear.
HSTPoset enumerate_poset(const LabelSet& v, int n, std::size_t budget = 1000000);
HSTPoset enumerate_poset(int m, int n, std::size_t budget = 1000000);

// The second order, decided combinatorially: for n even, no A in e(T) is
// forward-intertwined by any B in e(T'); for n odd, e(T) contains e(T').
bool leq2(const Triangulation& t, const Triangulation& t_prime);

/// All-pairs leq2 matrix over the poset nodes; row i gives leq2(i, j).
std::vector<std::vector<bool>> leq2_matrix(const HSTPoset& p, bool parallel = true);

struct EquivalenceReport {
    int m = 0, n = 0;
    std::size_t node_count = 0;
    std::size_t pair_count = 0;
    std::size_t violations = 0;
    std::vector<std::pair<int, int>> violating_pairs;
    bool ok() const { return violations == 0; }
};

/// Checks leq1(i, j) == leq2(i, j) over all ordered pairs of the instance.
EquivalenceReport verify_equivalence(int m, int n, std::size_t budget = 1000000,
                                     bool parallel = true);

/// Greedy chain of increasing flips from T to T' (requires leq2(T, T')):
/// at each step the lexicographically least flip that stays below T'.
/// Throws TheoremViolation if no admissible flip exists.
std::vector<FlipWitness> flip_chain(const Triangulation& t, const Triangulation& t_prime);

/// DOT digraph of the cover relation; node labels show e(T).
std::string export_dot(const HSTPoset& p);

} // namespace hst
