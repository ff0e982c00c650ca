#pragma once

#include "hst/combinatorics.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hst {

// A triangulation of the cyclic polytope C(V, n), stored as its set of
// maximal (n+1)-element simplices in lexicographic order. The set of
// internal floor(n/2)-simplices e(T) is cached lazily.
class Triangulation {
public:
    Triangulation() = default;
    Triangulation(LabelSet vertex_set, int n, std::vector<Simplex> maximal);

    const LabelSet& vertex_set() const { return vertex_set_; }
    int dim() const { return n_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    bool contains(const Simplex& s) const;

    /// Internal floor(n/2)-simplex set e(T), sorted; computed once.
    const std::vector<Simplex>& internal_set() const;

    bool operator==(const Triangulation& o) const {
        return vertex_set_ == o.vertex_set_ && n_ == o.n_ && simplices_ == o.simplices_;
    }

private:
    LabelSet vertex_set_;
    int n_ = 0;
    std::vector<Simplex> simplices_;
    mutable std::shared_ptr<const std::vector<Simplex>> internal_cache_;
};

// Diagnostic from a failed validation: either a facet of a maximal simplex
// that is neither on the boundary nor shared with exactly one neighbour, or
// a circuit split across two maximal simplices. First failure in
// lexicographic scan order; the scan order is a stable contract.
struct ValidationWitness {
    enum class Kind { UnmatchedFacet, CircuitConflict } kind;
    Simplex facet;            // UnmatchedFacet
    Circuit circuit;          // CircuitConflict
    Simplex simplex_a, simplex_b;
    std::string describe() const;
};

/// Combinatorial triangulation check: facet pairing plus circuit-freeness.
bool validate(const Triangulation& t, ValidationWitness* witness = nullptr);

/// The unique triangulation T over (V, n) with internal_set(T) = X.
/// Throws NoSuchTriangulation if the reconstruction does not validate.
Triangulation from_internal(const std::vector<Simplex>& x, const LabelSet& v, int n);

/// Even n = 2d: X is e(T) for some T iff |X| = C(m-d-2, d) and X is
/// pairwise non-intertwining.
bool check_even_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n);

// Odd n = 2d+1: X is e(T) for some T iff X is supporting and bridging.
bool is_supporting(const std::vector<Simplex>& x, const LabelSet& v, int n);
bool is_bridging(const std::vector<Simplex>& x, const LabelSet& v, int n);
bool check_odd_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n);

/// True iff X is e(T) for some T over (V, n), by the parity-appropriate
/// characterization.
bool check_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n);

// Minimum and maximum of both higher Stasheff-Tamari orders: the maximal
// simplices are the lower (resp. upper) facets of C(V, n+1).
Triangulation lower_triangulation(const LabelSet& v, int n);
Triangulation upper_triangulation(const LabelSet& v, int n);

/// {S in T : S subset of U} if it is a valid triangulation of C(U, n),
/// i.e. C(U, n) is a subpolytope of T; nullopt otherwise.
std::optional<Triangulation> induced_subtriangulation(const Triangulation& t, const LabelSet& u);

/// Relabel by the order isomorphism onto {1, ..., |V|}.
Triangulation canonicalize_labels(const Triangulation& t);

/// Apply an arbitrary strictly monotone or order-reversing label map.
Triangulation relabel(const Triangulation& t, const std::vector<std::pair<Label, Label>>& map);

std::string to_string(const Simplex& s);
std::string to_string(const std::vector<Simplex>& xs);

} // namespace hst
