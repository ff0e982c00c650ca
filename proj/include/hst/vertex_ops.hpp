#pragma once

#include "hst/triangulation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hst {

using RelabelMap = std::vector<std::pair<Label, Label>>;

// The combinatorial vertex figure of C(V, n) at v, carrying the deletion
// T\v = {S \ v : v in S} when built from a triangulation. Facets are the
// (n-1)-subsets F with F u v a facet of C(V, n), classified by the
// generalized evenness rule: F is a lower facet iff every gap below v is
// even and every gap above v is odd (upper facets swap the parities).
struct VertexFigure {
    LabelSet base;  // V
    int n = 0;
    Label apex = 0;
    std::vector<Simplex> lower_facets;
    std::vector<Simplex> upper_facets;
    std::vector<Simplex> simplices;  // T\v, sorted
};

// Orientation of an (n-1)-simplex S of T\v via the circuit halves of
// S u {x, y}, where x < y sit at v's position in the vertex order:
// lower facets of S are S\s for s in s_plus, upper for s in s_minus.
struct OrientedSimplex {
    Simplex simplex;
    Simplex s_minus;  // shares a circuit half with x
    Simplex s_plus;   // shares a circuit half with y
    std::vector<Simplex> lower_facets() const;
    std::vector<Simplex> upper_facets() const;
};

// A lower set L of (T\v, <=v) together with its section: the layer of
// (n-2)-simplices separating L from its complementary upper set.
struct SectionLowerSet {
    std::vector<Simplex> members;  // L, sorted
    std::vector<Simplex> section;  // sect(L), sorted
};

/// Contraction: merge the adjacent labels x < y of V into x, dropping
/// degenerate images. Throws NonAdjacentLabels unless x, y are consecutive
/// in V. The relabel map records y -> x.
std::pair<Triangulation, RelabelMap> contract_pair(const Triangulation& t, Label x, Label y);

/// Deletion T\v with classified vertex-figure facets.
VertexFigure delete_vertex(const Triangulation& t, Label v);

/// Classify F as a facet of the vertex figure C(V, n)\v.
FacetClass classify_figure_facet(const Simplex& f, const LabelSet& v_set, int n, Label v);

/// Circuit-half orientation of S in C(V, n)\v; odd n, v not in S.
OrientedSimplex orient_simplex(const Simplex& s, Label v, const LabelSet& v_set);

/// Cover relation S <v R (S n R upper facet of S, lower facet of R) on the
/// (n-1)-simplices of the figure, as index pairs into fig.simplices.
std::vector<std::pair<int, int>> vf_covers(const VertexFigure& fig);

/// Gamma string of S: letters over {o, *, e} indexed v+1, ..., v-1
/// cyclically; the lexicographic order with o < * < e refines <=v.
std::string gamma_string(const Simplex& s, Label v, const LabelSet& v_set);

/// All lower sets of (T\v, <=v) with their sections, deterministic order.
std::vector<SectionLowerSet> lower_sets(const VertexFigure& fig);

/// The section of a single lower set (members must be downward closed).
std::vector<Simplex> section_of(const VertexFigure& fig, const std::vector<Simplex>& members);

/// Expansion of T at the middle vertex v along the lower set L: v splits
/// into x = v and y = v+1 with larger labels shifted up by one. The
/// relabel map records the shift; contracting (x, y) recovers T.
std::pair<Triangulation, RelabelMap> expand(const Triangulation& t, Label v,
                                            const SectionLowerSet& l);

/// Every triangulation contracting to T at v (canonical labels 1..m+1).
/// Odd n at middle vertices uses the lower-set construction; even n and
/// end vertices fall back to filtering the enumerated larger polytope.
std::vector<Triangulation> expansions(const Triangulation& t, Label v,
                                      std::size_t budget = 1000000);

/// Relabel i -> m+1-i (order-reversing bijection of C(V, n)).
Triangulation reverse(const Triangulation& t);

/// Relabel i -> i+k mod m; an automorphism for even n only.
Triangulation rotate(const Triangulation& t, int k);

} // namespace hst
