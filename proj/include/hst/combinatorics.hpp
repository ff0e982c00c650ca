#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hst {

// Vertex labels are arbitrary positive integers. A LabelSet is a strictly
// increasing sequence of labels (the vertex set V of a cyclic polytope);
// a Simplex is a strictly increasing subset of some ambient LabelSet.
using Label = int;
using Simplex = std::vector<Label>;
using LabelSet = std::vector<Label>;

enum class FacetClass { NotFacet, LowerFacet, UpperFacet };

// Ordered Radon partition (Z+, Z-) of a minimal affinely dependent set.
struct Circuit {
    Simplex z_plus;
    Simplex z_minus;

    bool operator==(const Circuit&) const = default;
};

/// The interval label set [m] = {1, ..., m}.
LabelSet interval(int m);

bool is_strictly_increasing(const Simplex& s);

/// True iff every element of `sub` occurs in the sorted sequence `sup`.
bool is_subset(const Simplex& sub, const Simplex& sup);

std::uint64_t binomial(int n, int k);

/// All k-subsets of `v`, in lexicographic order.
std::vector<Simplex> subsets_of_size(const LabelSet& v, int k);

// Intertwining A wr B.
//
// Equal sizes k+1:   a0 < b0 < a1 < b1 < ... < ak < bk.
// Sizes (k, k+1):    b0 < a0 < b1 < a1 < ... < a_{k-1} < bk.
//
// Any other pair of sizes is rejected with InvalidArity.
bool intertwines(const Simplex& a, const Simplex& b);

/// Symmetric closure of `intertwines` for equal-size simplices.
bool are_intertwining(const Simplex& a, const Simplex& b);

// Gale's Evenness Criterion. An n-subset F of V is a lower facet of C(V, n)
// iff every v in V \ F has an even number of elements of F above it, and an
// upper facet iff every such count is odd.
FacetClass classify_facet(const Simplex& f, const LabelSet& v, int n);

struct FacetPartition {
    std::vector<Simplex> lower;
    std::vector<Simplex> upper;
};

/// All facets of C(V, n), partitioned by class, each side lexicographic.
FacetPartition facets(const LabelSet& v, int n);

// All circuits of C(V, n): pairs (A, B) with #A = floor(n/2)+1,
// #B = ceil(n/2)+1 and A wr B. One Circuit per unordered support;
// the reversed orientation (B, A) is equally valid.
std::vector<Circuit> circuits(const LabelSet& v, int n);

// Internal floor(n/2)-simplices of C(V, n), evaluated on order-positions
// within V so that subpolytopes C(U, n) inherit the cyclic structure.
//
// Even n = 2d: (d+1)-subsets with no two position-consecutive entries and
// no wrap-around pair (first position, last position).
// Odd n = 2d+1: additionally excludes the first and last position of V.
std::vector<Simplex> internal_simplices(const LabelSet& v, int n);

/// True iff `a` is an internal floor(n/2)-simplex of C(V, n).
bool is_internal_simplex(const Simplex& a, const LabelSet& v, int n);

} // namespace hst
