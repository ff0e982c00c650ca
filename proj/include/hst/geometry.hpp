#pragma once

#include "hst/triangulation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace hst {

// Exact-rational realization on the moment curve p_n(t) = (t, t^2, ..., t^n)
// with t = label value. Everything here is an independent oracle for the
// combinatorial layer; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Moment-curve point of a label in dimension n.
RationalVector moment_point(Label t, int n);

/// Determinant of a square rational matrix (Gaussian elimination).
Rational determinant(std::vector<RationalVector> m);

/// Hyperplane-side facet test on the realization; agrees with
/// classify_facet on the moment curve.
FacetClass facet_oracle(const Simplex& f, const LabelSet& v, int n);

/// Radon partitions of all (n+2)-subsets, computed from exact affine
/// dependencies; agrees with circuits(V, n).
std::vector<Circuit> circuit_oracle(const LabelSet& v, int n);

/// Exact simplex volume scaled by n! (the Vandermonde product of the
/// parameters), so sums stay integral.
Rational simplex_volume_scaled(const Simplex& s);

/// True iff the simplex volumes of T sum to the volume of C(V, n)
/// (computed once from the lower triangulation).
bool volume_certify(const Triangulation& t);

struct HeightViolation {
    RationalVector point;
    Rational height_t;
    Rational height_t_prime;
};

struct SampleOracleResult {
    bool consistent = true;
    std::optional<HeightViolation> violation;
};

/// Height of the piecewise-linear section of T over x: locate the maximal
/// simplex containing x, take barycentric coordinates, and lift to the
/// (n+1)-th moment coordinate. Throws PointOutside if x is in no simplex.
Rational section_height(const Triangulation& t, const RationalVector& x);

/// One-sided sampling oracle for the second order: Violation iff some
/// sample has height(T) > height(T'). Combinatorial leq2 = true must imply
/// Consistent; a Violation refutes leq2.
SampleOracleResult leq2_sample_oracle(const Triangulation& t, const Triangulation& t_prime,
                                      const std::vector<RationalVector>& samples);

/// Default sample set: barycenters of all (n+1)-subsets of V plus
/// barycenters of the maximal simplices of both triangulations.
std::vector<RationalVector> default_samples(const Triangulation& t,
                                            const Triangulation& t_prime);

} // namespace hst
