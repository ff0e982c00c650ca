#include "hst/geometry.hpp"
#include "hst/error.hpp"

#include <algorithm>

namespace hst {

namespace {

Rational pow_label(Label t, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= t;
    return r;
}

// Solves Ax = b for square A; nullopt if A is singular.
std::optional<RationalVector> solve_linear(std::vector<RationalVector> a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

RationalVector moment_point(Label t, int n) {
    RationalVector p(static_cast<std::size_t>(n));
    Rational acc = 1;
    for (int i = 0; i < n; ++i) {
        acc *= t;
        p[static_cast<std::size_t>(i)] = acc;
    }
    return p;
}

Rational determinant(std::vector<RationalVector> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace {

std::vector<RationalVector> affine_rows(const Simplex& f, int n) {
    std::vector<RationalVector> rows;
    for (Label t : f) {
        RationalVector row;
        row.push_back(1);
        for (const auto& c : moment_point(t, n)) row.push_back(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

} // namespace

FacetClass facet_oracle(const Simplex& f, const LabelSet& v, int n) {
    if (static_cast<int>(f.size()) != n)
        throw InvalidArity("facet_oracle: |F| must equal n");
    if (!is_subset(f, v)) return FacetClass::NotFacet;
    auto base = affine_rows(f, n);
    int side = 0;
    for (Label w : v) {
        if (std::binary_search(f.begin(), f.end(), w)) continue;
        auto rows = base;
        RationalVector row;
        row.push_back(1);
        for (const auto& c : moment_point(w, n)) row.push_back(c);
        rows.push_back(std::move(row));
        int s = sign_of(determinant(std::move(rows)));
        if (s == 0) return FacetClass::NotFacet;  // cannot happen on the moment curve
        if (side == 0) side = s;
        else if (side != s) return FacetClass::NotFacet;
    }
    // Side of the point at infinity in the +e_n direction: if it matches
    // the polytope's side, the polytope lies above F, i.e. F is lower.
    auto rows = base;
    RationalVector dir(static_cast<std::size_t>(n + 1), 0);
    dir.back() = 1;
    rows.push_back(std::move(dir));
    int up = sign_of(determinant(std::move(rows)));
    return up == side ? FacetClass::LowerFacet : FacetClass::UpperFacet;
}

std::vector<Circuit> circuit_oracle(const LabelSet& v, int n) {
    std::vector<Circuit> out;
    const int d = n / 2;
    for (auto& z : subsets_of_size(v, n + 2)) {
        // Affine dependence: lambda in the kernel of the (n+1) x (n+2)
        // matrix of homogeneous moment points. Fix lambda_last via Cramer:
        // lambda_i = (-1)^i det(matrix with column i removed).
        auto rows = affine_rows(z, n);  // (n+2) rows of length n+1
        RationalVector lambda(z.size());
        for (std::size_t skip = 0; skip < z.size(); ++skip) {
            std::vector<RationalVector> minor;
            for (std::size_t i = 0; i < z.size(); ++i)
                if (i != skip) minor.push_back(rows[i]);
            Rational det = determinant(std::move(minor));
            lambda[skip] = (skip % 2 == 0) ? det : -det;
        }
        if (lambda[0] < 0)
            for (auto& l : lambda) l = -l;
        Simplex with_first, against_first;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (lambda[i] == 0) throw TheoremViolation("circuit_oracle: degenerate dependence");
            (lambda[i] > 0 ? with_first : against_first).push_back(z[i]);
        }
        // The combinatorial convention puts the (floor(n/2)+1)-element side
        // first; for n even that side contains the minimum, for n odd the
        // larger side does.
        if (static_cast<int>(with_first.size()) == d + 1)
            out.push_back(Circuit{with_first, against_first});
        else
            out.push_back(Circuit{against_first, with_first});
    }
    return out;
}

Rational simplex_volume_scaled(const Simplex& s) {
    Rational prod = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) prod *= Rational(s[j] - s[i]);
    return prod;
}

bool volume_certify(const Triangulation& t) {
    Rational total = 0;
    auto reference = lower_triangulation(t.vertex_set(), t.dim());
    for (const auto& s : reference.simplices()) total += simplex_volume_scaled(s);
    Rational sum = 0;
    for (const auto& s : t.simplices()) sum += simplex_volume_scaled(s);
    return sum == total;
}

namespace {

std::optional<RationalVector> barycentric(const Simplex& s, const RationalVector& x, int n) {
    // Columns are the homogeneous points of S; solve for the coordinates.
    std::vector<RationalVector> a(static_cast<std::size_t>(n + 1),
                                  RationalVector(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j) {
        a[0][j] = 1;
        auto p = moment_point(s[j], n);
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i + 1)][j] = p[static_cast<std::size_t>(i)];
    }
    RationalVector b;
    b.push_back(1);
    for (const auto& c : x) b.push_back(c);
    auto lam = solve_linear(std::move(a), std::move(b));
    if (!lam) return std::nullopt;
    for (const auto& l : *lam)
        if (l < 0) return std::nullopt;
    return lam;
}

} // namespace

Rational section_height(const Triangulation& t, const RationalVector& x) {
    const int n = t.dim();
    for (const auto& s : t.simplices()) {
        auto lam = barycentric(s, x, n);
        if (!lam) continue;
        Rational h = 0;
        for (std::size_t i = 0; i < s.size(); ++i) h += (*lam)[i] * pow_label(s[i], n + 1);
        return h;
    }
    throw PointOutside("section_height: sample point lies in no maximal simplex");
}

std::vector<RationalVector> default_samples(const Triangulation& t,
                                            const Triangulation& t_prime) {
    const int n = t.dim();
    std::vector<Simplex> supports = subsets_of_size(t.vertex_set(), n + 1);
    supports.insert(supports.end(), t.simplices().begin(), t.simplices().end());
    supports.insert(supports.end(), t_prime.simplices().begin(), t_prime.simplices().end());
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<RationalVector> samples;
    for (const auto& s : supports) {
        RationalVector bary(static_cast<std::size_t>(n), 0);
        for (Label l : s) {
            auto p = moment_point(l, n);
            for (int i = 0; i < n; ++i) bary[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
        }
        for (auto& c : bary) c /= static_cast<int>(s.size());
        samples.push_back(std::move(bary));
    }
    return samples;
}

SampleOracleResult leq2_sample_oracle(const Triangulation& t, const Triangulation& t_prime,
                                      const std::vector<RationalVector>& samples) {
    SampleOracleResult res;
    for (const auto& x : samples) {
        Rational h = section_height(t, x);
        Rational h_prime = section_height(t_prime, x);
        if (h > h_prime) {
            res.consistent = false;
            res.violation = HeightViolation{x, h, h_prime};
            return res;
        }
    }
    return res;
}

} // namespace hst
