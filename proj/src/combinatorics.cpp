#include "hst/combinatorics.hpp"
#include "hst/error.hpp"

#include <algorithm>

namespace hst {

LabelSet interval(int m) {
    LabelSet v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    return v;
}

bool is_strictly_increasing(const Simplex& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

bool is_subset(const Simplex& sub, const Simplex& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<Simplex> subsets_of_size(const LabelSet& v, int k) {
    std::vector<Simplex> out;
    const int m = static_cast<int>(v.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Simplex s(k);
        for (int i = 0; i < k; ++i) s[i] = v[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool intertwines(const Simplex& a, const Simplex& b) {
    const int ka = static_cast<int>(a.size());
    const int kb = static_cast<int>(b.size());
    if (ka == kb) {
        // a0 < b0 < a1 < b1 < ... < ak < bk
        for (int i = 0; i < ka; ++i) {
            if (a[i] >= b[i]) return false;
            if (i + 1 < ka && b[i] >= a[i + 1]) return false;
        }
        return true;
    }
    if (ka == kb - 1) {
        // b0 < a0 < b1 < a1 < ... < a_{ka-1} < b_ka
        for (int i = 0; i < ka; ++i) {
            if (b[i] >= a[i]) return false;
            if (a[i] >= b[i + 1]) return false;
        }
        return true;
    }
    throw InvalidArity("intertwines: sizes must be equal or differ by one");
}

bool are_intertwining(const Simplex& a, const Simplex& b) {
    return intertwines(a, b) || intertwines(b, a);
}

FacetClass classify_facet(const Simplex& f, const LabelSet& v, int n) {
    if (static_cast<int>(f.size()) != n)
        throw InvalidArity("classify_facet: |F| must equal n");
    if (!is_subset(f, v)) return FacetClass::NotFacet;
    bool all_even = true, all_odd = true;
    for (Label w : v) {
        if (std::binary_search(f.begin(), f.end(), w)) continue;
        auto above = f.end() - std::upper_bound(f.begin(), f.end(), w);
        if (above % 2 == 0) all_odd = false;
        else all_even = false;
        if (!all_even && !all_odd) return FacetClass::NotFacet;
    }
    return all_even ? FacetClass::LowerFacet : FacetClass::UpperFacet;
}

FacetPartition facets(const LabelSet& v, int n) {
    FacetPartition out;
    for (auto& f : subsets_of_size(v, n)) {
        switch (classify_facet(f, v, n)) {
            case FacetClass::LowerFacet: out.lower.push_back(f); break;
            case FacetClass::UpperFacet: out.upper.push_back(f); break;
            case FacetClass::NotFacet: break;
        }
    }
    return out;
}

std::vector<Circuit> circuits(const LabelSet& v, int n) {
    std::vector<Circuit> out;
    for (auto& z : subsets_of_size(v, n + 2)) {
        // Split by alternating position; the side containing the smallest
        // element leads the interleaving. For n even both sides have
        // floor(n/2)+1 elements and A leads; for n odd B leads with one
        // more element (b0 < a0 < b1 < ...).
        Simplex even_pos, odd_pos;
        for (std::size_t i = 0; i < z.size(); ++i)
            (i % 2 == 0 ? even_pos : odd_pos).push_back(z[i]);
        if (n % 2 == 0)
            out.push_back(Circuit{even_pos, odd_pos});
        else
            out.push_back(Circuit{odd_pos, even_pos});
    }
    return out;
}

std::vector<Simplex> internal_simplices(const LabelSet& v, int n) {
    const int m = static_cast<int>(v.size());
    const int d = n / 2;
    const bool odd = (n % 2 == 1);
    std::vector<Simplex> out;
    // Conditions are on order-positions 1..m within V.
    std::vector<int> pos(d + 1);
    for (int i = 0; i <= d; ++i) pos[i] = i;
    if (d + 1 > m) return out;
    while (true) {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            if (pos[i + 1] - pos[i] < 2) ok = false;
        if (ok && pos[d] - pos[0] > m - 2) ok = false;  // wrap-around gap
        if (ok && odd && (pos[0] == 0 || pos[d] == m - 1)) ok = false;
        if (ok) {
            Simplex s(d + 1);
            for (int i = 0; i <= d; ++i) s[i] = v[pos[i]];
            out.push_back(std::move(s));
        }
        int i = d;
        while (i >= 0 && pos[i] == m - (d + 1) + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j <= d; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

bool is_internal_simplex(const Simplex& a, const LabelSet& v, int n) {
    const int m = static_cast<int>(v.size());
    const int d = n / 2;
    if (static_cast<int>(a.size()) != d + 1) return false;
    std::vector<int> pos(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto it = std::lower_bound(v.begin(), v.end(), a[i]);
        if (it == v.end() || *it != a[i]) return false;
        pos[i] = static_cast<int>(it - v.begin());
    }
    for (int i = 0; i < d; ++i)
        if (pos[i + 1] - pos[i] < 2) return false;
    if (pos[d] - pos[0] > m - 2) return false;
    if (n % 2 == 1 && (pos[0] == 0 || pos[d] == m - 1)) return false;
    return true;
}

} // namespace hst
