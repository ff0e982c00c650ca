#include "hst/triangulation.hpp"
#include "hst/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hst {

Triangulation::Triangulation(LabelSet vertex_set, int n, std::vector<Simplex> maximal)
    : vertex_set_(std::move(vertex_set)), n_(n), simplices_(std::move(maximal)) {
    for (auto& s : simplices_) {
        if (static_cast<int>(s.size()) != n_ + 1 || !is_strictly_increasing(s) ||
            !is_subset(s, vertex_set_))
            throw InvalidArity("Triangulation: maximal simplices must be (n+1)-subsets of V");
    }
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
}

bool Triangulation::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

const std::vector<Simplex>& Triangulation::internal_set() const {
    if (!internal_cache_) {
        const int d = n_ / 2;
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            for (auto& a : subsets_of_size(s, d + 1))
                if (is_internal_simplex(a, vertex_set_, n_)) out.push_back(std::move(a));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        internal_cache_ = std::make_shared<const std::vector<Simplex>>(std::move(out));
    }
    return *internal_cache_;
}

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    bool compact = !s.empty() && s.back() <= 9;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !compact) os << ',';
        os << s[i];
    }
    return os.str();
}

std::string to_string(const std::vector<Simplex>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << '|';
        os << to_string(xs[i]);
    }
    return os.str();
}

std::string ValidationWitness::describe() const {
    std::ostringstream os;
    if (kind == Kind::UnmatchedFacet) {
        os << "facet " << to_string(facet) << " of " << to_string(simplex_a)
           << " is neither a boundary facet nor shared with exactly one simplex";
    } else {
        os << "circuit (" << to_string(circuit.z_plus) << ";" << to_string(circuit.z_minus)
           << ") split across " << to_string(simplex_a) << " and " << to_string(simplex_b);
    }
    return os.str();
}

bool validate(const Triangulation& t, ValidationWitness* witness) {
    const auto& v = t.vertex_set();
    const int n = t.dim();
    const auto& maximal = t.simplices();
    if (maximal.empty()) return false;

    // (a) Each facet of each maximal simplex is either a facet of C(V, n)
    //     or shared with exactly one other maximal simplex.
    std::map<Simplex, int> facet_count;
    for (const auto& s : maximal)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f(s);
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            ++facet_count[f];
        }
    for (const auto& s : maximal)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f(s);
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            int count = facet_count[f];
            bool boundary = classify_facet(f, v, n) != FacetClass::NotFacet;
            if ((boundary && count == 1) || (!boundary && count == 2)) continue;
            if (witness) {
                witness->kind = ValidationWitness::Kind::UnmatchedFacet;
                witness->facet = f;
                witness->simplex_a = s;
                witness->simplex_b.clear();
            }
            return false;
        }

    // (b) No circuit has its two halves in two maximal simplices.
    for (const auto& c : circuits(v, n))
        for (const auto& s : maximal) {
            if (!is_subset(c.z_plus, s)) continue;
            for (const auto& r : maximal)
                if (is_subset(c.z_minus, r)) {
                    if (witness) {
                        witness->kind = ValidationWitness::Kind::CircuitConflict;
                        witness->circuit = c;
                        witness->simplex_a = s;
                        witness->simplex_b = r;
                    }
                    return false;
                }
        }
    return true;
}

bool check_even_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    if (n % 2 != 0) throw InvalidArity("check_even_characterization: n must be even");
    const int m = static_cast<int>(v.size());
    const int d = n / 2;
    if (x.size() != binomial(m - d - 2, d)) return false;
    for (const auto& a : x)
        if (!is_internal_simplex(a, v, n)) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (are_intertwining(x[i], x[j])) return false;
    return true;
}

bool is_supporting(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    if (n % 2 != 1) throw InvalidArity("is_supporting: n must be odd");
    const int d = n / 2;
    for (const auto& a : x) {
        bool found = false;
        for (auto& su : subsets_of_size(v, d)) {
            if (!intertwines(su, a)) continue;
            Simplex un(a);
            un.insert(un.end(), su.begin(), su.end());
            std::sort(un.begin(), un.end());
            bool all_in = true;
            for (auto& b : subsets_of_size(un, d + 1)) {
                if (!is_internal_simplex(b, v, n)) continue;
                if (!std::binary_search(x.begin(), x.end(), b)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_bridging(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    if (n % 2 != 1) throw InvalidArity("is_bridging: n must be odd");
    for (const auto& p : x)
        for (const auto& r : x) {
            if (p == r) continue;
            // The only window that can carry an intertwining middle segment
            // is [first difference, last difference]; inside it no entries
            // may coincide, outside all must (the common frame Q).
            const std::size_t len = p.size();
            std::size_t i = 0;
            while (i < len && p[i] == r[i]) ++i;
            if (i == len) continue;
            std::size_t j = len - 1;
            while (p[j] == r[j]) --j;
            bool frame = true;
            for (std::size_t k = i; k <= j && frame; ++k)
                if (p[k] == r[k]) frame = false;
            if (!frame) continue;
            Simplex seg_a(p.begin() + static_cast<std::ptrdiff_t>(i),
                          p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            Simplex seg_b(r.begin() + static_cast<std::ptrdiff_t>(i),
                          r.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            if (!intertwines(seg_a, seg_b)) continue;
            for (std::size_t k = i; k <= j + 1; ++k) {
                Simplex splice(p);
                for (std::size_t l = k; l <= j; ++l) splice[l] = r[l];
                if (!std::binary_search(x.begin(), x.end(), splice)) return false;
            }
        }
    return true;
}

bool check_odd_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    for (const auto& a : x)
        if (!is_internal_simplex(a, v, n)) return false;
    return is_supporting(x, v, n) && is_bridging(x, v, n);
}

bool check_characterization(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    return n % 2 == 0 ? check_even_characterization(x, v, n)
                      : check_odd_characterization(x, v, n);
}

Triangulation from_internal(const std::vector<Simplex>& x, const LabelSet& v, int n) {
    const int d = n / 2;
    std::vector<Simplex> sorted_x(x);
    std::sort(sorted_x.begin(), sorted_x.end());
    std::vector<Simplex> maximal;
    for (auto& s : subsets_of_size(v, n + 1)) {
        bool ok = true;
        for (auto& a : subsets_of_size(s, d + 1)) {
            if (!is_internal_simplex(a, v, n)) continue;
            if (!std::binary_search(sorted_x.begin(), sorted_x.end(), a)) {
                ok = false;
                break;
            }
        }
        // In odd dimension a candidate may avoid every internal d-face of X
        // yet still contain the large half of a circuit whose small half is
        // in X; such candidates must be excluded.
        if (ok && n % 2 == 1) {
            for (auto& b : subsets_of_size(s, d + 2)) {
                for (const auto& a : sorted_x)
                    if (intertwines(a, b)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
        }
        if (ok) maximal.push_back(std::move(s));
    }
    Triangulation t(v, n, std::move(maximal));
    ValidationWitness w;
    if (!validate(t, &w))
        throw NoSuchTriangulation("from_internal: reconstruction failed validation: " +
                                  w.describe());
    if (t.internal_set() != sorted_x)
        throw NoSuchTriangulation("from_internal: internal set of reconstruction differs");
    return t;
}

Triangulation lower_triangulation(const LabelSet& v, int n) {
    return Triangulation(v, n, facets(v, n + 1).lower);
}

Triangulation upper_triangulation(const LabelSet& v, int n) {
    return Triangulation(v, n, facets(v, n + 1).upper);
}

std::optional<Triangulation> induced_subtriangulation(const Triangulation& t, const LabelSet& u) {
    if (!is_subset(u, t.vertex_set())) return std::nullopt;
    std::vector<Simplex> kept;
    for (const auto& s : t.simplices())
        if (is_subset(s, u)) kept.push_back(s);
    if (kept.empty()) return std::nullopt;
    Triangulation sub(u, t.dim(), std::move(kept));
    if (!validate(sub)) return std::nullopt;
    return sub;
}

Triangulation relabel(const Triangulation& t, const std::vector<std::pair<Label, Label>>& map) {
    std::map<Label, Label> f(map.begin(), map.end());
    auto apply = [&](Label l) {
        auto it = f.find(l);
        return it == f.end() ? l : it->second;
    };
    LabelSet v;
    for (Label l : t.vertex_set()) v.push_back(apply(l));
    std::sort(v.begin(), v.end());
    std::vector<Simplex> maximal;
    for (const auto& s : t.simplices()) {
        Simplex r;
        for (Label l : s) r.push_back(apply(l));
        std::sort(r.begin(), r.end());
        maximal.push_back(std::move(r));
    }
    return Triangulation(v, t.dim(), std::move(maximal));
}

Triangulation canonicalize_labels(const Triangulation& t) {
    std::vector<std::pair<Label, Label>> map;
    const auto& v = t.vertex_set();
    for (std::size_t i = 0; i < v.size(); ++i)
        map.emplace_back(v[i], static_cast<Label>(i + 1));
    return relabel(t, map);
}

} // namespace hst
