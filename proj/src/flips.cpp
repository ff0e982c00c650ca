#include "hst/flips.hpp"
#include "hst/error.hpp"

#include <algorithm>

namespace hst {

namespace {

// The flip polytope of a mutable d-simplex A in odd dimension n = 2d+1: the
// (d+2)-element B with A wr B such that the lower triangulation of
// C(A u B, n) is induced by T.
std::optional<Simplex> locate_flip_simplex(const Triangulation& t, const Simplex& a) {
    const int n = t.dim();
    const int d = n / 2;
    for (auto& b : subsets_of_size(t.vertex_set(), d + 2)) {
        if (!intertwines(a, b)) continue;
        Simplex un(a);
        un.insert(un.end(), b.begin(), b.end());
        std::sort(un.begin(), un.end());
        bool induced_lower = true;
        for (const auto& s : facets(un, n + 1).lower)
            if (!t.contains(s)) {
                induced_lower = false;
                break;
            }
        if (induced_lower) return b;
    }
    return std::nullopt;
}

} // namespace

FlipList increasing_flips(const Triangulation& t) {
    const auto& v = t.vertex_set();
    const int n = t.dim();
    const auto& e = t.internal_set();
    FlipList out;
    if (n % 2 == 0) {
        const auto internals = internal_simplices(v, n);
        for (const auto& a : e)
            for (const auto& b : internals) {
                if (!intertwines(a, b)) continue;
                std::vector<Simplex> x;
                for (const auto& c : e)
                    if (c != a) x.push_back(c);
                x.push_back(b);
                std::sort(x.begin(), x.end());
                if (!check_even_characterization(x, v, n)) continue;
                out.emplace_back(FlipWitness{a, b}, from_internal(x, v, n));
            }
    } else {
        for (const auto& a : e) {
            std::vector<Simplex> x;
            for (const auto& c : e)
                if (c != a) x.push_back(c);
            if (!check_odd_characterization(x, v, n)) continue;
            auto b = locate_flip_simplex(t, a);
            if (!b)
                throw TheoremViolation("increasing_flips: no flip polytope for mutable simplex " +
                                       to_string(a));
            out.emplace_back(FlipWitness{a, *b}, from_internal(x, v, n));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

FlipList decreasing_flips(const Triangulation& t) {
    const auto& v = t.vertex_set();
    const int n = t.dim();
    const auto& e = t.internal_set();
    FlipList out;
    if (n % 2 == 0) {
        // Invert the exchange: T came from T0 by replacing A with B in e(T0).
        const auto internals = internal_simplices(v, n);
        for (const auto& b : e)
            for (const auto& a : internals) {
                if (!intertwines(a, b)) continue;
                std::vector<Simplex> x;
                for (const auto& c : e)
                    if (c != b) x.push_back(c);
                x.push_back(a);
                std::sort(x.begin(), x.end());
                if (!check_even_characterization(x, v, n)) continue;
                out.emplace_back(FlipWitness{a, b}, from_internal(x, v, n));
            }
    } else {
        // T came from T0 by deleting A from e(T0) = e(T) u {A}.
        for (const auto& a : internal_simplices(v, n)) {
            if (std::binary_search(e.begin(), e.end(), a)) continue;
            std::vector<Simplex> x(e);
            x.push_back(a);
            std::sort(x.begin(), x.end());
            if (!check_odd_characterization(x, v, n)) continue;
            Triangulation t0 = from_internal(x, v, n);
            auto b = locate_flip_simplex(t0, a);
            if (!b)
                throw TheoremViolation("decreasing_flips: no flip polytope for mutable simplex " +
                                       to_string(a));
            out.emplace_back(FlipWitness{a, *b}, std::move(t0));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::optional<Simplex> support_of(const Triangulation& t, const Simplex& a) {
    const int n = t.dim();
    if (n % 2 != 1) throw InvalidArity("support_of: odd dimension only");
    const int d = n / 2;
    const auto& v = t.vertex_set();
    const auto& e = t.internal_set();
    if (!std::binary_search(e.begin(), e.end(), a))
        throw InvalidArity("support_of: A must lie in e(T)");

    std::vector<Simplex> x;
    for (const auto& c : e)
        if (c != a) x.push_back(c);
    if (check_odd_characterization(x, v, n)) {
        auto b = locate_flip_simplex(t, a);
        if (!b)
            throw TheoremViolation("support_of: no flip polytope for mutable simplex " +
                                   to_string(a));
        return Simplex(b->begin() + 1, b->end() - 1);
    }

    for (auto& su : subsets_of_size(v, d)) {
        if (!intertwines(su, a)) continue;
        Simplex un(a);
        un.insert(un.end(), su.begin(), su.end());
        std::sort(un.begin(), un.end());
        bool all_in = true;
        for (auto& b : subsets_of_size(un, d + 1)) {
            if (!is_internal_simplex(b, v, n)) continue;
            if (!std::binary_search(e.begin(), e.end(), b)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return su;
    }
    return std::nullopt;
}

std::vector<Simplex> obstructions(const Triangulation& t_prime, const FlipWitness& w) {
    if (t_prime.dim() % 2 != 0) throw InvalidArity("obstructions: even dimension only");
    if (!w.inserted) throw InvalidArity("obstructions: witness must carry the inserted simplex");
    const Simplex& a = w.removed;
    const Simplex& b = *w.inserted;
    std::vector<Simplex> out;
    for (const auto& j : t_prime.internal_set()) {
        if (j.size() != a.size()) continue;
        if (!std::equal(j.begin() + 1, j.end(), a.begin() + 1, a.end())) continue;
        if (a[0] <= j[0] && j[0] < b[0]) out.push_back(j);
    }
    return out;
}

} // namespace hst
