#include "hst/vertex_ops.hpp"
#include "hst/error.hpp"
#include "hst/orders.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hst {

namespace {

bool figure_gap_rule(const Simplex& f, const LabelSet& v_set, Label v, bool lower) {
    // Lower: gaps below v even, gaps above v odd. Upper: parities swapped.
    for (Label b : v_set) {
        if (b == v || std::binary_search(f.begin(), f.end(), b)) continue;
        std::size_t between;
        bool want_even;
        if (b < v) {
            between = static_cast<std::size_t>(
                std::count_if(f.begin(), f.end(), [&](Label a) { return b < a && a < v; }));
            want_even = lower;
        } else {
            between = static_cast<std::size_t>(
                std::count_if(f.begin(), f.end(), [&](Label a) { return v < a && a < b; }));
            want_even = !lower;
        }
        if ((between % 2 == 0) != want_even) return false;
    }
    return true;
}

} // namespace

FacetClass classify_figure_facet(const Simplex& f, const LabelSet& v_set, int n, Label v) {
    if (static_cast<int>(f.size()) != n - 1)
        throw InvalidArity("classify_figure_facet: |F| must equal n-1");
    if (std::binary_search(f.begin(), f.end(), v)) return FacetClass::NotFacet;
    if (!is_subset(f, v_set)) return FacetClass::NotFacet;
    if (figure_gap_rule(f, v_set, v, true)) return FacetClass::LowerFacet;
    if (figure_gap_rule(f, v_set, v, false)) return FacetClass::UpperFacet;
    return FacetClass::NotFacet;
}

std::pair<Triangulation, RelabelMap> contract_pair(const Triangulation& t, Label x, Label y) {
    const auto& v = t.vertex_set();
    if (x > y) std::swap(x, y);
    auto ix = std::lower_bound(v.begin(), v.end(), x);
    auto iy = std::lower_bound(v.begin(), v.end(), y);
    if (ix == v.end() || *ix != x || iy == v.end() || *iy != y || iy != ix + 1)
        throw NonAdjacentLabels("contract_pair: labels must be adjacent in V");
    LabelSet merged;
    for (Label w : v)
        if (w != y) merged.push_back(w);
    std::vector<Simplex> maximal;
    for (const auto& s : t.simplices()) {
        Simplex img;
        for (Label w : s) img.push_back(w == y ? x : w);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() == s.size()) maximal.push_back(std::move(img));
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    Triangulation out(merged, t.dim(), std::move(maximal));
    if (!validate(out))
        throw TheoremViolation("contract_pair: contraction is not a triangulation");
    return {std::move(out), RelabelMap{{y, x}}};
}

VertexFigure delete_vertex(const Triangulation& t, Label v) {
    const auto& vs = t.vertex_set();
    if (!std::binary_search(vs.begin(), vs.end(), v))
        throw InvalidArity("delete_vertex: v must lie in V");
    VertexFigure fig;
    fig.base = vs;
    fig.n = t.dim();
    fig.apex = v;
    for (const auto& s : t.simplices()) {
        if (!std::binary_search(s.begin(), s.end(), v)) continue;
        Simplex r;
        for (Label w : s)
            if (w != v) r.push_back(w);
        fig.simplices.push_back(std::move(r));
    }
    std::sort(fig.simplices.begin(), fig.simplices.end());
    LabelSet rest;
    for (Label w : vs)
        if (w != v) rest.push_back(w);
    for (auto& f : subsets_of_size(rest, t.dim() - 1)) {
        Simplex with_v(f);
        with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
        if (classify_facet(with_v, vs, t.dim()) == FacetClass::NotFacet) continue;
        switch (classify_figure_facet(f, vs, t.dim(), v)) {
            case FacetClass::LowerFacet: fig.lower_facets.push_back(f); break;
            case FacetClass::UpperFacet: fig.upper_facets.push_back(f); break;
            case FacetClass::NotFacet:
                if (t.dim() % 2 == 1)
                    throw TheoremViolation("delete_vertex: unclassifiable figure facet");
                break;
        }
    }
    return fig;
}

std::vector<Simplex> OrientedSimplex::lower_facets() const {
    std::vector<Simplex> out;
    for (Label s : s_plus) {
        Simplex f;
        for (Label w : simplex)
            if (w != s) f.push_back(w);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> OrientedSimplex::upper_facets() const {
    std::vector<Simplex> out;
    for (Label s : s_minus) {
        Simplex f;
        for (Label w : simplex)
            if (w != s) f.push_back(w);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrientedSimplex orient_simplex(const Simplex& s, Label v, const LabelSet& v_set) {
    if (v_set.empty() || !is_subset(s, v_set))
        throw InvalidArity("orient_simplex: S must lie in V");
    if (std::binary_search(s.begin(), s.end(), v))
        throw InvalidArity("orient_simplex: v must not lie in S");
    // Insert virtual labels x < y at v's rank and split S u {x, y} into the
    // two alternating halves of its unique circuit; x's half (minus x) is
    // S_-, y's half is S_+.
    OrientedSimplex out;
    out.simplex = s;
    std::size_t px = static_cast<std::size_t>(
        std::lower_bound(s.begin(), s.end(), v) - s.begin());  // position of x
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t pos = i < px ? i : i + 2;  // skip the two virtual slots
        bool same_class_as_x = (pos % 2) == (px % 2);
        (same_class_as_x ? out.s_minus : out.s_plus).push_back(s[i]);
    }
    return out;
}

std::string gamma_string(const Simplex& s, Label v, const LabelSet& v_set) {
    std::string out;
    auto letter = [&](Label j) {
        if (std::binary_search(s.begin(), s.end(), j)) return '*';
        std::size_t between;
        if (j < v)
            between = static_cast<std::size_t>(
                std::count_if(s.begin(), s.end(), [&](Label b) { return j < b && b < v; }));
        else
            between = static_cast<std::size_t>(
                std::count_if(s.begin(), s.end(), [&](Label b) { return v < b && b < j; }));
        return between % 2 == 0 ? 'e' : 'o';
    };
    for (Label j : v_set)
        if (j > v) out.push_back(letter(j));
    for (Label j : v_set)
        if (j < v) out.push_back(letter(j));
    return out;
}

std::vector<std::pair<int, int>> vf_covers(const VertexFigure& fig) {
    std::vector<std::pair<int, int>> covers;
    const auto& sim = fig.simplices;
    std::vector<OrientedSimplex> oriented;
    oriented.reserve(sim.size());
    for (const auto& s : sim) oriented.push_back(orient_simplex(s, fig.apex, fig.base));
    for (std::size_t i = 0; i < sim.size(); ++i)
        for (std::size_t j = 0; j < sim.size(); ++j) {
            if (i == j) continue;
            Simplex inter;
            std::set_intersection(sim[i].begin(), sim[i].end(), sim[j].begin(), sim[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() + 1 != sim[i].size()) continue;
            auto up_i = oriented[i].upper_facets();
            auto lo_j = oriented[j].lower_facets();
            if (std::binary_search(up_i.begin(), up_i.end(), inter) &&
                std::binary_search(lo_j.begin(), lo_j.end(), inter))
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return covers;
}

std::vector<Simplex> section_of(const VertexFigure& fig, const std::vector<Simplex>& members) {
    std::vector<Simplex> l(members);
    std::sort(l.begin(), l.end());
    std::vector<Simplex> u;
    for (const auto& s : fig.simplices)
        if (!std::binary_search(l.begin(), l.end(), s)) u.push_back(s);

    std::set<Simplex> out;
    // Shared facets between the lower set and the upper set.
    for (const auto& a : l)
        for (const auto& b : u) {
            Simplex inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (inter.size() + 1 == a.size()) out.insert(std::move(inter));
        }
    // Boundary clauses: upper boundary facets still covered by L, lower
    // boundary facets still covered by U.
    for (const auto& a : l) {
        auto upper = orient_simplex(a, fig.apex, fig.base).upper_facets();
        for (const auto& f : upper)
            if (std::binary_search(fig.upper_facets.begin(), fig.upper_facets.end(), f))
                out.insert(f);
    }
    for (const auto& b : u) {
        auto lower = orient_simplex(b, fig.apex, fig.base).lower_facets();
        for (const auto& f : lower)
            if (std::binary_search(fig.lower_facets.begin(), fig.lower_facets.end(), f))
                out.insert(f);
    }
    return std::vector<Simplex>(out.begin(), out.end());
}

std::vector<SectionLowerSet> lower_sets(const VertexFigure& fig) {
    const std::size_t k = fig.simplices.size();
    auto covers = vf_covers(fig);
    std::vector<std::vector<std::size_t>> preds(k);
    for (auto [i, j] : covers)
        preds[static_cast<std::size_t>(j)].push_back(static_cast<std::size_t>(i));

    // Enumerate downward-closed subsets: decide membership element by
    // element in index order; closure under predecessors is checked against
    // already-decided elements via the transitive closure.
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    std::function<void(std::size_t, std::size_t)> mark = [&](std::size_t root, std::size_t cur) {
        if (below[root][cur]) return;
        below[root][cur] = true;
        for (std::size_t p : preds[cur]) mark(root, p);
    };
    for (std::size_t i = 0; i < k; ++i) mark(i, i);

    std::vector<SectionLowerSet> out;
    std::vector<bool> chosen(k, false);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == k) {
            SectionLowerSet sls;
            for (std::size_t i = 0; i < k; ++i)
                if (chosen[i]) sls.members.push_back(fig.simplices[i]);
            sls.section = section_of(fig, sls.members);
            out.push_back(std::move(sls));
            return;
        }
        // Exclude idx: every already-chosen element must not be above idx.
        // Include idx: all elements below idx decided so far must be chosen,
        // and the ones not yet decided will be forced when reached.
        bool can_exclude = true, can_include = true;
        for (std::size_t i = 0; i < k && (can_exclude || can_include); ++i) {
            if (i < idx) {
                if (below[i][idx] && chosen[i]) can_exclude = false;
                if (below[idx][i] && !chosen[i]) can_include = false;
            }
        }
        if (can_exclude) {
            chosen[idx] = false;
            rec(idx + 1);
        }
        if (can_include) {
            // A later element below idx would be forced; verify none was
            // pre-excluded (cannot happen with i >= idx undecided).
            chosen[idx] = true;
            rec(idx + 1);
            chosen[idx] = false;
        }
    };
    if (k == 0) {
        out.push_back(SectionLowerSet{{}, section_of(fig, {})});
        return out;
    }
    rec(0);
    // Drop any candidate that is not actually downward closed (an included
    // element whose predecessor was excluded earlier in index order).
    std::vector<SectionLowerSet> closed;
    for (auto& sls : out) {
        std::vector<bool> in(k, false);
        for (const auto& s : sls.members)
            in[static_cast<std::size_t>(
                std::lower_bound(fig.simplices.begin(), fig.simplices.end(), s) -
                fig.simplices.begin())] = true;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
            if (in[j])
                for (std::size_t i = 0; i < k && ok; ++i)
                    if (below[j][i] && !in[i]) ok = false;
        if (ok) closed.push_back(std::move(sls));
    }
    return closed;
}

std::pair<Triangulation, RelabelMap> expand(const Triangulation& t, Label v,
                                            const SectionLowerSet& l) {
    const auto& vs = t.vertex_set();
    const int n = t.dim();
    if (n % 2 != 1) throw InvalidArity("expand: odd ambient dimension required");
    if (vs != interval(static_cast<int>(vs.size())))
        throw InvalidArity("expand: vertex set must be 1..m");
    const int m = static_cast<int>(vs.size());
    if (v <= vs.front() || v >= vs.back())
        throw InvalidArity("expand: v must be a middle vertex");

    VertexFigure fig = delete_vertex(t, v);
    std::vector<Simplex> members(l.members);
    std::sort(members.begin(), members.end());
    for (const auto& s : members)
        if (!std::binary_search(fig.simplices.begin(), fig.simplices.end(), s))
            throw InvalidArity("expand: lower set must consist of simplices of T\\v");
    std::vector<Simplex> upper;
    for (const auto& s : fig.simplices)
        if (!std::binary_search(members.begin(), members.end(), s)) upper.push_back(s);
    auto section = section_of(fig, members);

    auto shift = [&](const Simplex& s, std::initializer_list<Label> extra) {
        Simplex r;
        for (Label w : s) r.push_back(w > v ? w + 1 : w);
        r.insert(r.end(), extra.begin(), extra.end());
        std::sort(r.begin(), r.end());
        return r;
    };
    const Label x = v, y = v + 1;
    std::vector<Simplex> maximal;
    for (const auto& s : t.simplices())
        if (!std::binary_search(s.begin(), s.end(), v)) maximal.push_back(shift(s, {}));
    for (const auto& w : section) maximal.push_back(shift(w, {x, y}));
    for (const auto& r : upper) maximal.push_back(shift(r, {x}));
    for (const auto& s : members) maximal.push_back(shift(s, {y}));

    Triangulation out(interval(m + 1), n, std::move(maximal));
    if (!validate(out)) throw TheoremViolation("expand: expansion is not a triangulation");
    RelabelMap map;
    for (Label w = v + 1; w <= m; ++w) map.emplace_back(w, w + 1);
    return {std::move(out), std::move(map)};
}

std::vector<Triangulation> expansions(const Triangulation& t, Label v, std::size_t budget) {
    const auto& vs = t.vertex_set();
    const int n = t.dim();
    if (vs != interval(static_cast<int>(vs.size())))
        throw InvalidArity("expansions: vertex set must be 1..m");
    const int m = static_cast<int>(vs.size());
    std::vector<Triangulation> out;
    if (n % 2 == 1 && v > vs.front() && v < vs.back()) {
        for (const auto& sls : lower_sets(delete_vertex(t, v)))
            out.push_back(expand(t, v, sls).first);
    } else {
        // Even dimension or end vertex: filter the enumerated larger
        // polytope by the contraction that merges v+1 back into v.
        HSTPoset p = enumerate_poset(m + 1, n, budget);
        for (const auto& cand : p.nodes) {
            auto [contracted, map] = contract_pair(cand, v, v + 1);
            if (canonicalize_labels(contracted) == t) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
        return a.simplices() < b.simplices();
    });
    return out;
}

Triangulation reverse(const Triangulation& t) {
    const auto& v = t.vertex_set();
    Label sum = v.front() + v.back();
    RelabelMap map;
    for (Label w : v) map.emplace_back(w, sum - w);
    return relabel(t, map);
}

Triangulation rotate(const Triangulation& t, int k) {
    if (t.dim() % 2 != 0) throw InvalidArity("rotate: even dimension only");
    const auto& v = t.vertex_set();
    if (v != interval(static_cast<int>(v.size())))
        throw InvalidArity("rotate: vertex set must be 1..m");
    const int m = static_cast<int>(v.size());
    RelabelMap map;
    for (Label w : v) map.emplace_back(w, (w - 1 + k % m + m) % m + 1);
    Triangulation out = relabel(t, map);
    if (!validate(out)) throw TheoremViolation("rotate: rotation failed to preserve validity");
    return out;
}

} // namespace hst
