#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hst/error.hpp"
#include "hst/flips.hpp"
#include "hst/orders.hpp"

#include <algorithm>
#include <map>

using namespace hst;

namespace {

std::vector<FlipWitness> witnesses(const FlipList& flips) {
    std::vector<FlipWitness> out;
    for (const auto& [w, t] : flips) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("increasing flips of the bottom of C(7,4)") {
    auto flips = increasing_flips(lower_triangulation(interval(7), 4));
    REQUIRE(flips.size() == 2);
    CHECK(flips[0].first == FlipWitness{{1, 3, 5}, Simplex{2, 4, 6}});
    CHECK(flips[1].first == FlipWitness{{1, 4, 6}, Simplex{3, 5, 7}});
    CHECK(flips[0].second.internal_set() ==
          std::vector<Simplex>{{1, 3, 6}, {1, 4, 6}, {2, 4, 6}});
    CHECK(flips[1].second.internal_set() ==
          std::vector<Simplex>{{1, 3, 5}, {1, 3, 6}, {3, 5, 7}});
}

TEST_CASE("increasing flips of the hexagon fan") {
    auto flips = increasing_flips(lower_triangulation(interval(6), 2));
    REQUIRE(flips.size() == 3);
    CHECK(witnesses(flips) == std::vector<FlipWitness>{{{1, 3}, Simplex{2, 4}},
                                                       {{1, 4}, Simplex{3, 5}},
                                                       {{1, 5}, Simplex{4, 6}}});
}

TEST_CASE("increasing flips of the bottom of C(8,5) remove the two end chains") {
    auto flips = increasing_flips(lower_triangulation(interval(8), 5));
    REQUIRE(flips.size() == 2);
    CHECK(flips[0].first.removed == Simplex{2, 4, 6});
    CHECK(flips[1].first.removed == Simplex{3, 5, 7});
    // The odd witness records the (d+2)-simplex locating the flip polytope.
    REQUIRE(flips[0].first.inserted.has_value());
    CHECK(intertwines(flips[0].first.removed, *flips[0].first.inserted));
}

TEST_CASE("extremes have no flips in one direction") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {7, 4}, {8, 5}}) {
        CHECK(increasing_flips(upper_triangulation(interval(m), n)).empty());
        CHECK(decreasing_flips(lower_triangulation(interval(m), n)).empty());
    }
}

TEST_CASE("decreasing flips of the top of C(8,5)") {
    auto flips = decreasing_flips(upper_triangulation(interval(8), 5));
    REQUIRE(flips.size() == 2);
    CHECK(flips[0].first.removed == Simplex{2, 4, 6});
    CHECK(flips[1].first.removed == Simplex{3, 5, 7});
    CHECK(flips[0].second.internal_set() == std::vector<Simplex>{{2, 4, 6}});
    CHECK(flips[1].second.internal_set() == std::vector<Simplex>{{3, 5, 7}});
}

TEST_CASE("flip count at the bottom of C(n+3,n) is two") {
    for (int n = 2; n <= 6; ++n)
        CHECK(increasing_flips(lower_triangulation(interval(n + 3), n)).size() == 2);
}

TEST_CASE("increasing and decreasing flips are mutually inverse") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2}, {6, 3}, {7, 3},
                                                        {7, 4}, {8, 4}, {8, 5}, {9, 6}}) {
        auto p = enumerate_poset(m, n);
        std::map<std::vector<Simplex>, FlipList> up;
        for (const auto& t : p.nodes) up[t.simplices()] = increasing_flips(t);
        for (const auto& t : p.nodes)
            for (const auto& [w, t0] : decreasing_flips(t)) {
                const auto& inc = up.at(t0.simplices());
                bool found = false;
                for (const auto& [w2, t2] : inc)
                    if (w2 == w && t2 == t) found = true;
                CHECK(found);
            }
        // And the reverse inclusion.
        std::map<std::vector<Simplex>, FlipList> down;
        for (const auto& t : p.nodes) down[t.simplices()] = decreasing_flips(t);
        for (const auto& t : p.nodes)
            for (const auto& [w, t2] : up.at(t.simplices())) {
                const auto& dec = down.at(t2.simplices());
                bool found = false;
                for (const auto& [w2, t0] : dec)
                    if (w2 == w && t0 == t) found = true;
                CHECK(found);
            }
    }
}

TEST_CASE("internal-set cardinality across a flip") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{7, 2}, {8, 4}, {7, 3}, {8, 5}}) {
        auto p = enumerate_poset(m, n);
        for (const auto& t : p.nodes)
            for (const auto& [w, t2] : increasing_flips(t)) {
                if (n % 2 == 0)
                    CHECK(t2.internal_set().size() == t.internal_set().size());
                else
                    CHECK(t2.internal_set().size() == t.internal_set().size() - 1);
            }
    }
}

TEST_CASE("support of a mutable simplex is the middle of its flip simplex") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 5}, {9, 5}}) {
        auto p = enumerate_poset(m, n);
        for (const auto& t : p.nodes)
            for (const auto& [w, t2] : increasing_flips(t)) {
                REQUIRE(w.inserted.has_value());
                auto su = support_of(t, w.removed);
                REQUIRE(su.has_value());
                CHECK(*su == Simplex(w.inserted->begin() + 1, w.inserted->end() - 1));
            }
    }
}

TEST_CASE("every internal simplex of an odd triangulation has a support") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {8, 5}}) {
        auto p = enumerate_poset(m, n);
        const int d = n / 2;
        for (const auto& t : p.nodes)
            for (const auto& a : t.internal_set()) {
                auto su = support_of(t, a);
                REQUIRE(su.has_value());
                CHECK(intertwines(*su, a));
                // All internal (d+1)-subsets of A u SU lie in e(T).
                Simplex un(a);
                un.insert(un.end(), su->begin(), su->end());
                std::sort(un.begin(), un.end());
                const auto& e = t.internal_set();
                for (const auto& b : subsets_of_size(un, d + 1))
                    if (is_internal_simplex(b, t.vertex_set(), n))
                        CHECK(std::binary_search(e.begin(), e.end(), b));
            }
    }
}

TEST_CASE("in non-extremal C(2d+4,2d+1) the mutable simplex encompasses e(T)") {
    for (int d = 1; d <= 2; ++d) {
        const int n = 2 * d + 1;
        const int m = 2 * d + 4;
        auto p = enumerate_poset(m, n);
        for (const auto& t : p.nodes) {
            if (t.internal_set().empty()) continue;                       // top
            if (t == lower_triangulation(interval(m), n)) continue;       // bottom
            auto flips = increasing_flips(t);
            REQUIRE(flips.size() == 1);
            const Simplex& a = flips[0].first.removed;
            auto su = support_of(t, a);
            REQUIRE(su.has_value());
            Simplex un(a);
            un.insert(un.end(), su->begin(), su->end());
            std::sort(un.begin(), un.end());
            for (const auto& c : t.internal_set()) CHECK(is_subset(c, un));
        }
    }
}

TEST_CASE("obstruction fixtures") {
    auto lower74 = lower_triangulation(interval(7), 4);
    CHECK(obstructions(lower74, {{1, 3, 5}, Simplex{2, 4, 6}}) ==
          std::vector<Simplex>{{1, 3, 5}});
    CHECK(obstructions(upper_triangulation(interval(7), 4), {{1, 4, 6}, Simplex{3, 5, 7}})
              .empty());
    CHECK_THROWS_AS(obstructions(lower_triangulation(interval(7), 3), {{2, 4}, Simplex{1, 3, 5}}),
                    InvalidArity);
}

TEST_CASE("obstructions are empty exactly when the flip stays below") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{7, 4}, {8, 4}}) {
        auto p = enumerate_poset(m, n);
        for (const auto& t : p.nodes)
            for (const auto& tp : p.nodes) {
                if (!leq2(t, tp)) continue;
                for (const auto& [w, t2] : increasing_flips(t)) {
                    auto obs = obstructions(tp, w);
                    CHECK(obs.empty() == leq2(t2, tp));
                    // When T is strictly below T' and the flip is obstructed,
                    // the obstruction with the largest first vertex pins down
                    // a maximal simplex of T': the interleaving
                    // <a^_0, b_0, a_1, b_1, ..., b_{d-1}, a_d>.
                    if (t == tp || obs.empty()) continue;
                    const Simplex* top_obs = &obs[0];
                    for (const auto& o : obs)
                        if (o[0] > (*top_obs)[0]) top_obs = &o;
                    Simplex s;
                    s.push_back((*top_obs)[0]);
                    const Simplex& a = w.removed;
                    const Simplex& b = *w.inserted;
                    for (std::size_t i = 1; i < a.size(); ++i) {
                        s.push_back(b[i - 1]);
                        s.push_back(a[i]);
                    }
                    std::sort(s.begin(), s.end());
                    CHECK(tp.contains(s));
                }
            }
    }
}
