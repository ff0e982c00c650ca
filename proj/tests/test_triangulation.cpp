#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hst/error.hpp"
#include "hst/orders.hpp"
#include "hst/triangulation.hpp"

using namespace hst;

TEST_CASE("validate accepts the lower triangulation of C(5,3)") {
    Triangulation t(interval(5), 3, {{1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 5}});
    CHECK(validate(t));
}

TEST_CASE("validate rejects an incomplete complex with a facet witness") {
    Triangulation t(interval(5), 3, {{1, 2, 3, 4}, {1, 2, 3, 5}});
    ValidationWitness w;
    CHECK_FALSE(validate(t, &w));
    CHECK(w.kind == ValidationWitness::Kind::UnmatchedFacet);
    CHECK(w.facet == Simplex{2, 3, 4});
    CHECK_FALSE(w.describe().empty());
}

TEST_CASE("validate rejects the overfilled complex with the split circuit") {
    // 1234 and 1235 split the circuit ({2,4},{1,3,5}); the complex also has
    // unmatched facets, so only the verdict is pinned down here.
    Triangulation t(interval(5), 3, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 3, 4, 5}});
    CHECK_FALSE(validate(t));
}

TEST_CASE("witness descriptions") {
    ValidationWitness w;
    w.kind = ValidationWitness::Kind::CircuitConflict;
    w.circuit = Circuit{{2, 4}, {1, 3, 5}};
    w.simplex_a = {1, 2, 3, 4};
    w.simplex_b = {1, 2, 3, 5};
    auto text = w.describe();
    CHECK(text.find("circuit") != std::string::npos);
    CHECK(text.find("24") != std::string::npos);
    CHECK(text.find("135") != std::string::npos);
}

TEST_CASE("internal sets of known triangulations") {
    CHECK(lower_triangulation(interval(5), 3).internal_set() == std::vector<Simplex>{{2, 4}});
    CHECK(lower_triangulation(interval(7), 4).internal_set() ==
          std::vector<Simplex>{{1, 3, 5}, {1, 3, 6}, {1, 4, 6}});
    CHECK(upper_triangulation(interval(8), 5).internal_set().empty());
    CHECK(lower_triangulation(interval(8), 5).internal_set() ==
          std::vector<Simplex>{{2, 4, 6}, {2, 4, 7}, {2, 5, 7}, {3, 5, 7}});
}

TEST_CASE("from_internal reconstructions") {
    CHECK(from_internal({{1, 3}, {1, 4}}, interval(5), 2).simplices() ==
          std::vector<Simplex>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
    CHECK(from_internal({{2, 4}}, interval(5), 3) == lower_triangulation(interval(5), 3));
    CHECK(from_internal({{2, 4, 6}, {2, 4, 7}, {2, 5, 7}, {3, 5, 7}}, interval(8), 5) ==
          lower_triangulation(interval(8), 5));
    CHECK_THROWS_AS(from_internal({{1, 3}}, interval(5), 2), NoSuchTriangulation);
}

TEST_CASE("even characterization") {
    CHECK(check_even_characterization({{1, 3, 5}, {1, 3, 6}, {1, 4, 6}}, interval(7), 4));
    CHECK_FALSE(check_even_characterization({{1, 3, 5}, {2, 4, 6}, {1, 3, 6}}, interval(7), 4));
    CHECK_FALSE(check_even_characterization({}, interval(6), 2));
    CHECK_THROWS_AS(check_even_characterization({}, interval(6), 3), InvalidArity);
}

TEST_CASE("odd characterization") {
    CHECK(check_odd_characterization({{2, 4, 6}, {2, 4, 7}, {2, 5, 7}, {3, 5, 7}},
                                     interval(8), 5));
    CHECK_FALSE(check_odd_characterization({{2, 4, 6}, {3, 5, 7}}, interval(8), 5));
    CHECK(check_odd_characterization({}, interval(8), 5));
    CHECK(check_odd_characterization({}, interval(9), 3));
    CHECK_FALSE(is_bridging({{2, 4, 6}, {3, 5, 7}}, interval(8), 5));
    CHECK(is_supporting({{2, 4}}, interval(5), 3));
}

TEST_CASE("characterization matches existence, by enumeration") {
    struct Instance { int m, n; };
    for (auto [m, n] : {Instance{6, 2}, Instance{7, 2}, Instance{6, 3}, Instance{7, 3},
                        Instance{7, 4}, Instance{8, 5}}) {
        auto v = interval(m);
        auto p = enumerate_poset(m, n);
        std::vector<std::vector<Simplex>> realized;
        for (const auto& t : p.nodes) realized.push_back(t.internal_set());
        std::sort(realized.begin(), realized.end());
        // Every subset of the internal simplices is either realized by a
        // triangulation (iff characterized) or rejected by the predicate.
        auto internals = internal_simplices(v, n);
        const std::size_t k = internals.size();
        REQUIRE(k <= 20);
        for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
            std::vector<Simplex> x;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) x.push_back(internals[i]);
            bool realized_here = std::binary_search(realized.begin(), realized.end(), x);
            CHECK(check_characterization(x, v, n) == realized_here);
        }
    }
}

TEST_CASE("round trip from_internal after internal_set") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2}, {6, 3}, {7, 3},
                                                        {7, 4}, {8, 4}, {8, 5}, {8, 6}}) {
        auto p = enumerate_poset(m, n);
        for (const auto& t : p.nodes)
            CHECK(from_internal(t.internal_set(), t.vertex_set(), n) == t);
    }
}

TEST_CASE("lower and upper triangulations validate") {
    for (int n = 2; n <= 6; ++n)
        for (int m = n + 2; m <= 9; ++m) {
            CHECK(validate(lower_triangulation(interval(m), n)));
            CHECK(validate(upper_triangulation(interval(m), n)));
        }
}

TEST_CASE("induced subtriangulations") {
    auto t = lower_triangulation(interval(6), 3);
    CHECK(induced_subtriangulation(t, interval(6)).has_value());
    CHECK(*induced_subtriangulation(t, interval(6)) == t);

    // Lower C(7,4) induces the lower triangulation on the flip polytope of
    // its mutable pair A = 146, B = 357.
    auto t74 = lower_triangulation(interval(7), 4);
    LabelSet u{1, 3, 4, 5, 6, 7};
    auto sub = induced_subtriangulation(t74, u);
    REQUIRE(sub.has_value());
    CHECK(sub->simplices() == lower_triangulation(u, 4).simplices());
}

TEST_CASE("e(lower) contains e(T) contains e(upper) in odd dimension") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 5}}) {
        auto p = enumerate_poset(m, n);
        auto lower = lower_triangulation(interval(m), n).internal_set();
        auto upper = upper_triangulation(interval(m), n).internal_set();
        for (const auto& t : p.nodes) {
            const auto& e = t.internal_set();
            CHECK(std::includes(lower.begin(), lower.end(), e.begin(), e.end()));
            CHECK(std::includes(e.begin(), e.end(), upper.begin(), upper.end()));
        }
    }
}

TEST_CASE("relabeling") {
    auto t = lower_triangulation(interval(5), 3);
    auto shifted = relabel(t, {{1, 10}, {2, 20}, {3, 30}, {4, 40}, {5, 50}});
    CHECK(shifted.vertex_set() == LabelSet{10, 20, 30, 40, 50});
    CHECK(canonicalize_labels(shifted) == t);
}
