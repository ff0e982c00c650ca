#include "hst/orders.hpp"
#include "hst/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hst {

void HSTPoset::ensure_reach() const {
    if (!reach_.empty()) return;
    const std::size_t k = nodes.size();
    const std::size_t words = (k + 63) / 64;
    reach_.assign(k, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<int>> succ(k);
    for (auto [i, j] : covers) succ[static_cast<std::size_t>(i)].push_back(j);
    // Nodes are discovered by BFS from the bottom, so covers go from lower
    // BFS layers to higher ones only in the flip direction; a reverse
    // topological sweep is obtained by processing indices descending after
    // ordering by longest-path depth. Simpler: iterate to fixpoint, which is
    // cheap at these sizes.
    for (std::size_t i = 0; i < k; ++i) reach_[i][i / 64] |= 1ull << (i % 64);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < k; ++i)
            for (int j : succ[i])
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t merged = reach_[i][w] | reach_[static_cast<std::size_t>(j)][w];
                    if (merged != reach_[i][w]) {
                        reach_[i][w] = merged;
                        changed = true;
                    }
                }
    }
}

bool HSTPoset::leq1(int i, int j) const {
    ensure_reach();
    return (reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] >>
            (static_cast<std::size_t>(j) % 64)) & 1;
}

int HSTPoset::node_index(const Triangulation& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == t) return static_cast<int>(i);
    return -1;
}

HSTPoset enumerate_poset(const LabelSet& v, int n, std::size_t budget) {
    HSTPoset p;
    p.vertex_set = v;
    p.n = n;
    if (static_cast<int>(v.size()) < n + 1)
        throw InvalidArity("enumerate_poset: need at least n+1 vertices");
    if (static_cast<int>(v.size()) == n + 1) {
        // A simplex: the single trivial triangulation, no flips.
        p.nodes.emplace_back(v, n, std::vector<Simplex>{v});
        return p;
    }
    std::map<std::vector<Simplex>, int> index;
    std::queue<int> frontier;
    auto intern = [&](Triangulation t) {
        auto it = index.find(t.simplices());
        if (it != index.end()) return std::pair<int, bool>{it->second, false};
        int id = static_cast<int>(p.nodes.size());
        if (p.nodes.size() >= budget)
            throw BudgetExceeded("enumerate_poset: node budget exceeded");
        index.emplace(t.simplices(), id);
        p.nodes.push_back(std::move(t));
        return std::pair<int, bool>{id, true};
    };
    intern(lower_triangulation(v, n));
    frontier.push(0);
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (auto& [w, succ] : increasing_flips(p.nodes[static_cast<std::size_t>(cur)])) {
            auto [id, fresh] = intern(std::move(succ));
            p.covers.emplace_back(cur, id);
            if (fresh) frontier.push(id);
        }
    }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

HSTPoset enumerate_poset(int m, int n, std::size_t budget) {
    return enumerate_poset(interval(m), n, budget);
}

bool leq2(const Triangulation& t, const Triangulation& t_prime) {
    if (t.vertex_set() != t_prime.vertex_set() || t.dim() != t_prime.dim())
        throw InvalidArity("leq2: triangulations must share the ambient polytope");
    const auto& e = t.internal_set();
    const auto& e_prime = t_prime.internal_set();
    if (t.dim() % 2 == 0) {
        for (const auto& a : e)
            for (const auto& b : e_prime)
                if (intertwines(b, a)) return false;
        return true;
    }
    return std::includes(e.begin(), e.end(), e_prime.begin(), e_prime.end());
}

std::vector<std::vector<bool>> leq2_matrix(const HSTPoset& p, bool parallel) {
    const int k = static_cast<int>(p.nodes.size());
    std::vector<std::vector<bool>> mat(static_cast<std::size_t>(k),
                                       std::vector<bool>(static_cast<std::size_t>(k)));
    // Internal sets are computed up front so the sweep touches the
    // triangulations read-only.
    for (const auto& t : p.nodes) t.internal_set();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                leq2(p.nodes[static_cast<std::size_t>(i)], p.nodes[static_cast<std::size_t>(j)]);
    (void)parallel;
    return mat;
}

EquivalenceReport verify_equivalence(int m, int n, std::size_t budget, bool parallel) {
    EquivalenceReport rep;
    rep.m = m;
    rep.n = n;
    HSTPoset p = enumerate_poset(m, n, budget);
    rep.node_count = p.nodes.size();
    rep.pair_count = rep.node_count * rep.node_count;
    auto mat = leq2_matrix(p, parallel);
    const int k = static_cast<int>(p.nodes.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (p.leq1(i, j) != mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                ++rep.violations;
                if (rep.violating_pairs.size() < 16) rep.violating_pairs.emplace_back(i, j);
            }
    return rep;
}

std::vector<FlipWitness> flip_chain(const Triangulation& t, const Triangulation& t_prime) {
    if (!leq2(t, t_prime))
        throw InvalidArity("flip_chain: endpoints are not leq2-comparable in this direction");
    std::vector<FlipWitness> chain;
    Triangulation cur = t;
    while (!(cur == t_prime)) {
        bool advanced = false;
        for (auto& [w, succ] : increasing_flips(cur)) {  // sorted by witness
            if (leq2(succ, t_prime)) {
                chain.push_back(w);
                cur = std::move(succ);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw TheoremViolation("flip_chain: no admissible increasing flip below the target");
    }
    return chain;
}

std::string export_dot(const HSTPoset& p) {
    std::ostringstream os;
    os << "digraph hst {\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        std::string label = to_string(p.nodes[i].internal_set());
        if (label.empty()) label = "{}";
        os << "  " << i << " [label=\"" << label << "\"];\n";
    }
    for (auto [i, j] : p.covers) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace hst
