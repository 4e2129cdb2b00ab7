#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ingraph/graph.hpp"

using namespace ingraph;

namespace {

// generic maximum clique by branch and bound, as an independent check that
// cliques really are chains
int max_clique_generic(const InclusionGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<int> current;
    std::vector<int> candidates(n);
    for (int i = 0; i < n; ++i) candidates[static_cast<size_t>(i)] = i;

    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cand) {
        if (static_cast<int>(current.size()) > best) best = static_cast<int>(current.size());
        if (current.size() + cand.size() <= static_cast<size_t>(best)) return;
        for (size_t idx = 0; idx < cand.size(); ++idx) {
            const int v = cand[idx];
            std::vector<int> next;
            for (size_t j = idx + 1; j < cand.size(); ++j)
                if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
            current.push_back(v);
            grow(next);
            current.pop_back();
        }
    };
    grow(candidates);
    return best;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(5, 5, 2) == 1);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (unsigned long long q : {2ULL, 3ULL, 4ULL, 5ULL})
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), UsageError);
    CHECK_THROWS_AS(gaussian_binomial(3, -1, 2), UsageError);
}

TEST_CASE("degree formula") {
    CHECK(expected_degree(3, 1, 2) == 3);
    CHECK(expected_degree(4, 2, 2) == 6);
    CHECK(expected_degree(4, 1, 2) == 14);
    CHECK(expected_degree(4, 1, 2) == expected_degree(4, 3, 2));
    CHECK(expected_degree(5, 2, 3) == expected_degree(5, 3, 3));
    CHECK_THROWS_AS(expected_degree(4, 0, 2), UsageError);
    CHECK_THROWS_AS(expected_degree(4, 4, 2), UsageError);
}

TEST_CASE("build: small instances") {
    const InclusionGraph heawood(Fq(2, 1), 3);
    CHECK(heawood.vertex_count() == 14);
    CHECK(heawood.edge_count() == 21);
    for (int i = 0; i < heawood.vertex_count(); ++i)
        CHECK(heawood.neighbors(i).size() == 3);

    const InclusionGraph edgeless(Fq(2, 1), 2);
    CHECK(edgeless.vertex_count() == 3);
    CHECK(edgeless.edge_count() == 0);

    const InclusionGraph g42(Fq(2, 1), 4);
    CHECK(g42.vertex_count() == 65);

    CHECK_THROWS_AS(InclusionGraph(Fq(2, 1), 1), UsageError);
}

TEST_CASE("adjacency matches proper inclusion and respects dimension") {
    const InclusionGraph g(Fq(3, 1), 3);
    for (int i = 0; i < g.vertex_count(); ++i) {
        CHECK_FALSE(g.adjacent(i, i));
        for (int j = 0; j < g.vertex_count(); ++j) {
            CHECK(g.adjacent(i, j) == g.adjacent(j, i));
            if (g.adjacent(i, j)) {
                CHECK(g.dim_of(i) != g.dim_of(j));
                CHECK((is_proper_subspace(g.vertex(i), g.vertex(j)) ||
                       is_proper_subspace(g.vertex(j), g.vertex(i))));
            }
        }
    }
}

TEST_CASE("degrees match the formula") {
    const std::vector<std::pair<Fq, int>> cases = {{Fq(2, 1), 3}, {Fq(3, 1), 3}, {Fq(2, 1), 4},
                                                   {Fq(2, 2), 3}};
    for (const auto& [field, n] : cases) {
        const InclusionGraph g(field, n);
        for (int i = 0; i < g.vertex_count(); ++i)
            CHECK(g.neighbors(i).size() == expected_degree(n, g.dim_of(i), field.order()));
    }
}

TEST_CASE("degree symmetry and monotonicity across dimensions") {
    for (const auto& [field, n] : std::vector<std::pair<Fq, int>>{{Fq(2, 1), 4}, {Fq(2, 1), 5},
                                                                  {Fq(3, 1), 4}}) {
        const InclusionGraph g(field, n);
        std::map<int, std::multiset<size_t>> by_dim;
        for (int i = 0; i < g.vertex_count(); ++i)
            by_dim[g.dim_of(i)].insert(g.neighbors(i).size());
        for (int k = 1; k <= n - 1; ++k) CHECK(by_dim[k] == by_dim[n - k]);
        // degree strictly drops as the dimension climbs toward n/2
        for (int k = 1; 2 * (k + 1) <= n; ++k)
            CHECK(expected_degree(n, k + 1, field.order()) < expected_degree(n, k, field.order()));
    }
}

TEST_CASE("structural invariants") {
    const GraphInvariants heawood = graph_invariants(InclusionGraph(Fq(2, 1), 3));
    CHECK(heawood.diameter == 3);
    CHECK(heawood.girth == 6);
    CHECK(heawood.clique_number == 2);

    const GraphInvariants g42 = graph_invariants(InclusionGraph(Fq(2, 1), 4));
    CHECK(g42.diameter == 3);
    CHECK(g42.girth == 3);  // chains of nested subspaces give triangles
    CHECK(g42.clique_number == 3);

    const GraphInvariants edgeless = graph_invariants(InclusionGraph(Fq(2, 1), 2));
    CHECK_FALSE(edgeless.diameter.has_value());
    CHECK_FALSE(edgeless.girth.has_value());
    CHECK(edgeless.clique_number == 1);
}

TEST_CASE("longest chain equals a generic clique search") {
    for (const auto& [field, n] : std::vector<std::pair<Fq, int>>{{Fq(2, 1), 3}, {Fq(3, 1), 3},
                                                                  {Fq(2, 1), 4}}) {
        const InclusionGraph g(field, n);
        CHECK(graph_invariants(g).clique_number == max_clique_generic(g));
    }
}

TEST_CASE("dimension coloring") {
    const InclusionGraph g(Fq(2, 1), 4);
    const auto colors = dimension_coloring(g);
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j : g.neighbors(i)) CHECK(colors[static_cast<size_t>(i)] != colors[static_cast<size_t>(j)]);
    std::vector<int> palette = colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    CHECK(palette.size() == 3);
    CHECK(static_cast<int>(palette.size()) == graph_invariants(g).clique_number);

    CHECK_THROWS_AS(dimension_coloring(InclusionGraph(Fq(2, 1), 2)), UsageError);
}

TEST_CASE("vertex lookup") {
    const InclusionGraph g(Fq(2, 1), 3);
    for (int i = 0; i < g.vertex_count(); ++i) CHECK(g.index_of(g.vertex(i)) == i);
    const auto full = Subspace::span(g.field(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(g.find(full).has_value());
    CHECK_THROWS_AS(g.index_of(full), UsageError);
}

TEST_CASE("exports") {
    const InclusionGraph g(Fq(2, 1), 3);

    std::ostringstream edges;
    g.write_edge_list(edges);
    std::istringstream read_edges(edges.str());
    int i, j, lines = 0;
    while (read_edges >> i >> j) {
        CHECK(i < j);
        CHECK(g.adjacent(i, j));
        ++lines;
    }
    CHECK(lines == static_cast<int>(g.edge_count()));

    std::ostringstream table;
    g.write_vertex_table(table);
    std::istringstream read_table(table.str());
    std::string line;
    int rows = 0;
    while (std::getline(read_table, line)) {
        std::istringstream fields(line);
        int index, dim;
        std::string label;
        fields >> index >> dim;
        std::getline(fields, label);
        CHECK(index == rows);
        CHECK(dim == g.dim_of(index));
        ++rows;
    }
    CHECK(rows == g.vertex_count());

    std::ostringstream dot;
    g.write_dot(dot);
    CHECK(dot.str().find("graph inclusion {") == 0);
    CHECK(dot.str().find("--") != std::string::npos);
}

} // TEST_SUITE
