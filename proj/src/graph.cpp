#include "ingraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace ingraph {

namespace {

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("64-bit overflow in exact count");
    return r;
}

unsigned long long pow_u64(unsigned long long q, int e) {
    unsigned long long r = 1;
    while (e-- > 0) r = checked_mul(r, q);
    return r;
}

} // namespace

unsigned long long gaussian_binomial(int n, int k, unsigned long long q) {
    if (k < 0 || k > n) throw UsageError("Gaussian binomial needs 0 <= k <= n");
    if (q < 2) throw UsageError("Gaussian binomial needs a prime power q >= 2");
    unsigned long long result = 1;
    // partial products are integral, same as for ordinary binomials
    for (int i = 1; i <= k; ++i) {
        const unsigned long long num = pow_u64(q, n - k + i) - 1;
        const unsigned long long den = pow_u64(q, i) - 1;
        result = checked_mul(result, num);
        if (result % den != 0) throw IntegrityError("Gaussian binomial division not exact");
        result /= den;
    }
    return result;
}

unsigned long long expected_degree(int n, int k, unsigned long long q) {
    if (k < 1 || k > n - 1) throw UsageError("vertex dimension must lie in [1, n-1]");
    unsigned long long deg = 0;
    for (int i = 1; i <= k - 1; ++i) deg += gaussian_binomial(k, i, q);
    for (int i = 1; i <= n - k - 1; ++i) deg += gaussian_binomial(n - k, i, q);
    return deg;
}

InclusionGraph::InclusionGraph(const Fq& field, int n) : field_(field), n_(n) {
    if (n < 2) throw UsageError("inclusion graph needs ambient dimension >= 2");

    for (int k = 1; k <= n - 1; ++k) {
        auto layer = enumerate_subspaces(field, n, k);
        vertices_.insert(vertices_.end(), std::make_move_iterator(layer.begin()),
                         std::make_move_iterator(layer.end()));
    }
    const int v = vertex_count();
    index_.reserve(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) index_.emplace(vertices_[static_cast<size_t>(i)].packed_key(), i);

    adjacency_.assign(static_cast<size_t>(v), {});
    words_ = (static_cast<size_t>(v) + 63) / 64;
    adj_bits_.assign(static_cast<size_t>(v) * words_, 0);

    auto link = [&](int i, int j) {
        adjacency_[static_cast<size_t>(i)].push_back(j);
        adjacency_[static_cast<size_t>(j)].push_back(i);
        adj_bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] |=
            uint64_t{1} << (static_cast<size_t>(j) % 64);
        adj_bits_[static_cast<size_t>(j) * words_ + static_cast<size_t>(i) / 64] |=
            uint64_t{1} << (static_cast<size_t>(i) % 64);
        ++edge_count_;
    };

    // vertices are grouped by dimension in increasing order, so i < j with
    // dim_i < dim_j covers every candidate pair once
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            if (dim_of(i) == dim_of(j)) continue;
            if (is_proper_subspace(vertices_[static_cast<size_t>(i)], vertices_[static_cast<size_t>(j)]))
                link(i, j);
        }

    degrees_.resize(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
        auto& nbrs = adjacency_[static_cast<size_t>(i)];
        std::sort(nbrs.begin(), nbrs.end());
        degrees_[static_cast<size_t>(i)] = static_cast<int>(nbrs.size());
    }
}

int InclusionGraph::index_of(const Subspace& w) const {
    const auto it = index_.find(w.packed_key());
    if (it == index_.end()) throw UsageError("subspace is not a vertex of this graph: " + w.label());
    return it->second;
}

std::optional<int> InclusionGraph::find(const Subspace& w) const {
    const auto it = index_.find(w.packed_key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void InclusionGraph::write_edge_list(std::ostream& os) const {
    for (int i = 0; i < vertex_count(); ++i)
        for (int j : neighbors(i))
            if (i < j) os << i << ' ' << j << '\n';
}

void InclusionGraph::write_vertex_table(std::ostream& os) const {
    for (int i = 0; i < vertex_count(); ++i)
        os << i << '\t' << dim_of(i) << '\t' << vertex(i).label() << '\n';
}

void InclusionGraph::write_dot(std::ostream& os) const {
    os << "graph inclusion {\n";
    for (int i = 0; i < vertex_count(); ++i)
        os << "  v" << i << " [label=\"" << vertex(i).label() << "\"];\n";
    for (int i = 0; i < vertex_count(); ++i)
        for (int j : neighbors(i))
            if (i < j) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
}

namespace {

// eccentricities by BFS from every vertex; nullopt when disconnected
std::optional<int> bfs_diameter(const InclusionGraph& g) {
    const int v = g.vertex_count();
    if (v == 0) return std::nullopt;
    int diameter = 0;
    std::vector<int> dist(static_cast<size_t>(v));
    for (int s = 0; s < v; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        int reached = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    diameter = std::max(diameter, dist[static_cast<size_t>(w)]);
                    queue.push_back(w);
                    ++reached;
                }
        }
        if (reached < v) return std::nullopt;
    }
    return diameter;
}

// shortest cycle via BFS from every vertex; exact because the minimum over
// roots on a shortest cycle attains the girth
std::optional<int> bfs_girth(const InclusionGraph& g) {
    const int v = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<size_t>(v)), parent(static_cast<size_t>(v));
    for (int s = 0; s < v; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{s};
        dist[static_cast<size_t>(s)] = 0;
        parent[static_cast<size_t>(s)] = -1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    const int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// cliques in an inclusion graph are chains of nested subspaces, so the
// clique number is the longest chain; dynamic programming over dimensions
int longest_chain(const InclusionGraph& g) {
    const int v = g.vertex_count();
    if (v == 0) return 0;
    std::vector<int> order(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.dim_of(a) < g.dim_of(b); });
    std::vector<int> chain(static_cast<size_t>(v), 1);
    int best = 1;
    for (int idx : order)
        for (int w : g.neighbors(idx))
            if (g.dim_of(w) < g.dim_of(idx))
                chain[static_cast<size_t>(idx)] =
                    std::max(chain[static_cast<size_t>(idx)], chain[static_cast<size_t>(w)] + 1);
    for (int i = 0; i < v; ++i) best = std::max(best, chain[static_cast<size_t>(i)]);
    return best;
}

} // namespace

GraphInvariants graph_invariants(const InclusionGraph& g) {
    GraphInvariants inv;
    inv.diameter = bfs_diameter(g);
    inv.girth = bfs_girth(g);
    inv.clique_number = longest_chain(g);
    return inv;
}

std::vector<int> dimension_coloring(const InclusionGraph& g) {
    if (g.ambient() < 3) throw UsageError("dimension coloring needs ambient dimension >= 3");
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) colors[static_cast<size_t>(i)] = g.dim_of(i);
    return colors;
}

} // namespace ingraph
