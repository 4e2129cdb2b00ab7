#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ingraph/subspace.hpp"

namespace ingraph {

/// Gaussian binomial [n k]_q: the number of k-dimensional subspaces of an
/// n-dimensional space over F_q. Exact; throws UsageError if k outside
/// [0, n], IntegrityError on 64-bit overflow.
unsigned long long gaussian_binomial(int n, int k, unsigned long long q);

/// Degree of a k-dimensional vertex in the inclusion graph of F_q^n:
/// the number of nontrivial proper subspaces strictly inside plus the number
/// of proper superspaces strictly between it and the full space.
unsigned long long expected_degree(int n, int k, unsigned long long q);

/// The subspace inclusion graph of F_q^n: vertices are all nontrivial proper
/// subspaces (dimensions 1..n-1, in enumeration order), edges join W1, W2
/// when one properly contains the other. Immutable after construction.
class InclusionGraph {
public:
    /// Builds the full graph. UsageError if n < 2.
    InclusionGraph(const Fq& field, int n);

    const Fq& field() const { return field_; }
    int ambient() const { return n_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const Subspace& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    int dim_of(int i) const { return vertices_[static_cast<size_t>(i)].dim(); }
    const std::vector<int>& neighbors(int i) const { return adjacency_[static_cast<size_t>(i)]; }
    const std::vector<int>& degree_sequence() const { return degrees_; }

    bool adjacent(int i, int j) const {
        return (adj_bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
                (static_cast<size_t>(j) % 64)) & 1u;
    }

    /// Vertex index of a subspace; UsageError if it is not a vertex.
    int index_of(const Subspace& w) const;
    std::optional<int> find(const Subspace& w) const;

    /// Plain neighbor lists, for consumers that work on generic graphs.
    std::vector<std::vector<int>> adjacency_lists() const { return adjacency_; }

    void write_edge_list(std::ostream& os) const;
    void write_vertex_table(std::ostream& os) const;
    void write_dot(std::ostream& os) const;

private:
    Fq field_;
    int n_;
    std::vector<Subspace> vertices_;
    std::vector<std::vector<int>> adjacency_;   // sorted neighbor lists
    std::vector<int> degrees_;
    std::unordered_map<std::string, int> index_;  // packed key -> vertex
    std::size_t words_ = 0;                       // 64-bit words per adjacency row
    std::vector<uint64_t> adj_bits_;
    std::size_t edge_count_ = 0;
};

/// Structural invariants. Disconnected graphs have no diameter and forests
/// no girth; both are reported as absent rather than a sentinel.
struct GraphInvariants {
    std::optional<int> diameter;
    std::optional<int> girth;
    int clique_number;
};

GraphInvariants graph_invariants(const InclusionGraph& g);

/// Colors every vertex by its dimension. Proper with exactly n-1 colors,
/// because adjacency requires strictly different dimensions. UsageError if
/// n < 3 (at n = 2 the graph is edgeless and the bound is meaningless).
std::vector<int> dimension_coloring(const InclusionGraph& g);

} // namespace ingraph
