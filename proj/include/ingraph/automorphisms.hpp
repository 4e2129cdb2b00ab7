#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ingraph/graph.hpp"

namespace ingraph {

/// A vertex permutation: image[i] is where vertex i goes.
using VertexPerm = std::vector<int>;

/// (outer ∘ inner)(i) = outer[inner[i]]; inner is applied first.
VertexPerm compose(const VertexPerm& outer, const VertexPerm& inner);
VertexPerm inverse_perm(const VertexPerm& p);
VertexPerm identity_perm(int size);

/// True iff p is a bijection on the vertices that preserves adjacency and
/// non-adjacency.
bool is_automorphism(const InclusionGraph& g, const VertexPerm& p);

/// First vertex pair whose adjacency status is not preserved, if any.
std::optional<std::pair<int, int>> find_adjacency_violation(const InclusionGraph& g,
                                                            const VertexPerm& p);

/// The involution W -> perp(W) as a vertex permutation.
VertexPerm perp_involution(const InclusionGraph& g);

/// The permutation induced by an invertible matrix acting on coordinates:
/// W -> {Xw : w in W}. DomainError if X is singular.
VertexPerm matrix_action(const InclusionGraph& g, const FqMatrix& x);

/// The permutation induced by applying the Frobenius power a -> a^(p^t) to
/// every coordinate. UsageError if t outside [0, m).
VertexPerm frobenius_action(const InclusionGraph& g, unsigned t);

/// Scale X so its first nonzero entry in row-major order is 1: the canonical
/// representative of X's projective class. DomainError on the zero matrix.
FqMatrix normalize_projective(const FqMatrix& x);

/// An automorphism in standard form: (perp involution)^dual ∘ (matrix) ∘
/// (Frobenius power), applied right to left. The matrix is stored
/// projectively normalized.
struct StandardAutomorphism {
    bool dual;
    FqMatrix matrix;
    unsigned frob;
};

/// The composite vertex permutation of a standard automorphism.
VertexPerm to_vertex_perm(const InclusionGraph& g, const StandardAutomorphism& s);

/// Order of the automorphism group of the inclusion graph of F_{p^m}^n:
/// 2 * |PGL_n(F_q)| * m for n >= 3, and (q+1)! for the edgeless n = 2 case.
unsigned long long automorphism_group_order(int n, uint32_t p, unsigned m);

/// Intermediate data recorded while decomposing: the accumulated fixing
/// matrix, the diagonal rescaling, the recovered Frobenius exponent and the
/// sampled coordinate-transition values f_{ij}(a).
struct DecompositionTrace {
    FqMatrix fixing;    // product of the per-coordinate fixing matrices
    FqMatrix diagonal;
    unsigned frob = 0;
    std::map<std::tuple<int, int, uint32_t>, uint32_t> f_samples;
};

struct Decomposition {
    StandardAutomorphism standard;
    DecompositionTrace trace;
};

/// Factors automorphisms of one graph. Construction precomputes the perp
/// involution, the Frobenius permutations and the unit-vector vertices; a
/// single instance can decompose any number of permutations and is
/// read-only afterwards.
class Decomposer {
public:
    explicit Decomposer(const InclusionGraph& g);
    explicit Decomposer(InclusionGraph&&) = delete;  // the graph must outlive the decomposer

    /// Factor sigma as (perp)^dual ∘ matrix ∘ Frobenius. Throws
    /// UnsupportedError below ambient dimension 3, UsageError if sigma is
    /// not an automorphism and IntegrityError if an internal consistency
    /// check fails (which would mean a bug, never ignored).
    ///
    /// With check_all_pairs set, every transition value f_{ij}(a) is sampled
    /// and checked against the recovered field automorphism instead of only
    /// the ones the algorithm needs.
    Decomposition decompose(const VertexPerm& sigma, bool check_all_pairs = false) const;

    /// Composite permutation, using the cached involution and Frobenius
    /// permutations.
    VertexPerm to_perm(const StandardAutomorphism& s) const;

    const InclusionGraph& graph() const { return *g_; }
    const VertexPerm& involution() const { return perp_perm_; }

private:
    std::vector<uint32_t> image_of_line(const VertexPerm& sigma1, const FqMatrix& partial,
                                        int line_vertex) const;

    const InclusionGraph* g_;
    VertexPerm perp_perm_;
    std::vector<VertexPerm> frob_perms_;   // one per exponent
    std::vector<int> unit_vertices_;       // vertex index of each [e_i]
};

/// One-shot convenience wrapper around Decomposer.
Decomposition decompose(const InclusionGraph& g, const VertexPerm& sigma);

/// Uniformly random dual flag and Frobenius exponent plus a random
/// invertible matrix (rejection sampling), normalized.
StandardAutomorphism random_standard_automorphism(const InclusionGraph& g, std::mt19937_64& rng);

/// Permutation file: one "src-label -> dst-label" line per vertex, or index
/// pairs "i j" against the exported vertex table. '#' starts a comment.
void write_permutation(std::ostream& os, const InclusionGraph& g, const VertexPerm& p);
VertexPerm read_permutation(std::istream& is, const InclusionGraph& g);

} // namespace ingraph
