#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ingraph/linalg.hpp"

namespace ingraph {

/// A subspace of F_q^n in canonical form: the basis is the reduced row
/// echelon form of any spanning set, so two Subspace values are equal
/// exactly when they represent the same subspace.
class Subspace {
public:
    /// Canonical subspace spanned by the rows of `vectors`.
    /// DomainError if all rows are zero.
    static Subspace span(const FqMatrix& vectors);
    static Subspace span(const Fq& field, const std::vector<std::vector<uint32_t>>& rows);

    int ambient() const { return n_; }
    int dim() const { return basis_.rows(); }
    const Fq& field() const { return basis_.field(); }
    const FqMatrix& basis() const { return basis_; }

    bool contains(std::span<const uint32_t> v) const;

    /// Canonical vertex label: the basis in matrix text form.
    std::string label() const { return basis_.to_text(); }

    /// Compact binary key for hashing and index maps.
    std::string packed_key() const;

    bool operator==(const Subspace& other) const {
        return n_ == other.n_ && basis_ == other.basis_;
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Wraps a matrix that is already in RREF with no zero rows. Used by the
    /// enumerator, which produces canonical bases by construction.
    static Subspace from_rref_unchecked(FqMatrix basis);

private:
    explicit Subspace(FqMatrix basis) : n_(basis.cols()), basis_(std::move(basis)) {}

    int n_;
    FqMatrix basis_;
};

/// True iff inner is properly contained in outer (same ambient space).
bool is_proper_subspace(const Subspace& inner, const Subspace& outer);

/// Orthogonal complement under the standard bilinear form sum a_i b_i.
/// dim(perp(W)) = n - dim(W). In positive characteristic W and perp(W)
/// may intersect nontrivially.
Subspace perp(const Subspace& w);

/// Canonical subspace spanned by the union of the two bases.
Subspace join(const Subspace& a, const Subspace& b);

/// The unique scalar multiple of v whose first nonzero coordinate is 1.
/// DomainError on the zero vector.
std::vector<uint32_t> standard_form(const Fq& field, std::span<const uint32_t> v);

/// All k-dimensional subspaces of F_q^n, each exactly once, in a
/// deterministic order: RREF pivot-column sets in lexicographic order, free
/// entries counted up in row-major order. Count is the Gaussian binomial.
std::vector<Subspace> enumerate_subspaces(const Fq& field, int n, int k);

/// Parse a vertex label back into a subspace (ambient dimension n).
Subspace parse_subspace(const Fq& field, int n, const std::string& label);

} // namespace ingraph
