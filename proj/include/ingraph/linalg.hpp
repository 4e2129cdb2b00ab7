#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ingraph/field.hpp"

namespace ingraph {

struct Echelon;

/// Dense row-major matrix over F_q. Dimensions here never exceed a handful,
/// so everything is straightforward Gaussian elimination.
class FqMatrix {
public:
    FqMatrix(const Fq& field, int rows, int cols);

    static FqMatrix identity(const Fq& field, int n);
    /// Matrix unit with a single 1 in position (i, j), zero elsewhere.
    static FqMatrix unit(const Fq& field, int n, int i, int j);
    /// Permutation matrix that swaps coordinates i and j.
    static FqMatrix transposition(const Fq& field, int n, int i, int j);
    static FqMatrix diagonal(const Fq& field, std::span<const uint32_t> entries);
    static FqMatrix from_rows(const Fq& field, const std::vector<std::vector<uint32_t>>& rows);

    const Fq& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::span<const uint32_t> row(int r) const {
        return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }
    const std::vector<uint32_t>& entries() const { return a_; }

    FqMatrix operator*(const FqMatrix& other) const;
    bool operator==(const FqMatrix& other) const;
    bool operator!=(const FqMatrix& other) const { return !(*this == other); }

    /// Matrix-vector product M v.
    std::vector<uint32_t> apply(std::span<const uint32_t> v) const;

    FqMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Echelon rref() const;
    int rank() const;
    bool invertible() const;

    /// Inverse by Gauss-Jordan; DomainError if not square or singular.
    FqMatrix inverse() const;

    /// RREF basis of {v : Mv = 0}, one row per basis vector
    /// (n - rank rows, where n = cols()).
    FqMatrix null_space() const;

    /// Text form "a b c; d e f" with encoded entries.
    std::string to_text() const;
    static FqMatrix from_text(const Fq& field, const std::string& text);

private:
    void require_same_field(const FqMatrix& other) const;

    Fq field_;
    int rows_;
    int cols_;
    std::vector<uint32_t> a_;
};

struct Echelon {
    FqMatrix reduced;          // reduced row echelon form
    int rank;
    std::vector<int> pivots;   // pivot column of each nonzero row
};

inline int FqMatrix::rank() const { return rref().rank; }
inline bool FqMatrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

/// In-place reduction to RREF; returns pivot columns (size = rank).
std::vector<int> rref_in_place(const Fq& field, std::vector<uint32_t>& a, int rows, int cols);

} // namespace ingraph
