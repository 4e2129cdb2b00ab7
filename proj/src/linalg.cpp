#include "ingraph/linalg.hpp"

#include <sstream>

namespace ingraph {

FqMatrix::FqMatrix(const Fq& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be nonnegative");
}

FqMatrix FqMatrix::identity(const Fq& field, int n) {
    FqMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::unit(const Fq& field, int n, int i, int j) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw UsageError("matrix unit index out of range");
    FqMatrix m(field, n, n);
    m.at(i, j) = 1;
    return m;
}

FqMatrix FqMatrix::transposition(const Fq& field, int n, int i, int j) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw UsageError("transposition index out of range");
    FqMatrix m = identity(field, n);
    m.at(i, i) = 0;
    m.at(j, j) = 0;
    m.at(i, j) = 1;
    m.at(j, i) = 1;
    return m;
}

FqMatrix FqMatrix::diagonal(const Fq& field, std::span<const uint32_t> entries) {
    FqMatrix m(field, static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

FqMatrix FqMatrix::from_rows(const Fq& field, const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) throw UsageError("matrix needs at least one row");
    const int cols = static_cast<int>(rows.front().size());
    FqMatrix m(field, static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw UsageError("ragged rows in matrix literal");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return m;
}

void FqMatrix::require_same_field(const FqMatrix& other) const {
    if (field_ != other.field_)
        throw UsageError("matrices over different fields cannot be combined");
}

FqMatrix FqMatrix::operator*(const FqMatrix& other) const {
    require_same_field(other);
    if (cols_ != other.rows_) throw UsageError("matrix product dimension mismatch");
    const Fq& f = field_;
    FqMatrix out(f, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const uint32_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const uint32_t b = other.at(k, j);
                if (b == 0) continue;
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b));
            }
        }
    return out;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

std::vector<uint32_t> FqMatrix::apply(std::span<const uint32_t> v) const {
    if (static_cast<int>(v.size()) != cols_) throw UsageError("matrix-vector dimension mismatch");
    const Fq& f = field_;
    std::vector<uint32_t> out(static_cast<size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < cols_; ++j) {
            const uint32_t a = at(i, j);
            if (a != 0 && v[static_cast<size_t>(j)] != 0)
                acc = f.add(acc, f.mul(a, v[static_cast<size_t>(j)]));
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool FqMatrix::is_zero() const {
    for (uint32_t v : a_)
        if (v != 0) return false;
    return true;
}

bool FqMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::vector<int> rref_in_place(const Fq& f, std::vector<uint32_t>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    auto at = [&](int i, int j) -> uint32_t& { return a[static_cast<size_t>(i) * cols + j]; };
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = c; j < cols; ++j) std::swap(at(pivot_row, j), at(r, j));
        const uint32_t scale = f.inv(at(r, c));
        if (scale != 1)
            for (int j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), scale);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const uint32_t factor = at(i, c);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j)
                at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Echelon FqMatrix::rref() const {
    FqMatrix reduced = *this;
    std::vector<int> pivots = rref_in_place(field_, reduced.a_, rows_, cols_);
    const int rank = static_cast<int>(pivots.size());
    return {std::move(reduced), rank, std::move(pivots)};
}

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("only square matrices can be inverted");
    const Fq& f = field_;
    const int n = rows_;
    if (n == 0) return *this;
    // Gauss-Jordan on [M | I]
    std::vector<uint32_t> aug(static_cast<size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i) * 2 * n + j] = at(i, j);
        aug[static_cast<size_t>(i) * 2 * n + n + i] = 1;
    }
    const auto pivots = rref_in_place(f, aug, n, 2 * n);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw DomainError("matrix is singular");
    FqMatrix out(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug[static_cast<size_t>(i) * 2 * n + n + j];
    return out;
}

FqMatrix FqMatrix::null_space() const {
    const Fq& f = field_;
    const Echelon e = rref();
    const int n = cols_;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;

    const int nullity = n - e.rank;
    FqMatrix basis(f, nullity, n);
    int out_row = 0;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        basis.at(out_row, free_col) = 1;
        for (int r = 0; r < e.rank; ++r)
            basis.at(out_row, e.pivots[static_cast<size_t>(r)]) = f.neg(e.reduced.at(r, free_col));
        ++out_row;
    }
    if (nullity == 0) return basis;
    // spanning set is one vector per free column; canonicalize
    std::vector<uint32_t> entries = basis.entries();
    rref_in_place(f, entries, nullity, n);
    FqMatrix out(f, nullity, n);
    for (int i = 0; i < nullity; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = entries[static_cast<size_t>(i) * n + j];
    return out;
}

std::string FqMatrix::to_text() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
    }
    return os.str();
}

FqMatrix FqMatrix::from_text(const Fq& field, const std::string& text) {
    std::vector<std::vector<uint32_t>> rows;
    std::stringstream row_stream(text);
    std::string row_text;
    while (std::getline(row_stream, row_text, ';')) {
        std::vector<uint32_t> row;
        std::istringstream entry_stream(row_text);
        std::string entry;
        while (entry_stream >> entry) {
            try {
                const unsigned long v = std::stoul(entry);
                if (v >= field.order()) throw UsageError("matrix entry " + entry + " outside field");
                row.push_back(static_cast<uint32_t>(v));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception&) {
                throw UsageError("bad matrix entry: " + entry);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw UsageError("empty matrix text");
    return from_rows(field, rows);
}

} // namespace ingraph
