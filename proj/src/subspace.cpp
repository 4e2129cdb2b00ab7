#include "ingraph/subspace.hpp"

#include <algorithm>

namespace ingraph {

Subspace Subspace::span(const FqMatrix& vectors) {
    Echelon e = vectors.rref();
    if (e.rank == 0) throw DomainError("span of zero vectors is the trivial subspace");
    FqMatrix basis(vectors.field(), e.rank, vectors.cols());
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < vectors.cols(); ++j) basis.at(i, j) = e.reduced.at(i, j);
    return Subspace(std::move(basis));
}

Subspace Subspace::span(const Fq& field, const std::vector<std::vector<uint32_t>>& rows) {
    return span(FqMatrix::from_rows(field, rows));
}

Subspace Subspace::from_rref_unchecked(FqMatrix basis) { return Subspace(std::move(basis)); }

bool Subspace::contains(std::span<const uint32_t> v) const {
    if (static_cast<int>(v.size()) != n_) throw UsageError("vector length does not match ambient dimension");
    const Fq& f = field();
    // reduce v against the RREF basis; zero remainder means membership
    std::vector<uint32_t> r(v.begin(), v.end());
    for (int i = 0; i < basis_.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j < n_; ++j)
            if (basis_.at(i, j) != 0) {
                pivot = j;
                break;
            }
        const uint32_t c = r[static_cast<size_t>(pivot)];
        if (c == 0) continue;
        for (int j = pivot; j < n_; ++j)
            r[static_cast<size_t>(j)] = f.sub(r[static_cast<size_t>(j)], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

std::string Subspace::packed_key() const {
    std::string key;
    key.reserve(2 + basis_.entries().size() * 3);
    key.push_back(static_cast<char>(dim()));
    key.push_back(static_cast<char>(n_));
    for (uint32_t e : basis_.entries()) {
        key.push_back(static_cast<char>(e & 0xff));
        key.push_back(static_cast<char>((e >> 8) & 0xff));
        key.push_back(static_cast<char>((e >> 16) & 0xff));
    }
    return key;
}

bool is_proper_subspace(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient() != outer.ambient())
        throw UsageError("subspaces live in different ambient spaces");
    if (inner.dim() >= outer.dim()) return false;
    for (int i = 0; i < inner.dim(); ++i)
        if (!outer.contains(inner.basis().row(i))) return false;
    return true;
}

Subspace perp(const Subspace& w) {
    FqMatrix kernel = w.basis().null_space();
    return Subspace::from_rref_unchecked(std::move(kernel));
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw UsageError("subspaces live in different ambient spaces");
    FqMatrix stacked(a.field(), a.dim() + b.dim(), a.ambient());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.ambient(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace::span(stacked);
}

std::vector<uint32_t> standard_form(const Fq& field, std::span<const uint32_t> v) {
    int lead = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0) throw DomainError("zero vector has no standard form");
    std::vector<uint32_t> out(v.begin(), v.end());
    const uint32_t scale = field.inv(v[static_cast<size_t>(lead)]);
    if (scale != 1)
        for (auto& x : out) x = field.mul(x, scale);
    return out;
}

namespace {

// next k-subset of [0, n) in lexicographic order; false when exhausted
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    return true;
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const Fq& field, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw UsageError("subspace dimension outside [0, n]");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::from_rref_unchecked(FqMatrix(field, 0, n)));
        return out;
    }
    const uint32_t q = field.order();

    std::vector<int> pivots(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<size_t>(i)] = i;
    do {
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

        // free cells in row-major order: row i may hold arbitrary values at
        // non-pivot columns right of its own pivot
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < k; ++i)
            for (int c = pivots[static_cast<size_t>(i)] + 1; c < n; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) free_cells.emplace_back(i, c);

        std::vector<uint32_t> fill(free_cells.size(), 0);
        while (true) {
            FqMatrix basis(field, k, n);
            for (int i = 0; i < k; ++i) basis.at(i, pivots[static_cast<size_t>(i)]) = 1;
            for (size_t t = 0; t < free_cells.size(); ++t)
                basis.at(free_cells[t].first, free_cells[t].second) = fill[t];
            out.push_back(Subspace::from_rref_unchecked(std::move(basis)));

            // odometer, last cell fastest
            bool wrapped = true;
            for (size_t t = free_cells.size(); t-- > 0;) {
                if (++fill[t] < q) {
                    wrapped = false;
                    break;
                }
                fill[t] = 0;
            }
            if (wrapped) break;
        }
    } while (next_combination(pivots, n));
    return out;
}

Subspace parse_subspace(const Fq& field, int n, const std::string& label) {
    FqMatrix m = FqMatrix::from_text(field, label);
    if (m.cols() != n)
        throw UsageError("subspace label has " + std::to_string(m.cols()) +
                         " columns, expected " + std::to_string(n));
    return Subspace::span(m);
}

} // namespace ingraph
