#include "ingraph/automorphisms.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ingraph {

VertexPerm compose(const VertexPerm& outer, const VertexPerm& inner) {
    if (outer.size() != inner.size()) throw UsageError("permutation sizes differ");
    VertexPerm out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

VertexPerm inverse_perm(const VertexPerm& p) {
    VertexPerm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return out;
}

VertexPerm identity_perm(int size) {
    VertexPerm out(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

namespace {

bool is_bijection(const VertexPerm& p, int v) {
    if (static_cast<int>(p.size()) != v) return false;
    std::vector<bool> seen(static_cast<size_t>(v), false);
    for (int x : p) {
        if (x < 0 || x >= v || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = true;
    }
    return true;
}

} // namespace

std::optional<std::pair<int, int>> find_adjacency_violation(const InclusionGraph& g,
                                                            const VertexPerm& p) {
    const int v = g.vertex_count();
    if (!is_bijection(p, v)) throw UsageError("permutation is not a bijection on the vertex set");
    for (int i = 0; i < v; ++i) {
        for (int j : g.neighbors(i))
            if (i < j && !g.adjacent(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]))
                return std::make_pair(i, j);
    }
    // a bijection that maps every edge to an edge also maps non-edges to
    // non-edges: the image of the edge set is the whole edge set
    return std::nullopt;
}

bool is_automorphism(const InclusionGraph& g, const VertexPerm& p) {
    if (static_cast<int>(p.size()) != g.vertex_count()) return false;
    if (!is_bijection(p, g.vertex_count())) return false;
    return !find_adjacency_violation(g, p).has_value();
}

namespace {

// image of the subspace with the given basis under v -> X v, canonicalized
Subspace transform_subspace(const FqMatrix& x, const Subspace& w) {
    const Fq& f = w.field();
    const int n = w.ambient();
    const int k = w.dim();
    FqMatrix rows(f, k, n);
    for (int r = 0; r < k; ++r) {
        const auto img = x.apply(w.basis().row(r));
        for (int c = 0; c < n; ++c) rows.at(r, c) = img[static_cast<size_t>(c)];
    }
    return Subspace::span(rows);
}

Subspace frobenius_subspace(const Subspace& w, unsigned t) {
    const Fq& f = w.field();
    FqMatrix rows = w.basis();
    for (int r = 0; r < rows.rows(); ++r)
        for (int c = 0; c < rows.cols(); ++c) rows.at(r, c) = f.frobenius(rows.at(r, c), t);
    return Subspace::span(rows);
}

} // namespace

VertexPerm perp_involution(const InclusionGraph& g) {
    VertexPerm out(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) out[static_cast<size_t>(i)] = g.index_of(perp(g.vertex(i)));
    return out;
}

VertexPerm matrix_action(const InclusionGraph& g, const FqMatrix& x) {
    if (x.rows() != g.ambient() || x.cols() != g.ambient())
        throw UsageError("matrix size does not match the ambient dimension");
    if (!x.invertible()) throw DomainError("matrix action needs an invertible matrix");
    VertexPerm out(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        out[static_cast<size_t>(i)] = g.index_of(transform_subspace(x, g.vertex(i)));
    return out;
}

VertexPerm frobenius_action(const InclusionGraph& g, unsigned t) {
    if (t >= g.field().degree()) throw UsageError("Frobenius exponent outside [0, m)");
    VertexPerm out(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        out[static_cast<size_t>(i)] = g.index_of(frobenius_subspace(g.vertex(i), t));
    return out;
}

FqMatrix normalize_projective(const FqMatrix& x) {
    const Fq& f = x.field();
    uint32_t lead = 0;
    for (uint32_t e : x.entries())
        if (e != 0) {
            lead = e;
            break;
        }
    if (lead == 0) throw DomainError("zero matrix has no projective representative");
    if (lead == 1) return x;
    const uint32_t scale = f.inv(lead);
    FqMatrix out = x;
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = f.mul(out.at(i, j), scale);
    return out;
}

VertexPerm to_vertex_perm(const InclusionGraph& g, const StandardAutomorphism& s) {
    VertexPerm perm = compose(matrix_action(g, s.matrix), frobenius_action(g, s.frob));
    if (s.dual) perm = compose(perp_involution(g), perm);
    return perm;
}

unsigned long long automorphism_group_order(int n, uint32_t p, unsigned m) {
    if (n < 2) throw UsageError("automorphism group order needs ambient dimension >= 2");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    auto checked_mul = [](unsigned long long a, unsigned long long b) {
        unsigned long long r = 0;
        if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("64-bit overflow in group order");
        return r;
    };
    if (n == 2) {
        // edgeless graph on q+1 vertices: the full symmetric group
        unsigned long long order = 1;
        for (unsigned long long i = 2; i <= q + 1; ++i) order = checked_mul(order, i);
        return order;
    }
    unsigned long long gl = 1;
    unsigned long long qn = 1;
    for (int i = 0; i < n; ++i) qn = checked_mul(qn, q);
    unsigned long long qi = 1;
    for (int i = 0; i < n; ++i) {
        gl = checked_mul(gl, qn - qi);
        qi = checked_mul(qi, q);
    }
    const unsigned long long pgl = gl / (q - 1);
    return checked_mul(checked_mul(2ULL, pgl), m);
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

Decomposer::Decomposer(const InclusionGraph& g) : g_(&g) {
    perp_perm_ = perp_involution(g);
    const unsigned m = g.field().degree();
    frob_perms_.reserve(m);
    for (unsigned t = 0; t < m; ++t) frob_perms_.push_back(frobenius_action(g, t));

    const Fq& f = g.field();
    const int n = g.ambient();
    unit_vertices_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        FqMatrix row(f, 1, n);
        row.at(0, i) = 1;
        unit_vertices_[static_cast<size_t>(i)] = g.index_of(Subspace::from_rref_unchecked(std::move(row)));
    }
}

VertexPerm Decomposer::to_perm(const StandardAutomorphism& s) const {
    VertexPerm perm = compose(matrix_action(*g_, s.matrix), frob_perms_[s.frob]);
    if (s.dual) perm = compose(perp_perm_, perm);
    return perm;
}

// the running map is (matrix `partial`) ∘ sigma1; returns the standard-form
// spanning vector of its image of the given 1-dimensional vertex
std::vector<uint32_t> Decomposer::image_of_line(const VertexPerm& sigma1, const FqMatrix& partial,
                                                int line_vertex) const {
    const int image_vertex = sigma1[static_cast<size_t>(line_vertex)];
    const Subspace& image = g_->vertex(image_vertex);
    if (image.dim() != 1)
        throw IntegrityError("image of a 1-dimensional vertex has dimension " +
                             std::to_string(image.dim()));
    return standard_form(g_->field(), partial.apply(image.basis().row(0)));
}

Decomposition Decomposer::decompose(const VertexPerm& sigma, bool check_all_pairs) const {
    const InclusionGraph& g = *g_;
    const Fq& f = g.field();
    const int n = g.ambient();
    const unsigned m = f.degree();
    const uint32_t q = f.order();

    if (n < 3)
        throw UnsupportedError("decomposition is only defined for ambient dimension >= 3");
    if (const auto violation = find_adjacency_violation(g, sigma)) {
        const auto [i, j] = *violation;
        throw UsageError("not an automorphism: vertices " + std::to_string(i) + " (" +
                         g.vertex(i).label() + ") and " + std::to_string(j) + " (" +
                         g.vertex(j).label() + ") are adjacent but their images are not");
    }

    // 1: the image of the first coordinate line has dimension 1 or n-1;
    //    in the second case compose with the involution once
    const int first_line = unit_vertices_[0];
    const int image_dim = g.dim_of(sigma[static_cast<size_t>(first_line)]);
    bool dual = false;
    VertexPerm sigma1 = sigma;
    if (image_dim == n - 1) {
        dual = true;
        sigma1 = compose(perp_perm_, sigma);
    } else if (image_dim != 1) {
        throw IntegrityError("image of a coordinate line has dimension " +
                             std::to_string(image_dim) + ", expected 1 or n-1");
    }
    // once one line maps to a line, every dimension must be preserved
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.dim_of(sigma1[static_cast<size_t>(v)]) != g.dim_of(v))
            throw IntegrityError("dimension not preserved at vertex " + std::to_string(v));

    // 2: build an invertible matrix whose action pulls the image of every
    //    coordinate line back to that line, one coordinate at a time
    FqMatrix fixing = FqMatrix::identity(f, n);
    for (int k = 0; k < n; ++k) {
        const auto alpha = image_of_line(sigma1, fixing, unit_vertices_[static_cast<size_t>(k)]);
        FqMatrix step(f, n, n);
        if (alpha[static_cast<size_t>(k)] != 0) {
            const uint32_t scale = f.inv(alpha[static_cast<size_t>(k)]);
            step = FqMatrix::identity(f, n);
            for (int i = 0; i < n; ++i) {
                if (i == k) continue;
                step.at(i, k) = f.neg(f.mul(scale, alpha[static_cast<size_t>(i)]));
            }
        } else {
            int swap_with = -1;
            for (int i = k + 1; i < n; ++i)
                if (alpha[static_cast<size_t>(i)] != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with < 0)
                throw IntegrityError("image vector vanishes on all coordinates >= " + std::to_string(k));
            const uint32_t scale = f.inv(alpha[static_cast<size_t>(swap_with)]);
            FqMatrix clear = FqMatrix::identity(f, n);
            for (int i = 0; i < n; ++i) {
                if (i == k || i == swap_with) continue;
                clear.at(i, k) = f.neg(f.mul(scale, alpha[static_cast<size_t>(i)]));
            }
            step = clear * FqMatrix::transposition(f, n, k, swap_with);
        }
        fixing = step * fixing;
    }
    for (int k = 0; k < n; ++k) {
        const auto fixed = image_of_line(sigma1, fixing, unit_vertices_[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i)
            if (fixed[static_cast<size_t>(i)] != (i == k ? 1u : 0u))
                throw IntegrityError("coordinate line " + std::to_string(k) + " not fixed after stage 2");
    }

    DecompositionTrace trace{fixing, FqMatrix::identity(f, n), 0, {}};

    // 3: transition values. The current map sends [e_i + a e_j] to
    //    [e_i + b e_j]; record b and insist on the zero pattern.
    auto sample = [&](int i, int j, uint32_t a) -> uint32_t {
        FqMatrix row(f, 1, n);
        row.at(0, i) = 1;
        row.at(0, j) = a;
        const int v = g.index_of(Subspace::from_rref_unchecked(std::move(row)));
        const auto image = image_of_line(sigma1, fixing, v);
        uint32_t b = 0;
        for (int c = 0; c < n; ++c) {
            const uint32_t e = image[static_cast<size_t>(c)];
            if (c == i) {
                if (e != 1) throw IntegrityError("transition image is not in standard unit form");
            } else if (c == j) {
                b = e;
            } else if (e != 0) {
                throw IntegrityError("transition image has a spurious nonzero coordinate");
            }
        }
        if ((a == 0) != (b == 0))
            throw IntegrityError("zero pattern not preserved by the line transition");
        trace.f_samples[{i + 1, j + 1, a}] = b;  // 1-based coordinate pair
        return b;
    };

    // 4: the normalized transition a -> f12(a)/f12(1) must be a Frobenius
    //    power; identify it on a generator, then verify on every element
    const uint32_t f12_1 = sample(0, 1, 1);
    std::vector<uint32_t> field_map(q);
    const uint32_t f12_1_inv = f.inv(f12_1);
    for (uint32_t a = 0; a < q; ++a) field_map[a] = f.mul(sample(0, 1, a), f12_1_inv);

    std::optional<unsigned> frob_exp;
    const uint32_t gen = f.generator();
    for (unsigned t = 0; t < m; ++t)
        if (field_map[gen] == f.frobenius(gen, t)) {
            frob_exp = t;
            break;
        }
    if (!frob_exp)
        throw IntegrityError("recovered field map does not match any Frobenius power on a generator");
    for (uint32_t a = 0; a < q; ++a)
        if (field_map[a] != f.frobenius(a, *frob_exp))
            throw IntegrityError("recovered field map deviates from the Frobenius power at " +
                                 std::to_string(a));
    trace.frob = *frob_exp;

    // 5: diagonal rescaling from the f_{1j}(1) values
    std::vector<uint32_t> diag(static_cast<size_t>(n), 1);
    for (int j = 1; j < n; ++j) diag[static_cast<size_t>(j)] = f.inv(sample(0, j, 1));
    trace.diagonal = FqMatrix::diagonal(f, diag);

    if (check_all_pairs) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const uint32_t unit = sample(i, j, 1);
                for (uint32_t a = 0; a < q; ++a)
                    if (sample(i, j, a) != f.mul(f.frobenius(a, *frob_exp), unit))
                        throw IntegrityError("transition table deviates from the recovered field map");
            }
    }

    // 6: with the rescaling applied and the Frobenius undone, the remaining
    //    map must fix every vertex, not just the coordinate lines
    const FqMatrix rescaled = trace.diagonal * fixing;
    const unsigned frob_inv = (m - *frob_exp) % m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Subspace& image = g.vertex(sigma1[static_cast<size_t>(v)]);
        Subspace back = transform_subspace(rescaled, image);
        if (frob_inv != 0) back = frobenius_subspace(back, frob_inv);
        if (!(back == g.vertex(v)))
            throw IntegrityError("residual map moves vertex " + std::to_string(v));
    }

    StandardAutomorphism standard{dual, normalize_projective(rescaled.inverse()), *frob_exp};
    return {std::move(standard), std::move(trace)};
}

Decomposition decompose(const InclusionGraph& g, const VertexPerm& sigma) {
    return Decomposer(g).decompose(sigma);
}

StandardAutomorphism random_standard_automorphism(const InclusionGraph& g, std::mt19937_64& rng) {
    const Fq& f = g.field();
    const int n = g.ambient();
    std::uniform_int_distribution<uint32_t> entry(0, f.order() - 1);
    FqMatrix x(f, n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x.at(i, j) = entry(rng);
    } while (!x.invertible());
    const bool dual = (rng() & 1) != 0;
    const unsigned frob = static_cast<unsigned>(rng() % f.degree());
    return {dual, normalize_projective(x), frob};
}

void write_permutation(std::ostream& os, const InclusionGraph& g, const VertexPerm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        os << g.vertex(static_cast<int>(i)).label() << " -> "
           << g.vertex(p[i]).label() << '\n';
}

VertexPerm read_permutation(std::istream& is, const InclusionGraph& g) {
    const int v = g.vertex_count();
    VertexPerm perm(static_cast<size_t>(v), -1);
    std::vector<bool> assigned(static_cast<size_t>(v), false);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        int src = -1, dst = -1;
        const auto arrow = line.find("->");
        if (arrow != std::string::npos) {
            const std::string from = line.substr(0, arrow);
            const std::string to = line.substr(arrow + 2);
            src = g.index_of(parse_subspace(g.field(), g.ambient(), from));
            dst = g.index_of(parse_subspace(g.field(), g.ambient(), to));
        } else {
            std::istringstream ss(line);
            if (!(ss >> src >> dst))
                throw UsageError("line " + std::to_string(line_no) +
                                 ": expected \"label -> label\" or \"i j\"");
            if (src < 0 || src >= v || dst < 0 || dst >= v)
                throw UsageError("line " + std::to_string(line_no) + ": vertex index out of range");
        }
        if (assigned[static_cast<size_t>(src)])
            throw UsageError("line " + std::to_string(line_no) + ": source vertex mapped twice");
        assigned[static_cast<size_t>(src)] = true;
        perm[static_cast<size_t>(src)] = dst;
    }
    for (int i = 0; i < v; ++i)
        if (perm[static_cast<size_t>(i)] < 0)
            throw UsageError("permutation file does not map vertex " + std::to_string(i));
    return perm;
}

} // namespace ingraph
