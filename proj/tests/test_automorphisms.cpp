#include <doctest.h>

#include <random>
#include <sstream>

#include "ingraph/automorphisms.hpp"

using namespace ingraph;

TEST_SUITE("automorphisms") {

TEST_CASE("perp involution") {
    for (const auto& [field, n] : std::vector<std::pair<Fq, int>>{{Fq(2, 1), 3}, {Fq(2, 1), 4},
                                                                  {Fq(3, 1), 3}, {Fq(2, 2), 3}}) {
        const InclusionGraph g(field, n);
        const auto tau = perp_involution(g);
        CHECK(is_automorphism(g, tau));
        CHECK(compose(tau, tau) == identity_perm(g.vertex_count()));
        for (int i = 0; i < g.vertex_count(); ++i)
            CHECK(g.dim_of(tau[static_cast<size_t>(i)]) == n - g.dim_of(i));
    }
}

TEST_CASE("matrix action") {
    const Fq f2(2, 1);
    const InclusionGraph g(f2, 3);

    CHECK(matrix_action(g, FqMatrix::identity(f2, 3)) == identity_perm(14));

    const auto swap01 = FqMatrix::transposition(f2, 3, 0, 1);
    const auto perm = matrix_action(g, swap01);
    CHECK(is_automorphism(g, perm));
    const int e1 = g.index_of(Subspace::span(f2, {{1, 0, 0}}));
    const int e2 = g.index_of(Subspace::span(f2, {{0, 1, 0}}));
    const int e12 = g.index_of(Subspace::span(f2, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(perm[static_cast<size_t>(e1)] == e2);
    CHECK(perm[static_cast<size_t>(e2)] == e1);
    CHECK(perm[static_cast<size_t>(e12)] == e12);

    const auto singular = FqMatrix::from_rows(f2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(matrix_action(g, singular), DomainError);
}

TEST_CASE("scalar matrices act trivially") {
    for (const Fq& f : {Fq(2, 2), Fq(5, 1)}) {
        const InclusionGraph g(f, 3);
        for (uint32_t c = 1; c < f.order(); ++c) {
            auto scalar = FqMatrix::identity(f, 3);
            for (int i = 0; i < 3; ++i) scalar.at(i, i) = c;
            CHECK(matrix_action(g, scalar) == identity_perm(g.vertex_count()));
        }
    }
}

TEST_CASE("frobenius action") {
    const Fq f4(2, 2);
    const InclusionGraph g(f4, 3);
    CHECK(frobenius_action(g, 0) == identity_perm(g.vertex_count()));
    CHECK_THROWS_AS(frobenius_action(g, 2), UsageError);

    const auto chi = frobenius_action(g, 1);
    CHECK(is_automorphism(g, chi));
    // fixes subspaces with bases over the prime field
    const int e1 = g.index_of(Subspace::span(f4, {{1, 0, 0}}));
    CHECK(chi[static_cast<size_t>(e1)] == e1);
    // moves [e_1 + x e_2] to [e_1 + (x+1) e_2]: the Frobenius of F_4 swaps 2 and 3
    const int src = g.index_of(Subspace::span(f4, {{1, 2, 0}}));
    const int dst = g.index_of(Subspace::span(f4, {{1, 3, 0}}));
    CHECK(chi[static_cast<size_t>(src)] == dst);

    const InclusionGraph gp(Fq(5, 1), 3);
    CHECK(frobenius_action(gp, 0) == identity_perm(gp.vertex_count()));
}

TEST_CASE("standard form composes right to left") {
    for (const Fq& field : {Fq(2, 1), Fq(2, 2)}) {
        const InclusionGraph g(field, 3);
        std::mt19937_64 rng(17);
        CHECK(to_vertex_perm(g, {false, FqMatrix::identity(field, 3), 0}) ==
              identity_perm(g.vertex_count()));
        CHECK(to_vertex_perm(g, {true, FqMatrix::identity(field, 3), 0}) == perp_involution(g));
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = random_standard_automorphism(g, rng);
            VertexPerm manual = compose(matrix_action(g, s.matrix), frobenius_action(g, s.frob));
            if (s.dual) manual = compose(perp_involution(g), manual);
            CHECK(to_vertex_perm(g, s) == manual);
            CHECK(is_automorphism(g, manual));
        }
    }
}

TEST_CASE("is_automorphism") {
    const Fq f2(2, 1);
    const InclusionGraph g(f2, 3);
    CHECK(is_automorphism(g, identity_perm(14)));

    // swapping two lines while fixing everything else breaks an inclusion
    const int a = g.index_of(Subspace::span(f2, {{1, 0, 0}}));
    const int b = g.index_of(Subspace::span(f2, {{0, 1, 0}}));
    auto bad = identity_perm(14);
    std::swap(bad[static_cast<size_t>(a)], bad[static_cast<size_t>(b)]);
    CHECK_FALSE(is_automorphism(g, bad));
    const auto violation = find_adjacency_violation(g, bad);
    REQUIRE(violation.has_value());
    CHECK(g.adjacent(violation->first, violation->second));

    CHECK_FALSE(is_automorphism(g, VertexPerm(14, 0)));       // not a bijection
    CHECK_FALSE(is_automorphism(g, identity_perm(13)));       // wrong size

    // every permutation of the edgeless n=2 graph is an automorphism
    const InclusionGraph iso(f2, 2);
    VertexPerm p = identity_perm(3);
    int count = 0;
    do {
        CHECK(is_automorphism(iso, p));
        ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(count == 6);
}

TEST_CASE("projective normalization") {
    const Fq f3(3, 1), f4(2, 2);
    const auto id3 = FqMatrix::identity(f3, 3);
    CHECK(normalize_projective(id3) == id3);

    auto twice = id3;
    for (int i = 0; i < 3; ++i) twice.at(i, i) = 2;
    CHECK(normalize_projective(twice) == id3);

    std::mt19937_64 rng(19);
    std::uniform_int_distribution<uint32_t> entry(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        FqMatrix x(f4, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x.at(i, j) = entry(rng);
        if (x.is_zero()) continue;
        const auto norm = normalize_projective(x);
        CHECK(normalize_projective(norm) == norm);
        for (uint32_t c = 1; c < 4; ++c) {
            FqMatrix scaled = x;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) scaled.at(i, j) = f4.mul(scaled.at(i, j), c);
            CHECK(normalize_projective(scaled) == norm);
        }
    }
    CHECK_THROWS_AS(normalize_projective(FqMatrix(f3, 2, 2)), DomainError);
}

TEST_CASE("group order") {
    CHECK(automorphism_group_order(3, 2, 1) == 336);
    CHECK(automorphism_group_order(4, 2, 1) == 40320);
    CHECK(automorphism_group_order(3, 3, 1) == 11232);
    CHECK(automorphism_group_order(3, 2, 2) == 241920);
    CHECK(automorphism_group_order(2, 2, 1) == 6);
    CHECK(automorphism_group_order(2, 3, 1) == 24);
    CHECK_THROWS_AS(automorphism_group_order(1, 2, 1), UsageError);
}

TEST_CASE("decompose: identities") {
    const InclusionGraph g(Fq(2, 1), 3);
    const Decomposer dec(g);

    const auto id = dec.decompose(identity_perm(14));
    CHECK_FALSE(id.standard.dual);
    CHECK(id.standard.frob == 0);
    CHECK(id.standard.matrix.is_identity());

    const auto inv = dec.decompose(perp_involution(g));
    CHECK(inv.standard.dual);
    CHECK(inv.standard.frob == 0);
    CHECK(inv.standard.matrix.is_identity());
}

TEST_CASE("decompose: errors") {
    const Fq f2(2, 1);
    const InclusionGraph flat(f2, 2);
    CHECK_THROWS_AS(Decomposer(flat).decompose(identity_perm(3)), UnsupportedError);

    const InclusionGraph g(f2, 3);
    const Decomposer dec(g);
    auto bad = identity_perm(14);
    std::swap(bad[0], bad[1]);  // two vertices of equal dimension
    CHECK_THROWS_AS(dec.decompose(bad), UsageError);
    CHECK_THROWS_AS(dec.decompose(identity_perm(13)), UsageError);
}

TEST_CASE("decompose: round-trip on random standard automorphisms") {
    std::mt19937_64 rng(29);
    for (const auto& [field, n] : std::vector<std::pair<Fq, int>>{{Fq(2, 1), 3}, {Fq(3, 1), 3},
                                                                  {Fq(2, 2), 3}, {Fq(2, 1), 4}}) {
        const InclusionGraph g(field, n);
        const Decomposer dec(g);
        for (int trial = 0; trial < 25; ++trial) {
            const auto s = random_standard_automorphism(g, rng);
            const auto perm = dec.to_perm(s);
            const auto result = dec.decompose(perm);
            CHECK(result.standard.dual == s.dual);
            CHECK(result.standard.frob == s.frob);
            CHECK(result.standard.matrix == s.matrix);  // both sides normalized
            CHECK(dec.to_perm(result.standard) == perm);
        }
    }
}

TEST_CASE("decompose: trace invariants and full transition check") {
    const Fq f4(2, 2);
    const InclusionGraph g(f4, 3);
    const Decomposer dec(g);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = random_standard_automorphism(g, rng);
        const auto result = dec.decompose(dec.to_perm(s), /*check_all_pairs=*/true);
        for (const auto& [key, value] : result.trace.f_samples) {
            const auto [i, j, a] = key;
            CHECK(i < j);
            if (a == 0) CHECK(value == 0);
            if (a == 1) CHECK(value != 0);
        }
        CHECK((result.trace.diagonal * result.trace.fixing).invertible());

        // the normalized transition map is additive and multiplicative on
        // every pair, rebuilt here straight from the samples
        const uint32_t unit_inv = f4.inv(result.trace.f_samples.at({1, 2, 1}));
        std::vector<uint32_t> fmap(f4.order());
        for (uint32_t a = 0; a < f4.order(); ++a)
            fmap[a] = f4.mul(result.trace.f_samples.at({1, 2, a}), unit_inv);
        for (uint32_t a = 0; a < f4.order(); ++a)
            for (uint32_t b = 0; b < f4.order(); ++b) {
                CHECK(fmap[f4.add(a, b)] == f4.add(fmap[a], fmap[b]));
                CHECK(fmap[f4.mul(a, b)] == f4.mul(fmap[a], fmap[b]));
            }
    }
}

TEST_CASE("conjugating a matrix action by the involution inverts and transposes") {
    std::mt19937_64 rng(43);
    for (const auto& [field, n] : std::vector<std::pair<Fq, int>>{{Fq(2, 1), 3}, {Fq(3, 1), 3}}) {
        const InclusionGraph g(field, n);
        const auto tau = perp_involution(g);
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = random_standard_automorphism(g, rng);
            const auto conj = compose(tau, compose(matrix_action(g, s.matrix), tau));
            CHECK(conj == matrix_action(g, s.matrix.inverse().transpose()));
        }
        // and generally differs from the plain action: a shear is a witness
        auto shear = FqMatrix::identity(field, n);
        shear.at(0, 1) = 1;
        const auto conj = compose(tau, compose(matrix_action(g, shear), tau));
        CHECK(conj != matrix_action(g, shear));
    }
}

TEST_CASE("permutation files") {
    const Fq f2(2, 1);
    const InclusionGraph g(f2, 3);
    std::mt19937_64 rng(47);
    const auto perm = to_vertex_perm(g, random_standard_automorphism(g, rng));

    std::ostringstream out;
    write_permutation(out, g, perm);
    std::istringstream in(out.str());
    CHECK(read_permutation(in, g) == perm);

    // index-pair format with comments and blank lines
    std::ostringstream pairs;
    pairs << "# index pairs\n\n";
    for (size_t i = 0; i < perm.size(); ++i) pairs << i << ' ' << perm[i] << '\n';
    std::istringstream in2(pairs.str());
    CHECK(read_permutation(in2, g) == perm);

    std::istringstream missing("0 1\n");
    CHECK_THROWS_AS(read_permutation(missing, g), UsageError);
    std::istringstream twice("0 1\n0 2\n");
    CHECK_THROWS_AS(read_permutation(twice, g), UsageError);
    std::istringstream out_of_range("0 99\n");
    CHECK_THROWS_AS(read_permutation(out_of_range, g), UsageError);
    std::istringstream garbage("what\n");
    CHECK_THROWS_AS(read_permutation(garbage, g), UsageError);
}

TEST_CASE("random standard automorphisms are valid and seed-deterministic") {
    const Fq f3(3, 1);
    const InclusionGraph g(f3, 3);
    std::mt19937_64 rng_a(123), rng_b(123);
    const auto sa = random_standard_automorphism(g, rng_a);
    const auto sb = random_standard_automorphism(g, rng_b);
    CHECK(sa.dual == sb.dual);
    CHECK(sa.frob == sb.frob);
    CHECK(sa.matrix == sb.matrix);
    CHECK(is_automorphism(g, to_vertex_perm(g, sa)));
    CHECK(sa.matrix.invertible());
}

} // TEST_SUITE
