// Command-line front end: build and export subspace inclusion graphs,
// verify their structural invariants, enumerate automorphisms by brute
// force, and factor automorphisms into standard form.
//
// Exit status: 0 all checks passed, 1 a mathematical check failed,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ingraph/automorphisms.hpp"
#include "ingraph/bruteforce.hpp"
#include "ingraph/graph.hpp"

namespace {

using namespace ingraph;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string field_spec = "2^1";
    int n = 3;
    std::string out_dir = ".";
    std::string perm_file;
    std::string json_file;
    std::string edges_file;
    unsigned long long seed = 1;
    int oracle_budget = 100;
    unsigned long long limit = 0;  // 0 = no limit
    unsigned long long emit = 0;
    bool dot = false;
    bool check_all_pairs = false;
};

struct Claim {
    std::string name;
    std::string expected;
    std::string actual;
    std::string status;  // pass / fail / skip
};

void print_claims(const std::vector<Claim>& claims) {
    for (const auto& c : claims)
        std::cout << c.name << '\t' << c.expected << '\t' << c.actual << '\t' << c.status << '\n';
}

void write_claims_json(const std::string& path, const Fq& field, int n,
                       const std::vector<Claim>& claims) {
    nlohmann::json doc;
    doc["field"] = field.to_string();
    doc["n"] = n;
    doc["claims"] = nlohmann::json::array();
    for (const auto& c : claims)
        doc["claims"].push_back({{"claim", c.name},
                                 {"expected", c.expected},
                                 {"actual", c.actual},
                                 {"status", c.status}});
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << doc.dump(2) << '\n';
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "inf"; }

int cmd_build(const Options& opt) {
    const Fq field = Fq::parse(opt.field_spec);
    const InclusionGraph g(field, opt.n);

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);

    {
        std::ofstream out(dir / "vertices.tsv");
        if (!out) throw UsageError("cannot write vertex table in " + opt.out_dir);
        g.write_vertex_table(out);
    }
    {
        std::ofstream out(dir / "edges.txt");
        if (!out) throw UsageError("cannot write edge list in " + opt.out_dir);
        g.write_edge_list(out);
    }
    if (opt.dot) {
        std::ofstream out(dir / "graph.dot");
        if (!out) throw UsageError("cannot write dot file in " + opt.out_dir);
        g.write_dot(out);
    }
    std::cout << "vertices\t" << g.vertex_count() << "\nedges\t" << g.edge_count() << '\n';
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const Fq field = Fq::parse(opt.field_spec);
    const int n = opt.n;
    const unsigned long long q = field.order();
    const InclusionGraph g(field, n);
    std::vector<Claim> claims;

    auto check = [&](const std::string& name, const std::string& expected,
                     const std::string& actual) {
        claims.push_back({name, expected, actual, expected == actual ? "pass" : "fail"});
    };

    unsigned long long expected_vertices = 0;
    for (int k = 1; k <= n - 1; ++k) expected_vertices += gaussian_binomial(n, k, q);
    check("vertex-count", std::to_string(expected_vertices), std::to_string(g.vertex_count()));

    unsigned long long degree_sum = 0;
    for (int k = 1; k <= n - 1; ++k)
        degree_sum += gaussian_binomial(n, k, q) * expected_degree(n, k, q);
    check("edge-count", std::to_string(degree_sum / 2), std::to_string(g.edge_count()));

    for (int k = 1; k <= n - 1; ++k) {
        const unsigned long long want = expected_degree(n, k, q);
        bool all_match = true;
        unsigned long long seen = want;
        for (int i = 0; i < g.vertex_count(); ++i)
            if (g.dim_of(i) == k &&
                static_cast<unsigned long long>(g.neighbors(i).size()) != want) {
                all_match = false;
                seen = g.neighbors(i).size();
                break;
            }
        check("degree-dim-" + std::to_string(k), std::to_string(want),
              all_match ? std::to_string(want) : std::to_string(seen));
    }

    const GraphInvariants inv = graph_invariants(g);
    if (n >= 3) {
        check("diameter", "3", show(inv.diameter));
        check("clique-number", std::to_string(n - 1), std::to_string(inv.clique_number));

        const bool girth_ok = !inv.girth || *inv.girth == 3 || *inv.girth == 6;
        claims.push_back({"girth-in-{3,6,inf}", "member", show(inv.girth),
                          girth_ok ? "pass" : "fail"});

        const auto colors = dimension_coloring(g);
        bool proper = true;
        for (int i = 0; i < g.vertex_count() && proper; ++i)
            for (int j : g.neighbors(i))
                if (colors[static_cast<size_t>(i)] == colors[static_cast<size_t>(j)]) {
                    proper = false;
                    break;
                }
        check("dimension-coloring-proper", "true", proper ? "true" : "false");
        std::vector<int> palette = colors;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        check("coloring-size", std::to_string(n - 1), std::to_string(palette.size()));
    } else {
        check("edgeless", "0", std::to_string(g.edge_count()));
        check("diameter", "inf", show(inv.diameter));
        check("girth", "inf", show(inv.girth));
    }

    const unsigned long long order =
        automorphism_group_order(n, field.characteristic(), field.degree());
    if (g.vertex_count() <= opt.oracle_budget) {
        AutEnumOptions eopts;
        eopts.store = false;
        const auto res = enumerate_automorphisms(g.adjacency_lists(), eopts);
        check("aut-order", std::to_string(order), std::to_string(res.count));
    } else {
        claims.push_back({"aut-order", std::to_string(order), "-", "skip"});
    }

    print_claims(claims);
    if (!opt.json_file.empty()) write_claims_json(opt.json_file, field, n, claims);

    for (const auto& c : claims)
        if (c.status == "fail") return kExitCheckFailed;
    return kExitOk;
}

int cmd_decompose(const Options& opt) {
    const Fq field = Fq::parse(opt.field_spec);
    const InclusionGraph g(field, opt.n);

    std::ifstream in(opt.perm_file);
    if (!in) throw UsageError("cannot read permutation file " + opt.perm_file);
    const VertexPerm sigma = read_permutation(in, g);

    if (const auto violation = find_adjacency_violation(g, sigma)) {
        const auto [i, j] = *violation;
        std::cerr << "not an automorphism: vertices " << i << " (" << g.vertex(i).label()
                  << ") and " << j << " (" << g.vertex(j).label()
                  << ") are adjacent but their images " << sigma[static_cast<size_t>(i)]
                  << " and " << sigma[static_cast<size_t>(j)] << " are not\n";
        return kExitCheckFailed;
    }

    const Decomposer decomposer(g);
    const Decomposition dec = decomposer.decompose(sigma, opt.check_all_pairs);
    const bool verified = decomposer.to_perm(dec.standard) == sigma;

    std::cout << "delta\t" << (dec.standard.dual ? 1 : 0) << '\n'
              << "frobenius\t" << dec.standard.frob << '\n'
              << "matrix\t" << dec.standard.matrix.to_text() << '\n'
              << "verified\t" << (verified ? "true" : "false") << '\n';
    return verified ? kExitOk : kExitCheckFailed;
}

int cmd_random_auto(const Options& opt) {
    const Fq field = Fq::parse(opt.field_spec);
    if (opt.n < 3) throw UsageError("random automorphisms in standard form need --n >= 3");
    const InclusionGraph g(field, opt.n);

    std::mt19937_64 rng(opt.seed);
    const StandardAutomorphism s = random_standard_automorphism(g, rng);
    const VertexPerm perm = to_vertex_perm(g, s);

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const fs::path path = fs::path(opt.out_dir) / "random-auto.perm";
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path.string());
    out << "# field " << field.to_string() << " n " << opt.n << " seed " << opt.seed << '\n';
    out << "# delta " << (s.dual ? 1 : 0) << '\n';
    out << "# frobenius " << s.frob << '\n';
    out << "# matrix " << s.matrix.to_text() << '\n';
    write_permutation(out, g, perm);

    std::cout << "delta\t" << (s.dual ? 1 : 0) << '\n'
              << "frobenius\t" << s.frob << '\n'
              << "matrix\t" << s.matrix.to_text() << '\n'
              << "file\t" << path.string() << '\n';
    return kExitOk;
}

std::vector<std::vector<int>> read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read edge list " + path);
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1, a = 0, b = 0;
    while (in >> a >> b) {
        if (a < 0 || b < 0) throw UsageError("negative vertex index in " + path);
        edges.emplace_back(a, b);
        max_vertex = std::max({max_vertex, a, b});
    }
    std::vector<std::vector<int>> adj(static_cast<size_t>(max_vertex + 1));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

int cmd_aut_count(const Options& opt) {
    std::vector<std::vector<int>> adjacency;
    if (!opt.edges_file.empty()) {
        adjacency = read_edge_list(opt.edges_file);
    } else {
        const Fq field = Fq::parse(opt.field_spec);
        adjacency = InclusionGraph(field, opt.n).adjacency_lists();
    }

    AutEnumOptions eopts;
    eopts.store = opt.emit > 0;
    if (opt.limit > 0) eopts.limit = opt.limit;
    const auto res = enumerate_automorphisms(adjacency, eopts);
    std::cout << "aut-count\t" << res.count << (res.truncated ? "\ttruncated" : "") << '\n';

    if (opt.emit > 0) {
        namespace fs = std::filesystem;
        fs::create_directories(opt.out_dir);
        const unsigned long long n_files =
            std::min<unsigned long long>(opt.emit, res.perms.size());
        for (unsigned long long i = 0; i < n_files; ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "aut-%06llu.perm", i);
            std::ofstream out(fs::path(opt.out_dir) / name);
            if (!out) throw UsageError("cannot write permutation files in " + opt.out_dir);
            const auto& perm = res.perms[static_cast<size_t>(i)];
            for (size_t v = 0; v < perm.size(); ++v) out << v << ' ' << perm[v] << '\n';
        }
        std::cout << "emitted\t" << n_files << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace inclusion graphs over finite fields"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field_spec, "field as p^m or p^m:c0,c1,...,cm")
            ->capture_default_str();
        sub->add_option("--n", opt.n, "ambient dimension")->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "build the graph and export its files");
    add_common(build);
    build->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    build->add_flag("--dot", opt.dot, "also write graph.dot");

    CLI::App* verify = app.add_subcommand("verify", "check structural invariants and group order");
    add_common(verify);
    verify->add_option("--limit", opt.oracle_budget,
                       "skip the brute-force order check above this many vertices")
        ->capture_default_str();
    verify->add_option("--json", opt.json_file, "also write the report as JSON");

    CLI::App* dec = app.add_subcommand("decompose", "factor an automorphism into standard form");
    add_common(dec);
    dec->add_option("--perm", opt.perm_file, "permutation file")->required();
    dec->add_flag("--check-all-pairs", opt.check_all_pairs,
                  "sample and verify every coordinate transition value");

    CLI::App* rnd = app.add_subcommand("random-auto", "sample a random standard automorphism");
    add_common(rnd);
    rnd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    rnd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();

    CLI::App* cnt = app.add_subcommand("aut-count", "count automorphisms by brute force");
    add_common(cnt);
    cnt->add_option("--limit", opt.limit, "stop after this many (0 = exhaustive)")
        ->capture_default_str();
    cnt->add_option("--edges", opt.edges_file,
                    "count a plain edge-list graph instead of building one");
    cnt->add_option("--emit", opt.emit, "write the first N automorphisms as permutation files");
    cnt->add_option("--out", opt.out_dir, "output directory for --emit")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (dec->parsed()) return cmd_decompose(opt);
        if (rnd->parsed()) return cmd_random_auto(opt);
        if (cnt->parsed()) return cmd_aut_count(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
