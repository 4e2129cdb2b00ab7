#include "ingraph/bruteforce.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ingraph {

namespace {

class AutSearch {
public:
    AutSearch(const std::vector<std::vector<int>>& adjacency, const AutEnumOptions& opts)
        : adj_(adjacency), opts_(opts), n_(static_cast<int>(adjacency.size())) {
        words_ = (static_cast<size_t>(n_) + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
        for (int u = 0; u < n_; ++u) {
            for (int v : adj_[static_cast<size_t>(u)]) {
                if (v < 0 || v >= n_) throw UsageError("adjacency index out of range");
                if (v == u) throw UsageError("self loop at vertex " + std::to_string(u));
                uint64_t& word = bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64];
                const uint64_t mask = uint64_t{1} << (static_cast<size_t>(v) % 64);
                if (word & mask) throw UsageError("duplicate edge at vertex " + std::to_string(u));
                word |= mask;
            }
        }
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (!adjacent(v, u)) throw UsageError("adjacency is not symmetric");

        if (!opts_.initial_colors.empty() &&
            static_cast<int>(opts_.initial_colors.size()) != n_)
            throw UsageError("initial coloring size does not match vertex count");
    }

    AutEnumResult run() {
        if (n_ == 0) {
            result_.count = 1;
            if (opts_.store) result_.perms.push_back({});
            return std::move(result_);
        }
        // initial coloring by (user color, degree), ranked
        std::vector<std::pair<int, int>> keys(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v)
            keys[static_cast<size_t>(v)] = {
                opts_.initial_colors.empty() ? 0 : opts_.initial_colors[static_cast<size_t>(v)],
                static_cast<int>(adj_[static_cast<size_t>(v)].size())};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> colors(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v)
            colors[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<size_t>(v)]) -
                sorted.begin());

        refine(colors);
        search(colors, colors);
        return std::move(result_);
    }

private:
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >>
                (static_cast<size_t>(v) % 64)) & 1u;
    }

    // equitable refinement with canonical color ids: repeatedly split classes
    // by (color, sorted neighbor-color multiset) until stable
    void refine(std::vector<int>& colors) const {
        struct Sig {
            int old_color;
            std::vector<int> nbr;
            int vertex;
        };
        int classes = 1 + *std::max_element(colors.begin(), colors.end());
        while (true) {
            std::vector<Sig> sigs(static_cast<size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                Sig& s = sigs[static_cast<size_t>(v)];
                s.old_color = colors[static_cast<size_t>(v)];
                s.vertex = v;
                s.nbr.reserve(adj_[static_cast<size_t>(v)].size());
                for (int u : adj_[static_cast<size_t>(v)]) s.nbr.push_back(colors[static_cast<size_t>(u)]);
                std::sort(s.nbr.begin(), s.nbr.end());
            }
            std::sort(sigs.begin(), sigs.end(), [](const Sig& a, const Sig& b) {
                if (a.old_color != b.old_color) return a.old_color < b.old_color;
                return a.nbr < b.nbr;
            });
            int next_id = -1;
            for (size_t i = 0; i < sigs.size(); ++i) {
                if (i == 0 || sigs[i].old_color != sigs[i - 1].old_color ||
                    sigs[i].nbr != sigs[i - 1].nbr)
                    ++next_id;
                colors[static_cast<size_t>(sigs[i].vertex)] = next_id;
            }
            if (next_id + 1 == classes) return;  // no class split further
            classes = next_id + 1;
        }
    }

    static std::vector<int> class_sizes(const std::vector<int>& colors) {
        std::vector<int> sizes(colors.size() + 1, 0);
        for (int c : colors) ++sizes[static_cast<size_t>(c)];
        return sizes;
    }

    // returns false once the limit is hit and the search should unwind
    bool search(std::vector<int> src, std::vector<int> tgt) {
        const auto src_sizes = class_sizes(src);
        const auto tgt_sizes = class_sizes(tgt);
        if (src_sizes != tgt_sizes) return true;  // incompatible branch, prune

        // first non-singleton class
        int split_color = -1;
        for (size_t c = 0; c < src_sizes.size(); ++c)
            if (src_sizes[c] >= 2) {
                split_color = static_cast<int>(c);
                break;
            }

        if (split_color < 0) {
            return emit(src, tgt);
        }

        int u = -1;
        for (int v = 0; v < n_ && u < 0; ++v)
            if (src[static_cast<size_t>(v)] == split_color) u = v;

        const int fresh = 1 + *std::max_element(src.begin(), src.end());
        for (int v = 0; v < n_; ++v) {
            if (tgt[static_cast<size_t>(v)] != split_color) continue;
            std::vector<int> src2 = src;
            std::vector<int> tgt2 = tgt;
            src2[static_cast<size_t>(u)] = fresh;
            tgt2[static_cast<size_t>(v)] = fresh;
            refine(src2);
            refine(tgt2);
            if (!search(std::move(src2), std::move(tgt2))) return false;
        }
        return true;
    }

    // both colorings are discrete: read off the candidate and verify it
    bool emit(const std::vector<int>& src, const std::vector<int>& tgt) {
        std::vector<int> by_color(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) by_color[static_cast<size_t>(tgt[static_cast<size_t>(v)])] = v;
        std::vector<int> perm(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v)
            perm[static_cast<size_t>(v)] = by_color[static_cast<size_t>(src[static_cast<size_t>(v)])];

        for (int a = 0; a < n_; ++a) {
            const int pa = perm[static_cast<size_t>(a)];
            for (int b : adj_[static_cast<size_t>(a)])
                if (!adjacent(pa, perm[static_cast<size_t>(b)])) return true;  // reject candidate
        }

        ++result_.count;
        if (opts_.store) result_.perms.push_back(std::move(perm));
        if (opts_.limit && result_.count >= *opts_.limit) {
            result_.truncated = true;
            return false;
        }
        return true;
    }

    const std::vector<std::vector<int>>& adj_;
    const AutEnumOptions& opts_;
    int n_;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
    AutEnumResult result_;
};

} // namespace

AutEnumResult enumerate_automorphisms(const std::vector<std::vector<int>>& adjacency,
                                      const AutEnumOptions& opts) {
    return AutSearch(adjacency, opts).run();
}

} // namespace ingraph
