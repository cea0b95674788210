#include "cprefix/generate.hpp"

#include <algorithm>
#include <numeric>

namespace cprefix {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k) {
    return k == 0 ? 0 : rng() % k;
}

bool rng_chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

namespace {

std::vector<std::string> universe_tokens(int universe) {
    std::vector<std::string> toks;
    toks.reserve(universe);
    for (int i = 0; i < universe; ++i) toks.push_back("t" + std::to_string(i));
    return toks;
}

// Partial Fisher-Yates: k distinct indices from [0, universe).
std::vector<std::vector<std::string>> sample_label_sets(int n, const LabelParams& params,
                                                        std::mt19937_64& rng) {
    if (params.universe < 0) throw ValidationError("label universe must be nonnegative");
    if (params.labels_min < 0 || params.labels_max < params.labels_min)
        throw ValidationError("bad label count range");

    const auto toks = universe_tokens(params.universe);
    const int lo = std::min(params.labels_min, params.universe);
    const int hi = std::min(params.labels_max, params.universe);

    std::vector<int> pool(params.universe);
    std::vector<std::vector<std::string>> sets(n);
    for (int v = 0; v < n; ++v) {
        int k = lo + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < k; ++i) {
            std::size_t j = i + rng_below(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
            sets[v].push_back(toks[pool[i]]);
        }
    }
    return sets;
}

}  // namespace

CPInstance gen_binary_tree(int n, const LabelParams& labels, std::uint64_t seed) {
    if (n < 1) throw ValidationError("vertex count must be at least 1");
    std::mt19937_64 rng(seed);

    CPDraft draft;
    draft.n = n;
    std::vector<int> open;  // vertices with fewer than two children
    std::vector<int> child_count(n, 0);
    open.push_back(0);
    for (int v = 1; v < n; ++v) {
        std::size_t pick = rng_below(rng, open.size());
        int parent = open[pick];
        draft.edges.emplace_back(parent, v);
        if (++child_count[parent] == 2) {
            open[pick] = open.back();
            open.pop_back();
        }
        open.push_back(v);
    }
    draft.labels = sample_label_sets(n, labels, rng);
    return CPInstance::build(draft);
}

CPInstance gen_star(int n, const LabelParams& labels, std::uint64_t seed) {
    if (n < 1) throw ValidationError("vertex count must be at least 1");
    std::mt19937_64 rng(seed);

    CPDraft draft;
    draft.n = n;
    for (int v = 1; v < n; ++v) draft.edges.emplace_back(0, v);
    draft.labels = sample_label_sets(n, labels, rng);
    return CPInstance::build(draft);
}

NNInstance gen_bipartite(int nu, int nv, double p, std::uint64_t seed) {
    if (nu < 0 || nv < 0) throw ValidationError("side sizes must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nu; ++u)
        for (int v = 0; v < nv; ++v)
            if (rng_chance(rng, p)) edges.emplace_back(u, v);
    return NNInstance::make(nu, nv, edges);
}

}  // namespace cprefix
