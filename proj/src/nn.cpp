#include "cprefix/nn.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <sstream>

namespace cprefix {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<std::string> padded_names(int nv) {
    std::size_t width = std::to_string(std::max(nv - 1, 0)).size();
    std::vector<std::string> names;
    names.reserve(nv);
    for (int j = 0; j < nv; ++j) {
        std::string digits = std::to_string(j);
        names.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    return names;
}

}  // namespace

NNInstance NNInstance::make(int nu, int nv, std::span<const std::pair<int, int>> edges,
                            std::vector<std::string> vnames) {
    if (nu < 0 || nv < 0) throw ValidationError("side sizes must be nonnegative");
    NNInstance g;
    g.nu = nu;
    g.nv = nv;
    g.adjacency.assign(nu, VertexBits(nv));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= nu || v < 0 || v >= nv)
            throw ValidationError("edge endpoint out of range: " + edge_str(u, v));
        if (g.adjacency[u].test(v))
            throw ValidationError("duplicate edge " + edge_str(u, v));
        g.adjacency[u].set(v);
    }
    if (!vnames.empty()) {
        if (static_cast<int>(vnames.size()) != nv)
            throw ValidationError("name table size does not match the V side");
        std::vector<std::string> sorted = vnames;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("duplicate V-side name");
        g.vnames = std::move(vnames);
    }
    return g;
}

long long NNInstance::edge_count() const {
    long long total = 0;
    for (const auto& nb : adjacency) total += static_cast<long long>(nb.count());
    return total;
}

NNSolution NNSolution::make(const NNInstance& g, std::vector<int> chain, VertexBits vprime) {
    if (vprime.size() != static_cast<std::size_t>(g.nv))
        throw FeasibilityError("restriction set size does not match the V side");
    std::vector<char> used(g.nu, 0);
    NNSolution sol;
    VertexBits prev;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        int u = chain[i];
        if (u < 0 || u >= g.nu) throw FeasibilityError("chain vertex out of range");
        if (used[u]) throw FeasibilityError("chain repeats vertex " + std::to_string(u));
        used[u] = 1;
        VertexBits restricted = g.adjacency[u] & vprime;
        if (i > 0 && !restricted.is_subset_of(prev))
            throw FeasibilityError("restricted neighborhoods are not nested at chain step " +
                                   std::to_string(i + 1));
        sol.step_sizes.push_back(static_cast<int>(restricted.count()));
        sol.cost += sol.step_sizes.back();
        prev = std::move(restricted);
    }
    sol.chain = std::move(chain);
    sol.vprime = std::move(vprime);
    return sol;
}

Biclique Biclique::make(const NNInstance& g, std::vector<int> uside, std::vector<int> vside) {
    std::sort(uside.begin(), uside.end());
    std::sort(vside.begin(), vside.end());
    if (std::adjacent_find(uside.begin(), uside.end()) != uside.end() ||
        std::adjacent_find(vside.begin(), vside.end()) != vside.end())
        throw FeasibilityError("biclique sides must not repeat vertices");
    for (int u : uside)
        if (u < 0 || u >= g.nu) throw FeasibilityError("biclique U vertex out of range");
    for (int v : vside)
        if (v < 0 || v >= g.nv) throw FeasibilityError("biclique V vertex out of range");
    for (int u : uside)
        for (int v : vside)
            if (!g.has_edge(u, v))
                throw FeasibilityError("biclique is not complete: missing edge " +
                                       edge_str(u, v));
    Biclique b;
    b.uside = std::move(uside);
    b.vside = std::move(vside);
    return b;
}

CPInstance nn_to_star(const NNInstance& g) {
    std::vector<std::string> names = g.vnames.empty() ? padded_names(g.nv) : g.vnames;

    CPDraft draft;
    draft.n = g.nu + 1;
    draft.labels.resize(draft.n);
    draft.labels[0] = names;
    for (int u = 0; u < g.nu; ++u) {
        draft.edges.emplace_back(0, u + 1);
        const VertexBits& nb = g.adjacency[u];
        for (auto v = nb.find_first(); v != VertexBits::npos; v = nb.find_next(v))
            draft.labels[u + 1].push_back(names[v]);
    }
    return CPInstance::build(draft);
}

namespace {

// Leaves in ascending vertex id plus the center's label list; validates the
// star shape.
struct StarView {
    int center = 0;
    std::vector<int> leaves;
    const std::vector<LabelId>* center_labels = nullptr;

    int v_index_of(LabelId id) const {
        auto it = std::lower_bound(center_labels->begin(), center_labels->end(), id);
        if (it == center_labels->end() || *it != id) return -1;
        return static_cast<int>(it - center_labels->begin());
    }
};

StarView view_star(const CPInstance& star, int center) {
    if (center < 0 || center >= star.vertex_count())
        throw ValidationError("center vertex out of range");
    for (const Edge& e : star.edges())
        if (e.u != center && e.v != center)
            throw ValidationError("not a star: edge " + edge_str(e.u, e.v) +
                                  " is not incident to center " + std::to_string(center));
    StarView view;
    view.center = center;
    for (int v = 0; v < star.vertex_count(); ++v)
        if (v != center) view.leaves.push_back(v);
    view.center_labels = &star.labels_of(center);
    return view;
}

}  // namespace

NNInstance star_to_nn(const CPInstance& star, int center) {
    StarView view = view_star(star, center);
    const int nv = static_cast<int>(view.center_labels->size());

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < view.leaves.size(); ++i)
        for (LabelId id : star.labels_of(view.leaves[i]))
            if (int j = view.v_index_of(id); j >= 0)
                edges.emplace_back(static_cast<int>(i), j);

    std::vector<std::string> names;
    names.reserve(nv);
    for (LabelId id : *view.center_labels) names.push_back(star.token(id));
    return NNInstance::make(static_cast<int>(view.leaves.size()), nv, edges,
                            std::move(names));
}

Assignment translate_nn_to_cp(const NNSolution& solution, const CPInstance& star) {
    StarView view = view_star(star, 0);
    const auto& cl = *view.center_labels;
    if (solution.vprime.size() != cl.size())
        throw FeasibilityError("solution restriction set does not match the star's center");

    // Restricted neighborhoods of the chain, over V indices.
    std::vector<VertexBits> restricted;
    for (int u : solution.chain) {
        if (u < 0 || u >= static_cast<int>(view.leaves.size()))
            throw FeasibilityError("chain vertex out of range for this star");
        VertexBits nb(cl.size());
        for (LabelId id : star.labels_of(view.leaves[u]))
            if (int j = view.v_index_of(id); j >= 0) nb.set(j);
        restricted.push_back(nb & solution.vprime);
    }

    // Center permutation: innermost restricted neighborhood first, then each
    // enclosing difference block, then the center's leftover labels.
    std::vector<LabelId> center_perm;
    VertexBits emitted(cl.size());
    for (auto it = restricted.rbegin(); it != restricted.rend(); ++it) {
        VertexBits block = *it - emitted;
        for (auto j = block.find_first(); j != VertexBits::npos; j = block.find_next(j))
            center_perm.push_back(cl[j]);
        emitted |= *it;
    }
    for (std::size_t j = 0; j < cl.size(); ++j)
        if (!emitted.test(j)) center_perm.push_back(cl[j]);

    Assignment a;
    a.perms.resize(star.vertex_count());
    a.perms[0] = center_perm;
    for (int leaf : view.leaves) a.perms[leaf] = star.labels_of(leaf);

    // Chain leaves start with their restricted neighborhood, which by the
    // block construction is exactly a prefix of the center permutation.
    for (std::size_t i = 0; i < solution.chain.size(); ++i) {
        int leaf = view.leaves[solution.chain[i]];
        std::size_t len = restricted[i].count();
        std::vector<LabelId> perm(center_perm.begin(),
                                  center_perm.begin() + static_cast<long>(len));
        LabelSet taken(star.alphabet_size());
        for (LabelId id : perm) taken.set(id);
        for (LabelId id : star.labels_of(leaf))
            if (!taken.test(id)) perm.push_back(id);
        a.perms[leaf] = std::move(perm);
    }
    return a;
}

NNSolution translate_cp_to_nn(const Assignment& assignment, const CPInstance& star,
                              int center) {
    StarView view = view_star(star, center);
    BenefitReport report = evaluate(star, assignment);

    // Benefit of each leaf's edge to the center.
    std::vector<int> benefit(star.vertex_count(), 0);
    for (std::size_t i = 0; i < star.edges().size(); ++i) {
        const Edge& e = star.edges()[i];
        benefit[e.u == center ? e.v : e.u] = report.per_edge[i];
    }

    int longest = 0;
    for (int leaf : view.leaves) longest = std::max(longest, benefit[leaf]);

    VertexBits vprime(view.center_labels->size());
    for (int k = 0; k < longest; ++k)
        vprime.set(view.v_index_of(assignment.perms[center][k]));

    std::vector<int> order;  // u indices of leaves with positive benefit
    for (std::size_t i = 0; i < view.leaves.size(); ++i)
        if (benefit[view.leaves[i]] > 0) order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return benefit[view.leaves[a]] > benefit[view.leaves[b]];
    });

    return NNSolution::make(star_to_nn(star, center), std::move(order), std::move(vprime));
}

NNSolution solve_nn_exact(const NNInstance& g) {
    if (g.nv > 24)
        throw SizeGuardError("V side has " + std::to_string(g.nv) +
                             " vertices; subset-enumeration guard is 24");

    std::vector<std::uint32_t> adj(g.nu, 0);
    for (int u = 0; u < g.nu; ++u) {
        const VertexBits& nb = g.adjacency[u];
        for (auto v = nb.find_first(); v != VertexBits::npos; v = nb.find_next(v))
            adj[u] |= 1u << v;
    }

    long long best_cost = 0;
    std::vector<int> best_chain;
    std::uint32_t best_vmask = 0;

    struct Group {
        std::uint32_t mask;
        long long weight;
        std::vector<int> members;
    };

    const std::uint32_t vlimit = 1u << g.nv;
    for (std::uint32_t vmask = 0; vmask < vlimit; ++vmask) {
        // Group U vertices by nonempty restricted neighborhood.
        std::map<std::uint32_t, std::vector<int>> by_mask;
        for (int u = 0; u < g.nu; ++u)
            if (std::uint32_t r = adj[u] & vmask) by_mask[r].push_back(u);

        std::vector<Group> groups;
        for (auto& [mask, members] : by_mask)
            groups.push_back({mask,
                              static_cast<long long>(std::popcount(mask)) *
                                  static_cast<long long>(members.size()),
                              std::move(members)});
        std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
            int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
            return pa != pb ? pa > pb : a.mask < b.mask;
        });

        // Max-weight chain of strictly nested groups; groups[i] can be
        // followed only by a strict subset, which must come later in the
        // sorted order.
        const int m = static_cast<int>(groups.size());
        std::vector<long long> best_from(m, 0);
        std::vector<int> next(m, -1);
        for (int i = m - 1; i >= 0; --i) {
            best_from[i] = groups[i].weight;
            for (int j = i + 1; j < m; ++j) {
                if ((groups[j].mask & ~groups[i].mask) != 0) continue;
                if (groups[i].weight + best_from[j] > best_from[i]) {
                    best_from[i] = groups[i].weight + best_from[j];
                    next[i] = j;
                }
            }
        }
        long long total = 0;
        int start = -1;
        for (int i = 0; i < m; ++i)
            if (best_from[i] > total) {
                total = best_from[i];
                start = i;
            }

        if (total > best_cost) {
            best_cost = total;
            best_vmask = vmask;
            best_chain.clear();
            for (int i = start; i >= 0; i = next[i])
                best_chain.insert(best_chain.end(), groups[i].members.begin(),
                                  groups[i].members.end());
        }
    }

    VertexBits vprime(g.nv);
    for (int j = 0; j < g.nv; ++j)
        if (best_vmask & (1u << j)) vprime.set(j);
    return NNSolution::make(g, std::move(best_chain), std::move(vprime));
}

Biclique solve_ebcs_exact(const NNInstance& g) {
    if (std::min(g.nu, g.nv) > 24)
        throw SizeGuardError("smaller side has " + std::to_string(std::min(g.nu, g.nv)) +
                             " vertices; subset-enumeration guard is 24");

    const bool u_small = g.nu <= g.nv;
    const int small = u_small ? g.nu : g.nv;
    const int large = u_small ? g.nv : g.nu;

    // Neighborhoods of the enumerated (smaller) side over the other side.
    std::vector<VertexBits> nb(small, VertexBits(large));
    if (u_small) {
        nb = g.adjacency;
    } else {
        for (int u = 0; u < g.nu; ++u)
            for (auto v = g.adjacency[u].find_first(); v != VertexBits::npos;
                 v = g.adjacency[u].find_next(v))
                nb[v].set(u);
    }

    long long best_edges = 0;
    std::uint32_t best_mask = 0;
    VertexBits best_common(large);
    const std::uint64_t limit = 1ull << small;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        VertexBits common(large);
        common.set();
        int picked = 0;
        for (int i = 0; i < small; ++i)
            if (mask & (1ull << i)) {
                common &= nb[i];
                ++picked;
            }
        long long edges = static_cast<long long>(picked) *
                          static_cast<long long>(common.count());
        if (edges > best_edges) {  // strict: ties keep the smaller mask
            best_edges = edges;
            best_mask = static_cast<std::uint32_t>(mask);
            best_common = std::move(common);
        }
    }

    std::vector<int> picked_side, partner_side;
    if (best_edges > 0) {
        for (int i = 0; i < small; ++i)
            if (best_mask & (1u << i)) picked_side.push_back(i);
        for (auto j = best_common.find_first(); j != VertexBits::npos;
             j = best_common.find_next(j))
            partner_side.push_back(static_cast<int>(j));
    }

    if (u_small) return Biclique::make(g, picked_side, partner_side);
    return Biclique::make(g, partner_side, picked_side);
}

NNSolution biclique_to_nn(const NNInstance& g, const Biclique& b) {
    VertexBits vprime(g.nv);
    for (int v : b.vside) {
        if (v < 0 || v >= g.nv) throw FeasibilityError("biclique V vertex out of range");
        vprime.set(v);
    }
    return NNSolution::make(g, b.uside, std::move(vprime));
}

Biclique extract_prefix_biclique(const NNInstance& g, const NNSolution& solution) {
    long long best_edges = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 1; i <= solution.chain.size(); ++i) {
        long long edges = static_cast<long long>(i) * solution.step_sizes[i - 1];
        if (edges > best_edges) {  // strict: ties keep the shortest prefix
            best_edges = edges;
            best_len = i;
        }
    }
    if (best_len == 0) return Biclique::make(g, {}, {});

    std::vector<int> uside(solution.chain.begin(),
                           solution.chain.begin() + static_cast<long>(best_len));
    VertexBits last = g.adjacency[solution.chain[best_len - 1]] & solution.vprime;
    std::vector<int> vside;
    for (auto j = last.find_first(); j != VertexBits::npos; j = last.find_next(j))
        vside.push_back(static_cast<int>(j));
    return Biclique::make(g, std::move(uside), std::move(vside));
}

NNInstance tight_family(int n) {
    if (n < 1) throw ValidationError("tight family needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int v = 0; v < n / i; ++v) edges.emplace_back(i - 1, v);
    return NNInstance::make(n, n, edges);
}

namespace {

int parse_nn_int(int line, const std::string& tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

}  // namespace

NNInstance parse_nn(std::string_view text) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::istringstream ss{std::string(raw)};
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (!toks.empty() && toks[0][0] != '#') lines.emplace_back(number, std::move(toks));
        if (end == text.size()) break;
    }
    if (lines.empty()) throw ParseError(0, "empty input, expected 'nn <nU> <nV>' header");

    const auto& [hline, htoks] = lines[0];
    if (htoks[0] != "nn" || htoks.size() != 3)
        throw ParseError(hline, "expected 'nn <nU> <nV>' header");
    int nu = parse_nn_int(hline, htoks[1], "side size");
    int nv = parse_nn_int(hline, htoks[2], "side size");
    if (nu < 0 || nv < 0) throw ParseError(hline, "side sizes must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    std::vector<VertexBits> seen(nu, VertexBits(nv));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lnum, toks] = lines[i];
        if (toks[0] != "edge" || toks.size() != 3)
            throw ParseError(lnum, "expected 'edge <u> <v>'");
        int u = parse_nn_int(lnum, toks[1], "vertex id");
        int v = parse_nn_int(lnum, toks[2], "vertex id");
        if (u < 0 || u >= nu || v < 0 || v >= nv)
            throw ParseError(lnum, "edge endpoint out of range: " + edge_str(u, v));
        if (seen[u].test(v)) throw ParseError(lnum, "duplicate edge " + edge_str(u, v));
        seen[u].set(v);
        edges.emplace_back(u, v);
    }
    return NNInstance::make(nu, nv, edges);
}

std::string serialize_nn(const NNInstance& g) {
    std::string out =
        "nn " + std::to_string(g.nu) + " " + std::to_string(g.nv) + "\n";
    for (int u = 0; u < g.nu; ++u)
        for (auto v = g.adjacency[u].find_first(); v != VertexBits::npos;
             v = g.adjacency[u].find_next(v))
            out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace cprefix
