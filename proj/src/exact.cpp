#include "cprefix/exact.hpp"

#include <algorithm>
#include <numeric>

namespace cprefix {

namespace {

LabelSet intersect_labels(const CPInstance& inst, std::span<const int> verts) {
    LabelSet s = inst.label_set(verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) s &= inst.label_set(verts[i]);
    return s;
}

std::vector<int> normalized(std::span<const int> verts) {
    std::vector<int> v(verts.begin(), verts.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool is_connected_component(const CPInstance& instance, std::span<const int> vertices) {
    if (vertices.empty()) return false;
    std::vector<int> verts = normalized(vertices);
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
    if (verts.front() < 0 || verts.back() >= instance.vertex_count()) return false;

    std::vector<char> vis(verts.size(), 0);
    std::vector<int> stack = {verts[0]};
    vis[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : instance.neighbors(v)) {
            auto it = std::lower_bound(verts.begin(), verts.end(), w);
            if (it == verts.end() || *it != w) continue;
            std::size_t idx = static_cast<std::size_t>(it - verts.begin());
            if (vis[idx]) continue;
            vis[idx] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == verts.size();
}

int common_label_count(const CPInstance& instance, std::span<const int> component) {
    if (!is_connected_component(instance, component))
        throw ValidationError("vertex set is not a connected component of the tree");
    std::vector<int> verts = normalized(component);
    return static_cast<int>(intersect_labels(instance, verts).count());
}

RecursionEstimate estimate_recursion(const CPInstance& instance,
                                     std::span<const int> component) {
    if (!is_connected_component(instance, component))
        throw ValidationError("vertex set is not a connected component of the tree");
    std::vector<int> verts = normalized(component);

    // BFS order from the smallest vertex; parents precede children.
    std::vector<int> order;
    std::vector<int> parent(verts.size(), -1);
    std::vector<char> vis(verts.size(), 0);
    auto index_of = [&](int x) {
        return static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    order.push_back(verts[0]);
    vis[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : instance.neighbors(v)) {
            auto it = std::lower_bound(verts.begin(), verts.end(), w);
            if (it == verts.end() || *it != w) continue;
            std::size_t idx = static_cast<std::size_t>(it - verts.begin());
            if (vis[idx]) continue;
            vis[idx] = 1;
            parent[idx] = v;
            order.push_back(w);
        }
    }

    // Aggregates over the connected subsets rooted at v (containing v, lying
    // inside v's rooted subtree): count, sum of sizes, sum of squared sizes.
    std::vector<BigInt> cnt(verts.size(), 0), sum(verts.size(), 0), sq(verts.size(), 0);
    RecursionEstimate est{0, 0};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::size_t vi = index_of(v);
        BigInt c = 1, s = 0, q = 0;  // empty choice so far
        for (int w : instance.neighbors(v)) {
            auto wit = std::lower_bound(verts.begin(), verts.end(), w);
            if (wit == verts.end() || *wit != w) continue;
            std::size_t wi = static_cast<std::size_t>(wit - verts.begin());
            if (parent[wi] != v) continue;
            // Child factor: skip the child entirely, or take any subset
            // rooted at it.
            BigInt fc = cnt[wi] + 1, fs = sum[wi], fq = sq[wi];
            BigInt c2 = c * fc;
            BigInt s2 = s * fc + fs * c;
            BigInt q2 = q * fc + 2 * s * fs + fq * c;
            c = c2;
            s = s2;
            q = q2;
        }
        cnt[vi] = c;
        sum[vi] = s + c;
        sq[vi] = q + 2 * s + c;
        est.memo_entries += cnt[vi];
        est.work_units += sq[vi];
    }
    return est;
}

std::size_t ExactSolver::VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
    }
    return h;
}

ExactSolver::ExactSolver(const CPInstance& instance, ExactGuard guard)
    : inst_(instance), guard_(guard), use_mask_(instance.vertex_count() <= 64) {}

long long ExactSolver::solve(std::span<const int> component) {
    if (!is_connected_component(inst_, component))
        throw ValidationError("vertex set is not a connected component of the tree");
    std::vector<int> verts = normalized(component);

    RecursionEstimate est = estimate_recursion(inst_, verts);
    if (est.memo_entries > guard_.max_memo_entries)
        throw SizeGuardError("component has " + est.memo_entries.str() +
                             " connected subtrees; memo guard is " +
                             std::to_string(guard_.max_memo_entries) + " entries");
    if (est.work_units > guard_.max_work_units)
        throw SizeGuardError("recursion needs about " + est.work_units.str() +
                             " elementary steps; work guard is " +
                             std::to_string(guard_.max_work_units));

    int id = solve_rec(std::move(verts));
    return nodes_[id].value;
}

int ExactSolver::solve_rec(std::vector<int> verts) {
    std::uint64_t mask = 0;
    if (use_mask_) {
        for (int v : verts) mask |= 1ull << static_cast<unsigned>(v);
        if (auto it = mask_memo_.find(mask); it != mask_memo_.end()) return it->second;
    } else {
        if (auto it = list_memo_.find(verts); it != list_memo_.end()) return it->second;
    }

    CutNode node;
    node.common_count = static_cast<int>(intersect_labels(inst_, verts).count());

    if (verts.size() > 1) {
        auto member = [&](int x) {
            return std::binary_search(verts.begin(), verts.end(), x);
        };
        long long best = -1;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int u = verts[i];
            for (int v : inst_.neighbors(u)) {
                if (v <= u || !member(v)) continue;
                // Side of u after deleting edge (u,v).
                std::vector<char> vis(verts.size(), 0);
                auto index_of = [&](int x) {
                    return static_cast<std::size_t>(
                        std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
                };
                vis[index_of(u)] = 1;
                std::vector<int> stack = {u};
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int y : inst_.neighbors(x)) {
                        if ((x == u && y == v) || (x == v && y == u)) continue;
                        if (!member(y)) continue;
                        std::size_t idx = index_of(y);
                        if (vis[idx]) continue;
                        vis[idx] = 1;
                        stack.push_back(y);
                    }
                }
                std::vector<int> side_u, side_v;
                for (std::size_t k = 0; k < verts.size(); ++k)
                    (vis[k] ? side_u : side_v).push_back(verts[k]);

                int low = solve_rec(std::move(side_u));
                int high = solve_rec(std::move(side_v));
                long long sum = nodes_[low].value + nodes_[high].value;
                if (sum > best) {  // strict: ties keep the smallest (u,v)
                    best = sum;
                    node.cut = Edge{u, v};
                    node.low = low;
                    node.high = high;
                }
            }
        }
        node.value = node.common_count + best;
    }

    node.vertices = verts;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    if (use_mask_)
        mask_memo_.emplace(mask, id);
    else
        list_memo_.emplace(std::move(verts), id);
    return id;
}

int ExactSolver::node_of(std::span<const int> component) const {
    std::vector<int> verts = normalized(component);
    if (use_mask_) {
        std::uint64_t mask = 0;
        for (int v : verts) mask |= 1ull << static_cast<unsigned>(v);
        auto it = mask_memo_.find(mask);
        return it == mask_memo_.end() ? -1 : it->second;
    }
    auto it = list_memo_.find(verts);
    return it == list_memo_.end() ? -1 : it->second;
}

namespace {

void walk_trace(const CPInstance& inst, const std::vector<CutNode>& nodes, int id,
                std::vector<LabelId> prefix, LabelSet emitted, Assignment& out) {
    const CutNode& node = nodes[id];
    LabelSet inter = intersect_labels(inst, node.vertices);
    LabelSet block = inter - emitted;
    for (auto b = block.find_first(); b != LabelSet::npos; b = block.find_next(b))
        prefix.push_back(static_cast<LabelId>(b));
    if (!node.cut) {
        out.perms[node.vertices[0]] = std::move(prefix);
        return;
    }
    emitted |= inter;
    walk_trace(inst, nodes, node.low, prefix, emitted, out);
    walk_trace(inst, nodes, node.high, std::move(prefix), std::move(emitted), out);
}

}  // namespace

Assignment ExactSolver::reconstruct_component(std::span<const int> component) const {
    int id = node_of(component);
    if (id < 0) throw ValidationError("component has not been solved");
    Assignment out;
    out.perms.resize(inst_.vertex_count());
    walk_trace(inst_, nodes_, id, {}, LabelSet(inst_.alphabet_size()), out);
    return out;
}

ExactResult solve_exact(const CPInstance& instance, const ExactGuard& guard) {
    std::vector<int> all(instance.vertex_count());
    std::iota(all.begin(), all.end(), 0);

    ExactSolver solver(instance, guard);
    ExactResult res;
    res.value = solver.solve(all);
    res.assignment = solver.reconstruct_component(all);
    res.trace.root = solver.node_of(all);
    res.trace.nodes = solver.take_nodes();
    return res;
}

Assignment reconstruct(const CPInstance& instance, const CutTrace& trace) {
    if (trace.root < 0 || trace.root >= static_cast<int>(trace.nodes.size()))
        throw ValidationError("cut trace has no root");
    Assignment out;
    out.perms.resize(instance.vertex_count());
    walk_trace(instance, trace.nodes, trace.root, {}, LabelSet(instance.alphabet_size()),
               out);
    return out;
}

long long oracle_solve(const CPInstance& instance) {
    constexpr std::uint64_t kGuard = 10'000'000;
    std::uint64_t space = 1;
    for (int v = 0; v < instance.vertex_count(); ++v) {
        std::uint64_t k = instance.labels_of(v).size();
        for (std::uint64_t i = 2; i <= k; ++i) {
            space *= i;
            if (space > kGuard)
                throw SizeGuardError(
                    "assignment space exceeds the oracle guard of 10^7 enumerations");
        }
    }

    Assignment a;
    a.perms.resize(instance.vertex_count());
    for (int v = 0; v < instance.vertex_count(); ++v) a.perms[v] = instance.labels_of(v);

    long long best = 0;
    auto total = [&]() {
        long long t = 0;
        for (const Edge& e : instance.edges())
            t += static_cast<long long>(lcp_length(a.perms[e.u], a.perms[e.v]));
        return t;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == instance.vertex_count()) {
            best = std::max(best, total());
            return;
        }
        auto& p = a.perms[v];  // starts sorted; the do/while cycles back to sorted
        do {
            self(self, v + 1);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(rec, 0);
    return best;
}

}  // namespace cprefix
