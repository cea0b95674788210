#include "cprefix/layered.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace cprefix {

namespace {

// Depths from the root; also enforces the binary-tree precondition.
std::vector<int> depths_checked(const CPInstance& inst, int root) {
    const int n = inst.vertex_count();
    if (root < 0 || root >= n) throw ValidationError("root vertex out of range");
    std::vector<int> depth(n, -1);
    std::vector<int> order;
    order.push_back(root);
    depth[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        int children = 0;
        for (int w : inst.neighbors(v)) {
            if (depth[w] >= 0) continue;
            depth[w] = depth[v] + 1;
            order.push_back(w);
            ++children;
        }
        if (children > 2)
            throw ValidationError("not binary: vertex " + std::to_string(v) + " has " +
                                  std::to_string(children) + " children under root " +
                                  std::to_string(root));
    }
    return depth;
}

}  // namespace

LayerDecomposition decompose(const CPInstance& instance, int root, int levels) {
    if (levels < 2) throw ValidationError("L must be >= 2");
    std::vector<int> depth = depths_checked(instance, root);

    LayerDecomposition dec;
    dec.levels = levels;
    dec.classes.resize(levels);

    const int n = instance.vertex_count();
    for (int c = 0; c < levels; ++c) {
        LayerClass& cls = dec.classes[c];
        auto deleted = [&](int u, int v) {
            int child = depth[u] > depth[v] ? u : v;
            return depth[child] % levels == c;
        };
        for (const Edge& e : instance.edges())
            if (deleted(e.u, e.v)) cls.deleted_edges.push_back(e);

        std::vector<char> vis(n, 0);
        for (int s = 0; s < n; ++s) {
            if (vis[s]) continue;
            Component comp;
            std::vector<int> stack = {s};
            vis[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.vertices.push_back(v);
                for (int w : instance.neighbors(v)) {
                    if (vis[w] || deleted(v, w)) continue;
                    vis[w] = 1;
                    stack.push_back(w);
                }
            }
            std::sort(comp.vertices.begin(), comp.vertices.end());
            cls.components.push_back(std::move(comp));
        }
    }
    return dec;
}

ApproxResult solve_approx(const CPInstance& instance, int root, int levels,
                          const ExactGuard& guard) {
    LayerDecomposition dec = decompose(instance, root, levels);
    ExactSolver solver(instance, guard);

    ApproxResult res;
    res.levels = levels;
    long long best = -1;
    for (int c = 0; c < levels; ++c) {
        long long value = 0;
        for (const Component& comp : dec.classes[c].components)
            value += solver.solve(comp.vertices);
        if (value > best) {  // strict: ties keep the smallest class index
            best = value;
            res.best_class = c;
        }
    }
    res.layer_value = best;

    res.stitched.perms.resize(instance.vertex_count());
    for (const Component& comp : dec.classes[res.best_class].components) {
        Assignment part = solver.reconstruct_component(comp.vertices);
        for (int v : comp.vertices) res.stitched.perms[v] = std::move(part.perms[v]);
    }
    res.realized_value = evaluate(instance, res.stitched).total;
    return res;
}

int choose_block_height(std::uint64_t n, std::optional<double> epsilon) {
    if (epsilon) {
        if (!(*epsilon > 0.0 && *epsilon < 1.0))
            throw ValidationError("epsilon out of range (need 0 < epsilon < 1)");
        int levels = static_cast<int>(std::ceil(1.0 / *epsilon));
        return std::max(2, levels);
    }
    if (n < 2) throw ValidationError("need n >= 2 to derive a class count");
    unsigned log2n = std::bit_width(n) - 1;
    unsigned loglog = std::bit_width(static_cast<std::uint64_t>(log2n)) - 1;
    return std::max(2, static_cast<int>(loglog));
}

}  // namespace cprefix
