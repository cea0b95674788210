#include "cprefix/analysis.hpp"

#include <algorithm>

namespace cprefix {

SubtreeCountReport count_subtrees(const CPInstance& instance, int root) {
    const int n = instance.vertex_count();
    if (root < 0 || root >= n) throw ValidationError("root vertex out of range");

    std::vector<int> order, parent(n, -1), depth(n, 0);
    std::vector<char> vis(n, 0);
    order.push_back(root);
    vis[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        int children = 0;
        for (int w : instance.neighbors(v)) {
            if (vis[w]) continue;
            vis[w] = 1;
            parent[w] = v;
            depth[w] = depth[v] + 1;
            order.push_back(w);
            ++children;
        }
        if (children > 2)
            throw ValidationError("not binary: vertex " + std::to_string(v) + " has " +
                                  std::to_string(children) + " children under root " +
                                  std::to_string(root));
    }

    SubtreeCountReport report;
    report.rooted.assign(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        report.height = std::max(report.height, depth[v]);
        if (parent[v] >= 0) report.rooted[parent[v]] *= report.rooted[v] + 1;
    }
    for (const BigInt& f : report.rooted) report.total += f;

    report.bound_exponent = BigInt(1) << static_cast<unsigned>(report.height + 1);

    // total <= 2^E, decided by the position of the highest set bit.
    BigInt top = static_cast<long long>(msb(report.total));
    if (top < report.bound_exponent)
        report.within_bound = true;
    else if (top > report.bound_exponent)
        report.within_bound = false;
    else
        report.within_bound =
            report.total == BigInt(1) << report.bound_exponent.convert_to<unsigned>();

    if (report.bound_exponent <= 4096)
        report.bound = BigInt(1) << report.bound_exponent.convert_to<unsigned>();
    return report;
}

Rational harmonic(int n) {
    if (n < 0) throw ValidationError("harmonic number index must be nonnegative");
    Rational h = 0;
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

RatioReport ratio_experiment(const NNInstance& g) {
    RatioReport report;
    report.ebcs = solve_ebcs_exact(g).edge_count();
    report.nn = solve_nn_exact(g).cost;
    report.h_bound = harmonic(g.nu);
    report.ratio = report.ebcs > 0 ? Rational(report.nn, report.ebcs) : Rational(1);
    report.sandwich_ok =
        report.ebcs <= report.nn && Rational(report.nn) <= report.h_bound * report.ebcs;
    return report;
}

}  // namespace cprefix
