#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cprefix/instance.hpp"
#include "cprefix/numeric.hpp"

namespace cprefix {

// A connected set of vertices of some instance, vertices sorted ascending.
struct Component {
    std::vector<int> vertices;
};

bool is_connected_component(const CPInstance& instance, std::span<const int> vertices);

// |intersection of S_v over the component|. Throws ValidationError when the
// vertex set is not a connected component of the instance.
int common_label_count(const CPInstance& instance, std::span<const int> component);

// The recursion memoizes one entry per connected subtree of the component it
// solves, and spends O(|C|^2) elementary steps per entry. Both quantities are
// predicted exactly (arbitrary precision) before any work happens; solving
// refuses with SizeGuardError when a limit would be exceeded.
struct ExactGuard {
    std::uint64_t max_memo_entries = 1'000'000;
    std::uint64_t max_work_units = 1'000'000'000;
};

struct RecursionEstimate {
    BigInt memo_entries;  // number of connected subtrees of the component
    BigInt work_units;    // sum of |C|^2 over those subtrees
};

RecursionEstimate estimate_recursion(const CPInstance& instance,
                                     std::span<const int> component);

// One node of the cut trace: a component, its common-label count, the edge
// whose deletion the recursion chose, and the two resulting components.
// Single vertices have no cut and no children.
struct CutNode {
    std::vector<int> vertices;
    int common_count = 0;
    long long value = 0;
    std::optional<Edge> cut;
    int low = -1;   // trace id of the side containing cut->u
    int high = -1;  // trace id of the side containing cut->v
};

// Shared-subcomponent DAG; `nodes` is an arena, `root` the solved component.
struct CutTrace {
    std::vector<CutNode> nodes;
    int root = -1;
};

struct ExactResult {
    long long value = 0;
    Assignment assignment;
    CutTrace trace;
};

// Memoized optimum of the edge-deletion recursion:
//
//   opt(C) = |common labels of C| + max over edges e of C of
//            (opt(side one of C minus e) + opt(side two of C minus e))
//
// with opt(single vertex) = 0. Ties on the max go to the lexicographically
// smallest (u,v) edge. One solver instance may solve many components of the
// same tree; the memo is shared across calls.
class ExactSolver {
public:
    explicit ExactSolver(const CPInstance& instance, ExactGuard guard = {});

    // Value of one connected component. Validates connectivity and applies
    // the size guard to this component before recursing.
    long long solve(std::span<const int> component);

    // Optimal permutations for a previously solved component. Vertices
    // outside the component get empty permutations.
    Assignment reconstruct_component(std::span<const int> component) const;

    std::size_t memo_size() const { return nodes_.size(); }
    const std::vector<CutNode>& nodes() const { return nodes_; }
    int node_of(std::span<const int> component) const;  // -1 if never solved

    std::vector<CutNode> take_nodes() { return std::move(nodes_); }

private:
    int solve_rec(std::vector<int> verts);

    const CPInstance& inst_;
    ExactGuard guard_;
    bool use_mask_;
    std::unordered_map<std::uint64_t, int> mask_memo_;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };
    std::unordered_map<std::vector<int>, int, VecHash> list_memo_;
    std::vector<CutNode> nodes_;
};

// Whole-tree optimum with reconstructed assignment and cut trace.
ExactResult solve_exact(const CPInstance& instance, const ExactGuard& guard = {});

// Replays a cut trace into an assignment: walking from the root, each node
// appends its not-yet-emitted common labels (ascending) to every vertex of
// its component, then descends into the two sides.
Assignment reconstruct(const CPInstance& instance, const CutTrace& trace);

// Exhaustive enumeration of every assignment; the independent oracle the
// recursion is checked against. Refuses when the product of |S_v|! over all
// vertices exceeds 10^7.
long long oracle_solve(const CPInstance& instance);

}  // namespace cprefix
