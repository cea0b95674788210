#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cprefix/errors.hpp"

namespace cprefix {

// Labels are interned to dense ids. Ids follow the byte-lexicographic order
// of the original tokens, so "ascending id" and "sorted token" coincide.
using LabelId = int;
using LabelSet = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
    int u = 0;
    int v = 0;  // canonical form keeps u < v
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Raw instance description, before any invariant has been established.
// This is what the parser produces and what validate() diagnoses.
struct CPDraft {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::string>> labels;  // tokens per vertex
};

// Returns the first violated invariant as a human-readable diagnostic, or
// nullopt when the draft describes a valid instance. Never throws.
std::optional<std::string> validate(const CPDraft& draft);

// A tree whose vertices carry label sets. Immutable after construction;
// instances may be shared freely across threads.
class CPInstance {
public:
    // Throws ValidationError with the validate() diagnostic on bad input.
    static CPInstance build(const CPDraft& draft);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int alphabet_size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(LabelId id) const { return tokens_[id]; }
    LabelId label_id(std::string_view token) const;  // -1 when unknown
    const LabelSet& label_set(int v) const { return sets_[v]; }
    // Ascending label ids, equivalently tokens in sorted order.
    const std::vector<LabelId>& labels_of(int v) const { return sorted_[v]; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;                // canonical, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> tokens_;        // id -> token
    std::vector<LabelSet> sets_;             // per vertex, over alphabet ids
    std::vector<std::vector<LabelId>> sorted_;
};

// One permutation of each vertex's own label set.
struct Assignment {
    std::vector<std::vector<LabelId>> perms;
};

struct BenefitReport {
    std::vector<int> per_edge;  // aligned with CPInstance::edges()
    long long total = 0;
};

// Length of the longest common prefix of two sequences.
template <typename T>
std::size_t lcp_length(std::span<const T> a, std::span<const T> b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
}

template <typename T>
std::size_t lcp_length(const std::vector<T>& a, const std::vector<T>& b) {
    return lcp_length(std::span<const T>(a), std::span<const T>(b));
}

// Per-edge common-prefix benefits and their sum. Throws FeasibilityError
// when some perms[v] is not a permutation of the vertex's label set.
BenefitReport evaluate(const CPInstance& instance, const Assignment& assignment);

// Text format (UTF-8, line based, lines starting with '#' are comments):
//
//   cp <n>
//   edge <u> <v>            exactly n-1 lines, 0-based ids
//   labels <v> <tok> ...    exactly one line per vertex
//
CPDraft parse_cp_draft(std::string_view text);  // throws ParseError
CPInstance parse_cp(std::string_view text);     // throws ParseError / ValidationError
std::string serialize_cp(const CPInstance& instance);

// Solution format:
//
//   value <total>
//   perm <v> <tok> ...      one line per vertex, permutation order
//
std::string serialize_assignment(const CPInstance& instance, const Assignment& assignment);

}  // namespace cprefix
