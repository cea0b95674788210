#include "cprefix/instance.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cprefix {

namespace {

bool valid_token(const std::string& tok) {
    if (tok.empty()) return false;
    for (unsigned char c : tok)
        if (std::isspace(c)) return false;
    return true;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::optional<std::string> validate(const CPDraft& draft) {
    if (draft.n < 1) return "vertex count must be at least 1";
    const int n = draft.n;

    for (const auto& [u, v] : draft.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            return "edge endpoint out of range: " + edge_str(u, v);
        if (u == v) return "not a tree: self-loop at vertex " + std::to_string(u);
    }

    DisjointSets ds(n);
    for (const auto& [u, v] : draft.edges)
        if (!ds.join(u, v))
            return "not a tree: edge " + edge_str(u, v) + " closes a cycle";
    // No cycle, so more than n-1 edges is impossible here; fewer means the
    // graph cannot be connected.
    if (static_cast<int>(draft.edges.size()) != n - 1)
        return "not a tree: disconnected";

    if (static_cast<int>(draft.labels.size()) != n)
        return "expected one label set per vertex";
    for (int v = 0; v < n; ++v) {
        std::vector<std::string> toks = draft.labels[v];
        for (const auto& t : toks)
            if (!valid_token(t))
                return "invalid label token at vertex " + std::to_string(v);
        std::sort(toks.begin(), toks.end());
        auto dup = std::adjacent_find(toks.begin(), toks.end());
        if (dup != toks.end())
            return "duplicate label '" + *dup + "' at vertex " + std::to_string(v);
    }
    return std::nullopt;
}

CPInstance CPInstance::build(const CPDraft& draft) {
    if (auto diag = validate(draft)) throw ValidationError(*diag);

    CPInstance inst;
    inst.n_ = draft.n;

    inst.edges_.reserve(draft.edges.size());
    for (const auto& [u, v] : draft.edges) inst.edges_.push_back(make_edge(u, v));
    std::sort(inst.edges_.begin(), inst.edges_.end());

    inst.adj_.resize(inst.n_);
    for (const Edge& e : inst.edges_) {
        inst.adj_[e.u].push_back(e.v);
        inst.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : inst.adj_) std::sort(nb.begin(), nb.end());

    for (const auto& toks : draft.labels)
        inst.tokens_.insert(inst.tokens_.end(), toks.begin(), toks.end());
    std::sort(inst.tokens_.begin(), inst.tokens_.end());
    inst.tokens_.erase(std::unique(inst.tokens_.begin(), inst.tokens_.end()),
                       inst.tokens_.end());

    std::unordered_map<std::string, LabelId> id_of;
    id_of.reserve(inst.tokens_.size());
    for (std::size_t i = 0; i < inst.tokens_.size(); ++i)
        id_of.emplace(inst.tokens_[i], static_cast<LabelId>(i));

    inst.sets_.assign(inst.n_, LabelSet(inst.tokens_.size()));
    inst.sorted_.resize(inst.n_);
    for (int v = 0; v < inst.n_; ++v) {
        for (const auto& t : draft.labels[v]) {
            LabelId id = id_of.at(t);
            inst.sets_[v].set(static_cast<std::size_t>(id));
            inst.sorted_[v].push_back(id);
        }
        std::sort(inst.sorted_[v].begin(), inst.sorted_[v].end());
    }
    return inst;
}

LabelId CPInstance::label_id(std::string_view token) const {
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end() || *it != token) return -1;
    return static_cast<LabelId>(it - tokens_.begin());
}

BenefitReport evaluate(const CPInstance& instance, const Assignment& assignment) {
    const int n = instance.vertex_count();
    if (static_cast<int>(assignment.perms.size()) != n)
        throw FeasibilityError("invalid assignment: expected " + std::to_string(n) +
                               " permutations, got " +
                               std::to_string(assignment.perms.size()));
    for (int v = 0; v < n; ++v) {
        const auto& p = assignment.perms[v];
        if (p.size() != instance.labels_of(v).size())
            throw FeasibilityError("invalid assignment: vertex " + std::to_string(v) +
                                   " permutation has wrong length");
        LabelSet seen(instance.alphabet_size());
        for (LabelId id : p) {
            if (id < 0 || id >= instance.alphabet_size() || seen.test(id))
                throw FeasibilityError("invalid assignment: vertex " + std::to_string(v) +
                                       " permutation is not a permutation of its label set");
            seen.set(id);
        }
        if (seen != instance.label_set(v))
            throw FeasibilityError("invalid assignment: vertex " + std::to_string(v) +
                                   " permutation is not a permutation of its label set");
    }

    BenefitReport report;
    report.per_edge.reserve(instance.edges().size());
    for (const Edge& e : instance.edges()) {
        int b = static_cast<int>(lcp_length(assignment.perms[e.u], assignment.perms[e.v]));
        report.per_edge.push_back(b);
        report.total += b;
    }
    return report;
}

namespace {

struct Line {
    int number;  // 1-based
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
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
        if (toks.empty() || toks[0][0] == '#') continue;
        out.push_back({number, std::move(toks)});
        if (end == text.size()) break;
    }
    return out;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number,
                         std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

}  // namespace

CPDraft parse_cp_draft(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(0, "empty input, expected 'cp <n>' header");

    const Line& header = lines[0];
    if (header.tokens[0] != "cp" || header.tokens.size() != 2)
        throw ParseError(header.number, "expected 'cp <n>' header");
    int n = parse_int(header, header.tokens[1], "vertex count");
    if (n < 0) throw ParseError(header.number, "vertex count must be at least 1");

    CPDraft draft;
    draft.n = n;
    draft.labels.resize(static_cast<std::size_t>(n));
    std::vector<char> have_labels(static_cast<std::size_t>(n), 0);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& toks = line.tokens;
        if (toks[0] == "edge") {
            if (toks.size() != 3)
                throw ParseError(line.number, "expected 'edge <u> <v>'");
            int u = parse_int(line, toks[1], "vertex id");
            int v = parse_int(line, toks[2], "vertex id");
            draft.edges.emplace_back(u, v);
        } else if (toks[0] == "labels") {
            if (toks.size() < 2)
                throw ParseError(line.number, "expected 'labels <v> <tok> ...'");
            int v = parse_int(line, toks[1], "vertex id");
            if (v < 0 || v >= n)
                throw ParseError(line.number, "vertex id " + std::to_string(v) +
                                                  " out of range (n=" + std::to_string(n) + ")");
            if (have_labels[v])
                throw ParseError(line.number,
                                 "duplicate labels line for vertex " + std::to_string(v));
            have_labels[v] = 1;
            draft.labels[v].assign(toks.begin() + 2, toks.end());
        } else {
            throw ParseError(line.number, "expected 'edge' or 'labels' line, got '" +
                                              toks[0] + "'");
        }
    }

    for (int v = 0; v < n; ++v)
        if (!have_labels[v])
            throw ParseError(0, "missing labels line for vertex " + std::to_string(v));
    return draft;
}

CPInstance parse_cp(std::string_view text) {
    return CPInstance::build(parse_cp_draft(text));
}

std::string serialize_cp(const CPInstance& instance) {
    std::string out = "cp " + std::to_string(instance.vertex_count()) + "\n";
    for (const Edge& e : instance.edges())
        out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    for (int v = 0; v < instance.vertex_count(); ++v) {
        out += "labels " + std::to_string(v);
        for (LabelId id : instance.labels_of(v)) out += " " + instance.token(id);
        out += "\n";
    }
    return out;
}

std::string serialize_assignment(const CPInstance& instance, const Assignment& assignment) {
    BenefitReport report = evaluate(instance, assignment);
    std::string out = "value " + std::to_string(report.total) + "\n";
    for (int v = 0; v < instance.vertex_count(); ++v) {
        out += "perm " + std::to_string(v);
        for (LabelId id : assignment.perms[v]) out += " " + instance.token(id);
        out += "\n";
    }
    return out;
}

}  // namespace cprefix
