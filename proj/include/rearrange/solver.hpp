#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "rearrange/costs.hpp"

namespace rearrange {

// A replayable proof of a claimed distance: the sequence, its exact total
// cost, and the per-step cost and breakpoint delta under the model's own
// breakpoint kind. Certificates are re-verified before they are returned.
struct StepRecord {
    Rearrangement op;
    Rational cost;
    int delta_b = 0;
};

struct SortingCertificate {
    Permutation start;
    Model model;
    OperationSequence sequence;
    Rational total_cost{0};
    std::vector<StepRecord> per_step;
};

struct Infeasible {
    Rational budget;
};

using DistanceResult = std::variant<SortingCertificate, Infeasible>;

inline bool is_feasible(const DistanceResult& r) { return std::holds_alternative<SortingCertificate>(r); }

inline const SortingCertificate& certificate(const DistanceResult& r) {
    if (!is_feasible(r)) throw Error("no certificate: optimum exceeds the given budget");
    return std::get<SortingCertificate>(r);
}

struct SearchLimits {
    int max_n_unsigned = 10;
    int max_n_signed = 7;
};

/// Replays and re-checks every certificate invariant: the sequence sorts the
/// start permutation, per-step costs and breakpoint deltas are as recorded,
/// the total matches, and the deltas telescope to b(start).
inline void verify_certificate(const SortingCertificate& cert) {
    const BreakpointKind kind = breakpoint_kind_for_model(cert.model);
    if (cert.per_step.size() != cert.sequence.ops.size()) throw Error("certificate: step records out of sync");
    Permutation cur = cert.start;
    Rational total{0};
    int delta_total = 0;
    for (std::size_t t = 0; t < cert.sequence.ops.size(); ++t) {
        const Rearrangement& op = cert.sequence.ops[t];
        if (!(op == cert.per_step[t].op)) throw Error("certificate: step operation mismatch");
        Rational c = cost(op, cert.sequence.n, cert.model.scheme);
        if (c != cert.per_step[t].cost) throw Error("certificate: step cost mismatch");
        int db = delta_b(cur, op, kind);
        if (db != cert.per_step[t].delta_b) throw Error("certificate: step breakpoint delta mismatch");
        total += c;
        delta_total += db;
        cur = apply(cur, op);
    }
    if (!cur.is_identity()) throw Error("certificate: sequence does not sort the permutation");
    if (total != cert.total_cost) throw Error("certificate: total cost mismatch");
    if (delta_total != breakpoint_count(cert.start, kind))
        throw Error("certificate: breakpoint deltas do not telescope to b(start)");
}

namespace detail {

constexpr int kMaxPackedN = 16;

struct PackedState {
    std::array<std::int8_t, kMaxPackedN> v{};
    friend bool operator==(const PackedState&, const PackedState&) = default;
};

struct PackedStateHash {
    std::size_t operator()(const PackedState& s) const {
        std::uint64_t a = 0, b = 0;
        std::memcpy(&a, s.v.data(), 8);
        std::memcpy(&b, s.v.data() + 8, 8);
        std::uint64_t h = (a ^ 0x9E3779B97F4A7C15ull) * 0xBF58476D1CE4E5B9ull;
        h ^= (b + 0x94D049BB133111EBull) + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

inline PackedState pack(const Permutation& p) {
    PackedState s;
    for (int t = 0; t < p.size(); ++t) s.v[static_cast<std::size_t>(t)] = static_cast<std::int8_t>(p.at(t + 1));
    return s;
}

inline Permutation unpack(const PackedState& s, int n, Signedness sgn) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) e[static_cast<std::size_t>(t)] = s.v[static_cast<std::size_t>(t)];
    return Permutation(sgn, std::move(e));
}

inline int packed_value(const PackedState& s, int n, int pos) {
    if (pos == 0) return 0;
    if (pos == n + 1) return n + 1;
    return s.v[static_cast<std::size_t>(pos - 1)];
}

inline bool packed_pair_valid(int t, int n, BreakpointKind kind) {
    return is_frag_kind(kind) ? (t >= 1 && t <= n - 1) : (t >= 0 && t <= n);
}

inline int packed_breakpoints(const PackedState& s, int n, BreakpointKind kind) {
    int count = 0;
    int lo = is_frag_kind(kind) ? 1 : 0;
    int hi = is_frag_kind(kind) ? n - 1 : n;
    for (int t = lo; t <= hi; ++t)
        if (is_breakpoint_pair(packed_value(s, n, t), packed_value(s, n, t + 1), kind)) ++count;
    return count;
}

// O(1) breakpoint delta from the cut junctions alone. Valid whenever the
// operation does not invert a segment, or the breakpoint predicate is
// insensitive to inversion of that segment's interior (the absolute-gap
// kinds, and the signed-gap kinds on signed input, where inversion flips
// both signs of each interior pair). The remaining combination (signed-gap
// kind, unsigned input, inverting operation) falls back to a recount; no
// model pairs those.
inline int packed_delta(const PackedState& s, int n, BreakpointKind kind, Signedness sgn,
                        const Rearrangement& r) {
    const bool fast = !r.inverts_segment() || is_unsigned_reversal_kind(kind) || sgn == Signedness::Signed;
    if (!fast) {
        PackedState next;
        apply_op_raw(s.v.data(), next.v.data(), n, r, sgn);
        return packed_breakpoints(s, n, kind) - packed_breakpoints(next, n, kind);
    }
    auto val = [&](int pos) { return packed_value(s, n, pos); };
    auto bp = [&](int a, int b) { return is_breakpoint_pair(a, b, kind); };
    const int neg = (sgn == Signedness::Signed && r.inverts_segment()) ? -1 : 1;
    int removed = 0, created = 0;
    if (r.kind == OpKind::Reversal) {
        const int i = r.i, j = r.j;
        if (packed_pair_valid(i - 1, n, kind)) {
            removed += bp(val(i - 1), val(i));
            created += bp(val(i - 1), neg * val(j));
        }
        if (packed_pair_valid(j, n, kind)) {
            removed += bp(val(j), val(j + 1));
            created += bp(neg * val(i), val(j + 1));
        }
        return removed - created;
    }
    const int i = r.i, j = r.j, k = r.k;
    int left_a = 0, left_b = 0, mid_a = 0, mid_b = 0, right_a = 0, right_b = 0;
    int mid_pos = 0;
    switch (r.kind) {
        case OpKind::Transposition:
            left_a = val(i - 1), left_b = val(j);
            mid_a = val(k - 1), mid_b = val(i);
            right_a = val(j - 1), right_b = val(k);
            mid_pos = i - 1 + (k - j);
            break;
        case OpKind::Transreversal1:
            left_a = val(i - 1), left_b = val(j);
            mid_a = val(k - 1), mid_b = neg * val(j - 1);
            right_a = neg * val(i), right_b = val(k);
            mid_pos = i - 1 + (k - j);
            break;
        case OpKind::Transreversal2:
            left_a = val(i - 1), left_b = neg * val(k - 1);
            mid_a = neg * val(j), mid_b = val(i);
            right_a = val(j - 1), right_b = val(k);
            mid_pos = i - 1 + (k - j);
            break;
        case OpKind::RevRev:
            left_a = val(i - 1), left_b = neg * val(j - 1);
            mid_a = neg * val(i), mid_b = neg * val(k - 1);
            right_a = neg * val(j), right_b = val(k);
            mid_pos = i - 1 + (j - i);
            break;
        case OpKind::Reversal: break;  // handled above
    }
    if (packed_pair_valid(i - 1, n, kind)) {
        removed += bp(val(i - 1), val(i));
        created += bp(left_a, left_b);
    }
    if (packed_pair_valid(mid_pos, n, kind)) {
        removed += bp(val(j - 1), val(j));  // the cut at (j-1, j) maps to the new middle junction
        created += bp(mid_a, mid_b);
    }
    if (packed_pair_valid(k - 1, n, kind)) {
        removed += bp(val(k - 1), val(k));
        created += bp(right_a, right_b);
    }
    return removed - created;
}

inline long long scaled(const Rational& q, long long scale) {
    return q.numerator() * (scale / q.denominator());
}

}  // namespace rearrange::detail

/// Exact minimum-cost sorting by best-first search on exact rational
/// g + lower-bound heuristic, with a closed set keyed by minimal g and
/// deterministic (g, enumeration-order) tie-breaking. With a budget, returns
/// Infeasible when the optimum exceeds it. Zero-cost edges (f0 = 0 complete
/// reversals) are safe: the state space is finite and the closed set
/// prevents revisits.
inline DistanceResult exact_distance(const Permutation& p, const Model& model,
                                     std::optional<Rational> budget = std::nullopt,
                                     SearchLimits limits = {}) {
    using namespace detail;
    if (p.signedness() != model.signedness)
        throw KindError("permutation signedness does not match model '" + model.name + "'");
    const int n = p.size();
    const int cap = model.signedness == Signedness::Signed ? limits.max_n_signed : limits.max_n_unsigned;
    if (n > cap)
        throw SizeError("n=" + std::to_string(n) + " exceeds the configured solver limit " + std::to_string(cap));
    if (n > kMaxPackedN)
        throw SizeError("n=" + std::to_string(n) + " exceeds the solver engine cap " + std::to_string(kMaxPackedN));

    const BreakpointKind kind = breakpoint_kind_for_model(model);
    const std::vector<Rearrangement> ops = enumerate_operations(model.kinds, model.signedness, n);

    // All search arithmetic is exact: costs and the heuristic are scaled to a
    // common integer denominator.
    const Rational ratio = removal_ratio(model);
    long long scale = ratio.denominator();
    std::vector<Rational> op_cost(ops.size());
    for (std::size_t t = 0; t < ops.size(); ++t) {
        op_cost[t] = cost(ops[t], n, model.scheme);
        scale = std::lcm(scale, op_cost[t].denominator());
    }
    if (budget) scale = std::lcm(scale, budget->denominator());
    std::vector<long long> op_cost_scaled(ops.size());
    for (std::size_t t = 0; t < ops.size(); ++t) op_cost_scaled[t] = scaled(op_cost[t], scale);
    const long long h_factor = scaled(ratio, scale);
    const std::optional<long long> budget_scaled =
        budget ? std::optional<long long>(scaled(*budget, scale)) : std::nullopt;

    struct Node {
        long long g = 0;
        PackedState parent{};
        std::int32_t parent_op = -1;
        std::int16_t b = 0;
        bool closed = false;
    };
    struct Entry {
        long long f, g;
        std::uint64_t seq;
        PackedState state;
    };
    struct EntryGreater {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.f != b.f) return a.f > b.f;
            if (a.g != b.g) return a.g > b.g;
            return a.seq > b.seq;
        }
    };

    std::unordered_map<PackedState, Node, PackedStateHash> nodes;
    std::priority_queue<Entry, std::vector<Entry>, EntryGreater> open;
    std::uint64_t seq = 0;

    const PackedState start = pack(p);
    const PackedState goal = pack(Permutation::identity(n, model.signedness));
    const int b0 = packed_breakpoints(start, n, kind);
    {
        long long f0 = static_cast<long long>(b0) * h_factor;
        if (!budget_scaled || f0 <= *budget_scaled) {
            nodes[start] = Node{0, {}, -1, static_cast<std::int16_t>(b0), false};
            open.push(Entry{f0, 0, seq++, start});
        }
    }

    while (!open.empty()) {
        Entry e = open.top();
        open.pop();
        Node& node = nodes[e.state];
        if (e.g > node.g || node.closed) continue;
        node.closed = true;
        if (e.state == goal) {
            // Reconstruct, then re-derive costs and deltas at the value level.
            std::vector<Rearrangement> path;
            PackedState cur = e.state;
            while (true) {
                const Node& nd = nodes[cur];
                if (nd.parent_op < 0) break;
                path.push_back(ops[static_cast<std::size_t>(nd.parent_op)]);
                cur = nd.parent;
            }
            std::reverse(path.begin(), path.end());
            SortingCertificate cert{p, model, OperationSequence{path, n}, Rational{0}, {}};
            Permutation replay = p;
            for (const auto& op : path) {
                Rational c = cost(op, n, model.scheme);
                int db = delta_b(replay, op, kind);
                cert.per_step.push_back(StepRecord{op, c, db});
                cert.total_cost += c;
                replay = apply(replay, op);
            }
            if (cert.total_cost * scale != Rational(e.g))
                throw Error("solver: scaled cost accounting diverged from exact replay");
            verify_certificate(cert);
            return cert;
        }
        for (std::size_t t = 0; t < ops.size(); ++t) {
            const int db = packed_delta(e.state, n, kind, model.signedness, ops[t]);
            const long long g2 = e.g + op_cost_scaled[t];
            const long long b2 = node.b - db;
            const long long f2 = g2 + b2 * h_factor;
            if (budget_scaled && f2 > *budget_scaled) continue;
            PackedState next;
            apply_op_raw(e.state.v.data(), next.v.data(), n, ops[t], model.signedness);
            auto it = nodes.find(next);
            if (it == nodes.end() || g2 < it->second.g) {
                nodes[next] =
                    Node{g2, e.state, static_cast<std::int32_t>(t), static_cast<std::int16_t>(b2), false};
                open.push(Entry{f2, g2, seq++, next});
            }
        }
    }
    if (budget) return Infeasible{*budget};
    throw Error("no sorting sequence exists for this permutation under model '" + model.name + "'");
}

/// Plain unweighted breadth-first distance, written against the value-level
/// apply so it shares nothing with the best-first engine. Ground truth for
/// exact_distance under uniform costs.
inline int bfs_oracle(const Permutation& p, const Model& model, int max_n = 7) {
    if (p.signedness() != model.signedness)
        throw KindError("permutation signedness does not match model '" + model.name + "'");
    if (p.size() > max_n)
        throw SizeError("n=" + std::to_string(p.size()) + " exceeds the BFS oracle limit " +
                        std::to_string(max_n));
    if (p.is_identity()) return 0;
    const auto ops = enumerate_operations(model.kinds, model.signedness, p.size());
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
            return h;
        }
    };
    std::unordered_set<std::vector<int>, VecHash> visited;
    std::vector<Permutation> frontier{p};
    visited.insert(p.elements());
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Permutation> next_frontier;
        for (const auto& cur : frontier) {
            for (const auto& op : ops) {
                Permutation next = apply(cur, op);
                if (next.is_identity()) return depth;
                if (visited.insert(next.elements()).second) next_frontier.push_back(std::move(next));
            }
        }
        frontier = std::move(next_frontier);
    }
    throw Error("no sorting sequence exists for this permutation under model '" + model.name + "'");
}

/// SB3T: can p be sorted by exactly b_t(p)/3 transpositions? Rejects
/// immediately when 3 does not divide b_t(p) (each transposition removes at
/// most 3 breakpoints), otherwise decides by budgeted exact search.
inline bool sb3t_decide(const Permutation& p, SearchLimits limits = {}) {
    if (p.signedness() != Signedness::Unsigned) throw KindError("SB3T is defined for unsigned permutations");
    const int b = breakpoint_count(p, BreakpointKind::Transposition);
    if (b % 3 != 0) return false;
    Model model = model_from_name("T", CostScheme::uniform());
    return is_feasible(exact_distance(p, model, Rational(b / 3), limits));
}

inline CostScheme canonical_fragmentation_scheme() {
    return CostScheme::fragmentation(Rational(0), Rational(1), Rational(2), Rational(3));
}

/// FWST: is the fragmentation-weighted transposition distance exactly
/// f3 * b^f_t(p) / 3? The distance never beats that bound, so a budgeted
/// search at the bound decides equality.
inline bool fwst_decide(const Permutation& p, const CostScheme& scheme = canonical_fragmentation_scheme(),
                        SearchLimits limits = {}) {
    if (p.signedness() != Signedness::Unsigned) throw KindError("FWST is defined for unsigned permutations");
    if (scheme.variant != CostScheme::Variant::Fragmentation)
        throw SchemeError("FWST needs a fragmentation scheme");
    Model model = model_from_name("Mf1", scheme);
    Rational bound = lower_bound(p, model);
    return is_feasible(exact_distance(p, model, bound, limits));
}

}  // namespace rearrange
