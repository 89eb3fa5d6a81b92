#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rearrange/permutation.hpp"

namespace rearrange {

enum class OpKind { Reversal, Transposition, Transreversal1, Transreversal2, RevRev };

inline const char* op_kind_tag(OpKind k) {
    switch (k) {
        case OpKind::Reversal: return "r";
        case OpKind::Transposition: return "t";
        case OpKind::Transreversal1: return "tr1";
        case OpKind::Transreversal2: return "tr2";
        case OpKind::RevRev: return "rr";
    }
    return "?";
}

// One rearrangement. Reversals carry cut indices (i, j); the three-cut kinds
// carry (i, j, k). All indices are 1-based; for three-cut kinds the two
// swapped/inverted segments are positions [i, j-1] and [j, k-1].
struct Rearrangement {
    OpKind kind;
    int i = 0;
    int j = 0;
    int k = 0;  // unused (0) for reversals

    bool is_three_cut() const { return kind != OpKind::Reversal; }
    bool inverts_segment() const { return kind != OpKind::Transposition; }
    friend bool operator==(const Rearrangement&, const Rearrangement&) = default;
};

inline Rearrangement reversal(int i, int j) { return {OpKind::Reversal, i, j, 0}; }
inline Rearrangement transposition(int i, int j, int k) { return {OpKind::Transposition, i, j, k}; }
inline Rearrangement transreversal1(int i, int j, int k) { return {OpKind::Transreversal1, i, j, k}; }
inline Rearrangement transreversal2(int i, int j, int k) { return {OpKind::Transreversal2, i, j, k}; }
inline Rearrangement revrev(int i, int j, int k) { return {OpKind::RevRev, i, j, k}; }

struct OperationSequence {
    std::vector<Rearrangement> ops;
    int n = 0;  // size of the permutations the sequence targets
};

// prefix / suffix / complete are mutually exclusive: an operation touching
// both ends classifies as complete, not as prefix or suffix.
enum class Extent { Prefix, Suffix, Complete, Internal };

inline const char* to_string(Extent e) {
    switch (e) {
        case Extent::Prefix: return "prefix";
        case Extent::Suffix: return "suffix";
        case Extent::Complete: return "complete";
        case Extent::Internal: return "internal";
    }
    return "?";
}

/// Checks index validity of r for size n under the given signedness.
/// Unsigned reversals require i < j; a would-be rho(i,i) is rejected as a
/// KindError (it is the sign-flipping signed reversal, not a no-op).
inline void validate_op(const Rearrangement& r, int n, Signedness s) {
    if (r.kind == OpKind::Reversal) {
        if (!(1 <= r.i && r.i <= r.j && r.j <= n))
            throw IndexError("reversal indices (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                             ") out of range for n=" + std::to_string(n));
        if (r.i == r.j && s == Signedness::Unsigned)
            throw KindError("reversal with i = j is only defined for signed permutations");
    } else {
        if (!(1 <= r.i && r.i < r.j && r.j < r.k && r.k <= n + 1))
            throw IndexError(std::string(op_kind_tag(r.kind)) + " indices (" + std::to_string(r.i) + "," +
                             std::to_string(r.j) + "," + std::to_string(r.k) + ") out of range for n=" +
                             std::to_string(n));
    }
}

namespace detail {

// Applies r to the n elements at src, writing the result to dst. Shared by
// the value-level apply() and the solver's packed states so there is a single
// implementation of the operation semantics. src and dst must not alias.
template <class T>
inline void apply_op_raw(const T* src, T* dst, int n, const Rearrangement& r, Signedness s) {
    for (int t = 0; t < n; ++t) dst[t] = src[t];
    const bool neg = (s == Signedness::Signed) && r.inverts_segment();
    if (r.kind == OpKind::Reversal) {
        const int i = r.i - 1, j = r.j - 1;
        for (int t = 0; t <= j - i; ++t) dst[i + t] = static_cast<T>(neg ? -src[j - t] : src[j - t]);
        return;
    }
    const int i = r.i - 1, j = r.j - 1, k = r.k - 1;
    const int a = j - i, b = k - j;  // segment lengths
    switch (r.kind) {
        case OpKind::Transposition:
            for (int t = 0; t < b; ++t) dst[i + t] = src[j + t];
            for (int t = 0; t < a; ++t) dst[i + b + t] = src[i + t];
            break;
        case OpKind::Transreversal1:  // B, then A inverted
            for (int t = 0; t < b; ++t) dst[i + t] = src[j + t];
            for (int t = 0; t < a; ++t) dst[i + b + t] = static_cast<T>(neg ? -src[j - 1 - t] : src[j - 1 - t]);
            break;
        case OpKind::Transreversal2:  // B inverted, then A
            for (int t = 0; t < b; ++t) dst[i + t] = static_cast<T>(neg ? -src[k - 1 - t] : src[k - 1 - t]);
            for (int t = 0; t < a; ++t) dst[i + b + t] = src[i + t];
            break;
        case OpKind::RevRev:  // A inverted, then B inverted, no swap
            for (int t = 0; t < a; ++t) dst[i + t] = static_cast<T>(neg ? -src[j - 1 - t] : src[j - 1 - t]);
            for (int t = 0; t < b; ++t) dst[i + a + t] = static_cast<T>(neg ? -src[k - 1 - t] : src[k - 1 - t]);
            break;
        case OpKind::Reversal:
            break;  // handled above
    }
}

}  // namespace detail

/// pi . r, leaving pi unchanged.
inline Permutation apply(const Permutation& p, const Rearrangement& r) {
    validate_op(r, p.size(), p.signedness());
    std::vector<int> dst(static_cast<std::size_t>(p.size()));
    detail::apply_op_raw(p.elements().data(), dst.data(), p.size(), r, p.signedness());
    return Permutation(p.signedness(), std::move(dst));
}

/// Left-to-right composition pi . r1 . r2 ...
inline Permutation apply_sequence(const Permutation& p, const OperationSequence& s) {
    Permutation cur = p;
    for (const auto& r : s.ops) cur = apply(cur, r);
    return cur;
}

/// Every index-valid rearrangement of each requested kind, exactly once, in
/// (kind, i, j, k) ascending order. This order is the tie-break the solver
/// explores in, so it is part of the output contract.
inline std::vector<Rearrangement> enumerate_operations(const std::set<OpKind>& kinds, Signedness s, int n) {
    if (n < 1) throw ValidationError(0, "size must be at least 1");
    std::vector<Rearrangement> out;
    for (OpKind kind : kinds) {
        if (kind == OpKind::Reversal) {
            for (int i = 1; i <= n; ++i)
                for (int j = (s == Signedness::Signed ? i : i + 1); j <= n; ++j) out.push_back(reversal(i, j));
        } else {
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n + 1; ++k) out.push_back({kind, i, j, k});
        }
    }
    return out;
}

inline Extent classify_extent(const Rearrangement& r, int n) {
    const bool at_start = r.i == 1;
    const bool at_end = r.kind == OpKind::Reversal ? r.j == n : r.k == n + 1;
    if (at_start && at_end) return Extent::Complete;
    if (at_start) return Extent::Prefix;
    if (at_end) return Extent::Suffix;
    return Extent::Internal;
}

/// Number of adjacencies the operation breaks, counting only interior
/// position pairs (i, i+1) with 1 <= i < n. Reversals: complete 0,
/// prefix/suffix 1, internal 2. Three-cut kinds: complete 1, prefix/suffix 2,
/// internal 3.
inline int fragmentation_count(const Rearrangement& r, int n) {
    int base = r.kind == OpKind::Reversal ? 2 : 3;
    switch (classify_extent(r, n)) {
        case Extent::Complete: return base - 2;
        case Extent::Prefix:
        case Extent::Suffix: return base - 1;
        case Extent::Internal: return base;
    }
    return base;
}

/// The inverse rearrangement, within the same kind family: reversals and
/// revrevs are self-inverse, t(i,j,k)^-1 = t(i, i+k-j, k), and the two
/// transreversal types invert each other.
inline Rearrangement inverse(const Rearrangement& r) {
    switch (r.kind) {
        case OpKind::Reversal:
        case OpKind::RevRev: return r;
        case OpKind::Transposition: return transposition(r.i, r.i + r.k - r.j, r.k);
        case OpKind::Transreversal1: return transreversal2(r.i, r.i + r.k - r.j, r.k);
        case OpKind::Transreversal2: return transreversal1(r.i, r.i + r.k - r.j, r.k);
    }
    return r;
}

inline bool is_complete_reversal(const Rearrangement& r, int n) {
    return r.kind == OpKind::Reversal && r.i == 1 && r.j == n;
}

/// The commuting map pushing a complete reversal past r: for every p,
/// p . (complete reversal) . r  ==  p . mirror(r) . (complete reversal).
/// Defined for reversals and transpositions only (the kinds the
/// normalization lemma covers).
inline Rearrangement mirror_through_complete_reversal(const Rearrangement& r, int n) {
    if (r.kind != OpKind::Reversal && r.kind != OpKind::Transposition)
        throw KindError("mirror is defined for reversals and transpositions only");
    if (is_complete_reversal(r, n))
        throw KindError("mirror operand must not itself be a complete reversal");
    if (r.kind == OpKind::Reversal) return reversal(n - r.j + 1, n - r.i + 1);
    return transposition(n - r.k + 2, n - r.j + 2, n - r.i + 2);
}

/// Rewrites a reversal+transposition sequence into one with the same effect
/// on every permutation of size n that contains at most one complete
/// reversal, placed last. Pairs of complete reversals cancel.
inline OperationSequence normalize_sequence(const OperationSequence& s) {
    OperationSequence out;
    out.n = s.n;
    int pending = 0;  // complete reversals seen so far
    for (const auto& r : s.ops) {
        if (r.kind != OpKind::Reversal && r.kind != OpKind::Transposition)
            throw KindError("normalize is defined for reversal+transposition sequences only");
        if (is_complete_reversal(r, s.n)) {
            ++pending;
            continue;
        }
        out.ops.push_back(pending % 2 == 0 ? r : mirror_through_complete_reversal(r, s.n));
    }
    if (pending % 2 == 1) out.ops.push_back(reversal(1, s.n));
    return out;
}

// ---------------------------------------------------------------------------
// Text form: "r(i,j)", "t(i,j,k)", "tr1(i,j,k)", "tr2(i,j,k)", "rr(i,j,k)";
// sequences are comma-separated.
// ---------------------------------------------------------------------------

inline std::string format_operation(const Rearrangement& r) {
    std::string out = op_kind_tag(r.kind);
    out += '(' + std::to_string(r.i) + ',' + std::to_string(r.j);
    if (r.is_three_cut()) out += ',' + std::to_string(r.k);
    out += ')';
    return out;
}

inline std::string format_operation_sequence(const std::vector<Rearrangement>& ops) {
    std::string out;
    for (std::size_t t = 0; t < ops.size(); ++t) {
        if (t) out += ',';
        out += format_operation(ops[t]);
    }
    return out;
}

namespace detail {

inline Rearrangement parse_operation_at(std::string_view text, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])) && text[pos] != '(') ++pos;
    std::string_view tag = text.substr(start, pos - start);
    OpKind kind;
    if (tag == "r")
        kind = OpKind::Reversal;
    else if (tag == "t")
        kind = OpKind::Transposition;
    else if (tag == "tr1")
        kind = OpKind::Transreversal1;
    else if (tag == "tr2")
        kind = OpKind::Transreversal2;
    else if (tag == "rr")
        kind = OpKind::RevRev;
    else
        throw ParseError("unknown operation tag '" + std::string(tag) + "'");
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' in operation");
    ++pos;
    int vals[3] = {0, 0, 0};
    int count = kind == OpKind::Reversal ? 2 : 3;
    for (int t = 0; t < count; ++t) {
        skip_ws();
        std::size_t d0 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == d0) throw ParseError("expected index in operation");
        vals[t] = std::atoi(std::string(text.substr(d0, pos - d0)).c_str());
        skip_ws();
        char expect = t + 1 == count ? ')' : ',';
        if (pos >= text.size() || text[pos] != expect)
            throw ParseError(std::string("expected '") + expect + "' in operation");
        ++pos;
    }
    return {kind, vals[0], vals[1], vals[2]};
}

}  // namespace detail

inline Rearrangement parse_operation(std::string_view text) {
    std::size_t pos = 0;
    Rearrangement r = detail::parse_operation_at(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("trailing characters after operation");
    return r;
}

inline std::vector<Rearrangement> parse_operation_sequence(std::string_view text) {
    std::vector<Rearrangement> out;
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) return out;
    while (true) {
        out.push_back(detail::parse_operation_at(text, pos));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' between operations");
        ++pos;
    }
    return out;
}

}  // namespace rearrange
