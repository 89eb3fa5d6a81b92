#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "rearrange/operations.hpp"
#include "rearrange/permutation.hpp"

namespace rearrange {

// The four breakpoint counters. The Transposition kind doubles as the signed
// reversal kind. Frag kinds test the same pair conditions but only over the
// interior pairs 1 <= i < n, never consulting the extended frame; the
// non-frag kinds always include the frame pairs (pi_0, pi_1) and
// (pi_n, pi_{n+1}).
enum class BreakpointKind {
    UnsignedReversal,      // |pi_{i+1} - pi_i| != 1, over extended 0..n
    Transposition,         // pi_{i+1} - pi_i != 1, over extended 0..n
    UnsignedReversalFrag,  // |pi_{i+1} - pi_i| != 1, interior 1..n-1
    TranspositionFrag,     // pi_{i+1} - pi_i != 1, interior 1..n-1
};

inline bool is_frag_kind(BreakpointKind k) {
    return k == BreakpointKind::UnsignedReversalFrag || k == BreakpointKind::TranspositionFrag;
}

inline bool is_unsigned_reversal_kind(BreakpointKind k) {
    return k == BreakpointKind::UnsignedReversal || k == BreakpointKind::UnsignedReversalFrag;
}

inline const char* to_string(BreakpointKind k) {
    switch (k) {
        case BreakpointKind::UnsignedReversal: return "rev";
        case BreakpointKind::Transposition: return "trans";
        case BreakpointKind::UnsignedReversalFrag: return "rev-frag";
        case BreakpointKind::TranspositionFrag: return "trans-frag";
    }
    return "?";
}

inline BreakpointKind breakpoint_kind_from_name(const std::string& name) {
    if (name == "rev") return BreakpointKind::UnsignedReversal;
    if (name == "trans") return BreakpointKind::Transposition;
    if (name == "rev-frag") return BreakpointKind::UnsignedReversalFrag;
    if (name == "trans-frag") return BreakpointKind::TranspositionFrag;
    throw ParseError("unknown breakpoint kind '" + name + "' (expected rev|trans|rev-frag|trans-frag)");
}

/// The unsigned-reversal kinds compare absolute gaps and are undefined on
/// signed input.
inline void require_kind_compatible(const Permutation& p, BreakpointKind k) {
    if (p.signedness() == Signedness::Signed && is_unsigned_reversal_kind(k))
        throw KindError("unsigned reversal breakpoints are undefined for signed permutations");
}

namespace detail {

inline bool is_breakpoint_pair(int a, int b, BreakpointKind k) {
    return is_unsigned_reversal_kind(k) ? std::abs(b - a) != 1 : b - a != 1;
}

// Pair index range for kind: pair t is (pi_t, pi_{t+1}).
inline int first_pair(BreakpointKind k) { return is_frag_kind(k) ? 1 : 0; }
inline int last_pair(BreakpointKind k, int n) { return is_frag_kind(k) ? n - 1 : n; }

}  // namespace detail

struct BreakpointProfile {
    BreakpointKind kind;
    int count = 0;
    std::vector<int> positions;  // pair indices t, ascending
};

inline BreakpointProfile count_breakpoints(const Permutation& p, BreakpointKind kind) {
    require_kind_compatible(p, kind);
    BreakpointProfile profile{kind, 0, {}};
    ExtendedView ext(p);
    for (int t = detail::first_pair(kind); t <= detail::last_pair(kind, p.size()); ++t) {
        if (detail::is_breakpoint_pair(ext.at(t), ext.at(t + 1), kind)) {
            ++profile.count;
            profile.positions.push_back(t);
        }
    }
    return profile;
}

inline int breakpoint_count(const Permutation& p, BreakpointKind kind) {
    return count_breakpoints(p, kind).count;
}

/// b(p) - b(p . r): positive when r removes breakpoints.
inline int delta_b(const Permutation& p, const Rearrangement& r, BreakpointKind kind) {
    return breakpoint_count(p, kind) - breakpoint_count(apply(p, r), kind);
}

enum class StripClass { Increasing, Decreasing, Positive, Negative };

inline const char* to_string(StripClass c) {
    switch (c) {
        case StripClass::Increasing: return "increasing";
        case StripClass::Decreasing: return "decreasing";
        case StripClass::Positive: return "positive";
        case StripClass::Negative: return "negative";
    }
    return "?";
}

// A maximal breakpoint-free run. start/end are extended positions for the
// non-frag kinds (0..n+1) and plain positions (1..n) for the frag kinds.
struct Strip {
    int start = 0;
    int end = 0;
    StripClass cls = StripClass::Increasing;
    bool is_singleton = false;
};

/// Ordered strip decomposition. Unsigned singletons are decreasing unless
/// they are the frame elements (pi_0) or (pi_{n+1}); signed strips classify
/// by element sign.
inline std::vector<Strip> strips(const Permutation& p, BreakpointKind kind) {
    require_kind_compatible(p, kind);
    ExtendedView ext(p);
    const int lo = detail::first_pair(kind);            // first position in the domain
    const int hi = detail::last_pair(kind, p.size()) + 1;  // last position in the domain
    std::vector<Strip> out;
    int start = lo;
    for (int t = lo; t <= hi; ++t) {
        bool cut = t == hi || detail::is_breakpoint_pair(ext.at(t), ext.at(t + 1), kind);
        if (!cut) continue;
        Strip strip;
        strip.start = start;
        strip.end = t;
        strip.is_singleton = start == t;
        if (p.signedness() == Signedness::Signed) {
            bool positive = true;
            for (int q = start; q <= t; ++q)
                if (ext.at(q) < 0) positive = false;
            strip.cls = positive ? StripClass::Positive : StripClass::Negative;
        } else if (strip.is_singleton) {
            bool frame = !is_frag_kind(kind) && (start == 0 || start == p.size() + 1);
            strip.cls = frame ? StripClass::Increasing : StripClass::Decreasing;
        } else {
            strip.cls = ext.at(start + 1) > ext.at(start) ? StripClass::Increasing : StripClass::Decreasing;
        }
        out.push_back(strip);
        start = t + 1;
    }
    return out;
}

inline bool only_positive_strips(const Permutation& p, BreakpointKind kind) {
    for (const auto& s : strips(p, kind))
        if (s.cls != StripClass::Positive) return false;
    return true;
}

inline bool only_increasing_strips(const Permutation& p, BreakpointKind kind) {
    for (const auto& s : strips(p, kind))
        if (s.cls != StripClass::Increasing) return false;
    return true;
}

}  // namespace rearrange
