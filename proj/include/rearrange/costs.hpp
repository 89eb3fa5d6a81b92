#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include "rearrange/breakpoints.hpp"
#include "rearrange/operations.hpp"
#include "rearrange/rational.hpp"

namespace rearrange {

// A cost scheme is either uniform (every operation costs 1), two-tier
// (w1 for reversals, w2 for everything else), or fragmentation-weighted
// (f0..f3 indexed by the operation's fragmentation count). Weights are exact
// rationals. An absent w1 encodes "no reversal weight" (the reversal-free
// models). Checked schemes enforce the ratio caps every hardness result
// assumes: w2/w1 <= 3/2, f3/f2 <= 3/2, f3/f1 <= 3. Unchecked construction
// keeps positivity but lifts the ratio caps, for exploration outside proven
// territory.
struct CostScheme {
    enum class Variant { Uniform, TwoTier, Fragmentation };

    Variant variant = Variant::Uniform;
    std::optional<Rational> w1;
    Rational w2{1};
    std::array<Rational, 4> f{Rational{0}, Rational{1}, Rational{2}, Rational{3}};
    bool ratio_checked = true;

    static CostScheme uniform() { return CostScheme{}; }

    static CostScheme two_tier(std::optional<Rational> w1, Rational w2, bool checked = true) {
        CostScheme s;
        s.variant = Variant::TwoTier;
        s.w1 = w1;
        s.w2 = w2;
        s.ratio_checked = checked;
        if (s.w2 <= 0) throw SchemeError("w2 must be positive");
        if (s.w1 && *s.w1 <= 0) throw SchemeError("w1 must be positive when present");
        if (checked && s.w1 && s.w2 / *s.w1 > Rational(3, 2))
            throw SchemeError("w2/w1 = " + format_rational(s.w2 / *s.w1) + " exceeds 3/2");
        return s;
    }

    static CostScheme fragmentation(Rational f0, Rational f1, Rational f2, Rational f3, bool checked = true) {
        CostScheme s;
        s.variant = Variant::Fragmentation;
        s.f = {f0, f1, f2, f3};
        s.ratio_checked = checked;
        if (f0 < 0) throw SchemeError("f0 must be non-negative");
        if (f1 <= 0 || f2 <= 0 || f3 <= 0) throw SchemeError("f1, f2, f3 must be positive");
        if (checked) {
            if (f3 / f2 > Rational(3, 2))
                throw SchemeError("f3/f2 = " + format_rational(f3 / f2) + " exceeds 3/2");
            if (f3 / f1 > Rational(3))
                throw SchemeError("f3/f1 = " + format_rational(f3 / f1) + " exceeds 3");
        }
        return s;
    }

    /// Canonical literal: "uniform", "w:2,3" / "w:-,3", or "f:0,1,2,3".
    std::string str() const {
        switch (variant) {
            case Variant::Uniform: return "uniform";
            case Variant::TwoTier:
                return "w:" + (w1 ? format_rational(*w1) : std::string("-")) + "," + format_rational(w2);
            case Variant::Fragmentation:
                return "f:" + format_rational(f[0]) + "," + format_rational(f[1]) + "," + format_rational(f[2]) +
                       "," + format_rational(f[3]);
        }
        return "uniform";
    }

    static CostScheme parse(std::string_view text, bool checked = true) {
        if (text == "uniform") return uniform();
        auto split = [](std::string_view body) {
            std::vector<std::string_view> parts;
            std::size_t pos = 0;
            while (true) {
                auto comma = body.find(',', pos);
                if (comma == std::string_view::npos) {
                    parts.push_back(body.substr(pos));
                    break;
                }
                parts.push_back(body.substr(pos, comma - pos));
                pos = comma + 1;
            }
            return parts;
        };
        if (text.rfind("w:", 0) == 0) {
            auto parts = split(text.substr(2));
            if (parts.size() != 2) throw ParseError("two-tier scheme needs w:<w1>,<w2>");
            std::optional<Rational> w1;
            if (parts[0] != "-" && parts[0] != "inf") w1 = parse_rational(parts[0]);
            return two_tier(w1, parse_rational(parts[1]), checked);
        }
        if (text.rfind("f:", 0) == 0) {
            auto parts = split(text.substr(2));
            if (parts.size() != 4) throw ParseError("fragmentation scheme needs f:<f0>,<f1>,<f2>,<f3>");
            return fragmentation(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                                 parse_rational(parts[3]), checked);
        }
        throw ParseError("unknown scheme literal '" + std::string(text) + "'");
    }
};

// A rearrangement model: the allowed operation kinds, the signedness they act
// on, and a cost scheme.
struct Model {
    std::string name;
    std::set<OpKind> kinds;
    Signedness signedness = Signedness::Unsigned;
    CostScheme scheme;

    bool has_reversals() const { return kinds.count(OpKind::Reversal) > 0; }
    bool transpositions_only() const { return kinds.size() == 1 && kinds.count(OpKind::Transposition) == 1; }
};

namespace detail {

inline std::set<OpKind> kinds_for_model_name(const std::string& base) {
    using K = OpKind;
    if (base == "T" || base == "Mf1") return {K::Transposition};
    if (base == "Mf2" || base == "Mf3") return {K::Reversal, K::Transposition};
    if (base == "M1") return {K::Transposition, K::Transreversal1, K::Transreversal2};
    if (base == "M2") return {K::Reversal, K::Transposition, K::Transreversal1, K::Transreversal2};
    if (base == "M3") return {K::Transposition, K::RevRev};
    if (base == "M4") return {K::Reversal, K::Transposition, K::RevRev};
    if (base == "M5") return {K::Transposition, K::Transreversal1, K::Transreversal2, K::RevRev};
    if (base == "M6")
        return {K::Reversal, K::Transposition, K::Transreversal1, K::Transreversal2, K::RevRev};
    throw UnknownModelError("unknown model '" + base + "'");
}

}  // namespace detail

/// Builds a model from user-supplied parts, enforcing the scheme/model
/// compatibility rules shared with the named models.
inline Model make_model(std::string name, std::set<OpKind> kinds, Signedness signedness, CostScheme scheme) {
    Model m{std::move(name), std::move(kinds), signedness, std::move(scheme)};
    if (m.kinds.empty()) throw UnknownModelError("model must allow at least one operation kind");
    if (m.scheme.variant == CostScheme::Variant::TwoTier) {
        if (!m.has_reversals())
            m.scheme.w1.reset();  // reversal-free models carry no reversal weight (w1 = infinity)
        else if (!m.scheme.w1)
            throw SchemeError("model '" + m.name + "' includes reversals but the scheme has no w1");
    }
    return m;
}

/// Named models. CLI names: T, M1..M6 (unsigned), M1s..M6s (signed; the paper
/// bars), Mf1..Mf3 (the fragmentation-weighted models). "M1bar".."M6bar" are
/// accepted as aliases for M1s..M6s.
inline Model model_from_name(std::string name, CostScheme scheme) {
    for (int d = 1; d <= 6; ++d) {
        std::string bar = "M" + std::to_string(d) + "bar";
        if (name == bar) name = "M" + std::to_string(d) + "s";
    }
    std::string base = name;
    Signedness signedness = Signedness::Unsigned;
    if (base.size() == 3 && base[0] == 'M' && base[2] == 's') {
        base = base.substr(0, 2);
        if (base == "Mf") throw UnknownModelError("unknown model '" + name + "'");
        signedness = Signedness::Signed;
    }
    if (name == "Mf2") signedness = Signedness::Signed;
    std::set<OpKind> kinds = detail::kinds_for_model_name(base);
    bool is_frag_model = name == "Mf1" || name == "Mf2" || name == "Mf3";
    if (scheme.variant == CostScheme::Variant::Fragmentation && !is_frag_model)
        throw SchemeError("fragmentation schemes are only defined for the Mf models");
    return make_model(name, std::move(kinds), signedness, std::move(scheme));
}

/// The breakpoint kind a model's bounds and proofs use: signed models count
/// signed reversal breakpoints; the transpositions-only unsigned model counts
/// transposition breakpoints; every other unsigned model counts unsigned
/// reversal breakpoints. Fragmentation schemes select the frag variants.
inline BreakpointKind breakpoint_kind_for_model(const Model& m) {
    bool frag = m.scheme.variant == CostScheme::Variant::Fragmentation;
    if (m.signedness == Signedness::Signed || m.transpositions_only())
        return frag ? BreakpointKind::TranspositionFrag : BreakpointKind::Transposition;
    return frag ? BreakpointKind::UnsignedReversalFrag : BreakpointKind::UnsignedReversal;
}

/// Cost of one rearrangement of size-n permutations under the scheme.
inline Rational cost(const Rearrangement& r, int n, const CostScheme& scheme) {
    switch (scheme.variant) {
        case CostScheme::Variant::Uniform: return Rational(1);
        case CostScheme::Variant::TwoTier:
            if (r.kind == OpKind::Reversal) {
                if (!scheme.w1) throw NoWeightError("reversal costed under a scheme with no reversal weight");
                return *scheme.w1;
            }
            return scheme.w2;
        case CostScheme::Variant::Fragmentation:
            return scheme.f[static_cast<std::size_t>(fragmentation_count(r, n))];
    }
    return Rational(1);
}

inline Rational sequence_cost(const OperationSequence& s, const CostScheme& scheme) {
    Rational total{0};
    for (const auto& r : s.ops) total += cost(r, s.n, scheme);
    return total;
}

/// Minimum cost per removed breakpoint under the model: min{w1/2, w2/3} for
/// weighted models (w2/3 when reversals are absent), f3/3 for fragmentation
/// models, 1/3 under uniform costs.
inline Rational removal_ratio(const Model& m) {
    switch (m.scheme.variant) {
        case CostScheme::Variant::Uniform: return Rational(1, 3);
        case CostScheme::Variant::TwoTier: {
            Rational per_trans = m.scheme.w2 / 3;
            if (!m.scheme.w1) return per_trans;
            Rational per_rev = *m.scheme.w1 / 2;
            return per_rev < per_trans ? per_rev : per_trans;
        }
        case CostScheme::Variant::Fragmentation: return m.scheme.f[3] / 3;
    }
    return Rational(1, 3);
}

/// Admissible lower bound on the sorting distance: a sorting sequence must
/// remove every breakpoint, and no unit of cost removes breakpoints at a
/// better rate than removal_ratio allows.
inline Rational lower_bound(const Permutation& p, const Model& m) {
    return removal_ratio(m) * breakpoint_count(p, breakpoint_kind_for_model(m));
}

}  // namespace rearrange
