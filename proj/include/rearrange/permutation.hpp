#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rearrange/errors.hpp"

namespace rearrange {

enum class Signedness { Unsigned, Signed };

inline const char* to_string(Signedness s) {
    return s == Signedness::Signed ? "signed" : "unsigned";
}

// A permutation of 1..n, optionally with orientation signs. Immutable value
// type; positions are 1-based throughout the public API (internal storage is
// 0-based and never exposed).
class Permutation {
public:
    Permutation(Signedness signedness, std::vector<int> elements)
        : sign_(signedness), elems_(std::move(elements)) {
        validate();
    }

    static Permutation identity(int n, Signedness s) {
        require_size(n);
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        return Permutation(s, std::move(e));
    }

    // (n n-1 ... 1) unsigned, (-n -(n-1) ... -1) signed.
    static Permutation reverse(int n, Signedness s) {
        require_size(n);
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) e[static_cast<std::size_t>(t)] = (s == Signedness::Signed) ? -(n - t) : (n - t);
        return Permutation(s, std::move(e));
    }

    int size() const { return static_cast<int>(elems_.size()); }
    Signedness signedness() const { return sign_; }
    const std::vector<int>& elements() const { return elems_; }

    /// Element at 1-based position i (1 <= i <= n).
    int at(int i) const { return elems_[static_cast<std::size_t>(i - 1)]; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (at(i) != i) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.sign_ == b.sign_ && a.elems_ == b.elems_;
    }

    /// Text form: "4 3 5 1 2 6" unsigned, "+3 -1 +2" signed (every signed
    /// element carries an explicit sign).
    std::string str() const {
        std::string out;
        for (int i = 1; i <= size(); ++i) {
            if (i > 1) out += ' ';
            int v = at(i);
            if (sign_ == Signedness::Signed && v > 0) out += '+';
            out += std::to_string(v);
        }
        return out;
    }

    /// Parses the text form. The style decides the signedness: all tokens
    /// signed or all bare; mixing is rejected.
    static Permutation parse(std::string_view text) {
        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos >= text.size()) break;
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            tokens.push_back(text.substr(pos, end - pos));
            pos = end;
        }
        if (tokens.empty()) throw ParseError("empty permutation");
        bool any_signed = false, any_bare = false;
        for (auto t : tokens) {
            if (t[0] == '+' || t[0] == '-')
                any_signed = true;
            else
                any_bare = true;
        }
        if (any_signed && any_bare)
            throw ParseError("mixed signed and unsigned elements in permutation text");
        std::vector<int> elems;
        elems.reserve(tokens.size());
        for (auto t : tokens) {
            bool neg = t[0] == '-';
            std::string_view digits = any_signed ? t.substr(1) : t;
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw ParseError("bad permutation element: '" + std::string(t) + "'");
            int v = std::atoi(std::string(digits).c_str());
            elems.push_back(neg ? -v : v);
        }
        return Permutation(any_signed ? Signedness::Signed : Signedness::Unsigned, std::move(elems));
    }

private:
    static void require_size(int n) {
        if (n < 1) throw ValidationError(0, "size must be at least 1");
    }

    void validate() const {
        if (elems_.empty()) throw ValidationError(0, "permutation must be non-empty");
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int i = 1; i <= n; ++i) {
            int v = at(i);
            if (sign_ == Signedness::Unsigned && v < 0)
                throw ValidationError(i, "sign on unsigned permutation");
            int a = std::abs(v);
            if (a < 1 || a > n)
                throw ValidationError(i, "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(a)])
                throw ValidationError(i, "duplicate value " + std::to_string(a));
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    Signedness sign_;
    std::vector<int> elems_;
};

inline Permutation make_permutation(Signedness s, std::vector<int> elements) {
    return Permutation(s, std::move(elements));
}

// Read-only lens adding the fixed frame pi_0 = 0, pi_{n+1} = n+1 (positive
// when signed). No operation ever addresses positions 0 or n+1.
class ExtendedView {
public:
    explicit ExtendedView(const Permutation& base) : base_(&base) {}
    int size() const { return base_->size(); }
    /// Value at extended position i, 0 <= i <= n+1.
    int at(int i) const {
        if (i == 0) return 0;
        if (i == base_->size() + 1) return base_->size() + 1;
        return base_->at(i);
    }

private:
    const Permutation* base_;
};

// ---------------------------------------------------------------------------
// Enumeration helpers. Order is deterministic: unsigned permutations in
// lexicographic order; signed permutations by (base permutation, sign mask),
// mask bit t flipping the sign of position t+1.
// ---------------------------------------------------------------------------

template <class Fn>
inline void for_each_permutation(int n, Signedness s, Fn&& fn) {
    if (n < 1) throw ValidationError(0, "size must be at least 1");
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> work(static_cast<std::size_t>(n));
    do {
        if (s == Signedness::Unsigned) {
            fn(Permutation(s, base));
        } else {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                for (int t = 0; t < n; ++t)
                    work[static_cast<std::size_t>(t)] =
                        (mask >> t) & 1 ? -base[static_cast<std::size_t>(t)] : base[static_cast<std::size_t>(t)];
                fn(Permutation(s, work));
            }
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

inline std::vector<Permutation> all_permutations(int n, Signedness s) {
    std::vector<Permutation> out;
    for_each_permutation(n, s, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

inline std::uint64_t permutation_count(int n, Signedness s) {
    return s == Signedness::Signed ? (std::uint64_t{1} << n) * factorial(n) : factorial(n);
}

}  // namespace rearrange
