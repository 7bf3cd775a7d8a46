// Braid words over the generators s<i> (classical crossings, signed) and
// r<i> (virtual crossings, involutive).
//
// Grammar: whitespace-separated atoms `s2`, `s2^-1`, `r1`, and parenthesized
// groups `( ... )^k` with integer exponents; groups may nest.  Parsing
// flattens to a letter sequence that round-trips through print_braid.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/word.hpp"

namespace vbraid {

struct BraidLetter {
    enum Kind { sigma, rho };
    Kind kind;
    int index;  // 1-based, 1 <= index <= n-1
    int sign;   // +1/-1 for sigma; always +1 for rho

    BraidLetter inverse() const {
        return kind == sigma ? BraidLetter{sigma, index, -sign} : *this;
    }
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void check_letter(const BraidLetter& l, int n) {
    if (n < 2) throw error("braid: strand count must be >= 2");
    if (l.index < 1 || l.index > n - 1)
        throw error("braid: generator index " + std::to_string(l.index) +
                    " out of range [1, " + std::to_string(n - 1) + "]");
}

inline BraidWord make_braid(int n, std::vector<BraidLetter> letters) {
    for (const auto& l : letters) check_letter(l, n);
    return BraidWord{n, std::move(letters)};
}

inline std::vector<BraidLetter> invert_letters(std::vector<BraidLetter> ls) {
    std::reverse(ls.begin(), ls.end());
    for (auto& l : ls) l = l.inverse();
    return ls;
}

inline BraidWord invert(const BraidWord& b) {
    return BraidWord{b.strands, invert_letters(b.letters)};
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw error("braid: strand count mismatch");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

namespace detail {

class BraidParser {
public:
    BraidParser(std::string_view text, int n) : s_(text), n_(n) {}

    std::vector<BraidLetter> parse() {
        auto seq = parse_sequence();
        skip_ws();
        if (pos_ < s_.size()) throw error("braid: unexpected ')' or trailing input");
        return seq;
    }

private:
    std::vector<BraidLetter> parse_sequence() {
        std::vector<BraidLetter> out;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] == ')') return out;
            if (s_[pos_] == '(') {
                ++pos_;
                auto group = parse_sequence();
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')')
                    throw error("braid: unbalanced parentheses");
                ++pos_;
                long long k = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    k = parse_int();
                }
                append_power(out, group, k);
            } else {
                out.push_back(parse_atom());
            }
        }
    }

    // bare `s<i>`/`r<i>`; atoms with exponents are rewritten to groups upfront
    BraidLetter parse_atom() {
        char c = s_[pos_];
        if (c != 's' && c != 'r') throw error(std::string("braid: malformed token near '") + c + "'");
        ++pos_;
        int idx = static_cast<int>(parse_uint());
        BraidLetter base{c == 's' ? BraidLetter::sigma : BraidLetter::rho, idx, 1};
        check_letter(base, n_);
        return base;
    }

    void append_power(std::vector<BraidLetter>& out, const std::vector<BraidLetter>& group,
                      long long k) {
        std::vector<BraidLetter> unit = group;
        if (k < 0) unit = invert_letters(unit);
        long long reps = k < 0 ? -k : k;
        for (long long i = 0; i < reps; ++i)
            out.insert(out.end(), unit.begin(), unit.end());
    }

    unsigned long long parse_uint() {
        skip_nothing();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw error("braid: expected index digits");
        return std::stoull(std::string(s_.substr(start, pos_ - start)));
    }

    long long parse_int() {
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        long long v = static_cast<long long>(parse_uint());
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void skip_nothing() {}

    std::string_view s_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace detail

inline BraidWord parse_braid(std::string_view text, int n) {
    if (n < 2) throw error("braid: strand count must be >= 2");
    // per-letter exponents are handled by rewriting `X^k` as `(X)^k`
    std::string rewritten;
    rewritten.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 's' || c == 'r') {
            size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '^') {
                size_t k = j + 1;
                if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                rewritten += '(';
                rewritten.append(text.substr(i, j - i));
                rewritten += ')';
                rewritten.append(text.substr(j, k - j));
                i = k;
                continue;
            }
        }
        rewritten += c;
        ++i;
    }
    detail::BraidParser p(rewritten, n);
    return BraidWord{n, p.parse()};
}

inline std::string print_braid(const BraidWord& b) {
    std::string out;
    for (const auto& l : b.letters) {
        if (!out.empty()) out += ' ';
        out += (l.kind == BraidLetter::sigma ? 's' : 'r');
        out += std::to_string(l.index);
        if (l.kind == BraidLetter::sigma && l.sign < 0) out += "^-1";
    }
    return out;
}

/// Image of the braid under the projection to the symmetric group: strand at
/// position i of the bottom ends at position perm[i-1] of the top (1-based),
/// letters applied left to right, every s/r letter acting as a transposition.
inline std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> station(b.strands);  // strand id occupying each position
    for (int i = 0; i < b.strands; ++i) station[i] = i + 1;
    for (const auto& l : b.letters) std::swap(station[l.index - 1], station[l.index]);
    std::vector<int> perm(b.strands);
    for (int pos = 0; pos < b.strands; ++pos) perm[station[pos] - 1] = pos + 1;
    return perm;
}

inline int permutation_cycle_count(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j] - 1);
        }
    }
    return cycles;
}

}  // namespace vbraid
