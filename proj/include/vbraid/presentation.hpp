// Finitely presented groups over plain free groups, with deterministic
// Tietze simplification.
//
// Relator words are letter vectors: +(i+1) / -(i+1) for the i-th generator
// and its inverse.  The free-product abelian structure of the link-group
// builders is compiled into explicit commutator relators, so downstream
// invariant computations see ordinary presentations.

#pragma once

#include <cstdint>
#include <set>

#include "vbraid/word.hpp"

namespace vbraid {

/// Reduced word in a plain free group; letters are +-(index+1).
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(const FreeWord& w) {
    FreeWord out;
    for (int l : w) {
        if (l == 0) throw error("free word: zero letter");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

inline FreeWord fw_inverse(const FreeWord& w) {
    FreeWord out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

inline FreeWord fw_concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

/// Conjugacy-normal form used for duplicate detection: least rotation of the
/// cyclically reduced word and of its inverse.
inline FreeWord cyclic_reduce(FreeWord w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

namespace detail {
inline FreeWord least_rotation(const FreeWord& w) {
    FreeWord best = w;
    FreeWord cur = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}
}  // namespace detail

inline FreeWord cyclic_key(const FreeWord& w) {
    FreeWord r = cyclic_reduce(w);
    if (r.empty()) return r;
    FreeWord a = detail::least_rotation(r);
    FreeWord b = detail::least_rotation(fw_inverse(r));
    return std::min(a, b);
}

struct Presentation {
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;  // freely reduced, nonempty

    int generator_index(std::string_view name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<int>(i);
        return -1;
    }
};

/// Drops trivial relators and validates letters; relator order is preserved.
inline Presentation make_presentation(std::vector<std::string> generators,
                                      std::vector<FreeWord> relators) {
    std::set<std::string> names(generators.begin(), generators.end());
    if (names.size() != generators.size()) throw error("presentation: duplicate generator names");
    Presentation p{std::move(generators), {}};
    const int k = static_cast<int>(p.generators.size());
    for (auto& r : relators) {
        FreeWord red = free_reduce(r);
        for (int l : red)
            if (std::abs(l) < 1 || std::abs(l) > k) throw error("presentation: letter out of range");
        if (!red.empty()) p.relators.push_back(std::move(red));
    }
    return p;
}

/// Exponent-sum row of a relator (abelianized image).
inline std::vector<Int> exponent_row(const FreeWord& r, int gen_count) {
    std::vector<Int> row(gen_count, 0);
    for (int l : r) row[std::abs(l) - 1] += (l > 0 ? 1 : -1);
    return row;
}

inline std::string print_presentation(const Presentation& p, bool ascii = false) {
    std::ostringstream os;
    os << (ascii ? "< " : "⟨ ");
    for (size_t i = 0; i < p.generators.size(); ++i)
        os << (i ? ", " : "") << p.generators[i];
    os << " | ";
    auto emit_word = [&](const FreeWord& w) {
        bool first = true;
        size_t i = 0;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
            if (!first) os << ' ';
            first = false;
            os << p.generators[std::abs(w[i]) - 1];
            if (e != 1) os << '^' << e;
            i = j;
        }
        if (first) os << '1';
    };
    for (size_t i = 0; i < p.relators.size(); ++i) {
        if (i) os << ", ";
        emit_word(p.relators[i]);
    }
    os << (ascii ? " >" : " ⟩");
    return os.str();
}

/// Parses a relator in the word grammar over the presentation's generators.
inline FreeWord parse_relator(const Presentation& p, std::string_view text) {
    FreeWord out;
    std::istringstream is{std::string(text)};
    std::string atom;
    while (is >> atom) {
        if (atom == "1") continue;
        std::string name = atom;
        long long exp = 1;
        if (auto caret = atom.find('^'); caret != std::string::npos) {
            name = atom.substr(0, caret);
            try {
                exp = std::stoll(atom.substr(caret + 1));
            } catch (...) {
                throw error("parse_relator: bad exponent in '" + atom + "'");
            }
        }
        int idx = p.generator_index(name);
        if (idx < 0) throw error("parse_relator: unknown generator '" + name + "'");
        int letter = (exp >= 0 ? idx + 1 : -(idx + 1));
        for (long long k = 0; k < std::llabs(exp); ++k) out.push_back(letter);
    }
    return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Tietze simplification
// ---------------------------------------------------------------------------

struct SimplifyResult {
    Presentation presentation;
    bool budget_exhausted = false;
    int steps = 0;
};

namespace detail {

inline void substitute_generator(std::vector<FreeWord>& relators, int gen /*1-based*/,
                                 const FreeWord& expr) {
    for (auto& r : relators) {
        FreeWord out;
        for (int l : r) {
            if (l == gen) out.insert(out.end(), expr.begin(), expr.end());
            else if (l == -gen) {
                FreeWord inv = fw_inverse(expr);
                out.insert(out.end(), inv.begin(), inv.end());
            } else out.push_back(l);
        }
        r = free_reduce(out);
    }
}

inline void drop_generator(Presentation& p, int idx /*0-based*/) {
    p.generators.erase(p.generators.begin() + idx);
    const int gen = idx + 1;
    for (auto& r : p.relators)
        for (int& l : r) {
            if (std::abs(l) > gen) l = l > 0 ? l - 1 : l + 1;
            else if (std::abs(l) == gen) throw error("tietze: dangling letter");
        }
}

inline void cleanup(Presentation& p) {
    std::vector<FreeWord> kept;
    std::set<FreeWord> seen;
    for (auto& r : p.relators) {
        FreeWord red = cyclic_reduce(r);
        if (red.empty()) continue;
        FreeWord key = cyclic_key(red);
        if (seen.insert(key).second) kept.push_back(std::move(red));
    }
    p.relators = std::move(kept);
}

}  // namespace detail

/// Deterministic simplification.  Transformations: free and cyclic reduction,
/// deletion of trivial/duplicate relators (duplicates up to rotation and
/// inversion), and elimination of a generator that occurs exactly once in
/// some relator.  Elimination candidates are ordered by (total occurrence
/// count, generator index); the solving relator is the shortest single-
/// occurrence one (lowest index on ties).  One elimination = one step.
inline SimplifyResult tietze_simplify(const Presentation& input, int budget = 10000) {
    if (budget < 0) throw error("tietze_simplify: negative budget");
    SimplifyResult res{input, false, 0};
    Presentation& p = res.presentation;
    detail::cleanup(p);
    for (;;) {
        const int k = static_cast<int>(p.generators.size());
        std::vector<long long> total(k, 0);
        // per generator: best solving relator (single occurrence)
        std::vector<int> best_rel(k, -1);
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            std::vector<int> cnt(k, 0);
            for (int l : p.relators[ri]) ++cnt[std::abs(l) - 1];
            for (int g = 0; g < k; ++g) {
                total[g] += cnt[g];
                if (cnt[g] == 1) {
                    int cur = best_rel[g];
                    if (cur < 0 || p.relators[ri].size() < p.relators[cur].size())
                        best_rel[g] = static_cast<int>(ri);
                }
            }
        }
        int pick = -1;
        for (int g = 0; g < k; ++g) {
            if (best_rel[g] < 0) continue;
            if (pick < 0 || std::make_pair(total[g], g) < std::make_pair(total[pick], pick))
                pick = g;
        }
        if (pick < 0) break;
        if (res.steps >= budget) {
            res.budget_exhausted = true;
            break;
        }
        ++res.steps;
        const int gen = pick + 1;
        FreeWord r = p.relators[best_rel[pick]];
        auto it = std::find_if(r.begin(), r.end(),
                               [&](int l) { return std::abs(l) == gen; });
        FreeWord prefix(r.begin(), it);
        FreeWord suffix(it + 1, r.end());
        // r = prefix g^e suffix = 1  =>  g^e = prefix^-1 suffix^-1
        FreeWord value = fw_concat(fw_inverse(prefix), fw_inverse(suffix));
        if (*it < 0) value = fw_inverse(value);
        p.relators.erase(p.relators.begin() + best_rel[pick]);
        detail::substitute_generator(p.relators, gen, value);
        detail::drop_generator(p, pick);
        detail::cleanup(p);
    }
    return res;
}

/// Tietze-composite change of a single generator: replaces `old_gen` by
/// `new_gen`, where `old_in_terms_of_new` expresses the old generator as a
/// word over the new generator set (same list with old_gen renamed).  The
/// expression must use new_gen exactly once so the move is invertible.
inline Presentation change_generator(const Presentation& input, const std::string& old_gen,
                                     const std::string& new_gen,
                                     const std::string& old_in_terms_of_new) {
    int idx = input.generator_index(old_gen);
    if (idx < 0) throw error("change_generator: unknown generator " + old_gen);
    Presentation out = input;
    out.generators[idx] = new_gen;
    FreeWord expr = parse_relator(out, old_in_terms_of_new);
    int uses = 0;
    for (int l : expr)
        if (std::abs(l) == idx + 1) ++uses;
    if (uses != 1) throw error("change_generator: expression must use the new generator once");
    detail::substitute_generator(out.relators, idx + 1, expr);
    detail::cleanup(out);
    return out;
}

}  // namespace vbraid
