// Exact elements of the free product F_n * Z^k with unique normal forms.
//
// A Word is an alternating sequence of free syllables (freely reduced letter
// runs) and abelian syllables (sparse exponent vectors).  Two Words are equal
// as group elements iff their syllable sequences are identical, so structural
// equality decides the word problem in F_n * Z^k.  All values are immutable;
// every operation returns a new Word.

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vbraid {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymbolClass { free_gen, abelian_gen };

struct Symbol {
    SymbolClass cls;
    int index;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// One input letter: a generator raised to a nonzero exponent.  Free letters
/// must carry exponent +1 or -1; abelian letters may carry any nonzero value.
struct SignedLetter {
    Symbol sym;
    Int exp;
};

/// Named generators of F_n * Z^k.  Ordering is fixed at construction and the
/// indices of both lists are stable for the lifetime of the alphabet.
class Alphabet {
public:
    Alphabet(std::vector<std::string> free_gens, std::vector<std::string> abelian_gens)
        : free_(std::move(free_gens)), abelian_(std::move(abelian_gens)) {
        for (int i = 0; i < static_cast<int>(free_.size()); ++i)
            insert(free_[i], Symbol{SymbolClass::free_gen, i});
        for (int i = 0; i < static_cast<int>(abelian_.size()); ++i)
            insert(abelian_[i], Symbol{SymbolClass::abelian_gen, i});
    }

    int free_count() const { return static_cast<int>(free_.size()); }
    int abelian_count() const { return static_cast<int>(abelian_.size()); }

    const std::string& free_name(int i) const { return free_.at(i); }
    const std::string& abelian_name(int i) const { return abelian_.at(i); }
    const std::string& name(Symbol s) const {
        return s.cls == SymbolClass::free_gen ? free_.at(s.index) : abelian_.at(s.index);
    }

    std::optional<Symbol> find(std::string_view name) const {
        auto it = lookup_.find(std::string(name));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    /// All generators, free ones first, in declaration order.
    std::vector<Symbol> symbols() const {
        std::vector<Symbol> out;
        out.reserve(free_.size() + abelian_.size());
        for (int i = 0; i < free_count(); ++i) out.push_back({SymbolClass::free_gen, i});
        for (int i = 0; i < abelian_count(); ++i) out.push_back({SymbolClass::abelian_gen, i});
        return out;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.free_ == b.free_ && a.abelian_ == b.abelian_;
    }

private:
    static bool valid_name(const std::string& n) {
        if (n.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_') return false;
        return std::all_of(n.begin(), n.end(), [](unsigned char c) {
            return std::isalnum(c) || c == '_';
        });
    }

    void insert(const std::string& n, Symbol s) {
        if (!valid_name(n)) throw error("invalid generator name: '" + n + "'");
        if (!lookup_.emplace(n, s).second) throw error("duplicate generator name: '" + n + "'");
    }

    std::vector<std::string> free_, abelian_;
    std::map<std::string, Symbol, std::less<>> lookup_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::vector<std::string> free_gens,
                                 std::vector<std::string> abelian_gens) {
    return std::make_shared<Alphabet>(std::move(free_gens), std::move(abelian_gens));
}

inline bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
    return a == b || (a && b && *a == *b);
}

/// Freely reduced, nonempty run of free-generator letters (index, exponent ±1).
struct FreeSyllable {
    std::vector<std::pair<int, int>> letters;
    friend bool operator==(const FreeSyllable&, const FreeSyllable&) = default;
};

/// Nonempty sparse exponent vector over the abelian generators, index-sorted.
struct AbelianSyllable {
    std::vector<std::pair<int, Int>> exps;
    friend bool operator==(const AbelianSyllable&, const AbelianSyllable&) = default;
};

using Syllable = std::variant<FreeSyllable, AbelianSyllable>;

class Word {
public:
    Word() = default;
    explicit Word(AlphabetRef ab) : alphabet_(std::move(ab)) {}

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }

    /// Total letter count (abelian exponents counted as 1 per generator entry).
    size_t syllable_count() const { return syllables_.size(); }

    friend bool operator==(const Word& a, const Word& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) && a.syllables_ == b.syllables_;
    }

    std::vector<SignedLetter> letters() const {
        std::vector<SignedLetter> out;
        for (const auto& syl : syllables_) {
            if (const auto* f = std::get_if<FreeSyllable>(&syl)) {
                for (auto& [idx, e] : f->letters)
                    out.push_back({Symbol{SymbolClass::free_gen, idx}, Int(e)});
            } else {
                for (auto& [idx, e] : std::get<AbelianSyllable>(syl).exps)
                    out.push_back({Symbol{SymbolClass::abelian_gen, idx}, e});
            }
        }
        return out;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Syllable> syllables_;

    friend Word normalize(std::span<const SignedLetter>, AlphabetRef);
};

/// Normal form of a raw letter sequence: merge adjacent same-class syllables,
/// cancel at the seams, drop empty syllables, repeat until alternating.
inline Word normalize(std::span<const SignedLetter> raw, AlphabetRef ab) {
    if (!ab) throw error("normalize: null alphabet");
    Word w(ab);
    auto& out = w.syllables_;
    for (const auto& letter : raw) {
        const Symbol s = letter.sym;
        if (letter.exp == 0) throw error("normalize: zero exponent letter");
        if (s.cls == SymbolClass::free_gen) {
            if (s.index < 0 || s.index >= ab->free_count())
                throw error("normalize: symbol not in alphabet");
            if (letter.exp != 1 && letter.exp != -1)
                throw error("normalize: free letter exponent must be +1 or -1");
            int e = letter.exp == 1 ? 1 : -1;
            if (!out.empty() && std::holds_alternative<FreeSyllable>(out.back())) {
                auto& f = std::get<FreeSyllable>(out.back());
                if (!f.letters.empty() && f.letters.back().first == s.index &&
                    f.letters.back().second == -e) {
                    f.letters.pop_back();
                    if (f.letters.empty()) out.pop_back();
                    continue;
                }
                f.letters.emplace_back(s.index, e);
            } else {
                out.emplace_back(FreeSyllable{{{s.index, e}}});
            }
        } else {
            if (s.index < 0 || s.index >= ab->abelian_count())
                throw error("normalize: symbol not in alphabet");
            if (!out.empty() && std::holds_alternative<AbelianSyllable>(out.back())) {
                auto& a = std::get<AbelianSyllable>(out.back());
                auto it = std::lower_bound(a.exps.begin(), a.exps.end(), s.index,
                                           [](const auto& p, int i) { return p.first < i; });
                if (it != a.exps.end() && it->first == s.index) {
                    it->second += letter.exp;
                    if (it->second == 0) a.exps.erase(it);
                } else {
                    a.exps.insert(it, {s.index, letter.exp});
                }
                if (a.exps.empty()) out.pop_back();
            } else {
                out.emplace_back(AbelianSyllable{{{s.index, letter.exp}}});
            }
        }
    }
    return w;
}

inline Word identity_word(AlphabetRef ab) { return Word(std::move(ab)); }

inline Word generator_word(AlphabetRef ab, Symbol s, Int exp = 1) {
    SignedLetter l{s, std::move(exp)};
    if (s.cls == SymbolClass::free_gen && (l.exp != 1 && l.exp != -1)) {
        std::vector<SignedLetter> ls;
        int sign = l.exp > 0 ? 1 : -1;
        for (Int i = 0; i < abs(l.exp); ++i) ls.push_back({s, sign});
        return normalize(ls, std::move(ab));
    }
    return normalize(std::span<const SignedLetter>(&l, 1), std::move(ab));
}

inline void require_same_alphabet(const Word& a, const Word& b, const char* op) {
    if (!same_alphabet(a.alphabet(), b.alphabet()))
        throw error(std::string(op) + ": alphabet mismatch");
}

inline Word multiply(const Word& a, const Word& b) {
    require_same_alphabet(a, b, "multiply");
    auto ls = a.letters();
    auto rs = b.letters();
    ls.insert(ls.end(), rs.begin(), rs.end());
    return normalize(ls, a.alphabet() ? a.alphabet() : b.alphabet());
}

inline Word invert(const Word& a) {
    auto ls = a.letters();
    std::reverse(ls.begin(), ls.end());
    for (auto& l : ls) l.exp = -l.exp;
    return normalize(ls, a.alphabet());
}

/// Conjugate a by g:  a^g = g^-1 a g.
inline Word conjugate(const Word& a, const Word& g) {
    require_same_alphabet(a, g, "conjugate");
    return multiply(multiply(invert(g), a), g);
}

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

inline Word pow(const Word& a, const Int& n) {
    if (n == 0) return identity_word(a.alphabet());
    Word base = n > 0 ? a : invert(a);
    Int k = abs(n);
    // square-and-multiply; exponents in practice are small
    Word acc = identity_word(a.alphabet());
    while (k > 0) {
        if ((k & 1) != 0) acc = multiply(acc, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

/// True iff the word involves only abelian generators (0 or 1 abelian syllable).
inline bool is_abelian_word(const Word& w) {
    const auto& s = w.syllables();
    return s.empty() ||
           (s.size() == 1 && std::holds_alternative<AbelianSyllable>(s.front()));
}

// ---------------------------------------------------------------------------
// Substitution: a homomorphism given by generator images, possibly into a
// different alphabet.  Images of abelian generators must pairwise commute in
// the target; this is checked once at construction.
// ---------------------------------------------------------------------------

class Substitution {
public:
    Substitution(AlphabetRef source, AlphabetRef target,
                 std::vector<Word> free_images, std::vector<Word> abelian_images)
        : source_(std::move(source)), target_(std::move(target)),
          free_images_(std::move(free_images)), abelian_images_(std::move(abelian_images)) {
        if (!source_ || !target_) throw error("substitution: null alphabet");
        if (static_cast<int>(free_images_.size()) != source_->free_count() ||
            static_cast<int>(abelian_images_.size()) != source_->abelian_count())
            throw error("substitution: missing image");
        for (const auto& w : free_images_)
            if (!same_alphabet(w.alphabet(), target_)) throw error("substitution: image alphabet mismatch");
        for (const auto& w : abelian_images_)
            if (!same_alphabet(w.alphabet(), target_)) throw error("substitution: image alphabet mismatch");
        bool all_abelian = std::all_of(abelian_images_.begin(), abelian_images_.end(),
                                       [](const Word& w) { return is_abelian_word(w); });
        if (!all_abelian) {
            for (size_t i = 0; i < abelian_images_.size(); ++i)
                for (size_t j = i + 1; j < abelian_images_.size(); ++j) {
                    const Word& p = abelian_images_[i];
                    const Word& q = abelian_images_[j];
                    if (!(multiply(p, q) == multiply(q, p)))
                        throw error("substitution: abelian images do not commute");
                }
        }
    }

    static Substitution from_map(AlphabetRef source, AlphabetRef target,
                                 const std::map<std::string, Word>& images) {
        std::vector<Word> fi, ai;
        for (int i = 0; i < source->free_count(); ++i) {
            auto it = images.find(source->free_name(i));
            if (it == images.end()) throw error("substitution: missing image for " + source->free_name(i));
            fi.push_back(it->second);
        }
        for (int i = 0; i < source->abelian_count(); ++i) {
            auto it = images.find(source->abelian_name(i));
            if (it == images.end()) throw error("substitution: missing image for " + source->abelian_name(i));
            ai.push_back(it->second);
        }
        return Substitution(std::move(source), std::move(target), std::move(fi), std::move(ai));
    }

    const AlphabetRef& source() const { return source_; }
    const AlphabetRef& target() const { return target_; }

    const Word& image(Symbol s) const {
        return s.cls == SymbolClass::free_gen ? free_images_.at(s.index)
                                              : abelian_images_.at(s.index);
    }

private:
    AlphabetRef source_, target_;
    std::vector<Word> free_images_, abelian_images_;
};

/// Homomorphic extension of generator images:
/// substitute(a*b) == substitute(a) * substitute(b).
inline Word substitute(const Word& w, const Substitution& s) {
    if (!same_alphabet(w.alphabet(), s.source()))
        throw error("substitute: alphabet mismatch");
    Word acc = identity_word(s.target());
    for (const auto& l : w.letters()) {
        const Word& img = s.image(l.sym);
        acc = multiply(acc, l.exp == 1 ? img : pow(img, l.exp));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Textual format.  Whitespace-separated atoms `x1`, `x1^-1`, `u2^3`; the
// identity prints as `1`.  parse_word(print_word(w)) == w.
// ---------------------------------------------------------------------------

inline std::string print_word(const Word& w) {
    if (w.is_identity()) return "1";
    const Alphabet& ab = *w.alphabet();
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& name, const Int& e) {
        if (!first) os << ' ';
        first = false;
        os << name;
        if (e != 1) os << '^' << e.str();
    };
    for (const auto& syl : w.syllables()) {
        if (const auto* f = std::get_if<FreeSyllable>(&syl)) {
            size_t i = 0;
            while (i < f->letters.size()) {
                size_t j = i;
                while (j < f->letters.size() && f->letters[j] == f->letters[i]) ++j;
                Int e = Int(f->letters[i].second) * Int(j - i);
                emit(ab.free_name(f->letters[i].first), e);
                i = j;
            }
        } else {
            for (const auto& [idx, e] : std::get<AbelianSyllable>(syl).exps)
                emit(ab.abelian_name(idx), e);
        }
    }
    return os.str();
}

inline Word parse_word(AlphabetRef ab, std::string_view text) {
    std::vector<SignedLetter> letters;
    std::istringstream is{std::string(text)};
    std::string atom;
    while (is >> atom) {
        if (atom == "1") continue;
        std::string name = atom;
        Int exp = 1;
        if (auto caret = atom.find('^'); caret != std::string::npos) {
            name = atom.substr(0, caret);
            std::string es = atom.substr(caret + 1);
            try {
                exp = Int(es);
            } catch (...) {
                throw error("parse_word: bad exponent in '" + atom + "'");
            }
            if (es.empty() || es == "-") throw error("parse_word: bad exponent in '" + atom + "'");
        }
        auto sym = ab->find(name);
        if (!sym) throw error("parse_word: unknown generator '" + name + "'");
        if (exp == 0) continue;
        if (sym->cls == SymbolClass::free_gen && exp != 1 && exp != -1) {
            int sign = exp > 0 ? 1 : -1;
            for (Int i = 0; i < abs(exp); ++i) letters.push_back({*sym, sign});
        } else {
            letters.push_back({*sym, exp});
        }
    }
    return normalize(letters, ab);
}

}  // namespace vbraid
