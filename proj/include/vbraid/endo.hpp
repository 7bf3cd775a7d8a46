// Endomorphisms of F_n * Z^k given by generator images.
//
// Convention: endomorphisms act on the right and compose left-to-right, so
// apply(compose(first, second), w) == apply(second, apply(first, w)).
// Images of abelian generators are required to stay in the abelian subgroup;
// this holds for every representation in the catalog and keeps application of
// abelian syllables a plain exponent-vector computation.

#pragma once

#include <numeric>
#include <optional>

#include "vbraid/word.hpp"

namespace vbraid {

class Endomorphism {
public:
    Endomorphism(AlphabetRef ab, std::vector<Word> free_images, std::vector<Word> abelian_images)
        : alphabet_(std::move(ab)),
          free_images_(std::move(free_images)),
          abelian_images_(std::move(abelian_images)) {
        if (!alphabet_) throw error("endomorphism: null alphabet");
        if (static_cast<int>(free_images_.size()) != alphabet_->free_count() ||
            static_cast<int>(abelian_images_.size()) != alphabet_->abelian_count())
            throw error("endomorphism: every generator needs exactly one image");
        for (const auto& w : free_images_)
            if (!same_alphabet(w.alphabet(), alphabet_))
                throw error("endomorphism: image alphabet mismatch");
        for (const auto& w : abelian_images_) {
            if (!same_alphabet(w.alphabet(), alphabet_))
                throw error("endomorphism: image alphabet mismatch");
            if (!is_abelian_word(w))
                throw error("endomorphism: abelian generator image leaves the abelian subgroup");
        }
    }

    static Endomorphism identity(AlphabetRef ab) {
        std::vector<Word> fi, ai;
        for (int i = 0; i < ab->free_count(); ++i)
            fi.push_back(generator_word(ab, {SymbolClass::free_gen, i}));
        for (int i = 0; i < ab->abelian_count(); ++i)
            ai.push_back(generator_word(ab, {SymbolClass::abelian_gen, i}));
        return Endomorphism(ab, std::move(fi), std::move(ai));
    }

    const AlphabetRef& alphabet() const { return alphabet_; }

    const Word& image(Symbol s) const {
        return s.cls == SymbolClass::free_gen ? free_images_.at(s.index)
                                              : abelian_images_.at(s.index);
    }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) &&
               a.free_images_ == b.free_images_ && a.abelian_images_ == b.abelian_images_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Word> free_images_, abelian_images_;
};

inline Word apply(const Endomorphism& e, const Word& w) {
    if (!same_alphabet(w.alphabet(), e.alphabet())) throw error("apply: alphabet mismatch");
    std::vector<SignedLetter> out;
    for (const auto& syl : w.syllables()) {
        if (const auto* f = std::get_if<FreeSyllable>(&syl)) {
            for (const auto& [idx, sign] : f->letters) {
                const Word& img = e.image({SymbolClass::free_gen, idx});
                auto ls = img.letters();
                if (sign < 0) {
                    std::reverse(ls.begin(), ls.end());
                    for (auto& l : ls) l.exp = -l.exp;
                }
                out.insert(out.end(), ls.begin(), ls.end());
            }
        } else {
            // abelian images are abelian words: accumulate one exponent vector
            std::map<int, Int> acc;
            for (const auto& [idx, exp] : std::get<AbelianSyllable>(syl).exps) {
                const Word& img = e.image({SymbolClass::abelian_gen, idx});
                for (const auto& l : img.letters()) acc[l.sym.index] += l.exp * exp;
            }
            for (auto& [idx, exp] : acc)
                if (exp != 0) out.push_back({Symbol{SymbolClass::abelian_gen, idx}, exp});
        }
    }
    return normalize(out, e.alphabet());
}

/// Right-action composition: (w)(compose(first, second)) = ((w)first)second.
inline Endomorphism compose(const Endomorphism& first, const Endomorphism& second) {
    if (!same_alphabet(first.alphabet(), second.alphabet()))
        throw error("compose: alphabet mismatch");
    const AlphabetRef& ab = first.alphabet();
    std::vector<Word> fi, ai;
    for (int i = 0; i < ab->free_count(); ++i)
        fi.push_back(apply(second, first.image({SymbolClass::free_gen, i})));
    for (int i = 0; i < ab->abelian_count(); ++i)
        ai.push_back(apply(second, first.image({SymbolClass::abelian_gen, i})));
    return Endomorphism(ab, std::move(fi), std::move(ai));
}

inline bool is_identity(const Endomorphism& e) {
    const AlphabetRef& ab = e.alphabet();
    for (Symbol s : ab->symbols())
        if (!(e.image(s) == generator_word(ab, s))) return false;
    return true;
}

inline bool equals(const Endomorphism& a, const Endomorphism& b) { return a == b; }

/// If e maps the given subset bijectively onto itself by single-letter images,
/// return the induced mapping as pairs (symbol, image symbol); otherwise nullopt.
inline std::optional<std::vector<std::pair<Symbol, Symbol>>>
restrict_check_permutation(const Endomorphism& e, std::span<const Symbol> symbols) {
    std::vector<std::pair<Symbol, Symbol>> mapping;
    std::vector<Symbol> seen;
    for (Symbol s : symbols) {
        const Word& img = e.image(s);
        auto ls = img.letters();
        if (ls.size() != 1 || ls[0].exp != 1) return std::nullopt;
        Symbol t = ls[0].sym;
        if (std::find(symbols.begin(), symbols.end(), t) == symbols.end()) return std::nullopt;
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) return std::nullopt;
        seen.push_back(t);
        mapping.emplace_back(s, t);
    }
    return mapping;
}

/// One line per generator: `g -> image`.
inline std::string image_table_text(const Endomorphism& e) {
    std::ostringstream os;
    for (Symbol s : e.alphabet()->symbols())
        os << e.alphabet()->name(s) << " -> " << print_word(e.image(s)) << '\n';
    return os.str();
}

}  // namespace vbraid
