#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vbraid/word.hpp"

using namespace vbraid;

namespace {

AlphabetRef ab22() { return make_alphabet({"x1", "x2"}, {"u1", "u2"}); }

Word W(const AlphabetRef& ab, const std::string& s) { return parse_word(ab, s); }

std::vector<SignedLetter> random_letters(std::mt19937_64& rng, const AlphabetRef& ab, int len) {
    std::uniform_int_distribution<int> pick_class(0, 1), sign(0, 1);
    std::uniform_int_distribution<int> fidx(0, ab->free_count() - 1);
    std::uniform_int_distribution<int> aidx(0, ab->abelian_count() - 1);
    std::uniform_int_distribution<int> aexp(1, 3);
    std::vector<SignedLetter> out;
    for (int i = 0; i < len; ++i) {
        if (pick_class(rng) == 0) {
            out.push_back({{SymbolClass::free_gen, fidx(rng)}, sign(rng) ? 1 : -1});
        } else {
            Int e = aexp(rng);
            out.push_back({{SymbolClass::abelian_gen, aidx(rng)}, sign(rng) ? e : -e});
        }
    }
    return out;
}

Word random_word(std::mt19937_64& rng, const AlphabetRef& ab, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    return normalize(random_letters(rng, ab, len(rng)), ab);
}

}  // namespace

TEST_CASE("normalize basics") {
    auto ab = ab22();
    CHECK(W(ab, "x1 x1^-1").is_identity());
    CHECK(W(ab, "u1 u2 u1^-1") == W(ab, "u2"));
    CHECK(W(ab, "1").is_identity());
    CHECK(parse_word(ab, "").is_identity());

    // trefoil-expansion letter sequence: (v^-1)(x2)(v^2 u1)(x2)(u1^-1 v^-1)
    auto ab2 = make_alphabet({"x1", "x2"}, {"u1", "v"});
    Word w = W(ab2, "v^-1 x2 v v u1 x2 u1^-1 v^-1");
    REQUIRE(w.syllables().size() == 5);
    CHECK(w == W(ab2, "v^-1 x2 u1 v^2 x2 u1^-1 v^-1"));
    const auto& syl = w.syllables();
    CHECK(std::get<AbelianSyllable>(syl[0]).exps ==
          std::vector<std::pair<int, Int>>{{1, -1}});
    CHECK(std::get<FreeSyllable>(syl[1]).letters ==
          std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(std::get<AbelianSyllable>(syl[2]).exps ==
          std::vector<std::pair<int, Int>>{{0, 1}, {1, 2}});
    CHECK(std::get<AbelianSyllable>(syl[4]).exps ==
          std::vector<std::pair<int, Int>>{{0, -1}, {1, -1}});
}

TEST_CASE("normalize cancels across emptied syllables") {
    auto ab = ab22();
    CHECK(W(ab, "x1 u1 u1^-1 x1^-1").is_identity());
    CHECK(W(ab, "x1 u1 x2 x2^-1 u1^-1 x1^-1").is_identity());
    CHECK(W(ab, "u1 x1 u2") == W(ab, "u1 x1 u2"));
}

TEST_CASE("normalize errors") {
    auto ab = ab22();
    // unknown symbol
    std::vector<SignedLetter> bad{{{SymbolClass::free_gen, 7}, 1}};
    CHECK_THROWS_AS(normalize(bad, ab), error);
    std::vector<SignedLetter> bad_exp{{{SymbolClass::free_gen, 0}, 2}};
    CHECK_THROWS_AS(normalize(bad_exp, ab), error);
    CHECK_THROWS_AS(parse_word(ab, "z9"), error);
    CHECK_THROWS_AS(parse_word(ab, "x1^"), error);
}

TEST_CASE("abelian locality") {
    auto ab = ab22();
    CHECK(W(ab, "u1 u2") == W(ab, "u2 u1"));
    CHECK_FALSE(W(ab, "u1 x1") == W(ab, "x1 u1"));
}

TEST_CASE("multiply and invert basics") {
    auto ab = ab22();
    CHECK(multiply(W(ab, "x1"), W(ab, "x1^-1")).is_identity());
    CHECK(multiply(W(ab, "u1"), W(ab, "u2^2")) == W(ab, "u1 u2^2"));
    CHECK(invert(identity_word(ab)).is_identity());
    CHECK(invert(W(ab, "x1 x2^-1")) == W(ab, "x2 x1^-1"));

    auto other = make_alphabet({"a"}, {});
    CHECK_THROWS_AS(multiply(W(ab, "x1"), W(other, "a")), error);
}

TEST_CASE("group axioms on random words") {
    auto ab = ab22();
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        Word a = random_word(rng, ab, 40);
        Word b = random_word(rng, ab, 40);
        Word c = random_word(rng, ab, 40);
        CHECK(multiply(a, invert(a)).is_identity());
        CHECK(invert(invert(a)) == a);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        // composition law for conjugation
        CHECK(conjugate(conjugate(a, b), c) == conjugate(a, multiply(b, c)));
    }
}

TEST_CASE("conjugation") {
    auto ab = ab22();
    Word a = W(ab, "x1 u1 x2");
    CHECK(conjugate(a, identity_word(ab)) == a);
    // x2^(u1^-1) = u1 x2 u1^-1
    CHECK(conjugate(W(ab, "x2"), W(ab, "u1^-1")) == W(ab, "u1 x2 u1^-1"));
}

TEST_CASE("normal form uniqueness under random rewriting") {
    auto ab = ab22();
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        auto letters = random_letters(rng, ab, 20);
        Word w = normalize(letters, ab);
        // insert random cancelling pairs and split abelian exponents
        std::vector<SignedLetter> noisy;
        for (const auto& l : letters) {
            if (coin(rng)) {
                auto junk = random_letters(rng, ab, 1);
                for (const auto& j : junk) {
                    noisy.push_back(j);
                    SignedLetter inv = j;
                    inv.exp = -inv.exp;
                    noisy.push_back(inv);
                }
            }
            if (l.sym.cls == SymbolClass::abelian_gen && abs(l.exp) > 1 && coin(rng)) {
                SignedLetter a1 = l, a2 = l;
                a1.exp = 1;
                a2.exp = l.exp - 1;
                noisy.push_back(a1);
                noisy.push_back(a2);
            } else {
                noisy.push_back(l);
            }
        }
        CHECK(normalize(noisy, ab) == w);
    }
}

TEST_CASE("normalize agrees with the naive rewriting oracle") {
    auto ab = ab22();
    std::mt19937_64 rng(777);
    for (int i = 0; i < 5000; ++i) {
        auto letters = random_letters(rng, ab, 24);
        auto expect = oracle::naive_normal_form(oracle::to_flat(letters));
        auto got = oracle::flatten(normalize(letters, ab));
        REQUIRE(got == expect);
    }
}

TEST_CASE("multiply agrees with naive concatenation oracle") {
    auto ab = ab22();
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        Word a = random_word(rng, ab, 20);
        Word b = random_word(rng, ab, 20);
        auto la = a.letters(), lb = b.letters();
        la.insert(la.end(), lb.begin(), lb.end());
        CHECK(oracle::flatten(multiply(a, b)) ==
              oracle::naive_normal_form(oracle::to_flat(la)));
    }
}

TEST_CASE("parser and printer round-trip") {
    auto ab = ab22();
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, ab, 30);
        CHECK(parse_word(ab, print_word(w)) == w);
    }
    CHECK(print_word(identity_word(ab)) == "1");
    CHECK(print_word(W(ab, "x1 x1 u2^-3")) == "x1^2 u2^-3");
}

TEST_CASE("substitution is homomorphic") {
    auto ab = ab22();
    auto tgt = make_alphabet({"a", "b"}, {"t"});
    std::map<std::string, Word> images{
        {"x1", W(tgt, "a b a^-1")},
        {"x2", W(tgt, "b t^2")},
        {"u1", W(tgt, "t")},
        {"u2", W(tgt, "t^-3")},
    };
    Substitution sub = Substitution::from_map(ab, tgt, images);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Word a = random_word(rng, ab, 16);
        Word b = random_word(rng, ab, 16);
        CHECK(substitute(multiply(a, b), sub) ==
              multiply(substitute(a, sub), substitute(b, sub)));
    }
    CHECK(substitute(identity_word(ab), sub).is_identity());
}

TEST_CASE("identity substitution leaves words unchanged") {
    auto ab = ab22();
    std::map<std::string, Word> images;
    for (Symbol s : ab->symbols()) images[ab->name(s)] = generator_word(ab, s);
    Substitution sub = Substitution::from_map(ab, ab, images);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, ab, 24);
        CHECK(substitute(w, sub) == w);
    }
}

TEST_CASE("substitution realizing the twisted-generator change of variables") {
    // u_i -> y, v -> y^-1, x_i -> x_i^(y^-(i-1)) over the rank-(n+1) target
    auto src = make_alphabet({"x1", "x2", "x3"}, {"v", "u1", "u2", "u3"});
    auto tgt = make_alphabet({"x1", "x2", "x3"}, {"y"});
    std::map<std::string, Word> images;
    Word y = W(tgt, "y");
    for (int i = 1; i <= 3; ++i) {
        images["x" + std::to_string(i)] =
            conjugate(W(tgt, "x" + std::to_string(i)), pow(y, -(i - 1)));
        images["u" + std::to_string(i)] = y;
    }
    images["v"] = invert(y);
    Substitution sub = Substitution::from_map(src, tgt, images);
    // v*u_i collapses: x1^(v u2) maps to x1 conjugated by y^-1 * y = 1
    CHECK(substitute(conjugate(W(src, "x1"), W(src, "v u2")), sub) == W(tgt, "x1"));
    CHECK(substitute(W(src, "x2"), sub) == W(tgt, "y x2 y^-1"));
}

TEST_CASE("substitution errors") {
    auto ab = ab22();
    auto tgt = make_alphabet({"a", "b"}, {});
    std::map<std::string, Word> missing{{"x1", W(tgt, "a")}};
    CHECK_THROWS_AS(Substitution::from_map(ab, tgt, missing), error);

    // non-commuting images for abelian symbols
    std::map<std::string, Word> bad{
        {"x1", W(tgt, "a")}, {"x2", W(tgt, "b")},
        {"u1", W(tgt, "a")}, {"u2", W(tgt, "b")},
    };
    CHECK_THROWS_AS(Substitution::from_map(ab, tgt, bad), error);

    // commuting non-abelian images are fine
    std::map<std::string, Word> ok{
        {"x1", W(tgt, "a")}, {"x2", W(tgt, "b")},
        {"u1", W(tgt, "a")}, {"u2", W(tgt, "a a")},
    };
    CHECK_NOTHROW(Substitution::from_map(ab, tgt, ok));
}

TEST_CASE("pow") {
    auto ab = ab22();
    CHECK(pow(W(ab, "u1"), 5) == W(ab, "u1^5"));
    CHECK(pow(W(ab, "x1 x2"), -2) == W(ab, "x2^-1 x1^-1 x2^-1 x1^-1"));
    CHECK(pow(W(ab, "x1"), 0).is_identity());
}
