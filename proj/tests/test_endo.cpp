#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vbraid/reps.hpp"

using namespace vbraid;

namespace {

Word W(const AlphabetRef& ab, const std::string& s) { return parse_word(ab, s); }

Endomorphism endo_from_map(const AlphabetRef& ab, std::map<std::string, Word> images) {
    std::vector<Word> fi, ai;
    for (int i = 0; i < ab->free_count(); ++i) {
        auto it = images.find(ab->free_name(i));
        fi.push_back(it == images.end() ? W(ab, ab->free_name(i)) : it->second);
    }
    for (int i = 0; i < ab->abelian_count(); ++i) {
        auto it = images.find(ab->abelian_name(i));
        ai.push_back(it == images.end() ? W(ab, ab->abelian_name(i)) : it->second);
    }
    return Endomorphism(ab, std::move(fi), std::move(ai));
}

}  // namespace

TEST_CASE("identity endomorphism") {
    auto ab = rep_alphabet(RepKind::M, 3);
    Endomorphism id = Endomorphism::identity(ab);
    CHECK(is_identity(id));
    std::mt19937_64 rng(1);
    Word w = W(ab, "x1 u2 x3^-1 v0^2");
    CHECK(apply(id, w) == w);
    Endomorphism s1 = rep_letter(RepKind::M, 3, {BraidLetter::sigma, 1, 1});
    CHECK(compose(id, s1) == s1);
    CHECK(compose(s1, id) == s1);
}

TEST_CASE("abelian images must stay abelian") {
    auto ab = make_alphabet({"x1"}, {"u1"});
    CHECK_THROWS_AS(Endomorphism(ab, {W(ab, "x1")}, {W(ab, "x1")}), error);
}

TEST_CASE("Artin-extension letter table") {
    auto ab = rep_alphabet(RepKind::A, 3);
    Endomorphism s1 = rep_letter(RepKind::A, 3, {BraidLetter::sigma, 1, 1});
    CHECK(apply(s1, W(ab, "x1")) == W(ab, "x1 x2 x1^-1"));
    CHECK(apply(s1, W(ab, "x2")) == W(ab, "x1"));
    CHECK(apply(s1, W(ab, "x3")) == W(ab, "x3"));
    CHECK(apply(s1, identity_word(ab)).is_identity());
    Endomorphism r1 = rep_letter(RepKind::A, 3, {BraidLetter::rho, 1, 1});
    CHECK(apply(r1, W(ab, "x1")) == W(ab, "y x2 y^-1"));
    CHECK(apply(r1, W(ab, "x2")) == W(ab, "y^-1 x1 y"));
}

TEST_CASE("composition is a right action") {
    const int n = 4;
    std::mt19937_64 rng(909);
    auto ab = rep_alphabet(RepKind::M, n);
    std::uniform_int_distribution<int> idx(1, n - 1), kindpick(0, 2), len(0, 6);
    auto random_braid = [&] {
        std::vector<BraidLetter> ls;
        int m = len(rng);
        for (int i = 0; i < m; ++i) {
            int k = kindpick(rng);
            if (k == 2) ls.push_back({BraidLetter::rho, idx(rng), 1});
            else ls.push_back({BraidLetter::sigma, idx(rng), k == 0 ? 1 : -1});
        }
        return BraidWord{n, ls};
    };
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord b1 = random_braid(), b2 = random_braid();
        Endomorphism e1 = rep_image(RepKind::M, n, b1);
        Endomorphism e2 = rep_image(RepKind::M, n, b2);
        BraidWord cat = concat(b1, b2);
        Endomorphism e12 = rep_image(RepKind::M, n, cat);
        CHECK(e12 == compose(e1, e2));
        Word w = W(ab, "x1 u1 x3^-1 v2");
        CHECK(apply(e12, w) == apply(e2, apply(e1, w)));
    }
}

TEST_CASE("sigma inverse tables compose to the identity for every kind") {
    for (RepKind kind : {RepKind::A, RepKind::SW, RepKind::BD, RepKind::M, RepKind::MTilde,
                         RepKind::PsiWelded}) {
        for (int n = 2; n <= 4; ++n) {
            for (int i = 1; i <= n - 1; ++i) {
                Endomorphism s = rep_letter(kind, n, {BraidLetter::sigma, i, 1});
                Endomorphism si = rep_letter(kind, n, {BraidLetter::sigma, i, -1});
                Endomorphism r = rep_letter(kind, n, {BraidLetter::rho, i, 1});
                CHECK(is_identity(compose(s, si)));
                CHECK(is_identity(compose(si, s)));
                CHECK(is_identity(compose(r, r)));
            }
        }
    }
}

TEST_CASE("triple-sigma composite reproduces the displayed table") {
    // (sigma_i sigma_{i+1} sigma_i) under the M tables, i = 1, n = 3:
    //   x1 -> x1 x2^{u1} x3^{u1 u2} x2^{-u1 u3 v0} x1^{-u3 v0}
    //   x2 -> (x1 x2^{u1} x1^{-u2 v0})^{v0}
    //   x3 -> x1^{v0^2}
    const int n = 3;
    auto ab = rep_alphabet(RepKind::M, n);
    Endomorphism e = rep_image(RepKind::M, n, parse_braid("s1 s2 s1", n));
    auto C = [&](const std::string& a, const std::string& g) {
        return conjugate(W(ab, a), W(ab, g));
    };
    Word x1 = W(ab, "x1");
    Word expect1 = x1 * C("x2", "u1") * C("x3", "u1 u2") *
                   invert(C("x2", "u1 u3 v0")) * invert(C("x1", "u3 v0"));
    CHECK(apply(e, x1) == expect1);
    Word expect2 = conjugate(x1 * C("x2", "u1") * invert(C("x1", "u2 v0")), W(ab, "v0"));
    CHECK(apply(e, W(ab, "x2")) == expect2);
    CHECK(apply(e, W(ab, "x3")) == C("x1", "v0^2"));

    Endomorphism other = rep_image(RepKind::M, n, parse_braid("s2 s1 s2", n));
    CHECK(e == other);
}

TEST_CASE("kernel element: image tables under the reduced representation") {
    const int n = 4;
    auto ab = rep_alphabet(RepKind::MTilde, n);
    BraidWord alpha = parse_braid("s2^-1 r1 s2 r3", n);
    Endomorphism ea = rep_image(RepKind::MTilde, n, alpha);

    auto C = [&](const Word& a, const std::string& g) { return conjugate(a, W(ab, g)); };
    // displayed table for the single pass:
    //   y1 -> (y2 y4^{v3^-1} y2^-1)^{v1^-1},  y2 -> y2,
    //   y3 -> y2^-1 y1^{v4} y2,               y4 -> y3^{v4}
    Word y1 = W(ab, "y1"), y2 = W(ab, "y2"), y3 = W(ab, "y3"), y4 = W(ab, "y4");
    CHECK(apply(ea, y1) == C(y2 * C(y4, "v3^-1") * invert(y2), "v1^-1"));
    CHECK(apply(ea, y2) == y2);
    CHECK(apply(ea, y3) == invert(y2) * C(y1, "v4") * y2);
    CHECK(apply(ea, y4) == C(y3, "v4"));
    // operator table: v1 -> v4, v2 -> v2, v3 -> v1, v4 -> v3
    CHECK(apply(ea, W(ab, "v1")) == W(ab, "v4"));
    CHECK(apply(ea, W(ab, "v2")) == W(ab, "v2"));
    CHECK(apply(ea, W(ab, "v3")) == W(ab, "v1"));
    CHECK(apply(ea, W(ab, "v4")) == W(ab, "v3"));

    // restrict to the abelian block: the induced permutation table
    auto ab_syms = std::vector<Symbol>{};
    for (int i = 0; i < 4; ++i) ab_syms.push_back({SymbolClass::abelian_gen, i});
    auto perm = restrict_check_permutation(ea, ab_syms);
    REQUIRE(perm.has_value());
    auto name = [&](Symbol s) { return ab->name(s); };
    CHECK(name((*perm)[0].second) == "v4");
    CHECK(name((*perm)[1].second) == "v2");
    CHECK(name((*perm)[2].second) == "v1");
    CHECK(name((*perm)[3].second) == "v3");

    BraidWord beta = parse_braid("(s2^-1 r1 s2 r3)^3", n);
    REQUIRE(beta.letters.size() == 12);
    Endomorphism eb = rep_image(RepKind::MTilde, n, beta);
    CHECK(eb == compose(compose(ea, ea), ea));

    // displayed cube table; the y3 line as printed in the source drops two
    // operator factors, the composed value carries v4^-1 v1 in both exponents
    CHECK(apply(eb, y1) ==
          C(y2, "v3^-1") * C(invert(y2) * C(y1, "v4") * y2, "v4^-1") * invert(C(y2, "v3^-1")));
    CHECK(apply(eb, y2) == y2);
    CHECK(apply(eb, y4) == invert(C(y2, "v1")) * C(y2 * C(y4, "v3^-1") * invert(y2), "v3") * C(y2, "v1"));
    Word y3_expected =
        invert(y2) * C(y2, "v4^-1 v1") * y3 * invert(C(y2, "v4^-1 v1")) * y2;
    CHECK(apply(eb, y3) == y3_expected);
    Word y3_as_printed = invert(y2) * C(y2, "v1") * y3 * invert(C(y2, "v4^-1")) * y2;
    CHECK_FALSE(apply(eb, y3) == y3_as_printed);

    CHECK_FALSE(is_identity(eb));
}

TEST_CASE("kernel element: identity under SW and BD, not under M") {
    const int n = 4;
    BraidWord beta = parse_braid("(s2^-1 r1 s2 r3)^3", n);
    CHECK(is_identity(rep_image(RepKind::SW, n, beta)));
    CHECK(is_identity(rep_image(RepKind::BD, n, beta)));
    CHECK_FALSE(is_identity(rep_image(RepKind::MTilde, n, beta)));
    CHECK_FALSE(is_identity(rep_image(RepKind::M, n, beta)));
    // beta is a pure braid: trivial strand permutation
    auto perm = braid_permutation(beta);
    CHECK(perm == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("restrict_check_permutation") {
    const int n = 3;
    auto ab = rep_alphabet(RepKind::M, n);
    std::vector<Symbol> us;
    for (int i = 0; i < n; ++i)
        us.push_back(*ab->find("u" + std::to_string(i + 1)));

    Endomorphism s1 = rep_letter(RepKind::M, n, {BraidLetter::sigma, 1, 1});
    auto perm = restrict_check_permutation(s1, us);
    REQUIRE(perm.has_value());
    CHECK(ab->name((*perm)[0].second) == "u2");
    CHECK(ab->name((*perm)[1].second) == "u1");
    CHECK(ab->name((*perm)[2].second) == "u3");

    auto id_perm = restrict_check_permutation(Endomorphism::identity(ab), us);
    REQUIRE(id_perm.has_value());
    for (auto& [from, to] : *id_perm) CHECK(from == to);

    // free generators are not single-letter images of the subset
    std::vector<Symbol> xs{*ab->find("x1"), *ab->find("x2")};
    CHECK_FALSE(restrict_check_permutation(s1, xs).has_value());
}

TEST_CASE("image table text") {
    auto ab = make_alphabet({"x1"}, {"u1"});
    Endomorphism e = endo_from_map(ab, {{"x1", W(ab, "u1 x1 u1^-1")}});
    CHECK(image_table_text(e) == "x1 -> u1 x1 u1^-1\nu1 -> u1\n");
}
