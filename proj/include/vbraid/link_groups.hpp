// Link-group presentations from braids (via the representation catalog) and
// from diagrams, the layered variant of the braid construction, and the
// Markov-type moves on braid words.

#pragma once

#include "vbraid/presentation.hpp"
#include "vbraid/reps.hpp"

namespace vbraid {

namespace detail {

/// Compiles a free-product Word into a plain free-group word; generator order
/// is the alphabet's: free generators first, then abelian ones.
inline FreeWord compile_word(const Word& w, int free_count) {
    FreeWord out;
    for (const auto& l : w.letters()) {
        int base = l.sym.cls == SymbolClass::free_gen ? l.sym.index + 1
                                                      : free_count + l.sym.index + 1;
        long long reps = 0;
        Int a = abs(l.exp);
        if (a > 1'000'000) throw error("compile_word: exponent too large to expand");
        reps = a.convert_to<long long>();
        int letter = l.exp > 0 ? base : -base;
        for (long long k = 0; k < reps; ++k) out.push_back(letter);
    }
    return free_reduce(out);
}

inline FreeWord commutator(int a /*1-based*/, int b) {
    return FreeWord{-a, -b, a, b};
}

}  // namespace detail

/// G_phi(beta): generators are the representation's alphabet; relators are
/// the pairwise commutators of the abelian generators plus g^-1 phi(beta)(g)
/// for every generator g.  Trivial relators are dropped.
inline Presentation link_group(RepKind kind, const BraidWord& braid) {
    const int n = braid.strands;
    Endomorphism e = rep_image(kind, n, braid);
    const AlphabetRef& ab = e.alphabet();
    const int nf = ab->free_count(), na = ab->abelian_count();
    std::vector<std::string> gens;
    for (int i = 0; i < nf; ++i) gens.push_back(ab->free_name(i));
    for (int i = 0; i < na; ++i) gens.push_back(ab->abelian_name(i));
    std::vector<FreeWord> relators;
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j)
            relators.push_back(detail::commutator(nf + i + 1, nf + j + 1));
    for (Symbol s : ab->symbols()) {
        Word rel = invert(generator_word(ab, s)) * e.image(s);
        relators.push_back(detail::compile_word(rel, nf));
    }
    return make_presentation(std::move(gens), std::move(relators));
}

/// Layered presentation of G_M(beta): one layer per letter, generators
/// x<k>_<j>, u<k>_<j>, v<k>_<j> for k = 1..m+1 plus v0, relators from the
/// letter tables per layer, full commutation among the abelian symbols, and
/// the closure identifications.  The bottom layer corresponds to the last
/// letter of the word (the diagram is read bottom-up), which makes the
/// eliminated form agree with link_group(M, beta) on the nose.
inline Presentation layered_presentation(const BraidWord& braid) {
    const int n = braid.strands;
    const int m = static_cast<int>(braid.letters.size());
    if (m == 0) throw error("layered_presentation: braid must be nonempty");

    std::vector<std::string> gens;
    auto xg = [&](int k, int j) { return (k - 1) * n + (j - 1); };                    // x<k>_<j>
    auto ug = [&](int k, int j) { return (m + 1) * n + (k - 1) * n + (j - 1); };      // u<k>_<j>
    auto vg = [&](int k, int j) { return 2 * (m + 1) * n + (k - 1) * n + (j - 1); };  // v<k>_<j>
    const int v0g = 3 * (m + 1) * n;
    for (char c : std::string("xuv"))
        for (int k = 1; k <= m + 1; ++k)
            for (int j = 1; j <= n; ++j)
                gens.push_back(std::string(1, c) + std::to_string(k) + "_" + std::to_string(j));
    gens.push_back("v0");

    std::vector<FreeWord> rel;
    auto L = [](int idx0, int sign = 1) { return sign * (idx0 + 1); };  // 1-based letter

    // commutation among all abelian symbols (u's, v's, v0)
    std::vector<int> abelian;
    for (int k = 1; k <= m + 1; ++k)
        for (int j = 1; j <= n; ++j) {
            abelian.push_back(ug(k, j));
            abelian.push_back(vg(k, j));
        }
    abelian.push_back(v0g);
    for (size_t a = 0; a < abelian.size(); ++a)
        for (size_t b = a + 1; b < abelian.size(); ++b)
            rel.push_back(detail::commutator(abelian[a] + 1, abelian[b] + 1));

    // per-layer relators; layer k carries letter m+1-k (bottom-up reading)
    for (int k = 1; k <= m; ++k) {
        const BraidLetter letter = braid.letters[m - k];
        const int i = letter.index;  // 1-based strand position
        auto conj = [&](std::initializer_list<int> core, std::initializer_list<int> by) {
            // core^by = by^-1 core by, letters given as signed 1-based ints
            FreeWord out;
            std::vector<int> byv(by);
            for (auto it = byv.rbegin(); it != byv.rend(); ++it) out.push_back(-*it);
            for (int l : core) out.push_back(l);
            for (int l : byv) out.push_back(l);
            return out;
        };
        auto push_eq = [&](int lhs_idx0, FreeWord rhs) {
            FreeWord r{-L(lhs_idx0)};
            r.insert(r.end(), rhs.begin(), rhs.end());
            rel.push_back(free_reduce(r));
        };
        for (int j = 1; j <= n; ++j) {
            if (j != i && j != i + 1) {
                push_eq(xg(k + 1, j), {L(xg(k, j))});
                push_eq(ug(k + 1, j), {L(ug(k, j))});
                push_eq(vg(k + 1, j), {L(vg(k, j))});
            }
        }
        push_eq(ug(k + 1, i), {L(ug(k, i + 1))});
        push_eq(ug(k + 1, i + 1), {L(ug(k, i))});
        push_eq(vg(k + 1, i), {L(vg(k, i + 1))});
        push_eq(vg(k + 1, i + 1), {L(vg(k, i))});

        const int a = xg(k, i), b = xg(k, i + 1);
        const int ua = ug(k, i), ub = ug(k, i + 1);
        const int va = vg(k, i), vb = vg(k, i + 1);
        if (letter.kind == BraidLetter::sigma && letter.sign > 0) {
            // x_{k+1,i} = x_{k,i} x_{k,i+1}^{u_{k,i}} x_{k,i}^{-v0 u_{k,i+1}}
            FreeWord rhs{L(a)};
            for (int l : conj({L(b)}, {L(ua)})) rhs.push_back(l);
            for (int l : fw_inverse(conj({L(a)}, {L(v0g), L(ub)}))) rhs.push_back(l);
            push_eq(xg(k + 1, i), rhs);
            push_eq(xg(k + 1, i + 1), conj({L(a)}, {L(v0g)}));
        } else if (letter.kind == BraidLetter::sigma) {
            // x_{k+1,i} = x_{k,i+1}^{v0^-1};
            // x_{k+1,i+1} = (x_{k,i+1}^{-v0^-1} x_{k,i} x_{k,i+1}^{u_{k,i}})^{u_{k,i+1}^-1}
            push_eq(xg(k + 1, i), conj({L(b)}, {-L(v0g)}));
            FreeWord core = fw_inverse(conj({L(b)}, {-L(v0g)}));
            core.push_back(L(a));
            for (int l : conj({L(b)}, {L(ua)})) core.push_back(l);
            FreeWord rhs;
            rhs.push_back(L(ub));
            for (int l : core) rhs.push_back(l);
            rhs.push_back(-L(ub));
            push_eq(xg(k + 1, i + 1), rhs);
        } else {
            // x_{k+1,i} = x_{k,i+1}^{v_{k,i}^-1};  x_{k+1,i+1} = x_{k,i}^{v_{k,i+1}}
            push_eq(xg(k + 1, i), conj({L(b)}, {-L(va)}));
            push_eq(xg(k + 1, i + 1), conj({L(a)}, {L(vb)}));
        }
    }

    // closure identifications
    for (int j = 1; j <= n; ++j) {
        rel.push_back(free_reduce({-L(xg(m + 1, j)), L(xg(1, j))}));
        rel.push_back(free_reduce({-L(ug(m + 1, j)), L(ug(1, j))}));
        rel.push_back(free_reduce({-L(vg(m + 1, j)), L(vg(1, j))}));
    }
    return make_presentation(std::move(gens), std::move(rel));
}

// ---------------------------------------------------------------------------
// Diagrams
// ---------------------------------------------------------------------------

struct Crossing {
    enum Kind { positive, negative, virtual_crossing };
    Kind kind;
    std::string a, b, c, d;  // d may be empty for classical Wirtinger input
};

/// Link diagram: named arcs, a component index per arc (1..d), crossings with
/// role labels.  At a crossing the bottom arcs are a (left) and b (right),
/// the top arcs c (left) and d (right); the strand entering at a leaves at d
/// and the strand entering at b leaves at c.
struct Diagram {
    std::vector<std::string> arcs;
    std::map<std::string, int> component;  // arc -> 1..d
    std::vector<Crossing> crossings;

    int component_count() const {
        int d = 0;
        for (auto& [arc, c] : component) d = std::max(d, c);
        return d;
    }
};

namespace detail {

inline void check_arcs(const Diagram& dia, bool need_d) {
    std::set<std::string> names(dia.arcs.begin(), dia.arcs.end());
    if (names.size() != dia.arcs.size()) throw error("diagram: duplicate arc names");
    int d = dia.component_count();
    for (const auto& arc : dia.arcs) {
        auto it = dia.component.find(arc);
        if (it == dia.component.end() || it->second < 1 || it->second > d)
            throw error("diagram: arc '" + arc + "' lacks a valid component index");
    }
    for (const auto& c : dia.crossings) {
        for (const std::string* r : {&c.a, &c.b, &c.c})
            if (!names.count(*r)) throw error("diagram: unknown arc '" + *r + "'");
        if (need_d || !c.d.empty())
            if (!names.count(c.d)) throw error("diagram: unknown arc '" + c.d + "'");
    }
}

inline int comp_of(const Diagram& dia, const std::string& arc) {
    return dia.component.at(arc);
}

/// Strand continuation: the arc entering at b leaves at c, the arc entering
/// at a leaves at d, so their component labels must match.
inline void check_strand_consistency(const Diagram& dia, const Crossing& c) {
    if (comp_of(dia, c.b) != comp_of(dia, c.c) || comp_of(dia, c.a) != comp_of(dia, c.d))
        throw error("diagram: inconsistent component labels at a crossing");
}

}  // namespace detail

/// Classical link group from a classical diagram: one generator per arc,
/// relator c = b^-1 a b at positive and c = a b a^-1 at negative crossings.
inline Presentation wirtinger(const Diagram& dia) {
    detail::check_arcs(dia, false);
    Presentation p = make_presentation(dia.arcs, {});
    auto idx = [&](const std::string& arc) { return p.generator_index(arc) + 1; };
    std::vector<FreeWord> rel;
    for (const auto& c : dia.crossings) {
        if (c.kind == Crossing::virtual_crossing)
            throw error("wirtinger: virtual crossings unsupported by this builder");
        int a = idx(c.a), b = idx(c.b), cc = idx(c.c);
        if (c.kind == Crossing::positive) rel.push_back(free_reduce({-cc, -b, a, b}));
        else rel.push_back(free_reduce({-cc, a, b, -a}));
    }
    return make_presentation(dia.arcs, std::move(rel));
}

/// Generalized Alexander group of a virtual diagram.  Generators: the arcs
/// plus one operator u_i per component and (unless welded) the operator v.
/// Positive crossing: a b^{u_A} = c d^{u_B} and b = c^v; negative crossing:
/// a b^{u_A} = c d^{u_B} and d = a^v, where A, B are the components of the
/// incoming arcs a and b.  Virtual crossings contribute nothing.  The welded
/// variant deletes every occurrence of v.
inline Presentation generalized_alexander(const Diagram& dia, bool welded = false) {
    detail::check_arcs(dia, true);
    const int d = dia.component_count();
    const int na = static_cast<int>(dia.arcs.size());
    std::vector<std::string> gens = dia.arcs;
    for (int i = 1; i <= d; ++i) gens.push_back("u" + std::to_string(i));
    if (!welded) gens.push_back("v");
    std::set<std::string> arc_names(dia.arcs.begin(), dia.arcs.end());
    for (size_t i = na; i < gens.size(); ++i)
        if (arc_names.count(gens[i])) throw error("diagram: arc name collides with operator " + gens[i]);

    const int ubase = na;               // u_i lives at ubase + i - 1
    const int vgen = na + d;            // only when !welded
    std::vector<FreeWord> rel;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            rel.push_back(detail::commutator(ubase + i + 1, ubase + j + 1));
    if (!welded)
        for (int i = 0; i < d; ++i) rel.push_back(detail::commutator(ubase + i + 1, vgen + 1));

    Presentation tmp = make_presentation(gens, {});
    auto idx = [&](const std::string& arc) { return tmp.generator_index(arc) + 1; };
    auto U = [&](const std::string& arc) { return ubase + detail::comp_of(dia, arc); };
    auto conj1 = [&](int x, int g) { return FreeWord{-g, x, g}; };

    for (const auto& c : dia.crossings) {
        if (c.kind == Crossing::virtual_crossing) continue;
        detail::check_strand_consistency(dia, c);
        int a = idx(c.a), b = idx(c.b), cc = idx(c.c), dd = idx(c.d);
        int uA = U(c.a), uB = U(c.b);
        // a b^{u_A} (c d^{u_B})^-1
        FreeWord r1{a};
        for (int l : conj1(b, uA)) r1.push_back(l);
        for (int l : fw_inverse(conj1(dd, uB))) r1.push_back(l);
        r1.push_back(-cc);
        rel.push_back(free_reduce(r1));
        if (c.kind == Crossing::positive) {
            // b (c^v)^-1
            FreeWord r2{b};
            FreeWord cv = welded ? FreeWord{cc} : conj1(cc, vgen + 1);
            for (int l : fw_inverse(cv)) r2.push_back(l);
            rel.push_back(free_reduce(r2));
        } else {
            FreeWord r2{dd};
            FreeWord av = welded ? FreeWord{a} : conj1(a, vgen + 1);
            for (int l : fw_inverse(av)) r2.push_back(l);
            rel.push_back(free_reduce(r2));
        }
    }
    return make_presentation(std::move(gens), std::move(rel));
}

/// Diagram form of the G_M construction.  Generators: arcs plus u_1..u_d,
/// v0, v_1..v_d, all abelian operators commuting.  Positive crossing:
/// c = a b^{u_A} a^{-v0 u_B}, d = a^{v0}; negative crossing: c = b^{v0^-1},
/// d = (b^{-v0^-1} a b^{u_A})^{u_B^-1}; virtual crossing: c = b^{v_A^-1},
/// d = a^{v_B}.
inline Presentation diagram_group_M(const Diagram& dia) {
    detail::check_arcs(dia, true);
    const int d = dia.component_count();
    const int na = static_cast<int>(dia.arcs.size());
    std::vector<std::string> gens = dia.arcs;
    for (int i = 1; i <= d; ++i) gens.push_back("u" + std::to_string(i));
    gens.push_back("v0");
    for (int i = 1; i <= d; ++i) gens.push_back("v" + std::to_string(i));
    std::set<std::string> arc_names(dia.arcs.begin(), dia.arcs.end());
    for (size_t i = na; i < gens.size(); ++i)
        if (arc_names.count(gens[i])) throw error("diagram: arc name collides with operator " + gens[i]);

    const int ubase = na, v0gen = na + d, vbase = na + d + 1;
    std::vector<FreeWord> rel;
    for (int i = na; i < static_cast<int>(gens.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(gens.size()); ++j)
            rel.push_back(detail::commutator(i + 1, j + 1));

    Presentation tmp = make_presentation(gens, {});
    auto idx = [&](const std::string& arc) { return tmp.generator_index(arc) + 1; };
    auto U = [&](const std::string& arc) { return ubase + detail::comp_of(dia, arc); };
    auto V = [&](const std::string& arc) { return vbase + detail::comp_of(dia, arc); };
    auto conj = [](FreeWord core, std::initializer_list<int> by) {
        FreeWord out;
        std::vector<int> byv(by);
        for (auto it = byv.rbegin(); it != byv.rend(); ++it) out.push_back(-*it);
        for (int l : core) out.push_back(l);
        for (int l : byv) out.push_back(l);
        return out;
    };
    auto push_eq = [&](int lhs, FreeWord rhs) {
        FreeWord r{-lhs};
        r.insert(r.end(), rhs.begin(), rhs.end());
        rel.push_back(free_reduce(r));
    };

    for (const auto& c : dia.crossings) {
        detail::check_strand_consistency(dia, c);
        int a = idx(c.a), b = idx(c.b), cc = idx(c.c), dd = idx(c.d);
        int uA = U(c.a), uB = U(c.b), vA = V(c.a), vB = V(c.b);
        if (c.kind == Crossing::positive) {
            FreeWord rhs{a};
            for (int l : conj({b}, {uA})) rhs.push_back(l);
            for (int l : fw_inverse(conj({a}, {v0gen + 1, uB}))) rhs.push_back(l);
            push_eq(cc, rhs);
            push_eq(dd, conj({a}, {v0gen + 1}));
        } else if (c.kind == Crossing::negative) {
            push_eq(cc, conj({b}, {-(v0gen + 1)}));
            FreeWord core = fw_inverse(conj({b}, {-(v0gen + 1)}));
            core.push_back(a);
            for (int l : conj({b}, {uA})) core.push_back(l);
            push_eq(dd, conj(core, {-uB}));
        } else {
            push_eq(cc, conj({b}, {-vA}));
            push_eq(dd, conj({a}, {vB}));
        }
    }
    return make_presentation(std::move(gens), std::move(rel));
}

// ---------------------------------------------------------------------------
// Markov-type moves
// ---------------------------------------------------------------------------

struct MarkovMove {
    enum Kind { virt_conj, real_conj, virt_stab, real_stab, right_thread, left_thread };
    Kind kind;
    int k = 0;     // conjugation index
    int sign = 1;  // for real_stab / threads

    std::string name() const {
        switch (kind) {
            case virt_conj: return "vc:" + std::to_string(k);
            case real_conj: return "rc:" + std::to_string(k);
            case virt_stab: return "vs";
            case real_stab: return sign > 0 ? "rs:+" : "rs:-";
            case right_thread: return sign > 0 ? "rt:+" : "rt:-";
            case left_thread: return sign > 0 ? "lt:+" : "lt:-";
        }
        return "?";
    }
};

/// All move instances applicable to an n-strand braid.
inline std::vector<MarkovMove> all_markov_moves(int n) {
    std::vector<MarkovMove> out;
    for (int k = 1; k <= n - 1; ++k) out.push_back({MarkovMove::virt_conj, k, 1});
    for (int k = 1; k <= n - 1; ++k) out.push_back({MarkovMove::real_conj, k, 1});
    out.push_back({MarkovMove::virt_stab, 0, 1});
    for (int s : {1, -1}) out.push_back({MarkovMove::real_stab, 0, s});
    for (int s : {1, -1}) out.push_back({MarkovMove::right_thread, 0, s});
    for (int s : {1, -1}) out.push_back({MarkovMove::left_thread, 0, s});
    return out;
}

inline std::optional<MarkovMove> parse_markov_move(std::string_view text) {
    auto sign_of = [](std::string_view s) -> std::optional<int> {
        if (s == "+") return 1;
        if (s == "-") return -1;
        return std::nullopt;
    };
    std::string t(text);
    if (t == "vs") return MarkovMove{MarkovMove::virt_stab, 0, 1};
    auto colon = t.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = t.substr(0, colon), arg = t.substr(colon + 1);
    if (head == "vc" || head == "rc") {
        try {
            int k = std::stoi(arg);
            return MarkovMove{head == "vc" ? MarkovMove::virt_conj : MarkovMove::real_conj, k, 1};
        } catch (...) {
            return std::nullopt;
        }
    }
    auto s = sign_of(arg);
    if (!s) return std::nullopt;
    if (head == "rs") return MarkovMove{MarkovMove::real_stab, 0, *s};
    if (head == "rt") return MarkovMove{MarkovMove::right_thread, 0, *s};
    if (head == "lt") return MarkovMove{MarkovMove::left_thread, 0, *s};
    return std::nullopt;
}

/// Applies one move.  Stabilizing moves return a braid on n+1 strands.
inline BraidWord apply_markov(const BraidWord& braid, const MarkovMove& move) {
    const int n = braid.strands;
    auto S = [](int i, int sign = 1) { return BraidLetter{BraidLetter::sigma, i, sign}; };
    auto R = [](int i) { return BraidLetter{BraidLetter::rho, i, 1}; };
    switch (move.kind) {
        case MarkovMove::virt_conj: {
            if (move.k < 1 || move.k > n - 1) throw error("markov: conjugation index out of range");
            std::vector<BraidLetter> ls{R(move.k)};
            ls.insert(ls.end(), braid.letters.begin(), braid.letters.end());
            ls.push_back(R(move.k));
            return make_braid(n, ls);
        }
        case MarkovMove::real_conj: {
            if (move.k < 1 || move.k > n - 1) throw error("markov: conjugation index out of range");
            std::vector<BraidLetter> ls{S(move.k)};
            ls.insert(ls.end(), braid.letters.begin(), braid.letters.end());
            ls.push_back(S(move.k, -1));
            return make_braid(n, ls);
        }
        case MarkovMove::virt_stab: {
            auto ls = braid.letters;
            ls.push_back(R(n));
            return make_braid(n + 1, ls);
        }
        case MarkovMove::real_stab: {
            auto ls = braid.letters;
            ls.push_back(S(n, move.sign));
            return make_braid(n + 1, ls);
        }
        case MarkovMove::right_thread: {
            auto ls = braid.letters;
            ls.push_back(S(n, move.sign));
            ls.push_back(R(n - 1));
            ls.push_back(S(n, -move.sign));
            return make_braid(n + 1, ls);
        }
        case MarkovMove::left_thread: {
            auto ls = braid.letters;
            ls.push_back(R(n));
            ls.push_back(R(n - 1));
            ls.push_back(S(n - 1, -move.sign));
            ls.push_back(R(n));
            ls.push_back(S(n - 1, move.sign));
            ls.push_back(R(n - 1));
            ls.push_back(R(n));
            return make_braid(n + 1, ls);
        }
    }
    throw error("markov: bad move");
}

/// Number of distinct u-named generators surviving Tietze simplification of
/// link_group(M, braid); equals the component count of the closure.
inline int surviving_u_generators(const BraidWord& braid, int budget = 10000) {
    Presentation p = tietze_simplify(link_group(RepKind::M, braid), budget).presentation;
    int count = 0;
    for (const auto& g : p.generators)
        if (g.size() >= 2 && g[0] == 'u' && std::isdigit(static_cast<unsigned char>(g[1]))) ++count;
    return count;
}

}  // namespace vbraid
