// Independent reference implementations used only by the test suites.
//
// Each oracle recomputes a quantity along a different route than the library:
//   * naive_normal_form: single-step rewriting on flat letter lists,
//     iterated to a fixpoint (vs the syllable-merging normalizer);
//   * minor_gcd_factors: invariant factors from gcds of k x k minors
//     (vs elimination-based Smith normal form);
//   * saturation_class2: normal-closure lattice grown from concrete
//     conjugates/products/inverses until stable (vs the one-step commutator
//     span rule).

#pragma once

#include <random>

#include "vbraid/invariants.hpp"
#include "vbraid/word.hpp"

namespace oracle {

using vbraid::Int;

// ---------------------------------------------------------------------------
// Naive word rewriting
// ---------------------------------------------------------------------------

struct FlatLetter {
    bool abelian;
    int index;
    long long exp;  // merged exponent

    friend bool operator==(const FlatLetter&, const FlatLetter&) = default;
};

/// Rules, applied left to right until none fires:
///   (1) adjacent letters with the same symbol merge (drop on zero);
///   (2) adjacent abelian letters with indices out of order swap.
inline std::vector<FlatLetter> naive_normal_form(std::vector<FlatLetter> w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size();) {
            FlatLetter& x = w[i];
            FlatLetter& y = w[i + 1];
            if (x.abelian == y.abelian && x.index == y.index) {
                x.exp += y.exp;
                w.erase(w.begin() + i + 1);
                if (x.exp == 0) w.erase(w.begin() + i);
                changed = true;
                if (i > 0) --i;
            } else if (x.abelian && y.abelian && y.index < x.index) {
                std::swap(w[i], w[i + 1]);
                changed = true;
                ++i;
            } else {
                ++i;
            }
        }
    }
    return w;
}

/// Canonical flat form of a library Word for comparison with the oracle:
/// expand to letters, then merge adjacent same-symbol runs.
inline std::vector<FlatLetter> flatten(const vbraid::Word& w) {
    std::vector<FlatLetter> out;
    for (const auto& l : w.letters()) {
        FlatLetter f{l.sym.cls == vbraid::SymbolClass::abelian_gen, l.sym.index,
                     l.exp.convert_to<long long>()};
        if (!out.empty() && out.back().abelian == f.abelian && out.back().index == f.index) {
            out.back().exp += f.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(f);
        }
    }
    return out;
}

inline std::vector<FlatLetter> to_flat(std::span<const vbraid::SignedLetter> raw) {
    std::vector<FlatLetter> out;
    for (const auto& l : raw)
        out.push_back({l.sym.cls == vbraid::SymbolClass::abelian_gen, l.sym.index,
                       l.exp.convert_to<long long>()});
    return out;
}

// ---------------------------------------------------------------------------
// Minor-gcd Smith normal form
// ---------------------------------------------------------------------------

inline Int determinant(const vbraid::IntMatrix& m, const std::vector<size_t>& rows,
                       const std::vector<size_t>& cols) {
    const size_t k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return m.at(rows[0], cols[0]);
    Int det = 0;
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        std::vector<size_t> sub_cols;
        for (size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Int minor = determinant(m, sub_rows, sub_cols);
        Int term = m.at(rows[0], cols[j]) * minor;
        if (j % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

/// d_k = gcd of all k x k minors;  invariant factor f_k = d_k / d_{k-1}.
inline std::vector<Int> minor_gcd_factors(const vbraid::IntMatrix& m) {
    using boost::multiprecision::gcd;
    const size_t kmax = std::min(m.rows, m.cols);
    std::vector<Int> d{1};  // d_0 = 1
    for (size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        std::vector<size_t> rows(k), cols(k);
        // iterate over all k-subsets of rows and columns
        std::vector<size_t> ri(k), ci(k);
        for (size_t i = 0; i < k; ++i) ri[i] = i;
        auto next_subset = [](std::vector<size_t>& idx, size_t n) {
            size_t k2 = idx.size();
            for (size_t i = k2; i-- > 0;) {
                if (idx[i] + (k2 - i) < n) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        if (k > m.rows || k > m.cols) break;
        do {
            for (size_t i = 0; i < k; ++i) ci[i] = i;
            do {
                Int det = determinant(m, ri, ci);
                g = gcd(g, abs(det));
            } while (next_subset(ci, m.cols));
        } while (next_subset(ri, m.rows));
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Int> factors;
    for (size_t k = 1; k < d.size(); ++k) factors.push_back(d[k] / d[k - 1]);
    return factors;
}

// ---------------------------------------------------------------------------
// Class-2 saturation
// ---------------------------------------------------------------------------

/// Lattice of integer vectors kept as an echelon basis, one pivot row per
/// leading column; insert() reports whether the vector enlarged the lattice.
class Lattice {
public:
    explicit Lattice(size_t dim) : dim_(dim) {}

    bool insert(std::vector<Int> v) {
        bool grew = false;
        for (;;) {
            size_t c = leading_col(v);
            if (c >= dim_) return grew;
            auto it = pivots_.find(c);
            if (it == pivots_.end()) {
                if (v[c] < 0) negate(v);
                pivots_.emplace(c, std::move(v));
                return true;
            }
            std::vector<Int>& r = it->second;
            if (v[c] % r[c] == 0) {
                Int q = v[c] / r[c];
                for (size_t j = c; j < dim_; ++j) v[j] -= q * r[j];
            } else {
                grew = true;  // pivot entry strictly shrinks to the gcd
                while (v[c] != 0) {
                    Int q = r[c] / v[c];
                    for (size_t j = c; j < dim_; ++j) r[j] -= q * v[j];
                    std::swap(r, v);
                }
                if (r[c] < 0) negate(r);
            }
        }
    }

    bool contains(std::vector<Int> v) const {
        for (;;) {
            size_t c = leading_col(v);
            if (c >= dim_) return true;
            auto it = pivots_.find(c);
            if (it == pivots_.end() || v[c] % it->second[c] != 0) return false;
            Int q = v[c] / it->second[c];
            for (size_t j = c; j < dim_; ++j) v[j] -= q * it->second[j];
        }
    }

    std::vector<std::vector<Int>> rows() const {
        std::vector<std::vector<Int>> out;
        for (const auto& [c, r] : pivots_) out.push_back(r);
        return out;
    }

private:
    static size_t leading_col(const std::vector<Int>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }
    static void negate(std::vector<Int>& v) {
        for (auto& x : v) x = -x;
    }

    size_t dim_;
    std::map<size_t, std::vector<Int>> pivots_;
};

/// gamma2/gamma3 invariants by explicit normal-closure collection.  Only
/// commutator parts of concrete elements of the closure with vanishing
/// generator exponents are harvested, so the lattice is sound by
/// construction; it is grown with commutators of relators against one- and
/// two-generator words, with balanced relator products built from an integer
/// kernel basis, and with randomized balanced products (random factor order,
/// random short conjugators) until it is stable.
inline vbraid::AbelianInvariants saturation_class2(const vbraid::Presentation& p) {
    using vbraid::Class2Element;
    const int k = static_cast<int>(p.generators.size());
    vbraid::Class2Group g(k);
    const int c = g.commutator_count();
    Lattice lat(static_cast<size_t>(c));

    std::vector<Class2Element> rel;
    std::vector<std::vector<Int>> abelian_rows;
    for (const auto& r : p.relators) {
        rel.push_back(g.evaluate(r));
        abelian_rows.push_back(rel.back().a);
    }
    auto balanced = [&](const Class2Element& e) {
        return std::all_of(e.a.begin(), e.a.end(), [](const Int& v) { return v == 0; });
    };
    auto harvest = [&](const Class2Element& e) {
        if (!balanced(e)) throw vbraid::error("saturation oracle: unbalanced harvest");
        lat.insert(e.b);
    };

    for (const auto& e : rel) {
        if (balanced(e)) harvest(e);
        for (int j = 0; j < k; ++j) {
            harvest(g.commutator(e, g.generator(j)));
            harvest(g.commutator(e, g.generator(j, -1)));
            for (int l = 0; l < k; ++l)
                harvest(g.commutator(e, g.multiply(g.generator(j), g.generator(l))));
        }
    }

    auto kernel = vbraid::integer_kernel_basis(abelian_rows, static_cast<size_t>(k));
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> coin(0, 1), genpick(0, std::max(0, k - 1));
    auto kernel_product = [&](const std::vector<Int>& n, bool randomized) {
        // multiset of conjugated factors realizing the kernel combination
        std::vector<Class2Element> factors;
        for (size_t t = 0; t < n.size(); ++t) {
            Int reps = abs(n[t]);
            for (Int i = 0; i < reps; ++i) {
                Class2Element f = n[t] > 0 ? rel[t] : g.inverse(rel[t]);
                if (randomized && k > 0) {
                    int len = coin(rng) + coin(rng);
                    for (int s = 0; s < len; ++s)
                        f = g.conjugate(f, g.generator(genpick(rng), coin(rng) ? 1 : -1));
                }
                factors.push_back(f);
            }
        }
        if (randomized) std::shuffle(factors.begin(), factors.end(), rng);
        Class2Element prod = g.identity();
        for (const auto& f : factors) prod = g.multiply(prod, f);
        return prod;
    };

    for (const auto& n : kernel) harvest(kernel_product(n, false));

    // randomized saturation: random small kernel combinations in random shapes
    if (!kernel.empty()) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(kernel.size()) - 1);
        std::uniform_int_distribution<int> scale(-2, 2);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Int> n(rel.size(), 0);
            int combos = 1 + coin(rng);
            for (int t = 0; t < combos; ++t) {
                const auto& base = kernel[pick(rng)];
                Int s = scale(rng);
                for (size_t i = 0; i < n.size(); ++i) n[i] += s * base[i];
            }
            harvest(kernel_product(n, true));
        }
    }

    vbraid::IntMatrix m(lat.rows().size(), c);
    {
        auto rows = lat.rows();
        for (size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < c; ++j) m.at(r, j) = rows[r][j];
    }
    return vbraid::cokernel_invariants(m);
}

}  // namespace oracle
