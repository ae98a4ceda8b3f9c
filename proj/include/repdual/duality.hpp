#pragma once

/**
 * @file duality.hpp
 * @brief The representation-based dual R(H): the multiset of irreducible representations
 * ρ_{j_1} ⊗ … ⊗ ρ_{j_n} of Γⁿ whose sum is the permutation representation on Γⁿ/H.
 *
 * Two independent routes are provided:
 *  - dual_multiset: Frobenius reciprocity, mult(j̄) = (1/|H|) Σ_{h∈H} Π_m χ_{j_m}(h_m);
 *  - decompose_permutation_character: fixed cosets counted directly, then decomposed
 *    with the Γⁿ inner product.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "codes.hpp"

namespace repdual {

/// Irrep index per coordinate, 0-based (0 = trivial). Rendered 1-based in JSON.
using IrrepTuple = std::vector<std::uint32_t>;
/// Class index per coordinate, 0-based (0 = identity class).
using ClassTuple = std::vector<std::uint32_t>;

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t n, std::size_t cap, const char* what) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > cap / std::max<std::size_t>(base, 1))
            throw CapExceeded(std::string(what) + " exceeds cap " + std::to_string(cap));
        r *= base;
    }
    if (r > cap) throw CapExceeded(std::string(what) + " exceeds cap " + std::to_string(cap));
    return r;
}

/// Mixed-radix decode with coordinate 0 least significant.
inline std::vector<std::uint32_t> decode_tuple(std::size_t index, std::size_t k, std::size_t n) {
    std::vector<std::uint32_t> t(n);
    for (std::size_t m = 0; m < n; ++m) {
        t[m] = static_cast<std::uint32_t>(index % k);
        index /= k;
    }
    return t;
}

inline std::size_t encode_tuple(const std::vector<std::uint32_t>& t, std::size_t k) {
    std::size_t index = 0;
    for (std::size_t m = t.size(); m-- > 0;) index = index * k + t[m];
    return index;
}

}  // namespace detail

struct DualMultiset {
    std::size_t k = 0;
    std::size_t n = 0;
    std::map<IrrepTuple, Integer> mult;  // only non-zero multiplicities
    std::vector<unsigned> degrees;
    std::vector<std::string> labels;

    Integer multiplicity(const IrrepTuple& j) const {
        auto it = mult.find(j);
        return it == mult.end() ? Integer(0) : it->second;
    }

    Integer dim(const IrrepTuple& j) const {
        Integer d = 1;
        for (auto x : j) d *= degrees[x];
        return d;
    }

    /// n minus the number of trivial components.
    unsigned weight(const IrrepTuple& j) const {
        unsigned w = 0;
        for (auto x : j) w += x != 0;
        return w;
    }

    Integer total_dimension() const {
        Integer s = 0;
        for (const auto& [j, m] : mult) s += m * dim(j);
        return s;
    }

    std::string tuple_label(const IrrepTuple& j) const {
        std::string s;
        for (std::size_t m = 0; m < j.size(); ++m) s += (m ? "⊗" : "") + labels[j[m]];
        return s;
    }

    friend bool operator==(const DualMultiset& a, const DualMultiset& b) {
        return a.k == b.k && a.n == b.n && a.mult == b.mult;
    }
};

namespace detail {

/// Converts |H|·mult sums into the multiset; checks integrality and both structural invariants.
inline DualMultiset finish_multiset(const std::vector<CycInteger>& scaled, const Integer& divisor, const GroupCode& code,
                                    const CharacterTable& ct, const char* route) {
    DualMultiset dm;
    dm.k = ct.k;
    dm.n = code.length();
    dm.degrees = ct.degrees;
    dm.labels = ct.irrep_labels;
    for (std::size_t idx = 0; idx < scaled.size(); ++idx) {
        const auto& v = scaled[idx];
        if (v.is_zero()) continue;
        auto s = v.as_scalar();
        if (!s) throw NonIntegerMultiplicity(std::string(route) + ": irrational value " + v.str());
        if (*s % divisor != 0 || *s < 0)
            throw NonIntegerMultiplicity(std::string(route) + ": " + s->str() + "/" + divisor.str() +
                                         " is not a non-negative integer");
        dm.mult.emplace(decode_tuple(idx, dm.k, dm.n), *s / divisor);
    }
    const Integer cosets = ipow(Integer(code.group().order()), static_cast<unsigned>(code.length())) / code.size();
    if (dm.total_dimension() != cosets)
        throw NonIntegerMultiplicity(std::string(route) + ": total dimension " + dm.total_dimension().str() +
                                     " != |Γ|^n/|H| = " + cosets.str());
    if (dm.multiplicity(IrrepTuple(dm.n, 0)) != 1)
        throw NonIntegerMultiplicity(std::string(route) + ": trivial representation multiplicity is not 1");
    return dm;
}

}  // namespace detail

/// Frobenius route. The sum over H is grouped by class tuple (χ is a class function) and then
/// contracted one coordinate at a time with the character table.
inline DualMultiset dual_multiset(const GroupCode& code, const CharacterTable& ct, const Caps& caps = {}) {
    const std::size_t k = ct.k, n = code.length();
    const std::size_t total = detail::checked_power(k, n, caps.tuples, "k^n irrep tuples");
    std::vector<CycInteger> tensor(total);
    for (const auto& [pattern, count] : class_pattern_counts(code, ct.classes))
        tensor[detail::encode_tuple(pattern, k)] = CycInteger(count);

    std::vector<CycInteger> in(k), out(k);
    std::size_t stride = 1;
    for (std::size_t m = 0; m < n; ++m, stride *= k) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % k != 0) continue;
            bool any = false;
            for (std::size_t i = 0; i < k; ++i) {
                in[i] = std::move(tensor[base + i * stride]);
                any = any || !in[i].is_zero();
            }
            if (!any) {
                for (std::size_t j = 0; j < k; ++j) tensor[base + j * stride] = CycInteger();
                continue;
            }
            for (std::size_t j = 0; j < k; ++j) {
                CycInteger s;
                for (std::size_t i = 0; i < k; ++i)
                    if (!in[i].is_zero()) s += ct.values[j][i] * in[i];
                tensor[base + j * stride] = std::move(s);
            }
        }
    }
    return detail::finish_multiset(tensor, Integer(code.size()), code, ct, "frobenius");
}

/// The permutation character of Γⁿ on the left cosets of H, one value per class tuple.
struct PermutationCharacter {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<Integer> values;  // dense, indexed by encoded class tuple

    const Integer& at(const ClassTuple& c) const { return values[detail::encode_tuple(c, k)]; }
};

/// χ(ḡ) = #{xH : ḡxH = xH}, counted directly over coset representatives. Each value is also
/// recomputed on a second representative of its class as a class-function check.
inline PermutationCharacter permutation_character(const GroupCode& code, const ClassData& cd, const Caps& caps = {}) {
    const auto& G = code.group();
    const std::size_t q = G.order(), n = code.length(), k = cd.num_classes;
    const std::size_t universe = detail::checked_power(q, n, caps.universe, "|Γ|^n");
    if (universe / code.size() > caps.cosets)
        throw CapExceeded("coset count " + std::to_string(universe / code.size()) + " exceeds cap cosets=" +
                          std::to_string(caps.cosets));
    const std::size_t classes_total = detail::checked_power(k, n, caps.tuples, "k^n class tuples");

    auto encode = [&](const GroupWord& w) {
        std::size_t x = 0;
        for (std::size_t m = n; m-- > 0;) x = x * q + w[m];
        return x;
    };
    std::vector<bool> in_h(universe, false);
    for (const auto& h : code.words()) in_h[encode(h)] = true;

    std::vector<GroupWord> reps;
    {
        std::vector<bool> seen(universe, false);
        GroupWord x = GroupWord::identity(n);
        for (std::size_t idx = 0; idx < universe; ++idx) {
            for (std::size_t m = 0, r = idx; m < n; ++m, r /= q) x[m] = static_cast<Element>(r % q);
            if (seen[idx]) continue;
            reps.push_back(x);
            for (const auto& h : code.words()) seen[encode(word_mul(G, x, h))] = true;
        }
    }

    auto fixed_cosets = [&](const GroupWord& g) {
        std::size_t count = 0;
        for (const auto& x : reps) {
            std::size_t idx = 0;
            for (std::size_t m = n; m-- > 0;) idx = idx * q + G.mul(G.mul(G.inv(x[m]), g[m]), x[m]);
            count += in_h[idx];
        }
        return count;
    };

    // second representative: conjugate by the last element in each coordinate
    const Element y = static_cast<Element>(q - 1);
    PermutationCharacter pc;
    pc.k = k;
    pc.n = n;
    pc.values.resize(classes_total);
    GroupWord g{std::vector<Element>(n)};
    GroupWord g2 = g;
    for (std::size_t idx = 0; idx < classes_total; ++idx) {
        const ClassTuple c = detail::decode_tuple(idx, k, n);
        for (std::size_t m = 0; m < n; ++m) {
            g[m] = cd.reps[c[m]];
            g2[m] = G.conj(y, g[m]);
        }
        const std::size_t value = fixed_cosets(g);
        if (g2 != g && fixed_cosets(g2) != value)
            throw Error("permutation character is not constant on class tuple " + std::to_string(idx));
        pc.values[idx] = value;
    }
    return pc;
}

/// mult(j̄) = (1/|Γ|ⁿ) Σ_ī |C_ī| χ(ī) Π_m conj(χ_{j_m}(c_{i_m})), summed directly.
inline DualMultiset decompose_permutation_character(const PermutationCharacter& pc, const GroupCode& code,
                                                    const CharacterTable& ct, const Caps& caps = {}) {
    const std::size_t k = ct.k, n = pc.n;
    const std::size_t total = detail::checked_power(k, n, caps.tuples, "k^n irrep tuples");
    std::vector<std::vector<CycInteger>> conj(k, std::vector<CycInteger>(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) conj[j][i] = ct.values[j][i].conj();

    std::vector<CycInteger> acc(total);
    std::vector<CycInteger> prefix(n + 1);
    std::vector<std::uint32_t> j(n);
    for (std::size_t cidx = 0; cidx < pc.values.size(); ++cidx) {
        if (pc.values[cidx] == 0) continue;
        const ClassTuple c = detail::decode_tuple(cidx, k, n);
        Integer weight = pc.values[cidx];
        for (auto ci : c) weight *= ct.classes.sizes[ci];
        prefix[0] = CycInteger(weight);
        // depth-first over j̄ with running products; a zero factor prunes the subtree
        std::size_t depth = 0;
        std::fill(j.begin(), j.end(), 0u);
        if (n == 0) {
            acc[0] += prefix[0];
            continue;
        }
        while (true) {
            if (j[depth] < k) {
                const auto& f = conj[j[depth]][c[depth]];
                if (f.is_zero()) {
                    ++j[depth];
                    continue;
                }
                prefix[depth + 1] = prefix[depth] * f;
                if (depth + 1 == n) {
                    acc[detail::encode_tuple(j, k)] += prefix[n];
                    ++j[depth];
                } else {
                    ++depth;
                    j[depth] = 0;
                }
            } else {
                if (depth == 0) break;
                --depth;
                ++j[depth];
            }
        }
    }
    const Integer order_n = ipow(Integer(code.group().order()), static_cast<unsigned>(n));
    return detail::finish_multiset(acc, order_n, code, ct, "permutation character");
}

/// W_{R(H)}(z) = Σ_ρ mult(ρ) dim(ρ) z^{w(ρ)}.
inline UniPoly dual_weight_enumerator(const DualMultiset& dm) {
    UniPoly W;
    for (const auto& [j, m] : dm.mult) W.add(dm.weight(j), Rational(m * dm.dim(j)));
    return W;
}

/// cwe_{R(H)}(x_1, …, x_k) = Σ_j̄ mult(j̄) Π_m x_{j_m}; no dimension factor.
inline MultiPoly dual_cwe(const DualMultiset& dm) {
    MultiPoly P(dm.k);
    Exponents e(dm.k);
    for (const auto& [j, m] : dm.mult) {
        std::fill(e.begin(), e.end(), 0u);
        for (auto x : j) ++e[x];
        P.add(e, Rational(m));
    }
    return P;
}

struct ExtensionLemmaResult {
    bool passed = false;
    Subset subset = 0;
    Integer lhs;   // Σ_{j̄ trivial on S} mult(j̄) dim(j̄)
    Rational rhs;  // |Γ|^{n-|S|} / |pr_{E-S}(H)|
    std::string detail;
};

inline ExtensionLemmaResult extension_lemma_check(const GroupCode& code, const DualMultiset& dm, Subset S) {
    ExtensionLemmaResult r;
    r.subset = S;
    const std::size_t n = code.length();
    r.lhs = 0;
    for (const auto& [j, m] : dm.mult) {
        bool trivial_on_s = true;
        for (std::size_t i = 0; i < n && trivial_on_s; ++i)
            if ((S >> i & 1u) && j[i] != 0) trivial_on_s = false;
        if (trivial_on_s) r.lhs += m * dm.dim(j);
    }
    const Subset ground = static_cast<Subset>((std::size_t{1} << n) - 1);
    const auto size_s = static_cast<unsigned>(std::popcount(S));
    r.rhs = Rational(ipow(Integer(code.group().order()), static_cast<unsigned>(n) - size_s),
                     Integer(project_cardinality(code, ground & ~S)));
    r.passed = Rational(r.lhs) == r.rhs;
    if (!r.passed)
        r.detail = "S=" + std::to_string(S) + ": lhs " + r.lhs.str() + " != rhs " + to_string(r.rhs);
    return r;
}

}  // namespace repdual
