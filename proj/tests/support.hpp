#pragma once

#include <map>
#include <random>
#include <set>
#include <thread>
#include <string>
#include <vector>

#include "repdual/repdual.hpp"

namespace repdual::fixtures {

inline const std::vector<std::string>& matrix_group_names() {
    static const std::vector<std::string> names = {"Z2", "Z4", "Z6", "S3", "D4", "Q8"};
    return names;
}

struct MatrixCode {
    std::string label;  // e.g. "S3 n=3 random#2"
    std::string group_name;
    std::size_t n;
    GroupCode code;
};

inline GroupWord random_word(const FiniteGroup& G, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GroupWord w = GroupWord::identity(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Element>(rng() % G.order());
    return w;
}

/// Trivial, full, diagonal and five random cyclic codes for each group and n = 1..4.
inline const std::vector<MatrixCode>& matrix_codes() {
    static const std::vector<MatrixCode> codes = [] {
        std::vector<MatrixCode> out;
        for (const auto& name : matrix_group_names()) {
            const FiniteGroup G = builtin_group(name);
            for (std::size_t n = 1; n <= 4; ++n) {
                const std::string base = name + " n=" + std::to_string(n);
                out.push_back({base + " trivial", name, n, trivial_code(G, n)});
                out.push_back({base + " full", name, n, full_code(G, n)});
                out.push_back({base + " diagonal", name, n, diagonal_code(G, n)});
                for (std::uint64_t seed = 1; seed <= 5; ++seed)
                    out.push_back({base + " random#" + std::to_string(seed), name, n,
                                   code_from_generators(G, n, {random_word(G, n, 1000 * n + seed)})});
            }
        }
        return out;
    }();
    return codes;
}

inline const CharacterTable& table_for(const FiniteGroup& G) {
    static CharacterTableCache cache;
    static std::vector<std::shared_ptr<const CharacterTable>> keep;
    auto t = cache.get(G);
    keep.push_back(t);
    return *t;
}

inline std::size_t int_pow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Γⁿ enumerated with coordinate 0 varying fastest.
inline GroupWord word_at(std::size_t index, std::size_t q, std::size_t n) {
    GroupWord w = GroupWord::identity(n);
    for (std::size_t i = 0; i < n; ++i, index /= q) w[i] = static_cast<Element>(index % q);
    return w;
}

/// Multiplicities by the textbook formula: χ_perm(g) = #{x : x⁻¹gx ∈ H} / |H| over the whole of Γⁿ,
/// then (χ_perm, χ_j̄) summed element by element. Only for tiny Γⁿ.
inline std::map<IrrepTuple, Integer> brute_force_multiplicities(const GroupCode& code, const CharacterTable& ct) {
    const auto& G = code.group();
    const std::size_t q = G.order(), n = code.length(), N = int_pow(q, n), k = ct.k;
    const std::size_t e = G.exponent();
    std::vector<Integer> perm(N);
    for (std::size_t gi = 0; gi < N; ++gi) {
        const GroupWord g = word_at(gi, q, n);
        std::size_t fixed = 0;
        for (std::size_t xi = 0; xi < N; ++xi) {
            const GroupWord x = word_at(xi, q, n);
            if (code.contains(word_mul(G, word_inv(G, x), word_mul(G, g, x)))) ++fixed;
        }
        perm[gi] = Integer(fixed / code.size());
    }
    std::map<IrrepTuple, Integer> out;
    for (std::size_t ji = 0; ji < int_pow(k, n); ++ji) {
        IrrepTuple j(n);
        for (std::size_t m = 0, r = ji; m < n; ++m, r /= k) j[m] = static_cast<std::uint32_t>(r % k);
        CycInteger sum = CycInteger::zero(static_cast<unsigned>(e));
        for (std::size_t gi = 0; gi < N; ++gi) {
            if (perm[gi] == 0) continue;
            const GroupWord g = word_at(gi, q, n);
            CycInteger chi(1);
            for (std::size_t m = 0; m < n; ++m) chi *= ct.at_element(j[m], g[m]).conj();
            chi *= perm[gi];
            sum += chi;
        }
        const auto s = sum.as_scalar();
        if (!s || *s % N != 0) throw std::runtime_error("non-integral multiplicity in oracle");
        if (*s != 0) out[j] = *s / N;
    }
    return out;
}

/// |pr_S(H)| by collecting projected words into a set.
inline std::size_t brute_projection(const GroupCode& code, Subset S) {
    std::set<std::vector<Element>> seen;
    for (const auto& w : code.words()) {
        std::vector<Element> p;
        for (std::size_t i = 0; i < code.length(); ++i)
            if (S >> i & 1u) p.push_back(w[i]);
        seen.insert(p);
    }
    return seen.size();
}

}  // namespace repdual::fixtures
