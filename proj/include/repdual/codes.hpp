#pragma once

/**
 * @file codes.hpp
 * @brief Γ-codes H ≤ Γⁿ, their projections, polymatroid rank data and enumerators.
 *
 * |H| is carried as an exact integer. The rank r(S) = log_{|Γ|} |pr_S(H)| is irrational in
 * general, so everything exact is phrased through the cardinalities |pr_S(H)|; only
 * tutte_evaluate works in floating point.
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "group.hpp"
#include "number.hpp"
#include "polynomial.hpp"

namespace repdual {

class GroupCode {
   public:
    /// Trusted constructor: `words` must be the elements of a subgroup of Γⁿ.
    GroupCode(FiniteGroup group, std::size_t n, std::vector<GroupWord> words)
        : group_(std::move(group)), n_(n), words_(std::move(words)) {
        std::sort(words_.begin(), words_.end());
    }

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t length() const noexcept { return n_; }
    const std::vector<GroupWord>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

    bool contains(const GroupWord& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

    /// r' as the exact pair (|H|, |Γ|); r' = log_{|Γ|} |H|.
    std::pair<Integer, Integer> dimension_pair() const { return {Integer(size()), Integer(group_.order())}; }

   private:
    FiniteGroup group_;
    std::size_t n_;
    std::vector<GroupWord> words_;
};

/// Subgroup generated by `generators` (BFS closure under right multiplication).
inline GroupCode code_from_generators(const FiniteGroup& G, std::size_t n, const std::vector<GroupWord>& generators,
                                      std::size_t cap = Caps{}.code_size) {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].size() != n)
            throw LengthMismatch("generator " + std::to_string(i) + " has length " +
                                 std::to_string(generators[i].size()) + ", expected " + std::to_string(n));
    std::unordered_set<GroupWord, GroupWordHash> seen;
    std::vector<GroupWord> words{GroupWord::identity(n)};
    seen.insert(words[0]);
    for (std::size_t head = 0; head < words.size(); ++head)
        for (const auto& g : generators) {
            GroupWord w = word_mul(G, words[head], g);
            if (seen.contains(w)) continue;
            if (words.size() >= cap) throw ClosureCapExceeded("code closure exceeds cap code_size=" + std::to_string(cap));
            seen.insert(w);
            words.push_back(std::move(w));
        }
    return GroupCode(G, n, std::move(words));
}

inline GroupCode trivial_code(const FiniteGroup& G, std::size_t n) { return GroupCode(G, n, {GroupWord::identity(n)}); }

inline GroupCode full_code(const FiniteGroup& G, std::size_t n, std::size_t cap = Caps{}.code_size) {
    double total = std::pow(static_cast<double>(G.order()), static_cast<double>(n));
    if (total > static_cast<double>(cap)) throw ClosureCapExceeded("|Γ|^n exceeds cap code_size=" + std::to_string(cap));
    std::vector<GroupWord> words;
    GroupWord w = GroupWord::identity(n);
    while (true) {
        words.push_back(w);
        std::size_t i = 0;
        while (i < n && ++w[i] == G.order()) w[i++] = 0;
        if (i == n) break;
    }
    return GroupCode(G, n, std::move(words));
}

/// {(σ, …, σ) : σ ∈ Γ}.
inline GroupCode diagonal_code(const FiniteGroup& G, std::size_t n) {
    std::vector<GroupWord> words;
    for (Element g = 0; g < G.order(); ++g) words.emplace_back(std::vector<Element>(n, g));
    return GroupCode(G, n, std::move(words));
}

/// Bit i of a subset mask is coordinate i (0-based).
using Subset = std::uint32_t;

inline std::size_t project_cardinality(const GroupCode& code, Subset S) {
    std::unordered_set<GroupWord, GroupWordHash> seen;
    GroupWord r;
    for (const auto& w : code.words()) {
        r.components.clear();
        for (std::size_t i = 0; i < code.length(); ++i)
            if (S >> i & 1u) r.components.push_back(w[i]);
        seen.insert(r);
    }
    return seen.size();
}

/// The polymatroid P(H): card(S) = |pr_S(H)| for every S ⊆ [n].
struct RankProfile {
    std::size_t n = 0;
    std::size_t group_order = 1;
    std::vector<Integer> card;  // indexed by subset mask

    const Integer& operator()(Subset S) const { return card[S]; }
    Subset ground() const { return static_cast<Subset>((std::size_t{1} << n) - 1); }

    /// r(S) = log_q card(S), floating point.
    double rank(Subset S) const {
        return std::log(static_cast<double>(card[S])) / std::log(static_cast<double>(group_order));
    }
};

/// Empty string if card is normalized, monotone and (multiplicatively) submodular.
inline std::string polymatroid_violation(const RankProfile& rp) {
    const std::size_t full = std::size_t{1} << rp.n;
    if (rp.card[0] != 1) return "card(∅) = " + rp.card[0].str();
    for (std::size_t S = 0; S < full; ++S)
        for (std::size_t i = 0; i < rp.n; ++i) {
            if (S >> i & 1u) continue;
            const std::size_t Si = S | (std::size_t{1} << i);
            if (rp.card[Si] < rp.card[S]) return "monotonicity fails at S=" + std::to_string(S) + ", i=" + std::to_string(i);
            for (std::size_t j = i + 1; j < rp.n; ++j) {
                if (S >> j & 1u) continue;
                const std::size_t Sj = S | (std::size_t{1} << j), Sij = Si | Sj;
                if (rp.card[Sij] * rp.card[S] > rp.card[Si] * rp.card[Sj])
                    return "submodularity fails at S=" + std::to_string(S) + ", i=" + std::to_string(i) +
                           ", j=" + std::to_string(j);
            }
        }
    return {};
}

inline RankProfile rank_profile(const GroupCode& code, unsigned max_bits = Caps{}.subset_bits) {
    if (code.length() > max_bits)
        throw CapExceeded("n=" + std::to_string(code.length()) + " exceeds cap subset_bits=" + std::to_string(max_bits));
    RankProfile rp;
    rp.n = code.length();
    rp.group_order = code.group().order();
    const std::size_t full = std::size_t{1} << rp.n;
    rp.card.reserve(full);
    for (std::size_t S = 0; S < full; ++S) rp.card.emplace_back(project_cardinality(code, static_cast<Subset>(S)));
    if (auto err = polymatroid_violation(rp); !err.empty()) throw PolymatroidViolation(err);
    return rp;
}

/// Σ_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)} for x, y > 1.
inline double tutte_evaluate(const RankProfile& rp, double x, double y) {
    if (!(x > 1.0) || !(y > 1.0)) throw DomainError("tutte_evaluate needs x > 1 and y > 1");
    const double lx = std::log(x - 1), ly = std::log(y - 1);
    const double lq = std::log(static_cast<double>(rp.group_order));
    const double lE = std::log(static_cast<double>(rp.card[rp.ground()]));
    double sum = 0;
    for (std::size_t S = 0; S < rp.card.size(); ++S) {
        const double lS = std::log(static_cast<double>(rp.card[S]));
        const double corank = (lE - lS) / lq;
        const double nullity = std::popcount(S) - lS / lq;
        sum += std::exp(lx * corank) * std::exp(ly * nullity);
    }
    return sum;
}

/// W_H(z) = Σ_h z^{w(h)}.
inline UniPoly weight_enumerator(const GroupCode& code) {
    std::vector<Integer> count(code.length() + 1, 0);
    for (const auto& w : code.words()) count[word_weight(code.group(), w)] += 1;
    UniPoly W;
    for (std::size_t d = 0; d < count.size(); ++d) W.set(static_cast<unsigned>(d), Rational(count[d]));
    return W;
}

/// A_ī for every class tuple ī occurring in H (ordered, per coordinate).
inline std::map<std::vector<std::uint32_t>, Integer> class_pattern_counts(const GroupCode& code, const ClassData& cd) {
    std::map<std::vector<std::uint32_t>, Integer> A;
    std::vector<std::uint32_t> key(code.length());
    for (const auto& w : code.words()) {
        for (std::size_t i = 0; i < code.length(); ++i) key[i] = cd.class_of[w[i]];
        A[key] += 1;
    }
    return A;
}

/// cwe_H(y_1, …, y_k) = Σ_h Π_m y_{class(h_m)}; variable i is class i (0-based here, printed y_{i+1}).
inline MultiPoly complete_weight_enumerator(const GroupCode& code, const ClassData& cd) {
    MultiPoly P(cd.num_classes);
    Exponents e(cd.num_classes);
    for (const auto& w : code.words()) {
        std::fill(e.begin(), e.end(), 0u);
        for (std::size_t i = 0; i < code.length(); ++i) ++e[cd.class_of[w[i]]];
        P.add(e, Rational(1));
    }
    return P;
}

}  // namespace repdual
