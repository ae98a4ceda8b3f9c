#pragma once

/**
 * @file identities.hpp
 * @brief Exact verification of Greene's theorem (for H and R(H)), both MacWilliams
 * identities, and the reduction to the classical dual over abelian groups.
 *
 * Every comparison is coefficientwise over Q. The one floating-point step is the Tutte
 * spot-check inside verify_greene, which ties the cardinality forms back to the raw
 * Tutte sum with its irrational exponents.
 */

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "duality.hpp"
#include "json_io.hpp"

namespace repdual {

struct CheckReport {
    std::string name;
    bool passed = true;
    std::string detail;  // first failure, empty on success
    Json data = Json::object();

    void fail(std::string why) {
        if (passed) detail = std::move(why);
        passed = false;
    }

    Json to_json() const {
        Json j{{"check", name}, {"passed", passed}};
        if (!detail.empty()) j["detail"] = detail;
        j["data"] = data;
        return j;
    }
};

namespace detail {

/// Empty if equal, otherwise a message naming the first differing coefficient.
template <typename P>
std::string first_mismatch(const P& lhs, const P& rhs) {
    if (lhs == rhs) return {};
    const P diff = lhs - rhs;
    const auto& [key, value] = *diff.terms().begin();
    std::string where;
    if constexpr (std::is_same_v<P, UniPoly>) {
        where = "z^" + std::to_string(key);
    } else {
        where = "x^(";
        for (std::size_t i = 0; i < key.size(); ++i) where += (i ? "," : "") + std::to_string(key[i]);
        where += ")";
    }
    return "coefficient of " + where + ": lhs - rhs = " + to_string(value);
}

inline UniPoly one_minus_z() { return UniPoly::linear(Rational(1), Rational(-1)); }

inline double relative_error(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace detail

/// Σ_S (|H| / |H_S|) t^{n-|S|} (1-t)^{|S|}.
inline UniPoly greene_subset_form_H(const GroupCode& code, const RankProfile& rp) {
    const std::size_t n = code.length();
    const Integer size(code.size());
    UniPoly sum;
    for (std::size_t S = 0; S < rp.card.size(); ++S) {
        const auto s = static_cast<unsigned>(std::popcount(S));
        UniPoly term = UniPoly::monomial(static_cast<unsigned>(n) - s) * detail::one_minus_z().pow(s);
        sum += term * Rational(size, rp.card[S]);
    }
    return sum;
}

/// Σ_S (|Γ|^{n-|S|} / |H_{E-S}|) (1-z)^{|S|} z^{n-|S|}.
inline UniPoly greene_subset_form_dual(const GroupCode& code, const RankProfile& rp) {
    const std::size_t n = code.length();
    const Integer q(code.group().order());
    UniPoly sum;
    for (std::size_t S = 0; S < rp.card.size(); ++S) {
        const auto s = static_cast<unsigned>(std::popcount(S));
        const Subset complement = rp.ground() & ~static_cast<Subset>(S);
        UniPoly term = detail::one_minus_z().pow(s) * UniPoly::monomial(static_cast<unsigned>(n) - s);
        sum += term * Rational(ipow(q, static_cast<unsigned>(n) - s), rp.card[complement]);
    }
    return sum;
}

/// t^{n-r(E)} (1-t)^{r(E)} T((1+(q-1)t)/(1-t), 1/t), in double precision.
inline double greene_tutte_form_H(const RankProfile& rp, double t) {
    const double q = static_cast<double>(rp.group_order);
    const double rE = rp.rank(rp.ground());
    return std::pow(t, static_cast<double>(rp.n) - rE) * std::pow(1 - t, rE) *
           tutte_evaluate(rp, (1 + (q - 1) * t) / (1 - t), 1 / t);
}

/// (1-z)^{n-r'} z^{r'} T(1/z, (1+(q-1)z)/(1-z)), in double precision.
inline double greene_tutte_form_dual(const RankProfile& rp, double z) {
    const double q = static_cast<double>(rp.group_order);
    const double r = rp.rank(rp.ground());
    return std::pow(1 - z, static_cast<double>(rp.n) - r) * std::pow(z, r) *
           tutte_evaluate(rp, 1 / z, (1 + (q - 1) * z) / (1 - z));
}

inline constexpr double kTutteSpotPoints[] = {0.3, 0.5, 0.7};
inline constexpr double kTutteRelTolerance = 1e-9;

inline CheckReport verify_greene(const GroupCode& code, const CharacterTable& ct, const Caps& caps = {}) {
    CheckReport rep{"greene"};
    const RankProfile rp = rank_profile(code, caps.subset_bits);
    const UniPoly W = weight_enumerator(code);
    const UniPoly rhs_h = greene_subset_form_H(code, rp);
    const UniPoly WD = dual_weight_enumerator(dual_multiset(code, ct, caps));
    const UniPoly rhs_d = greene_subset_form_dual(code, rp);

    rep.data["weight_enumerator"] = to_json(W);
    rep.data["subset_form_H"] = to_json(rhs_h);
    rep.data["dual_weight_enumerator"] = to_json(WD);
    rep.data["subset_form_dual"] = to_json(rhs_d);
    if (auto m = detail::first_mismatch(W, rhs_h); !m.empty()) {
        rep.fail("W_H != subset form: " + m);
        rep.data["difference_H"] = to_json(W - rhs_h);
    }
    if (auto m = detail::first_mismatch(WD, rhs_d); !m.empty()) {
        rep.fail("W_R(H) != subset form: " + m);
        rep.data["difference_dual"] = to_json(WD - rhs_d);
    }

    Json spots = Json::array();
    for (double z : kTutteSpotPoints) {
        const double exact_h = rhs_h.evaluate(z), tutte_h = greene_tutte_form_H(rp, z);
        const double exact_d = rhs_d.evaluate(z), tutte_d = greene_tutte_form_dual(rp, z);
        const double err_h = detail::relative_error(exact_h, tutte_h), err_d = detail::relative_error(exact_d, tutte_d);
        spots.push_back(Json{{"z", z}, {"rel_error_H", err_h}, {"rel_error_dual", err_d}});
        if (!(err_h <= kTutteRelTolerance)) rep.fail("Tutte form for H off by relative " + std::to_string(err_h));
        if (!(err_d <= kTutteRelTolerance)) rep.fail("Tutte form for R(H) off by relative " + std::to_string(err_d));
    }
    rep.data["tutte_spot_checks"] = spots;
    return rep;
}

/// (1/|H|) Σ_w A_w (1-z)^w (1+(q-1)z)^{n-w}.
inline UniPoly macwilliams1_rhs(const GroupCode& code) {
    const std::size_t n = code.length();
    const UniPoly W = weight_enumerator(code);
    const UniPoly plus = UniPoly::linear(Rational(1), Rational(code.group().order() - 1));
    UniPoly rhs;
    for (const auto& [w, a] : W.terms()) rhs += detail::one_minus_z().pow(w) * plus.pow(static_cast<unsigned>(n) - w) * a;
    return rhs * Rational(1, code.size());
}

inline CheckReport verify_macwilliams1(const GroupCode& code, const CharacterTable& ct, const Caps& caps = {}) {
    CheckReport rep{"macwilliams1"};
    const UniPoly lhs = dual_weight_enumerator(dual_multiset(code, ct, caps));
    const UniPoly rhs = macwilliams1_rhs(code);
    rep.data["dual_weight_enumerator"] = to_json(lhs);
    rep.data["rhs"] = to_json(rhs);
    if (auto m = detail::first_mismatch(lhs, rhs); !m.empty()) {
        rep.fail(m);
        rep.data["difference"] = to_json(lhs - rhs);
    }
    const Rational cosets(ipow(Integer(code.group().order()), static_cast<unsigned>(code.length())), code.size());
    if (rhs.evaluate(Rational(1)) != cosets) rep.fail("rhs(1) = " + to_string(rhs.evaluate(Rational(1))) + " != |Γ|^n/|H|");
    if (lhs.evaluate(Rational(1)) != cosets) rep.fail("W_R(H)(1) != |Γ|^n/|H|");
    return rep;
}

/// (1/|H|) cwe_H(v̄) with v_i = Σ_p χ_p(c_i) x_p, reduced to rational coefficients.
/// Throws NotRational if a coefficient stays outside Q.
inline MultiPoly macwilliams2_rhs(const GroupCode& code, const CharacterTable& ct) {
    const std::size_t k = ct.k, n = code.length();
    const MultiPoly cwe = complete_weight_enumerator(code, ct.classes);

    std::vector<std::vector<CycMultiPoly>> powers(k);  // powers[i][e] = v_i^e
    for (std::size_t i = 0; i < k; ++i) {
        CycMultiPoly v(k);
        for (std::size_t p = 0; p < k; ++p) v += CycMultiPoly::variable(k, p, ct.value_q(p, i));
        powers[i].push_back(CycMultiPoly::constant(k, Cyclotomic(1)));
        for (std::size_t e = 1; e <= n; ++e) powers[i].push_back(powers[i].back() * v);
    }
    CycMultiPoly sum(k);
    for (const auto& [e, a] : cwe.terms()) {
        CycMultiPoly term = CycMultiPoly::constant(k, Cyclotomic(a));
        for (std::size_t i = 0; i < k; ++i)
            if (e[i]) term = term * powers[i][e[i]];
        sum += term;
    }
    sum.scale(Rational(1, code.size()));
    MultiPoly out(k);
    for (const auto& [e, c] : sum.terms()) out.add(e, cyc_require_rational(c));
    return out;
}

inline CheckReport verify_macwilliams2(const GroupCode& code, const CharacterTable& ct, const Caps& caps = {}) {
    CheckReport rep{"macwilliams2"};
    const MultiPoly lhs = dual_cwe(dual_multiset(code, ct, caps));
    rep.data["dual_cwe"] = to_json(lhs);
    MultiPoly rhs;
    try {
        rhs = macwilliams2_rhs(code, ct);
    } catch (const NotRational& e) {
        rep.fail(e.what());
        return rep;
    }
    rep.data["rhs"] = to_json(rhs);
    for (const auto& [e, c] : rhs.terms())
        if (!is_integer(c) || c < 0) {
            rep.fail("coefficient " + to_string(c) + " is not a non-negative integer");
            break;
        }
    if (auto m = detail::first_mismatch(lhs, rhs); !m.empty()) {
        rep.fail(m);
        rep.data["difference"] = to_json(lhs - rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Abelian groups

/// Γ ≅ Z_{d_1} ⊕ … ⊕ Z_{d_r} with every element written in coordinates over `generators`.
struct AbelianDecomposition {
    std::vector<Element> generators;
    std::vector<unsigned> orders;
    std::vector<std::vector<unsigned>> coords;  // coords[g][i] ∈ [0, d_i)
};

/// Brute-force search: pick generators of largest possible order whose cyclic groups stay
/// independent, backtracking if the product of orders falls short of |Γ|.
inline AbelianDecomposition abelian_decomposition(const FiniteGroup& G) {
    if (!G.is_abelian()) throw NotAbelian(G.name());
    const std::size_t q = G.order();
    std::vector<Element> by_order(q);
    std::iota(by_order.begin(), by_order.end(), 0u);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Element a, Element b) { return G.element_order(a) > G.element_order(b); });

    AbelianDecomposition best;
    std::vector<Element> gens;
    std::vector<bool> span(q, false);
    span[0] = true;
    std::size_t span_size = 1;

    std::function<bool()> search = [&]() -> bool {
        if (span_size == q) {
            best.generators = gens;
            return true;
        }
        for (Element g : by_order) {
            if (g == 0 || span[g]) continue;
            const unsigned ord = G.element_order(g);
            // independent iff <g> meets the current span trivially
            bool independent = true;
            for (Element x = g; x != 0 && independent; x = G.mul(x, g)) independent = !span[x];
            if (!independent) continue;
            std::vector<Element> added;
            std::vector<Element> current;
            for (Element s = 0; s < q; ++s)
                if (span[s]) current.push_back(s);
            for (Element s : current)
                for (Element x = g; x != 0; x = G.mul(x, g)) {
                    const Element y = G.mul(s, x);
                    if (!span[y]) {
                        span[y] = true;
                        added.push_back(y);
                    }
                }
            span_size += added.size();
            gens.push_back(g);
            if (span_size == current.size() * ord && search()) return true;
            gens.pop_back();
            for (Element y : added) span[y] = false;
            span_size -= added.size();
        }
        return false;
    };
    if (!search()) throw Error("no cyclic decomposition found for " + G.name());

    for (Element g : best.generators) best.orders.push_back(G.element_order(g));
    best.coords.assign(q, {});
    std::vector<unsigned> c(best.generators.size(), 0);
    while (true) {
        Element x = 0;
        for (std::size_t i = 0; i < c.size(); ++i) x = G.mul(x, G.pow(best.generators[i], c[i]));
        best.coords[x] = c;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == best.orders[i]) c[i++] = 0;
        if (i == c.size()) break;
    }
    return best;
}

/// The isomorphism φ: Γ → Γ̂, φ(a)(g) = ζ_e^{Σ_i a_i g_i e/d_i}, as exponents of ζ_e (e = exponent).
struct AbelianPairing {
    FiniteGroup group;
    AbelianDecomposition decomposition;
    unsigned exponent = 1;
    std::vector<std::uint32_t> irrep_of;    // φ(a) as a canonical irrep index
    std::vector<Element> element_of_irrep;  // inverse of irrep_of

    unsigned pairing(Element a, Element g) const {
        unsigned s = 0;
        const auto& ca = decomposition.coords[a];
        const auto& cg = decomposition.coords[g];
        for (std::size_t i = 0; i < ca.size(); ++i)
            s = (s + ca[i] * cg[i] * (exponent / decomposition.orders[i])) % exponent;
        return s;
    }
};

inline AbelianPairing abelian_pairing(const CharacterTable& ct) {
    AbelianPairing ap;
    ap.group = ct.group;
    ap.decomposition = abelian_decomposition(ct.group);
    ap.exponent = ct.group.exponent();
    const std::size_t q = ct.group.order();
    ap.irrep_of.assign(q, 0);
    ap.element_of_irrep.assign(q, 0);
    std::vector<bool> used(q, false);
    for (Element a = 0; a < q; ++a) {
        std::vector<CycInteger> row(q);
        for (Element g = 0; g < q; ++g) row[ct.classes.class_of[g]] = CycInteger::zeta(ap.exponent, ap.pairing(a, g));
        std::size_t found = q;
        for (std::size_t i = 0; i < ct.k && found == q; ++i)
            if (ct.values[i] == row) found = i;
        if (found == q || used[found]) throw Error("φ(" + ct.group.label(a) + ") is not a distinct irreducible character");
        used[found] = true;
        ap.irrep_of[a] = static_cast<std::uint32_t>(found);
        ap.element_of_irrep[found] = a;
    }
    return ap;
}

/// {x̄ ∈ Γⁿ : Π_m φ(x_m)(h_m) = 1 for all h̄ ∈ H}, sorted.
inline std::vector<GroupWord> classical_dual(const GroupCode& code, const AbelianPairing& ap, const Caps& caps = {}) {
    const std::size_t q = code.group().order(), n = code.length();
    const std::size_t universe = detail::checked_power(q, n, caps.universe, "|Γ|^n");
    std::vector<GroupWord> dual;
    GroupWord x = GroupWord::identity(n);
    for (std::size_t idx = 0; idx < universe; ++idx) {
        for (std::size_t m = 0, r = idx; m < n; ++m, r /= q) x[m] = static_cast<Element>(r % q);
        bool orthogonal = true;
        for (const auto& h : code.words()) {
            unsigned s = 0;
            for (std::size_t m = 0; m < n; ++m) s = (s + ap.pairing(x[m], h[m])) % ap.exponent;
            if (s != 0) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) dual.push_back(x);
    }
    std::sort(dual.begin(), dual.end());
    return dual;
}

inline CheckReport verify_abelian_specialization(const GroupCode& code, const CharacterTable& ct, const Caps& caps = {}) {
    CheckReport rep{"abelian"};
    if (!code.group().is_abelian()) {
        rep.fail("group " + code.group().name() + " is not abelian");
        return rep;
    }
    const AbelianPairing ap = abelian_pairing(ct);
    const DualMultiset dm = dual_multiset(code, ct, caps);
    const auto dual = classical_dual(code, ap, caps);

    std::vector<GroupWord> image;
    for (const auto& [j, m] : dm.mult) {
        if (m != 1) rep.fail("multiplicity " + m.str() + " for " + dm.tuple_label(j));
        GroupWord w(std::vector<Element>(j.size()));
        for (std::size_t i = 0; i < j.size(); ++i) w[i] = ap.element_of_irrep[j[i]];
        image.push_back(std::move(w));
    }
    std::sort(image.begin(), image.end());
    rep.data["classical_dual_size"] = dual.size();
    rep.data["dual_multiset_size"] = image.size();
    if (image != dual) rep.fail("φ-image of R(H) differs from the classical dual");

    // classical complete weight enumerator of H⊥, variables relabeled by φ
    MultiPoly classical(ct.k);
    Exponents e(ct.k);
    for (const auto& w : dual) {
        std::fill(e.begin(), e.end(), 0u);
        for (auto x : w.components) ++e[ap.irrep_of[x]];
        classical.add(e, Rational(1));
    }
    rep.data["classical_cwe"] = to_json(classical);
    try {
        const MultiPoly mw2 = macwilliams2_rhs(code, ct);
        if (auto m = detail::first_mismatch(classical, mw2); !m.empty()) rep.fail("classical MacWilliams #2: " + m);
    } catch (const NotRational& ex) {
        rep.fail(ex.what());
    }
    return rep;
}

}  // namespace repdual
