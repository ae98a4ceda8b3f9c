#include <gtest/gtest.h>

#include "support.hpp"

using namespace repdual;

namespace {

UniPoly poly(std::vector<long> c) {
    UniPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.set(static_cast<unsigned>(i), Rational(c[i]));
    return p;
}

// All characters of Γⁿ (Γ abelian) that are trivial on H, as words of irrep indices.
std::set<IrrepTuple> annihilator_by_characters(const GroupCode& code, const CharacterTable& ct) {
    std::set<IrrepTuple> out;
    const std::size_t k = ct.k, n = code.length();
    for (std::size_t idx = 0; idx < fixtures::int_pow(k, n); ++idx) {
        IrrepTuple j(n);
        for (std::size_t m = 0, r = idx; m < n; ++m, r /= k) j[m] = static_cast<std::uint32_t>(r % k);
        bool trivial = true;
        for (const auto& h : code.words()) {
            CycInteger v(1);
            for (std::size_t m = 0; m < n; ++m) v *= ct.at_element(j[m], h[m]);
            if (!(v == CycInteger(1))) {
                trivial = false;
                break;
            }
        }
        if (trivial) out.insert(j);
    }
    return out;
}

}  // namespace

TEST(Greene, PairCode) {
    const auto S3 = symmetric_group(3);
    const auto H = code_from_generators(S3, 2, {GroupWord{*S3.find_label("(0 1)"), *S3.find_label("(0 1 2)")}});
    const auto rp = rank_profile(H);
    EXPECT_EQ(greene_subset_form_H(H, rp), poly({1, 3, 2}));
    EXPECT_EQ(greene_subset_form_dual(H, rp), poly({1, 3, 2}));
    const auto rep = verify_greene(H, fixtures::table_for(S3));
    EXPECT_TRUE(rep.passed) << rep.detail;
}

TEST(Greene, UsesBruteForceSubsetSums) {
    // Re-derive both subset forms from projections counted directly.
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto& code = mc.code;
        const std::size_t n = mc.n, q = code.group().order();
        const Subset E = static_cast<Subset>((1u << n) - 1);
        const UniPoly omz = UniPoly::linear(Rational(1), Rational(-1));
        UniPoly h, d;
        for (Subset S = 0; S <= E; ++S) {
            const auto s = static_cast<unsigned>(std::popcount(S));
            const auto zpow = UniPoly::monomial(static_cast<unsigned>(n) - s);
            h += zpow * omz.pow(s) * Rational(code.size(), fixtures::brute_projection(code, S));
            d += zpow * omz.pow(s) *
                 Rational(fixtures::int_pow(q, n - s), fixtures::brute_projection(code, E & ~S));
        }
        const auto& ct = fixtures::table_for(code.group());
        EXPECT_EQ(h, weight_enumerator(code)) << mc.label;
        EXPECT_EQ(d, dual_weight_enumerator(dual_multiset(code, ct))) << mc.label;
    }
}

TEST(Greene, TutteFormsMatchSubsetForms) {
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto rp = rank_profile(mc.code);
        const auto h = greene_subset_form_H(mc.code, rp), d = greene_subset_form_dual(mc.code, rp);
        for (double z : kTutteSpotPoints) {
            EXPECT_LE(detail::relative_error(h.evaluate(z), greene_tutte_form_H(rp, z)), kTutteRelTolerance) << mc.label;
            EXPECT_LE(detail::relative_error(d.evaluate(z), greene_tutte_form_dual(rp, z)), kTutteRelTolerance)
                << mc.label;
        }
    }
}

TEST(MacWilliams1, Z2Repetition) {
    const auto Z2 = cyclic_group(2);
    const auto H = code_from_generators(Z2, 2, {GroupWord{1, 1}});
    EXPECT_EQ(macwilliams1_rhs(H), poly({1, 0, 1}));
    EXPECT_TRUE(verify_macwilliams1(H, fixtures::table_for(Z2)).passed);
}

TEST(MacWilliams2, DiagonalS3) {
    const auto S3 = symmetric_group(3);
    const auto& ct = fixtures::table_for(S3);
    const auto D = diagonal_code(S3, 4);
    EXPECT_EQ(macwilliams2_rhs(D, ct).str("x"),
              "x1^4 + 6*x1^2*x2^2 + 6*x1^2*x3^2 + 12*x1*x2*x3^2 + 4*x1*x3^3 + x2^4 + 6*x2^2*x3^2 + 4*x2*x3^3 + 3*x3^4");
    EXPECT_EQ(macwilliams2_rhs(D, ct), dual_cwe(dual_multiset(D, ct)));
}

TEST(Verify, AllIdentitiesOnMatrix) {
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto& ct = fixtures::table_for(mc.code.group());
        for (const auto& rep :
             {verify_greene(mc.code, ct), verify_macwilliams1(mc.code, ct), verify_macwilliams2(mc.code, ct)})
            EXPECT_TRUE(rep.passed) << mc.label << " " << rep.name << ": " << rep.detail;
    }
}

TEST(Verify, ReportsCarryData) {
    const auto S3 = symmetric_group(3);
    const auto rep = verify_macwilliams2(diagonal_code(S3, 2), fixtures::table_for(S3));
    EXPECT_TRUE(rep.passed);
    const auto j = rep.to_json();
    EXPECT_EQ(j["check"], "macwilliams2");
    EXPECT_TRUE(j.contains("data"));
}

TEST(Abelian, Decomposition) {
    for (std::size_t m : {1u, 2u, 4u, 6u, 12u}) {
        const auto d = abelian_decomposition(cyclic_group(m));
        std::size_t prod = 1;
        for (auto o : d.orders) prod *= o;
        EXPECT_EQ(prod, m);
    }
    const auto klein = abelian_decomposition(direct_product({cyclic_group(2), cyclic_group(2)}));
    EXPECT_EQ(klein.orders, (std::vector<unsigned>{2, 2}));
    EXPECT_THROW(abelian_decomposition(symmetric_group(3)), NotAbelian);
}

TEST(Abelian, PairingIsAnIsomorphism) {
    for (const char* name : {"Z2", "Z4", "Z6"}) {
        const auto G = builtin_group(name);
        const auto& ct = fixtures::table_for(G);
        const auto ap = abelian_pairing(ct);
        std::set<std::uint32_t> seen(ap.irrep_of.begin(), ap.irrep_of.end());
        EXPECT_EQ(seen.size(), G.order());
        for (Element a = 0; a < G.order(); ++a)
            for (Element g = 0; g < G.order(); ++g)
                EXPECT_EQ(ct.at_element(ap.irrep_of[a], g), CycInteger::zeta(ap.exponent, ap.pairing(a, g)).promoted(G.exponent()));
    }
}

TEST(Abelian, ClassicalDualExamples) {
    const auto Z2 = cyclic_group(2);
    const auto rep = code_from_generators(Z2, 2, {GroupWord{1, 1}});
    const auto ap2 = abelian_pairing(fixtures::table_for(Z2));
    const auto d2 = classical_dual(rep, ap2);
    EXPECT_EQ(std::set<GroupWord>(d2.begin(), d2.end()), (std::set<GroupWord>{{0, 0}, {1, 1}}));

    const auto Z4 = cyclic_group(4);
    const auto H4 = code_from_generators(Z4, 2, {GroupWord{1, 1}});
    const auto d4 = classical_dual(H4, abelian_pairing(fixtures::table_for(Z4)));
    std::set<GroupWord> expect;
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            if ((a + b) % 4 == 0) expect.insert(GroupWord{a, b});
    EXPECT_EQ(std::set<GroupWord>(d4.begin(), d4.end()), expect);
    EXPECT_EQ(expect.size(), 4u);

    const auto Z6 = cyclic_group(6);
    EXPECT_EQ(classical_dual(trivial_code(Z6, 1), abelian_pairing(fixtures::table_for(Z6))).size(), 6u);
}

TEST(Abelian, SpecializationOnMatrix) {
    for (const auto& mc : fixtures::matrix_codes()) {
        if (!mc.code.group().is_abelian()) continue;
        const auto& ct = fixtures::table_for(mc.code.group());
        const auto rep = verify_abelian_specialization(mc.code, ct);
        EXPECT_TRUE(rep.passed) << mc.label << ": " << rep.detail;
        // The multiset support is the annihilator, found here by evaluating every character on H.
        const auto dm = dual_multiset(mc.code, ct);
        std::set<IrrepTuple> support;
        for (const auto& [j, m] : dm.mult) {
            EXPECT_EQ(m, 1);
            support.insert(j);
        }
        EXPECT_EQ(support, annihilator_by_characters(mc.code, ct)) << mc.label;
    }
}

TEST(Abelian, RejectsNonAbelian) {
    const auto S3 = symmetric_group(3);
    EXPECT_FALSE(verify_abelian_specialization(trivial_code(S3, 1), fixtures::table_for(S3)).passed);
}
