#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "support.hpp"

using namespace repdual;
using fixtures::brute_projection;

namespace {

struct PairCode {
    FiniteGroup G = symmetric_group(3);
    Element t = *G.find_label("(0 1)");
    Element r = *G.find_label("(0 1 2)");
    GroupCode H = code_from_generators(G, 2, {GroupWord{t, r}});
};

UniPoly poly(std::vector<long> c) {
    UniPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.set(static_cast<unsigned>(i), Rational(c[i]));
    return p;
}

// Tutte sum with 50 significant digits, from projection sizes computed by brute force.
double tutte_oracle(const GroupCode& code, double x, double y) {
    using F = boost::multiprecision::cpp_dec_float_50;
    const F q = code.group().order();
    const Subset E = static_cast<Subset>((1u << code.length()) - 1);
    const F rE = log(F(brute_projection(code, E))) / log(q);
    F sum = 0;
    for (Subset S = 0; S <= E; ++S) {
        const F rS = log(F(brute_projection(code, S))) / log(q);
        sum += pow(F(x) - 1, rE - rS) * pow(F(y) - 1, F(std::popcount(S)) - rS);
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST(Codes, PairCodeClosure) {
    PairCode ex;
    EXPECT_EQ(ex.H.size(), 6u);
    EXPECT_TRUE(ex.H.contains(GroupWord{ex.t, ex.r}));
    EXPECT_TRUE(ex.H.contains(GroupWord{0, ex.r}));
    EXPECT_FALSE(ex.H.contains(GroupWord{ex.r, 0}));
}

TEST(Codes, GeneratorErrors) {
    const auto G = symmetric_group(3);
    EXPECT_THROW(code_from_generators(G, 2, {GroupWord{1}}), LengthMismatch);
    EXPECT_THROW(code_from_generators(G, 3, {GroupWord{1, 1, 1}, GroupWord{3, 0, 0}}, 10), ClosureCapExceeded);
    EXPECT_EQ(code_from_generators(G, 3, {}).size(), 1u);
    EXPECT_THROW(full_code(G, 8, 1000), ClosureCapExceeded);
}

TEST(Codes, StandardCodes) {
    const auto G = quaternion_group();
    EXPECT_EQ(trivial_code(G, 3).size(), 1u);
    EXPECT_EQ(full_code(G, 3).size(), 512u);
    EXPECT_EQ(diagonal_code(G, 3).size(), 8u);
}

TEST(Codes, ClosureIsASubgroup) {
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto& code = mc.code;
        const auto& G = code.group();
        EXPECT_TRUE(code.contains(GroupWord::identity(code.length()))) << mc.label;
        EXPECT_EQ(fixtures::int_pow(G.order(), code.length()) % code.size(), 0u) << mc.label;
        if (code.size() > 64) continue;
        for (const auto& a : code.words()) {
            EXPECT_TRUE(code.contains(word_inv(G, a)));
            for (const auto& b : code.words()) EXPECT_TRUE(code.contains(word_mul(G, a, b))) << mc.label;
        }
    }
}

TEST(Projection, Examples) {
    PairCode ex;
    EXPECT_EQ(project_cardinality(ex.H, 0), 1u);
    EXPECT_EQ(project_cardinality(ex.H, 0b01), 2u);
    EXPECT_EQ(project_cardinality(ex.H, 0b10), 3u);
    EXPECT_EQ(project_cardinality(ex.H, 0b11), 6u);
    EXPECT_EQ(project_cardinality(diagonal_code(symmetric_group(3), 4), 0b0100), 6u);
}

TEST(RankProfile, TrivialAndFull) {
    const auto G = cyclic_group(6);
    const auto rt = rank_profile(trivial_code(G, 3));
    const auto rf = rank_profile(full_code(G, 3));
    for (Subset S = 0; S < 8; ++S) {
        EXPECT_EQ(rt(S), 1);
        EXPECT_EQ(rf(S), ipow(Integer(6), static_cast<unsigned>(std::popcount(S))));
        EXPECT_NEAR(rf.rank(S), std::popcount(S), 1e-12);
    }
    EXPECT_THROW(rank_profile(trivial_code(G, 3), 2), CapExceeded);
}

TEST(RankProfile, PolymatroidAxiomsOnMatrix) {
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto rp = rank_profile(mc.code);
        const Subset E = rp.ground();
        for (Subset S = 0; S <= E; ++S) {
            ASSERT_EQ(rp(S), brute_projection(mc.code, S)) << mc.label;
            EXPECT_LE(rp.rank(S), std::popcount(S) + 1e-12) << mc.label;
            for (Subset T = 0; T <= E; ++T) {
                // |H_{S∪T}| |H_{S∩T}| ≤ |H_S| |H_T|; S ⊆ T ⇒ |H_S| ≤ |H_T|.
                EXPECT_LE(rp(S | T) * rp(S & T), rp(S) * rp(T)) << mc.label;
                if ((S & T) == S) EXPECT_LE(rp(S), rp(T)) << mc.label;
            }
        }
    }
}

TEST(RankProfile, ViolationsAreReported) {
    RankProfile rp;
    rp.n = 2;
    rp.group_order = 2;
    rp.card = {Integer(1), Integer(2), Integer(2), Integer(1)};
    EXPECT_NE(polymatroid_violation(rp), "");
    rp.card = {Integer(1), Integer(2), Integer(2), Integer(8)};
    EXPECT_NE(polymatroid_violation(rp), "");
    rp.card = {Integer(2), Integer(2), Integer(2), Integer(2)};
    EXPECT_NE(polymatroid_violation(rp), "");
    rp.card = {Integer(1), Integer(2), Integer(2), Integer(4)};
    EXPECT_EQ(polymatroid_violation(rp), "");
}

TEST(Tutte, SmallValues) {
    EXPECT_DOUBLE_EQ(tutte_evaluate(rank_profile(trivial_code(symmetric_group(3), 1)), 2, 3), 3.0);
    EXPECT_DOUBLE_EQ(tutte_evaluate(rank_profile(full_code(cyclic_group(2), 1)), 2, 2), 2.0);
    PairCode ex;
    const auto rp = rank_profile(ex.H);
    EXPECT_NEAR(tutte_evaluate(rp, 2, 2), tutte_oracle(ex.H, 2, 2), 1e-12);
    EXPECT_THROW(tutte_evaluate(rp, 1, 2), DomainError);
    EXPECT_THROW(tutte_evaluate(rp, 2, 0.5), DomainError);
}

TEST(Tutte, AgreesWithHighPrecisionOracle) {
    for (const auto& mc : fixtures::matrix_codes()) {
        if (mc.n > 3) continue;
        const auto rp = rank_profile(mc.code);
        for (auto [x, y] : {std::pair{1.5, 3.0}, {4.0, 1.25}, {2.0, 2.0}}) {
            const double a = tutte_evaluate(rp, x, y), b = tutte_oracle(mc.code, x, y);
            EXPECT_LE(std::abs(a - b), 1e-10 * std::abs(b)) << mc.label;
        }
    }
}

TEST(WeightEnumerator, Examples) {
    const auto S3 = symmetric_group(3);
    EXPECT_EQ(weight_enumerator(trivial_code(S3, 3)), poly({1}));
    EXPECT_EQ(weight_enumerator(diagonal_code(S3, 4)), poly({1, 0, 0, 0, 5}));
    EXPECT_EQ(weight_enumerator(full_code(cyclic_group(2), 2)), poly({1, 2, 1}));

    // Example: enumerate the six words by hand and count weights.
    PairCode ex;
    std::vector<long> count(3, 0);
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
            if (ex.H.contains(GroupWord{a, b})) ++count[(a != 0) + (b != 0)];
    EXPECT_EQ(count, (std::vector<long>{1, 3, 2}));
    EXPECT_EQ(weight_enumerator(ex.H), poly(count));
}

TEST(CompleteWeightEnumerator, Examples) {
    const auto S3 = symmetric_group(3);
    const auto cd = conjugacy_classes(S3);
    for (unsigned n : {2u, 3u, 4u}) {
        MultiPoly expect(3);
        expect.add({n, 0, 0}, Rational(1));
        expect.add({0, n, 0}, Rational(3));
        expect.add({0, 0, n}, Rational(2));
        EXPECT_EQ(complete_weight_enumerator(diagonal_code(S3, n), cd), expect);
    }
    PairCode ex;
    MultiPoly expect(3);
    expect.add({2, 0, 0}, Rational(1));
    expect.add({1, 1, 0}, Rational(1));
    expect.add({1, 0, 1}, Rational(2));
    expect.add({0, 1, 1}, Rational(2));
    EXPECT_EQ(complete_weight_enumerator(ex.H, cd), expect);
    EXPECT_EQ(complete_weight_enumerator(ex.H, cd).str("x"), "x1^2 + x1*x2 + 2*x1*x3 + 2*x2*x3");
}

TEST(CompleteWeightEnumerator, SpecializesToWeightEnumerator) {
    for (const auto& mc : fixtures::matrix_codes()) {
        const auto cd = conjugacy_classes(mc.code.group());
        const auto P = complete_weight_enumerator(mc.code, cd);
        // x_1 ↦ 1, x_i ↦ z for the other classes.
        UniPoly W;
        for (const auto& [e, c] : P.terms()) {
            unsigned w = 0;
            for (std::size_t i = 1; i < e.size(); ++i) w += e[i];
            W.add(w, c);
        }
        EXPECT_EQ(W, weight_enumerator(mc.code)) << mc.label;
        EXPECT_EQ(P.total(), Rational(mc.code.size())) << mc.label;
    }
}
