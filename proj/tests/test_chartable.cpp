#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace repdual;

namespace {

const char* kGroups[] = {"Z1", "Z2", "Z4", "Z6", "S3", "D4", "Q8", "S4", "D5", "Z12"};

CycInteger row_inner(const CharacterTable& ct, std::size_t a, std::size_t b) {
    CycInteger s = CycInteger::zero(ct.group.exponent());
    for (std::size_t c = 0; c < ct.k; ++c)
        s += ct.value(a, c) * ct.value(b, c).conj() * Integer(ct.classes.sizes[c]);
    return s;
}

std::size_t commutator_subgroup_order(const FiniteGroup& G) {
    std::set<Element> sub = {G.identity()};
    for (Element a = 0; a < G.order(); ++a)
        for (Element b = 0; b < G.order(); ++b) sub.insert(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Element> cur(sub.begin(), sub.end());
        for (Element x : cur)
            for (Element y : cur) grew |= sub.insert(G.mul(x, y)).second;
    }
    return sub.size();
}

}  // namespace

TEST(ClassCoefficients, TrivialGroup) {
    const auto G = cyclic_group(1);
    const auto a = class_multiplication_coefficients(G, conjugacy_classes(G));
    ASSERT_EQ(a.k, 1u);
    EXPECT_EQ(a(0, 0, 0), 1u);
}

TEST(ClassCoefficients, Z2) {
    const auto G = cyclic_group(2);
    const auto a = class_multiplication_coefficients(G, conjugacy_classes(G));
    EXPECT_EQ(a(1, 1, 0), 1u);
    EXPECT_EQ(a(1, 1, 1), 0u);
    EXPECT_EQ(a(0, 1, 1), 1u);
}

TEST(ClassCoefficients, MatchBruteForceCount) {
    for (const char* name : {"S3", "D4", "Q8", "S4"}) {
        const auto G = builtin_group(name);
        const auto cd = conjugacy_classes(G);
        const auto a = class_multiplication_coefficients(G, cd);
        for (std::size_t i = 0; i < cd.num_classes; ++i)
            for (std::size_t j = 0; j < cd.num_classes; ++j)
                for (std::size_t l = 0; l < cd.num_classes; ++l) {
                    std::uint64_t count = 0;
                    for (Element x = 0; x < G.order(); ++x)
                        if (cd.class_of[x] == i && cd.class_of[G.mul(G.inv(x), cd.reps[l])] == j) ++count;
                    EXPECT_EQ(a(i, j, l), count) << name;
                }
    }
    const auto S3 = symmetric_group(3);
    const auto cd = conjugacy_classes(S3);
    const auto a = class_multiplication_coefficients(S3, cd);
    const std::size_t tr = cd.class_of[*S3.find_label("(0 1)")];
    EXPECT_EQ(a(tr, tr, 0), 3u);
}

TEST(CharacterTable, S3Columns) {
    const auto& ct = fixtures::table_for(symmetric_group(3));
    ASSERT_EQ(ct.k, 3u);
    const std::vector<std::vector<int>> expected = {{1, 1, 2}, {1, -1, 0}, {1, 1, -1}};
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ct.value(i, c), CycInteger(expected[c][i])) << i << "," << c;
    EXPECT_EQ(ct.irrep_labels, (std::vector<std::string>{"1", "s", "t"}));
}

TEST(CharacterTable, OrthogonalityAndDegrees) {
    for (const char* name : kGroups) {
        const auto G = builtin_group(name);
        const auto ct = character_table(G);
        ASSERT_EQ(ct.k, conjugacy_classes(G).num_classes) << name;
        EXPECT_EQ(certify_character_table(ct), "") << name;
        std::size_t sum_sq = 0;
        for (std::size_t i = 0; i < ct.k; ++i) {
            sum_sq += ct.degrees[i] * ct.degrees[i];
            EXPECT_EQ(G.order() % ct.degrees[i], 0u) << name;
            EXPECT_EQ(ct.value(i, 0), CycInteger(static_cast<int>(ct.degrees[i])));
            for (std::size_t j = 0; j < ct.k; ++j)
                EXPECT_EQ(row_inner(ct, i, j), CycInteger(i == j ? static_cast<int>(G.order()) : 0)) << name;
        }
        EXPECT_EQ(sum_sq, G.order()) << name;
        // Column orthogonality: Σ_i χ_i(a) conj χ_i(b) = δ |C_G(a)|.
        for (std::size_t a = 0; a < ct.k; ++a)
            for (std::size_t b = 0; b < ct.k; ++b) {
                CycInteger s = CycInteger::zero(G.exponent());
                for (std::size_t i = 0; i < ct.k; ++i) s += ct.value(i, a) * ct.value(i, b).conj();
                const int expect = a == b ? static_cast<int>(G.order() / ct.classes.sizes[a]) : 0;
                EXPECT_EQ(s, CycInteger(expect)) << name;
            }
        // First row is the trivial character.
        for (std::size_t c = 0; c < ct.k; ++c) EXPECT_EQ(ct.value(0, c), CycInteger(1));
    }
}

TEST(CharacterTable, S4Degrees) {
    const auto ct = character_table(symmetric_group(4));
    EXPECT_EQ(ct.degrees, (std::vector<unsigned>{1, 1, 2, 3, 3}));
}

TEST(CharacterTable, LinearCharactersCountAbelianization) {
    for (const char* name : kGroups) {
        const auto G = builtin_group(name);
        const auto ct = character_table(G);
        const auto linear = std::count(ct.degrees.begin(), ct.degrees.end(), 1u);
        EXPECT_EQ(static_cast<std::size_t>(linear), G.order() / commutator_subgroup_order(G)) << name;
    }
}

TEST(CharacterTable, AbelianRowsAreHomomorphisms) {
    for (const char* name : {"Z2", "Z4", "Z6", "Z12"}) {
        const auto G = builtin_group(name);
        const auto ct = character_table(G);
        for (std::size_t i = 0; i < ct.k; ++i)
            for (Element a = 0; a < G.order(); ++a)
                for (Element b = 0; b < G.order(); ++b)
                    EXPECT_EQ(ct.at_element(i, G.mul(a, b)), ct.at_element(i, a) * ct.at_element(i, b));
    }
}

TEST(CharacterTable, ValuesAreSumsOfRootsOfUnity) {
    // |χ(g)| ≤ χ(1) and χ(g⁻¹) = conj χ(g).
    for (const char* name : {"D4", "Q8", "S4", "Z6"}) {
        const auto ct = character_table(builtin_group(name));
        for (std::size_t i = 0; i < ct.k; ++i)
            for (std::size_t c = 0; c < ct.k; ++c) {
                EXPECT_LE(std::abs(ct.value(i, c).evaluate()), ct.degrees[i] + 1e-9);
                EXPECT_EQ(ct.value(i, ct.classes.inverse_class[c]), ct.value(i, c).conj());
            }
    }
}

TEST(InnerProduct, IrreducibleAndRegular) {
    for (const char* name : {"S3", "Q8", "S4"}) {
        const auto G = builtin_group(name);
        const auto ct = character_table(G);
        std::vector<Cyclotomic> regular(ct.k, Cyclotomic(0));
        regular[0] = Cyclotomic(static_cast<int>(G.order()));
        for (std::size_t i = 0; i < ct.k; ++i) {
            std::vector<Cyclotomic> f;
            for (std::size_t c = 0; c < ct.k; ++c) f.push_back(ct.value_q(i, c));
            for (std::size_t j = 0; j < ct.k; ++j) EXPECT_EQ(inner_product(ct, f, j), Rational(i == j ? 1 : 0));
            EXPECT_EQ(inner_product(ct, regular, i), Rational(ct.degrees[i]));
        }
    }
}

TEST(CharacterTable, SpeedPerGroup) {
    for (const char* name : {"Z2", "Z4", "Z6", "S3", "D4", "Q8", "S4"}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto ct = character_table(builtin_group(name));
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        EXPECT_LT(s, 1.0) << name;
    }
}

TEST(CharacterTable, LargerGroups) {
    // S5 and a direct product with several classes.
    const auto S5 = symmetric_group(5);
    const auto ct = character_table(S5);
    EXPECT_EQ(ct.k, 7u);
    EXPECT_EQ(certify_character_table(ct), "");
    const auto P = direct_product({symmetric_group(3), quaternion_group()});
    const auto ctp = character_table(P);
    EXPECT_EQ(ctp.k, 15u);
    EXPECT_EQ(certify_character_table(ctp), "");
}

TEST(CharacterTableCache, ComputesOncePerGroupAcrossThreads) {
    CharacterTableCache cache;
    const auto G = symmetric_group(4);
    std::vector<std::thread> threads;
    std::vector<std::shared_ptr<const CharacterTable>> got(8);
    for (int t = 0; t < 8; ++t) threads.emplace_back([&, t] { got[t] = cache.get(G); });
    for (auto& th : threads) th.join();
    EXPECT_EQ(cache.computed(), 1u);
    for (const auto& p : got) EXPECT_EQ(p.get(), got[0].get());
}
