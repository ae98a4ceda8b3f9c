#include <gtest/gtest.h>

#include <random>

#include "repdual/repdual.hpp"

using namespace repdual;

namespace {

using P = std::vector<long>;

IntPoly ip(const P& v) {
    IntPoly out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Φ_m = (x^m - 1) / Π_{d | m, d < m} Φ_d, by schoolbook long division. Independent of the library.
IntPoly oracle_phi(unsigned m) {
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d) continue;
        IntPoly den = oracle_phi(d);
        const std::size_t dd = den.size() - 1;
        std::vector<Integer> q(num.size() - dd, 0);
        for (std::size_t s = q.size(); s-- > 0;) {
            const Integer c = num[s + dd] / den[dd];
            EXPECT_EQ(c * den[dd], num[s + dd]);
            q[s] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[s + j] -= c * den[j];
        }
        for (std::size_t i = 0; i < dd; ++i) EXPECT_EQ(num[i], 0);
        num = q;
    }
    return num;
}

Cyclotomic random_element(std::mt19937_64& rng, unsigned m) {
    std::vector<Rational> c(m);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
    return Cyclotomic::from_coeffs(m, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
    EXPECT_EQ(cyclotomic_polynomial(1), ip({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), ip({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), ip({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), ip({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, MatchesLongDivisionOracle) {
    for (unsigned m = 1; m <= 40; ++m) EXPECT_EQ(cyclotomic_polynomial(m), oracle_phi(m)) << "m=" << m;
}

TEST(Cyclotomic, BasicIdentities) {
    EXPECT_EQ(Cyclotomic::zeta(6) * Cyclotomic::zeta(6, 5), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(2).promoted(6), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(2).promoted(6).conductor(), 6u);
    EXPECT_EQ(Cyclotomic::zeta(6, 3), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(4), Cyclotomic(-1));
}

TEST(Cyclotomic, Galois) {
    const auto a = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
    EXPECT_EQ(a.galois(2), Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3));
    EXPECT_THROW(Cyclotomic::zeta(6).galois(2), NotCoprime);
    EXPECT_THROW(Cyclotomic::zeta(6).galois(3), NotCoprime);
    EXPECT_EQ(Cyclotomic::zeta(6).galois(5), Cyclotomic::zeta(6, 5));
}

TEST(Cyclotomic, AsRational) {
    EXPECT_EQ(cyc_as_rational(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)), Rational(-1));
    EXPECT_EQ(cyc_as_rational(Cyclotomic::zeta(4)), std::nullopt);
    EXPECT_EQ(cyc_as_rational(Cyclotomic(Rational(3, 7))), Rational(3, 7));
    EXPECT_THROW(cyc_require_rational(Cyclotomic::zeta(8)), NotRational);
    // A rational written through the whole power basis: 1 + ζ + … + ζ^{m-1} = 0.
    Cyclotomic s = Cyclotomic::zero(8);
    for (int e = 0; e < 8; ++e) s += Cyclotomic::zeta(8, e);
    EXPECT_EQ(cyc_as_rational(s), Rational(0));
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(7);
    for (unsigned m = 1; m <= 24; ++m) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
            EXPECT_EQ((a * b) * c, a * (b * c)) << m;
            EXPECT_EQ(a * (b + c), a * b + a * c) << m;
            EXPECT_EQ(a * b, b * a) << m;
            EXPECT_EQ(a + b - b, a) << m;
        }
    }
}

TEST(Cyclotomic, GaloisIsMultiplicativeAndComposes) {
    std::mt19937_64 rng(11);
    for (unsigned m : {5u, 8u, 12u, 15u, 24u}) {
        const auto a = random_element(rng, m), b = random_element(rng, m);
        for (long long e = 1; e < m; ++e) {
            if (std::gcd<long long>(e, m) != 1) continue;
            EXPECT_EQ((a * b).galois(e), a.galois(e) * b.galois(e));
            for (long long f = 1; f < m; ++f) {
                if (std::gcd<long long>(f, m) != 1) continue;
                EXPECT_EQ(a.galois(e).galois(f), a.galois(e * f % m));
            }
        }
    }
}

TEST(Cyclotomic, NumericalShadow) {
    std::mt19937_64 rng(3);
    for (unsigned m = 1; m <= 24; ++m) {
        const auto a = random_element(rng, m), b = random_element(rng, m);
        const auto ab = a * b, apb = a + b;
        EXPECT_LT(std::abs(ab.evaluate() - a.evaluate() * b.evaluate()), 1e-9);
        EXPECT_LT(std::abs(apb.evaluate() - (a.evaluate() + b.evaluate())), 1e-9);
        EXPECT_LT(std::abs(a.conj().evaluate() - std::conj(a.evaluate())), 1e-9);
    }
}

TEST(Cyclotomic, MixedConductors) {
    const auto i = Cyclotomic::zeta(4), w = Cyclotomic::zeta(3);
    const auto p = i * w;
    EXPECT_EQ(p.conductor(), 12u);
    EXPECT_EQ(p, Cyclotomic::zeta(12, 7));
    EXPECT_THROW(Cyclotomic::zeta(4).promoted(6), DomainError);
}

TEST(Cyclotomic, StringForm) {
    EXPECT_EQ(Cyclotomic(Rational(-1, 2)).str(), "-1/2");
    EXPECT_EQ(Cyclotomic::zero(5).str(), "0");
}
