#pragma once

/**
 * @file chartable.hpp
 * @brief Exact character tables by the Burnside–Dixon method.
 *
 * Central characters are found as simultaneous eigenvectors of the class matrices over a
 * prime field F_p with p ≡ 1 (mod exponent). Each character value is lifted to Z[ζ_e] from
 * its eigenvalue multiplicities, recovered by a discrete Fourier transform over F_p along the
 * power maps. The table is certified by exact row and column orthogonality before it is
 * returned; a table that fails certification is never handed out.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace repdual {

/// a(i, j, l) = #{(x, y) : x ∈ C_i, y ∈ C_j, xy = reps[l]}.
struct ClassCoefficients {
    std::size_t k = 0;
    std::vector<std::uint64_t> data;
    std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return data[(i * k + j) * k + l]; }
};

inline ClassCoefficients class_multiplication_coefficients(const FiniteGroup& G, const ClassData& cd) {
    ClassCoefficients a;
    a.k = cd.num_classes;
    a.data.assign(a.k * a.k * a.k, 0);
    for (std::size_t l = 0; l < a.k; ++l) {
        const Element z = cd.reps[l];
        for (Element x = 0; x < G.order(); ++x) {
            const Element y = G.mul(G.inv(x), z);
            a.data[(cd.class_of[x] * a.k + cd.class_of[y]) * a.k + l] += 1;
        }
    }
    return a;
}

namespace detail {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p ≡ 1 (mod exponent) with p > max(2·sqrt(order), exponent).
inline u64 dixon_prime(u64 exponent, u64 order) {
    const double bound = std::max(2.0 * std::sqrt(static_cast<double>(order)), static_cast<double>(exponent));
    for (u64 p = exponent + 1;; p += exponent)
        if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

/// Element of exact multiplicative order e in F_p (e | p - 1).
inline u64 primitive_root_of_unity(u64 e, u64 p) {
    const auto factors = prime_factors(e);
    for (u64 a = 2; a < p; ++a) {
        const u64 z = powmod(a, (p - 1) / e, p);
        bool ok = true;
        for (u64 q : factors) ok = ok && powmod(z, e / q, p) != 1;
        if (ok) return z;
    }
    return 1;  // e == 1
}

using ModMatrix = std::vector<std::vector<u64>>;  // row-major

/// Basis of the right nullspace {v : A v = 0}.
inline std::vector<std::vector<u64>> nullspace(ModMatrix A, u64 p) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        const u64 inv = invmod(A[r][c], p);
        for (auto& x : A[r]) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const u64 f = A[i][c];
            for (std::size_t j = 0; j < cols; ++j) A[i][j] = (A[i][j] + p - mulmod(f, A[r][j], p)) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<u64>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<u64> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - A[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Coordinates of `targets` (columns in F_p^k) in the column basis `basis` (full column rank).
inline ModMatrix coordinates(const std::vector<std::vector<u64>>& basis, const std::vector<std::vector<u64>>& targets,
                             u64 p) {
    const std::size_t k = basis[0].size(), r = basis.size(), t = targets.size();
    ModMatrix aug(k, std::vector<u64>(r + t));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = basis[j][i];
        for (std::size_t j = 0; j < t; ++j) aug[i][r + j] = targets[j][i];
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t piv = row;
        while (piv < k && aug[piv][c] == 0) ++piv;
        if (piv == k) throw LiftVerificationFailed("subspace basis is rank deficient");
        std::swap(aug[piv], aug[row]);
        const u64 inv = invmod(aug[row][c], p);
        for (auto& x : aug[row]) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            const u64 f = aug[i][c];
            for (std::size_t j = 0; j < r + t; ++j) aug[i][j] = (aug[i][j] + p - mulmod(f, aug[row][j], p)) % p;
        }
        ++row;
    }
    ModMatrix coords(r, std::vector<u64>(t));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < t; ++j) coords[i][j] = aug[i][r + j];
    return coords;
}

}  // namespace detail

struct CharacterTable {
    FiniteGroup group;
    ClassData classes;
    std::size_t k = 0;
    /// values[i][j] = χ_i(c_j), conductor = exponent of the group.
    std::vector<std::vector<CycInteger>> values;
    std::vector<unsigned> degrees;
    /// Position in Dixon's output of each canonical row.
    std::vector<std::size_t> irrep_order;
    std::vector<std::string> irrep_labels;
    std::uint64_t prime = 0;

    const CycInteger& value(std::size_t irrep, std::size_t cls) const { return values[irrep][cls]; }

    /// χ_i(g) for an arbitrary element.
    const CycInteger& at_element(std::size_t irrep, Element g) const { return values[irrep][classes.class_of[g]]; }

    Cyclotomic value_q(std::size_t irrep, std::size_t cls) const { return Cyclotomic(values[irrep][cls]); }
};

/// Default display labels: "1" for the trivial character; S3 uses 1, s, t; otherwise ρ2…ρk.
inline std::vector<std::string> default_irrep_labels(const CharacterTable& ct) {
    std::vector<std::string> labels{"1"};
    if (ct.group.order() == 6 && ct.k == 3) return {"1", "s", "t"};
    for (std::size_t i = 1; i < ct.k; ++i) labels.push_back("ρ" + std::to_string(i + 1));
    return labels;
}

/// Exact orthogonality and degree checks; returns an empty string on success.
inline std::string certify_character_table(const CharacterTable& ct) {
    const auto& G = ct.group;
    const std::size_t k = ct.k;
    const Integer order(G.order());
    if (ct.values.size() != k || ct.classes.num_classes != k) return "table is not k×k";
    Integer sum_sq = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (ct.values[i].size() != k) return "row " + std::to_string(i) + " has wrong length";
        auto d = ct.values[i][0].as_scalar();
        if (!d || *d <= 0 || *d != ct.degrees[i]) return "degree of row " + std::to_string(i) + " is not a positive integer";
        sum_sq += (*d) * (*d);
    }
    if (sum_sq != order) return "sum of squared degrees " + sum_sq.str() + " != |G| = " + order.str();
    for (std::size_t j = 0; j < k; ++j)
        if (!(ct.values[0][j] == CycInteger(1))) return "row 0 is not the trivial character";

    std::vector<std::vector<CycInteger>> conj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) conj[i].push_back(ct.values[i][j].conj());

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t i2 = i; i2 < k; ++i2) {
            CycInteger s = CycInteger::zero(G.exponent());
            for (std::size_t j = 0; j < k; ++j) s += ct.values[i][j] * conj[i2][j] * Integer(ct.classes.sizes[j]);
            if (!(s == CycInteger(i == i2 ? order : Integer(0))))
                return "row orthogonality fails for (" + std::to_string(i) + "," + std::to_string(i2) + ")";
        }
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t j2 = j; j2 < k; ++j2) {
            CycInteger s = CycInteger::zero(G.exponent());
            for (std::size_t i = 0; i < k; ++i) s += ct.values[i][j] * conj[i][j2];
            const Integer expect = j == j2 ? order / ct.classes.sizes[j] : Integer(0);
            if (!(s == CycInteger(expect)))
                return "column orthogonality fails for (" + std::to_string(j) + "," + std::to_string(j2) + ")";
        }
    return {};
}

inline CharacterTable character_table(const FiniteGroup& G) {
    using namespace detail;
    const ClassData cd = conjugacy_classes(G);
    const std::size_t k = cd.num_classes;
    const u64 e = G.exponent();
    const u64 p = dixon_prime(e, G.order());
    const auto coeff = class_multiplication_coefficients(G, cd);

    // Split F_p^k into common eigenspaces of all class matrices (M_i)_{jl} = a(i, j, l).
    std::vector<std::vector<std::vector<u64>>> spaces;
    {
        std::vector<std::vector<u64>> basis;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<u64> v(k, 0);
            v[i] = 1;
            basis.push_back(v);
        }
        spaces.push_back(std::move(basis));
    }
    auto all_split = [&] {
        return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    };
    for (std::size_t cls = 1; cls < k && !all_split(); ++cls) {
        std::vector<std::vector<std::vector<u64>>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            const std::size_t r = space.size();
            std::vector<std::vector<u64>> images;
            for (const auto& b : space) {
                std::vector<u64> img(k, 0);
                for (std::size_t j = 0; j < k; ++j) {
                    u64 s = 0;
                    for (std::size_t l = 0; l < k; ++l) s = (s + mulmod(coeff(cls, j, l) % p, b[l], p)) % p;
                    img[j] = s;
                }
                images.push_back(std::move(img));
            }
            const ModMatrix A = coordinates(space, images, p);  // restricted action, r×r
            std::size_t found = 0;
            for (u64 lambda = 0; lambda < p && found < r; ++lambda) {
                ModMatrix B = A;
                for (std::size_t i = 0; i < r; ++i) B[i][i] = (B[i][i] + p - lambda) % p;
                auto null = nullspace(B, p);
                if (null.empty()) continue;
                std::vector<std::vector<u64>> sub;
                for (const auto& c : null) {
                    std::vector<u64> v(k, 0);
                    for (std::size_t s = 0; s < r; ++s)
                        for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + mulmod(c[s], space[s][j], p)) % p;
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != r) throw LiftVerificationFailed("class matrix " + std::to_string(cls) + " is not diagonalizable mod " +
                                                         std::to_string(p));
        }
        spaces = std::move(next);
    }
    if (!all_split() || spaces.size() != k)
        throw LiftVerificationFailed("common eigenspaces did not split into " + std::to_string(k) + " lines");

    // power_class[c][t] = class of reps[c]^t
    std::vector<std::vector<std::uint32_t>> power_class(k, std::vector<std::uint32_t>(e));
    for (std::size_t c = 0; c < k; ++c) {
        Element x = FiniteGroup::identity();
        for (u64 t = 0; t < e; ++t) {
            power_class[c][t] = cd.class_of[x];
            x = G.mul(x, cd.reps[c]);
        }
    }
    const u64 z = primitive_root_of_unity(e, p);
    const u64 z_inv = invmod(z, p);
    const u64 e_inv = invmod(e % p, p);
    const u64 order_p = G.order() % p;

    struct Row {
        unsigned degree;
        std::vector<CycInteger> values;
        std::size_t dixon_index;
    };
    std::vector<Row> rows;
    for (std::size_t s = 0; s < k; ++s) {
        const auto& w = spaces[s][0];
        if (w[0] == 0) throw LiftVerificationFailed("eigenvector vanishes at the identity class");
        const u64 w0_inv = invmod(w[0], p);
        std::vector<u64> omega(k);
        for (std::size_t j = 0; j < k; ++j) omega[j] = mulmod(w[j], w0_inv, p);

        u64 norm = 0;  // Σ ω_j ω_{j*} / |C_j| = |G| / d²
        for (std::size_t j = 0; j < k; ++j)
            norm = (norm + mulmod(mulmod(omega[j], omega[cd.inverse_class[j]], p), invmod(cd.sizes[j] % p, p), p)) % p;
        if (norm == 0) throw LiftVerificationFailed("degenerate central character");
        const u64 d2 = mulmod(order_p, invmod(norm, p), p);
        unsigned degree = 0;
        for (u64 d = 1; d * d <= G.order(); ++d)
            if (mulmod(d, d, p) == d2) {
                degree = static_cast<unsigned>(d);
                break;
            }
        if (degree == 0) throw LiftVerificationFailed("no integer degree with d² ≡ " + std::to_string(d2));

        std::vector<u64> chi_p(k);
        for (std::size_t j = 0; j < k; ++j)
            chi_p[j] = mulmod(mulmod(omega[j], degree, p), invmod(cd.sizes[j] % p, p), p);

        Row row{degree, {}, s};
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<Integer> mult(e, 0);
            for (u64 l = 0; l < e; ++l) {
                u64 acc = 0;
                const u64 step = powmod(z_inv, l, p);
                u64 zt = 1;
                for (u64 t = 0; t < e; ++t) {
                    acc = (acc + mulmod(chi_p[power_class[c][t]], zt, p)) % p;
                    zt = mulmod(zt, step, p);
                }
                const u64 m = mulmod(acc, e_inv, p);
                if (m > degree)
                    throw LiftVerificationFailed("eigenvalue multiplicity " + std::to_string(m) + " exceeds degree");
                mult[l] = m;
            }
            row.values.push_back(CycInteger::from_coeffs(static_cast<unsigned>(e), mult));
        }
        rows.push_back(std::move(row));
    }

    auto is_trivial = [&](const Row& r) {
        return std::all_of(r.values.begin(), r.values.end(), [](const CycInteger& v) { return v == CycInteger(1); });
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        const bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t j = 0; j < k; ++j) {
            if (lex_less(a.values[j], b.values[j])) return true;
            if (lex_less(b.values[j], a.values[j])) return false;
        }
        return false;
    });

    CharacterTable ct;
    ct.group = G;
    ct.classes = cd;
    ct.k = k;
    ct.prime = p;
    for (auto& r : rows) {
        ct.degrees.push_back(r.degree);
        ct.values.push_back(std::move(r.values));
        ct.irrep_order.push_back(r.dixon_index);
    }
    ct.irrep_labels = default_irrep_labels(ct);
    if (auto err = certify_character_table(ct); !err.empty()) throw LiftVerificationFailed(err);
    return ct;
}

/// (1/|Γ|) Σ_j |C_j| f(c_j) conj(χ_i(c_j)). Throws NotRational for a value outside Q.
inline Rational inner_product(const CharacterTable& ct, const std::vector<Cyclotomic>& f, std::size_t irrep) {
    if (f.size() != ct.k) throw LengthMismatch("class function has " + std::to_string(f.size()) + " values, expected " +
                                               std::to_string(ct.k));
    Cyclotomic s;
    for (std::size_t j = 0; j < ct.k; ++j)
        s += f[j] * Cyclotomic(ct.values[irrep][j].conj()) * Rational(ct.classes.sizes[j]);
    s *= Rational(1, ct.group.order());
    return cyc_require_rational(s);
}

}  // namespace repdual
