#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(ζ_m), stored in the power basis of Q[x]/(Φ_m(x)).
 *
 * The coefficient type is a template parameter: Integer for algebraic integers in
 * Z[ζ_m] (character values, which stay integral under ring operations) and Rational
 * for general field elements. Both share one reduction table per conductor.
 */

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "number.hpp"

namespace repdual {

/// Integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<Integer>;

namespace detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division by a monic divisor; throws if the remainder is non-zero.
inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        if (!num.empty()) throw DomainError("inexact polynomial division");
        return {};
    }
    IntPoly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        Integer c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw DomainError("inexact polynomial division");
    return q;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline IntPoly cyclotomic_polynomial_uncached(unsigned m, std::map<unsigned, IntPoly>& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    IntPoly den{1};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) den = multiply(den, cyclotomic_polynomial_uncached(d, memo));
    IntPoly phi = exact_divide(num, den);
    memo.emplace(m, phi);
    return phi;
}

struct CyclotomicField {
    unsigned m = 1;
    std::size_t phi = 1;
    IntPoly poly;                            // Φ_m, monic, degree phi
    std::vector<std::vector<Integer>> power;  // power[i] = x^i mod Φ_m for 0 <= i < m, length phi
};

inline const CyclotomicField& cyclotomic_field(unsigned m) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const CyclotomicField>> cache;
    static std::map<unsigned, IntPoly> memo;
    if (m == 0) throw DomainError("conductor must be positive");
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;

    auto f = std::make_unique<CyclotomicField>();
    f->m = m;
    f->poly = cyclotomic_polynomial_uncached(m, memo);
    f->phi = f->poly.size() - 1;
    std::vector<Integer> cur(f->phi, 0);
    cur[0] = 1;  // x^0
    for (unsigned i = 0; i < m; ++i) {
        f->power.push_back(cur);
        // multiply by x, then fold x^phi = -Σ poly[j] x^j
        Integer top = cur.back();
        for (std::size_t j = f->phi; j-- > 1;) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < f->phi; ++j) cur[j] -= top * f->poly[j];
    }
    const auto* raw = f.get();
    cache.emplace(m, std::move(f));
    return *raw;
}

}  // namespace detail

/// Φ_m by exact division of x^m - 1 by Π_{d|m, d<m} Φ_d.
inline IntPoly cyclotomic_polynomial(unsigned m) { return detail::cyclotomic_field(m).poly; }

template <typename Scalar>
class basic_cyclotomic {
   public:
    using scalar_type = Scalar;

    basic_cyclotomic() : f_(&detail::cyclotomic_field(1)), c_(1, Scalar(0)) {}
    basic_cyclotomic(const Scalar& s) : f_(&detail::cyclotomic_field(1)), c_(1, s) {}  // NOLINT: implicit
    basic_cyclotomic(int s) : basic_cyclotomic(Scalar(s)) {}                            // NOLINT: implicit

    /// Zero of conductor m.
    static basic_cyclotomic zero(unsigned m) {
        basic_cyclotomic z;
        z.f_ = &detail::cyclotomic_field(m);
        z.c_.assign(z.f_->phi, Scalar(0));
        return z;
    }

    /// ζ_m^e.
    static basic_cyclotomic zeta(unsigned m, long long e = 1) {
        basic_cyclotomic z = zero(m);
        const auto& p = z.f_->power[static_cast<std::size_t>(((e % m) + m) % m)];
        for (std::size_t i = 0; i < p.size(); ++i) z.c_[i] = Scalar(p[i]);
        return z;
    }

    /// From coefficients in the power basis; reduced modulo Φ_m (any length accepted).
    static basic_cyclotomic from_coeffs(unsigned m, const std::vector<Scalar>& coeffs) {
        basic_cyclotomic z = zero(m);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) z.add_power(i % m, coeffs[i]);
        return z;
    }

    template <typename Other>
    explicit basic_cyclotomic(const basic_cyclotomic<Other>& o) : f_(&detail::cyclotomic_field(o.conductor())) {
        for (const auto& x : o.coeffs()) c_.push_back(Scalar(x));
    }

    unsigned conductor() const noexcept { return f_->m; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Same value expressed at conductor l (a multiple of the current one), via ζ_m = ζ_l^{l/m}.
    basic_cyclotomic promoted(unsigned l) const {
        if (l == conductor()) return *this;
        if (l % conductor() != 0) throw DomainError("conductor " + std::to_string(l) + " is not a multiple of " +
                                                    std::to_string(conductor()));
        const std::size_t step = l / conductor();
        basic_cyclotomic r = zero(l);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) r.add_power(i * step, c_[i]);
        return r;
    }

    /// The value as an element of Q, if it is one.
    std::optional<Scalar> as_scalar() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return std::nullopt;
        return c_[0];
    }

    /// ζ ↦ ζ^e.
    basic_cyclotomic galois(long long e) const {
        const unsigned m = conductor();
        const long long em = ((e % m) + m) % m;
        if (std::gcd(static_cast<unsigned long long>(em), static_cast<unsigned long long>(m)) != 1 && m != 1)
            throw NotCoprime("exponent " + std::to_string(e) + " is not coprime to conductor " + std::to_string(m));
        basic_cyclotomic r = zero(m);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) r.add_power((i * static_cast<std::size_t>(em)) % m, c_[i]);
        return r;
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    basic_cyclotomic conj() const { return conductor() <= 2 ? *this : galois(conductor() - 1); }

    std::complex<double> evaluate() const {
        std::complex<double> r = 0;
        const double t = 2 * std::numbers::pi / conductor();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) r += static_cast<double>(c_[i]) * std::polar(1.0, t * static_cast<double>(i));
        return r;
    }

    basic_cyclotomic& operator+=(const basic_cyclotomic& o) {
        if (o.conductor() == conductor()) {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
            return *this;
        }
        const unsigned l = std::lcm(conductor(), o.conductor());
        *this = promoted(l);
        return *this += o.promoted(l);
    }

    basic_cyclotomic& operator-=(const basic_cyclotomic& o) { return *this += -o; }

    basic_cyclotomic operator-() const {
        basic_cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    basic_cyclotomic& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    basic_cyclotomic& operator*=(const basic_cyclotomic& o) {
        if (o.conductor() != conductor()) {
            const unsigned l = std::lcm(conductor(), o.conductor());
            basic_cyclotomic a = promoted(l);
            a *= o.promoted(l);
            return *this = std::move(a);
        }
        if (c_.size() == 1) return *this = o * c_[0];
        std::vector<Scalar> full(2 * c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) full[i + j] += c_[i] * o.c_[j];
        }
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = std::move(full[i]);
        for (std::size_t i = c_.size(); i < full.size(); ++i)
            if (full[i] != 0) add_power(i % conductor(), full[i]);
        return *this;
    }

    friend basic_cyclotomic operator+(basic_cyclotomic a, const basic_cyclotomic& b) { return a += b; }
    friend basic_cyclotomic operator-(basic_cyclotomic a, const basic_cyclotomic& b) { return a -= b; }
    friend basic_cyclotomic operator*(basic_cyclotomic a, const basic_cyclotomic& b) { return a *= b; }
    friend basic_cyclotomic operator*(basic_cyclotomic a, const Scalar& s) { return a *= s; }
    friend basic_cyclotomic operator*(const Scalar& s, basic_cyclotomic a) { return a *= s; }

    friend bool operator==(const basic_cyclotomic& a, const basic_cyclotomic& b) {
        if (a.conductor() == b.conductor()) return a.c_ == b.c_;
        const unsigned l = std::lcm(a.conductor(), b.conductor());
        return a.promoted(l).c_ == b.promoted(l).c_;
    }

    /// Total order used for canonical sorting: conductor first, then coefficients lexicographically.
    friend bool lex_less(const basic_cyclotomic& a, const basic_cyclotomic& b) {
        if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
        return a.c_ < b.c_;
    }

    /// Rendered as a polynomial in z<m>, e.g. "-1 - 2*z3".
    std::string str() const {
        std::string out;
        const std::string var = "z" + std::to_string(conductor());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Scalar a = c_[i];
            const bool neg = a < 0;
            if (neg) a = -a;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mag = scalar_string(a);
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

   private:
    static std::string scalar_string(const Scalar& s) {
        if constexpr (std::is_same_v<Scalar, Rational>)
            return to_string(s);
        else
            return s.str();
    }

    void add_power(std::size_t i, const Scalar& s) {
        const auto& p = f_->power[i];
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] != 0) c_[j] += s * p[j];
    }

    const detail::CyclotomicField* f_;
    std::vector<Scalar> c_;
};

using Cyclotomic = basic_cyclotomic<Rational>;
using CycInteger = basic_cyclotomic<Integer>;

inline std::optional<Rational> cyc_as_rational(const Cyclotomic& a) { return a.as_scalar(); }

inline Rational cyc_require_rational(const Cyclotomic& a) {
    if (auto r = a.as_scalar()) return *r;
    throw NotRational(a.str());
}

}  // namespace repdual
