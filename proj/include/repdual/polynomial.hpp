#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse univariate and multivariate polynomials over an exact coefficient ring.
 *
 * Zero coefficients are never stored, so structural equality is polynomial equality.
 * Multivariate terms are keyed by exponent vectors and iterate in descending
 * lexicographic order (x1^4 before x1^2*x2^2 before x2^4).
 */

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "number.hpp"

namespace repdual {

namespace detail {

template <typename C>
std::string coeff_string(const C& c) {
    if constexpr (std::is_same_v<C, Rational>)
        return to_string(c);
    else if constexpr (std::is_same_v<C, Integer>)
        return c.str();
    else
        return "(" + c.str() + ")";
}

template <typename C>
bool is_negative(const C& c) {
    if constexpr (std::is_same_v<C, Rational> || std::is_same_v<C, Integer>)
        return c < 0;
    else
        return false;
}

}  // namespace detail

template <typename C>
class basic_unipoly {
   public:
    using coeff_type = C;

    basic_unipoly() = default;
    basic_unipoly(const C& c) { set(0, c); }  // NOLINT: implicit constant

    static basic_unipoly monomial(unsigned degree, const C& c = C(1)) {
        basic_unipoly p;
        p.set(degree, c);
        return p;
    }

    /// c0 + c1·z
    static basic_unipoly linear(const C& c0, const C& c1) {
        basic_unipoly p;
        p.set(0, c0);
        p.set(1, c1);
        return p;
    }

    const std::map<unsigned, C>& terms() const noexcept { return terms_; }

    C coeff(unsigned degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? C(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }

    void set(unsigned degree, const C& c) {
        if (c == 0)
            terms_.erase(degree);
        else
            terms_[degree] = c;
    }

    void add(unsigned degree, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    basic_unipoly& operator+=(const basic_unipoly& o) {
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    basic_unipoly& operator-=(const basic_unipoly& o) {
        for (const auto& [d, c] : o.terms_) add(d, -c);
        return *this;
    }
    basic_unipoly& operator*=(const C& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, c] : terms_) c *= s;
        return *this;
    }
    friend basic_unipoly operator*(const basic_unipoly& a, const basic_unipoly& b) {
        basic_unipoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add(da + db, ca * cb);
        return r;
    }
    basic_unipoly& operator*=(const basic_unipoly& o) { return *this = *this * o; }

    friend basic_unipoly operator+(basic_unipoly a, const basic_unipoly& b) { return a += b; }
    friend basic_unipoly operator-(basic_unipoly a, const basic_unipoly& b) { return a -= b; }
    friend basic_unipoly operator*(basic_unipoly a, const C& s) { return a *= s; }
    friend bool operator==(const basic_unipoly&, const basic_unipoly&) = default;

    basic_unipoly pow(unsigned e) const {
        basic_unipoly r(C(1)), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    C evaluate(const C& x) const {
        C r(0);
        for (const auto& [d, c] : terms_) {
            C p(1);
            for (unsigned i = 0; i < d; ++i) p *= x;
            r += c * p;
        }
        return r;
    }

    double evaluate(double x) const {
        double r = 0;
        for (const auto& [d, c] : terms_) r += static_cast<double>(c) * std::pow(x, static_cast<int>(d));
        return r;
    }

    std::string str(const std::string& var = "z") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [d, c] : terms_) {
            C a = c;
            const bool neg = detail::is_negative(a);
            if (neg) a = -a;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            const std::string mag = detail::coeff_string(a);
            if (d == 0) {
                out += mag;
                continue;
            }
            if (mag != "1") out += mag + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
        return out;
    }

   private:
    std::map<unsigned, C> terms_;
};

using Exponents = std::vector<unsigned>;

template <typename C>
class basic_multipoly {
   public:
    using coeff_type = C;
    using term_map = std::map<Exponents, C, std::greater<>>;

    basic_multipoly() = default;
    explicit basic_multipoly(std::size_t num_vars) : vars_(num_vars) {}

    static basic_multipoly constant(std::size_t num_vars, const C& c) {
        basic_multipoly p(num_vars);
        p.add(Exponents(num_vars, 0), c);
        return p;
    }

    /// c · x_{var}
    static basic_multipoly variable(std::size_t num_vars, std::size_t var, const C& c = C(1)) {
        basic_multipoly p(num_vars);
        Exponents e(num_vars, 0);
        e.at(var) = 1;
        p.add(e, c);
        return p;
    }

    std::size_t num_vars() const noexcept { return vars_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add(const Exponents& e, const C& c) {
        if (e.size() != vars_) throw LengthMismatch("exponent vector of length " + std::to_string(e.size()) +
                                                    " for " + std::to_string(vars_) + " variables");
        if (c == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    basic_multipoly& operator+=(const basic_multipoly& o) {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    basic_multipoly& operator-=(const basic_multipoly& o) {
        adopt_vars(o);
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    template <typename S>
    basic_multipoly& scale(const S& s) {
        term_map out;
        for (auto& [e, c] : terms_) {
            C v = c * s;
            if (!(v == C(0))) out.emplace(e, std::move(v));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend basic_multipoly operator*(const basic_multipoly& a, const basic_multipoly& b) {
        basic_multipoly r(std::max(a.vars_, b.vars_));
        if (a.vars_ != b.vars_ && !a.is_zero() && !b.is_zero())
            throw LengthMismatch("multiplying polynomials in different variable counts");
        Exponents e(r.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }

    basic_multipoly pow(unsigned n) const {
        basic_multipoly r = constant(vars_, C(1)), base = *this;
        while (n) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    friend basic_multipoly operator+(basic_multipoly a, const basic_multipoly& b) { return a += b; }
    friend basic_multipoly operator-(basic_multipoly a, const basic_multipoly& b) { return a -= b; }
    friend bool operator==(const basic_multipoly& a, const basic_multipoly& b) {
        return a.terms_ == b.terms_ && (a.vars_ == b.vars_ || a.terms_.empty());
    }

    /// Sum of all coefficients (evaluation at the all-ones point).
    C total() const {
        C s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            C a = c;
            const bool neg = detail::is_negative(a);
            if (neg) a = -a;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            const std::string mag = detail::coeff_string(a);
            if (mono.empty())
                out += mag;
            else
                out += (mag == "1" ? "" : mag + "*") + mono;
        }
        return out;
    }

   private:
    void adopt_vars(const basic_multipoly& o) {
        if (terms_.empty() && vars_ == 0) vars_ = o.vars_;
        if (o.vars_ != vars_ && !o.terms_.empty())
            throw LengthMismatch("adding polynomials in different variable counts");
    }

    std::size_t vars_ = 0;
    term_map terms_;
};

using UniPoly = basic_unipoly<Rational>;
using MultiPoly = basic_multipoly<Rational>;
using CycMultiPoly = basic_multipoly<Cyclotomic>;

}  // namespace repdual
