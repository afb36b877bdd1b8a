#pragma once

/**
 * @file cheb.hpp
 * @brief Chebyshev-U expansions with exact rational coefficients, Laurent
 * polynomials in u = e^{it/2}, and the conversions between them and the
 * monomial basis in x = cos t.
 *
 * Identities baked in (with U_{-1} identically 0 throughout):
 *   x U_r        = U_{r-1}/2 + U_{r+1}/2
 *   2(1-x^2)U'_n = (n+2)U_{n-1} - n U_{n+1}
 *   d/dx[rho(x)(U_{i+1}/(2i+4) - U_{i-1}/(2i))] = rho(x) U_i,
 *     rho = (1-x)^{1/2}(1+x)^{1/2}
 *   int_{-1}^{1} sqrt(1-x^2) U_n U_m dx = (pi/2) delta_{nm}
 */

#include <map>
#include <vector>

#include "mvop/matrix.hpp"
#include "mvop/poly.hpp"
#include "mvop/scalars.hpp"

namespace mvop {

class ChebExpansion {
    std::vector<Rat> c_;  // c_[n] multiplies U_n

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

public:
    ChebExpansion() = default;
    explicit ChebExpansion(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    /// coeff * U_n; negative n clamps to zero (U_{-1} convention).
    static ChebExpansion basis(long n, Rat coeff = Rat(1)) {
        if (n < 0 || coeff.is_zero()) return {};
        std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
        c.back() = std::move(coeff);
        return ChebExpansion(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(long n) const {
        if (n < 0 || n >= static_cast<long>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(n)];
    }
    std::vector<Rat> const& coeffs() const { return c_; }

    ChebExpansion operator-() const {
        auto r = c_;
        for (auto& v : r) v = -v;
        return ChebExpansion(std::move(r));
    }
    ChebExpansion operator+(ChebExpansion const& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return ChebExpansion(std::move(r));
    }
    ChebExpansion operator-(ChebExpansion const& o) const { return *this + (-o); }
    ChebExpansion operator*(Rat const& s) const {
        auto r = c_;
        for (auto& v : r) v *= s;
        return ChebExpansion(std::move(r));
    }
    ChebExpansion& operator+=(ChebExpansion const& o) { return *this = *this + o; }
    ChebExpansion& operator-=(ChebExpansion const& o) { return *this = *this - o; }

    bool operator==(ChebExpansion const& o) const { return c_ == o.c_; }
    bool operator!=(ChebExpansion const& o) const { return !(*this == o); }
};

/// x * e in the U basis.
inline ChebExpansion cheb_mul_x(ChebExpansion const& e) {
    ChebExpansion out;
    for (long n = 0; n <= e.degree(); ++n) {
        Rat c = e.coeff(n);
        if (c.is_zero()) continue;
        out += ChebExpansion::basis(n - 1, c / Rat(2));
        out += ChebExpansion::basis(n + 1, c / Rat(2));
    }
    return out;
}

/// The exact U-expansion of 2(1-x^2) e'(x).
inline ChebExpansion cheb_derivative(ChebExpansion const& e) {
    ChebExpansion out;
    for (long n = 0; n <= e.degree(); ++n) {
        Rat c = e.coeff(n);
        if (c.is_zero()) continue;
        out += ChebExpansion::basis(n - 1, c * Rat(n + 2));
        out += ChebExpansion::basis(n + 1, -c * Rat(n));
    }
    return out;
}

/// g with d/dx[rho g] = rho e, rho = (1-x)^{1/2}(1+x)^{1/2}.
inline ChebExpansion cheb_weighted_antiderivative(ChebExpansion const& e) {
    ChebExpansion out;
    for (long n = 0; n <= e.degree(); ++n) {
        Rat c = e.coeff(n);
        if (c.is_zero()) continue;
        out += ChebExpansion::basis(n + 1, c / Rat(2 * n + 4));
        if (n >= 1) out += ChebExpansion::basis(n - 1, -c / Rat(2 * n));
    }
    return out;
}

/// int_{-1}^{1} sqrt(1-x^2) e1 e2 dx, exactly (pi/2 per matching index).
inline PiRat cheb_inner(ChebExpansion const& e1, ChebExpansion const& e2) {
    Rat acc(0);
    long d = std::min(e1.degree(), e2.degree());
    for (long n = 0; n <= d; ++n) acc += e1.coeff(n) * e2.coeff(n);
    if (acc.is_zero()) return PiRat();
    return PiRat(acc / Rat(2), 1);
}

/// U_n in the monomial basis.
inline Poly<Rat> cheb_U(long n) {
    if (n < 0) return {};
    Poly<Rat> um1, u0(Rat(1));
    Poly<Rat> two_x(std::vector<Rat>{Rat(0), Rat(2)});
    for (long k = 0; k < n; ++k) {
        Poly<Rat> u1 = two_x * u0 - um1;
        um1 = std::move(u0);
        u0 = std::move(u1);
    }
    return u0;
}

inline Poly<Rat> cheb_to_poly(ChebExpansion const& e) {
    Poly<Rat> out;
    for (long n = 0; n <= e.degree(); ++n)
        if (!e.coeff(n).is_zero()) out += cheb_U(n) * e.coeff(n);
    return out;
}

inline ChebExpansion poly_to_cheb(Poly<Rat> const& p) {
    // peel off the leading term against the leading coefficient 2^n of U_n
    Poly<Rat> rem = p;
    ChebExpansion out;
    while (!rem.is_zero()) {
        long n = rem.degree();
        mpz_class two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        Rat c = rem.leading() / Rat(two_n);
        out += ChebExpansion::basis(n, c);
        rem -= cheb_U(n) * c;
        if (!rem.is_zero() && rem.degree() >= n)
            throw exactness_error("poly_to_cheb: degree did not drop");
    }
    return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly: finitely supported maps exponent-of-u -> Rat.
// u = e^{it/2}; x = cos t = (u^2 + u^-2)/2.
// ---------------------------------------------------------------------------
class LaurentPoly {
    std::map<long, Rat> c_;

    void put(long k, Rat v) {
        if (v.is_zero()) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

public:
    LaurentPoly() = default;
    LaurentPoly(long n) { put(0, Rat(n)); }  // ring-constant constructor
    explicit LaurentPoly(Rat r) { put(0, std::move(r)); }

    static LaurentPoly term(long exponent, Rat coeff) {
        LaurentPoly f;
        f.put(exponent, std::move(coeff));
        return f;
    }
    /// cos t as a Laurent polynomial in u.
    static LaurentPoly cos_t() {
        LaurentPoly f;
        f.put(2, Rat(1, 2));
        f.put(-2, Rat(1, 2));
        return f;
    }
    /// sin^2 t = (2 - u^4 - u^-4)/4.
    static LaurentPoly sin2_t() {
        LaurentPoly f;
        f.put(0, Rat(1, 2));
        f.put(4, Rat(-1, 4));
        f.put(-4, Rat(-1, 4));
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    Rat coeff(long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }
    std::map<long, Rat> const& terms() const { return c_; }
    long min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    long max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto const& [k, v] : c_) r.c_.emplace(k, -v);
        return r;
    }
    LaurentPoly operator+(LaurentPoly const& o) const {
        LaurentPoly r = *this;
        for (auto const& [k, v] : o.c_) r.put(k, v);
        return r;
    }
    LaurentPoly operator-(LaurentPoly const& o) const { return *this + (-o); }
    LaurentPoly operator*(LaurentPoly const& o) const {
        LaurentPoly r;
        for (auto const& [k1, v1] : c_)
            for (auto const& [k2, v2] : o.c_) r.put(k1 + k2, v1 * v2);
        return r;
    }
    LaurentPoly operator*(Rat const& s) const {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (auto const& [k, v] : c_) r.c_.emplace(k, v * s);
        return r;
    }
    LaurentPoly& operator+=(LaurentPoly const& o) { return *this = *this + o; }
    LaurentPoly& operator-=(LaurentPoly const& o) { return *this = *this - o; }
    LaurentPoly& operator*=(LaurentPoly const& o) { return *this = *this * o; }

    bool operator==(LaurentPoly const& o) const { return c_ == o.c_; }
    bool operator!=(LaurentPoly const& o) const { return !(*this == o); }

    /// u -> 1/u; this is both t -> -t and complex conjugation on |u| = 1.
    LaurentPoly conj() const {
        LaurentPoly r;
        for (auto const& [k, v] : c_) r.c_.emplace(-k, v);
        return r;
    }

    /// Value at t = 0 (u = 1).
    Rat at_one() const {
        Rat s(0);
        for (auto const& [k, v] : c_) s += v;
        return s;
    }

    /// Exact division; throws when the remainder is nonzero.
    LaurentPoly exact_div(LaurentPoly const& d) const {
        if (d.is_zero()) throw exactness_error("LaurentPoly: division by zero");
        if (is_zero()) return {};
        // shift both to ordinary polynomials in u
        auto to_poly = [](LaurentPoly const& f) {
            std::vector<Rat> c(static_cast<size_t>(f.max_exp() - f.min_exp()) + 1, Rat(0));
            for (auto const& [k, v] : f.c_) c[static_cast<size_t>(k - f.min_exp())] = v;
            return Poly<Rat>(std::move(c));
        };
        Poly<Rat> pn = to_poly(*this), pd = to_poly(d);
        Poly<Rat> q = pn.exact_div(pd);
        LaurentPoly r;
        long base = min_exp() - d.min_exp();
        for (long i = 0; i <= q.degree(); ++i) r.put(base + i, q.coeff(i));
        return r;
    }

    bool cosine_representable() const {
        for (auto const& [k, v] : c_) {
            (void)v;
            if (k % 2 != 0) return false;
            if (!(coeff(k) == coeff(-k))) return false;
        }
        return true;
    }
};

/// The unique p with p(cos t) = f(u); requires cosine-representability.
inline Poly<Rat> laurent_to_poly_in_x(LaurentPoly const& f) {
    LaurentPoly rem = f;
    Poly<Rat> out;
    // cos(kt) terms: peel from the top. u^{2m} + u^{-2m} = 2 T_m(x); instead
    // of Chebyshev-T tables, subtract c*(cos t poly)^?; simplest: repeatedly
    // remove the highest term with c * (2x)^m expressed through cos_t powers.
    LaurentPoly c = LaurentPoly::cos_t();
    while (!rem.is_zero()) {
        long m = rem.max_exp();
        if (m % 2 != 0 || !(rem.coeff(m) == rem.coeff(-m)))
            throw exactness_error(
                "laurent_to_poly_in_x: not a polynomial in cos t (exponent " +
                std::to_string(m) + ")");
        if (m == 0) {
            out += Poly<Rat>(rem.coeff(0));
            break;
        }
        long half = m / 2;
        Rat coeff = rem.coeff(m);
        // c^half has top terms coeff 2^{-half} at u^{+-m}
        mpz_class two_h;
        mpz_ui_pow_ui(two_h.get_mpz_t(), 2, static_cast<unsigned long>(half));
        Rat scale = coeff * Rat(two_h);
        LaurentPoly chp(1);
        for (long i = 0; i < half; ++i) chp *= c;
        rem -= chp * scale;
        out += Poly<Rat>::monomial(half, scale);
    }
    return out;
}

/// Inverse direction: p(x) with x = cos t, as a Laurent polynomial in u.
inline LaurentPoly poly_in_x_to_laurent(Poly<Rat> const& p) {
    LaurentPoly out, xpow(1);
    LaurentPoly c = LaurentPoly::cos_t();
    for (long i = 0; i <= p.degree(); ++i) {
        out += xpow * p.coeff(i);
        xpow *= c;
    }
    return out;
}

using MatLaurent = Mat<LaurentPoly>;

inline MatLaurent laurent_conj_transpose(MatLaurent const& m) {
    return m.transpose().map([](LaurentPoly const& f) { return f.conj(); });
}

}  // namespace mvop
