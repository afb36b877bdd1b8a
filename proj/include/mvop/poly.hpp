#pragma once

/**
 * @file poly.hpp
 * @brief Dense polynomials over an exact field, rational functions, and
 * "weighted" functions (1-x)^{a/2}(1+x)^{b/2} * rational function.
 *
 * The weighted class is what makes the symmetry equations and the Rodrigues
 * formulas exact: differentiation of half-integer powers of (1-x), (1+x)
 * stays inside the class, so identities are decided by coefficient
 * comparison instead of sampling.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvop/scalars.hpp"

namespace mvop {

template <class K>
class Poly {
    std::vector<K> c_;  // c_[i] multiplies x^i; trailing zeros trimmed

    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

public:
    Poly() = default;
    explicit Poly(K k) : c_{std::move(k)} { trim(); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(long deg, K coeff = K(1)) {
        std::vector<K> c(static_cast<size_t>(deg) + 1, K(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
    K coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    K leading() const { return is_zero() ? K(0) : c_.back(); }
    std::vector<K> const& coeffs() const { return c_; }

    Poly operator-() const {
        std::vector<K> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    Poly operator+(Poly const& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(Poly const& o) const { return *this + (-o); }
    Poly operator*(Poly const& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(K const& k) const {
        std::vector<K> r(c_);
        for (auto& v : r) v = v * k;
        return Poly(std::move(r));
    }
    Poly& operator+=(Poly const& o) { return *this = *this + o; }
    Poly& operator-=(Poly const& o) { return *this = *this - o; }
    Poly& operator*=(Poly const& o) { return *this = *this * o; }

    bool operator==(Poly const& o) const { return c_ == o.c_; }
    bool operator!=(Poly const& o) const { return !(*this == o); }

    K eval(K const& x) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(r));
    }

    /// p(-x)
    Poly reflect() const {
        std::vector<K> r(c_);
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    /// Euclidean division; requires K to be a field.
    std::pair<Poly, Poly> divmod(Poly const& d) const {
        if (d.is_zero()) throw exactness_error("Poly: division by zero polynomial");
        Poly q, r = *this;
        K lead_inv = K(1) / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            long sh = r.degree() - d.degree();
            K f = r.leading() * lead_inv;
            Poly t = Poly::monomial(sh, f);
            q += t;
            r -= t * d;
        }
        return {q, r};
    }

    Poly exact_div(Poly const& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw exactness_error("Poly: inexact division");
        return q;
    }

    std::string str(std::string const& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (long i = degree(); i >= 0; --i) {
            K v = coeff(i);
            if (v == K(0)) continue;
            if (!s.empty()) s += " + ";
            s += scalar_str(v);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    static std::string scalar_str(K const& v) { return v.str(); }
};

template <class K>
inline Poly<K> operator*(K const& k, Poly<K> const& p) { return p * k; }

/// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (K(1) / a.leading());
}

// ---------------------------------------------------------------------------
// RatFunc: reduced fractions of polynomials over a field K.
// ---------------------------------------------------------------------------
template <class K>
class RatFunc {
    Poly<K> num_, den_;  // den_ monic, gcd(num_, den_) = 1

    void normalize() {
        if (den_.is_zero()) throw exactness_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        K lead = den_.leading();
        if (!(lead == K(1))) {
            K inv = K(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

public:
    RatFunc() : den_(K(1)) {}
    RatFunc(Poly<K> n) : num_(std::move(n)), den_(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit RatFunc(K k) : num_(std::move(k)), den_(K(1)) {}

    Poly<K> const& num() const { return num_; }
    Poly<K> const& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly<K> demand_polynomial(char const* ctx = "RatFunc") const {
        if (!is_polynomial())
            throw exactness_error(std::string(ctx) + ": nontrivial denominator");
        return num_;
    }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator+(RatFunc const& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(RatFunc const& o) const { return *this + (-o); }
    RatFunc operator*(RatFunc const& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(RatFunc const& o) const {
        if (o.is_zero()) throw exactness_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(RatFunc const& o) { return *this = *this + o; }
    RatFunc& operator-=(RatFunc const& o) { return *this = *this - o; }
    RatFunc& operator*=(RatFunc const& o) { return *this = *this * o; }

    bool operator==(RatFunc const& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(RatFunc const& o) const { return !(*this == o); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Finite at x0 (no pole)?
    bool finite_at(K const& x0) const { return !(den_.eval(x0) == K(0)); }
    K eval(K const& x0) const {
        K d = den_.eval(x0);
        if (d == K(0)) throw exactness_error("RatFunc: pole at evaluation point");
        return num_.eval(x0) / d;
    }
};

// ---------------------------------------------------------------------------
// WFun: finite sums  sum over parities (pa,pb) in {0,1}^2 of
//   (1-x)^{pa/2} (1+x)^{pb/2} * R_{pa,pb}(x),   R a rational function.
// Closed under ring ops and d/dx. Decompositions in this class are unique
// (the four branches are linearly independent over rational functions), so
// equality is componentwise.
// ---------------------------------------------------------------------------
template <class K>
class WFun {
    // key = pa + 2*pb
    std::map<int, RatFunc<K>> parts_;

    void put(int key, RatFunc<K> r) {
        if (r.is_zero()) return;
        auto it = parts_.find(key);
        if (it == parts_.end()) {
            parts_.emplace(key, std::move(r));
        } else {
            it->second += r;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }

public:
    WFun() = default;

    /// (1-x)^{a2/2} (1+x)^{b2/2} * f  with twice-exponents a2, b2 (any sign).
    static WFun weighted(long a2, long b2, RatFunc<K> f) {
        int pa = static_cast<int>(((a2 % 2) + 2) % 2);
        int pb = static_cast<int>(((b2 % 2) + 2) % 2);
        long qa = (a2 - pa) / 2, qb = (b2 - pb) / 2;
        RatFunc<K> one_minus(Poly<K>(std::vector<K>{K(1), K(-1)}));
        RatFunc<K> one_plus(Poly<K>(std::vector<K>{K(1), K(1)}));
        RatFunc<K> r = std::move(f);
        for (long i = 0; i < qa; ++i) r *= one_minus;
        for (long i = 0; i < -qa; ++i) r = r / one_minus;
        for (long i = 0; i < qb; ++i) r *= one_plus;
        for (long i = 0; i < -qb; ++i) r = r / one_plus;
        WFun w;
        w.put(pa + 2 * pb, std::move(r));
        return w;
    }
    static WFun of(RatFunc<K> f) { return weighted(0, 0, std::move(f)); }
    static WFun of_poly(Poly<K> p) { return of(RatFunc<K>(std::move(p))); }

    bool is_zero() const { return parts_.empty(); }
    std::map<int, RatFunc<K>> const& parts() const { return parts_; }

    WFun operator-() const {
        WFun r;
        for (auto const& [k, v] : parts_) r.parts_.emplace(k, -v);
        return r;
    }
    WFun operator+(WFun const& o) const {
        WFun r = *this;
        for (auto const& [k, v] : o.parts_) r.put(k, v);
        return r;
    }
    WFun operator-(WFun const& o) const { return *this + (-o); }
    WFun operator*(WFun const& o) const {
        RatFunc<K> one_minus(Poly<K>(std::vector<K>{K(1), K(-1)}));
        RatFunc<K> one_plus(Poly<K>(std::vector<K>{K(1), K(1)}));
        WFun r;
        for (auto const& [k1, v1] : parts_) {
            for (auto const& [k2, v2] : o.parts_) {
                int pa = (k1 & 1) + (k2 & 1);
                int pb = (k1 >> 1) + (k2 >> 1);
                RatFunc<K> prod = v1 * v2;
                if (pa == 2) prod *= one_minus;
                if (pb == 2) prod *= one_plus;
                r.put((pa % 2) + 2 * (pb % 2), std::move(prod));
            }
        }
        return r;
    }
    WFun& operator+=(WFun const& o) { return *this = *this + o; }
    WFun& operator-=(WFun const& o) { return *this = *this - o; }
    WFun& operator*=(WFun const& o) { return *this = *this * o; }

    bool operator==(WFun const& o) const { return parts_ == o.parts_; }
    bool operator!=(WFun const& o) const { return !(*this == o); }

    /// d/dx[(1-x)^{pa/2}(1+x)^{pb/2} R]
    ///   = (1-x)^{pa/2}(1+x)^{pb/2} [R' - pa R/(2(1-x)) + pb R/(2(1+x))]
    WFun derivative() const {
        RatFunc<K> one_minus(Poly<K>(std::vector<K>{K(1), K(-1)}));
        RatFunc<K> one_plus(Poly<K>(std::vector<K>{K(1), K(1)}));
        RatFunc<K> half(Poly<K>(K(1) / K(2)));
        WFun r;
        for (auto const& [k, v] : parts_) {
            RatFunc<K> d = v.derivative();
            if (k & 1) d -= half * v / one_minus;
            if (k >> 1) d += half * v / one_plus;
            r.put(k, std::move(d));
        }
        return r;
    }

    /// Plain polynomial content, asserting no radicals and no denominator.
    Poly<K> demand_polynomial(char const* ctx = "WFun") const {
        if (parts_.empty()) return Poly<K>();
        if (parts_.size() != 1 || parts_.begin()->first != 0)
            throw exactness_error(std::string(ctx) + ": radical part survives");
        return parts_.begin()->second.demand_polynomial(ctx);
    }

    /// True when the function extends continuously to x0 in {-1, +1} with
    /// value 0. Each branch must either vanish through its radical factor
    /// or have a numerator root at x0; poles of the rational part are only
    /// allowed when strictly dominated by the radical (order 1/2 poles do
    /// not occur in-scope, so any pole is reported as failure).
    bool vanishes_at(int x0_sign) const {
        K x0 = (x0_sign > 0) ? K(1) : K(-1);
        for (auto const& [k, v] : parts_) {
            int radical_on = (x0_sign > 0) ? (k & 1) : (k >> 1);
            if (!v.finite_at(x0)) return false;
            if (!radical_on && !(v.eval(x0) == K(0))) return false;
        }
        return true;
    }
};

}  // namespace mvop
