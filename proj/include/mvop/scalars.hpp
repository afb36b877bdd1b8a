#pragma once

/**
 * @file scalars.hpp
 * @brief Exact scalar arithmetic: half-integers, arbitrary-precision
 * rationals, pi-scaled rationals, the quadratic extension by sqrt(2),
 * signed square roots of rationals, and combinatorial primitives.
 *
 * Everything here is exact. There is no floating point in this header;
 * high-precision floats live in bigfloat.hpp and are used only for
 * cross-checks and for sums of square roots, which leave these classes.
 */

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvop {

/// Thrown when an operation would silently leave the exact domain
/// (division by zero, adding sqrt values, pi-power overflow, ...).
/// The CLI maps this to a dedicated exit code.
class exactness_error : public std::runtime_error {
public:
    explicit exactness_error(std::string const& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// HalfInt: elements of (1/2)Z stored as twice the value, so all label
// arithmetic stays in plain integers.
// ---------------------------------------------------------------------------
struct HalfInt {
    long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long tw) : twice(tw) {}

    static constexpr HalfInt from_int(long n) { return HalfInt(2 * n); }
    static constexpr HalfInt half() { return HalfInt(1); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    /// Valid only when is_integer().
    constexpr long as_int() const { return twice / 2; }
    constexpr double as_double() const { return 0.5 * static_cast<double>(twice); }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    constexpr auto operator<=>(HalfInt const&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(as_int());
        return std::to_string(twice) + "/2";
    }
};

/// 2*(a*b) for half integers is (twice_a*twice_b)/2; products are only needed
/// where they are integral, so expose the doubled product explicitly instead.
constexpr long twice_sum(HalfInt a, HalfInt b) { return a.twice + b.twice; }

// ---------------------------------------------------------------------------
// Rat: arbitrary-precision rational on top of GMP's mpq, always canonical
// (reduced, positive denominator).
// ---------------------------------------------------------------------------
class Rat {
    mpq_class v_;

    void canon() { v_.canonicalize(); }

public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw exactness_error("Rat: zero denominator");
        canon();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { canon(); }
    explicit Rat(mpz_class const& n) : v_(n) {}
    Rat(mpz_class const& n, mpz_class const& d) : v_(n, d) {
        if (d == 0) throw exactness_error("Rat: zero denominator");
        canon();
    }

    mpq_class const& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(Rat const& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(Rat const& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(Rat const& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(Rat const& o) const {
        if (o.is_zero()) throw exactness_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(Rat const& o) { v_ += o.v_; return *this; }
    Rat& operator-=(Rat const& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(Rat const& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(Rat const& o) { return *this = *this / o; }

    bool operator==(Rat const& o) const { return v_ == o.v_; }
    bool operator!=(Rat const& o) const { return v_ != o.v_; }
    bool operator<(Rat const& o) const { return v_ < o.v_; }
    bool operator<=(Rat const& o) const { return v_ <= o.v_; }
    bool operator>(Rat const& o) const { return v_ > o.v_; }
    bool operator>=(Rat const& o) const { return v_ >= o.v_; }

    Rat inverse() const {
        if (is_zero()) throw exactness_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return v_.get_d(); }

    /// "num/den", den omitted when 1. This is the wire format everywhere.
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }
};

inline Rat operator*(long n, Rat const& r) { return Rat(n) * r; }

// ---------------------------------------------------------------------------
// PiRat: r * pi^k with k in {0,1}. Every in-scope integral carries at most
// one factor of pi; a higher power is a bug, not a value.
// ---------------------------------------------------------------------------
class PiRat {
    Rat coeff_;
    int pi_pow_ = 0;

public:
    PiRat() = default;
    PiRat(Rat c, int p) : coeff_(std::move(c)), pi_pow_(p) {
        if (p < 0 || p > 1) throw exactness_error("PiRat: pi power out of {0,1}");
        if (coeff_.is_zero()) pi_pow_ = 0;
    }
    explicit PiRat(Rat c) : PiRat(std::move(c), 0) {}

    Rat const& coeff() const { return coeff_; }
    int pi_power() const { return pi_pow_; }
    bool is_zero() const { return coeff_.is_zero(); }

    PiRat operator-() const { return PiRat(-coeff_, pi_pow_); }
    PiRat operator+(PiRat const& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (pi_pow_ != o.pi_pow_)
            throw exactness_error("PiRat: adding different pi powers");
        return PiRat(coeff_ + o.coeff_, pi_pow_);
    }
    PiRat operator-(PiRat const& o) const { return *this + (-o); }
    PiRat operator*(PiRat const& o) const {
        if (is_zero() || o.is_zero()) return PiRat();
        return PiRat(coeff_ * o.coeff_, pi_pow_ + o.pi_pow_);
    }
    PiRat operator*(Rat const& r) const { return PiRat(coeff_ * r, r.is_zero() ? 0 : pi_pow_); }
    PiRat operator/(Rat const& r) const { return PiRat(coeff_ / r, pi_pow_); }
    PiRat& operator+=(PiRat const& o) { return *this = *this + o; }

    bool operator==(PiRat const& o) const {
        return coeff_ == o.coeff_ && pi_pow_ == o.pi_pow_;
    }
    bool operator!=(PiRat const& o) const { return !(*this == o); }

    /// The rational part, asserting no pi survived.
    Rat demand_rational(char const* ctx = "PiRat") const {
        if (pi_pow_ != 0 && !coeff_.is_zero())
            throw exactness_error(std::string(ctx) + ": unexpected factor of pi");
        return coeff_;
    }

    std::string str() const {
        if (pi_pow_ == 0) return coeff_.str();
        return coeff_.str() + "*pi";
    }
};

// ---------------------------------------------------------------------------
// QuadRat: a + b*sqrt(2). A field; needed for the block-rotation matrix Y
// and everything conjugated through it.
// ---------------------------------------------------------------------------
class QuadRat {
    Rat a_, b_;

public:
    QuadRat() = default;
    QuadRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadRat(Rat a) : a_(std::move(a)) {}
    QuadRat(long n) : a_(n) {}

    static QuadRat sqrt2() { return QuadRat(Rat(0), Rat(1)); }

    Rat const& a() const { return a_; }
    Rat const& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    Rat demand_rational(char const* ctx = "QuadRat") const {
        if (!b_.is_zero())
            throw exactness_error(std::string(ctx) + ": unexpected sqrt(2) part");
        return a_;
    }

    QuadRat operator-() const { return {-a_, -b_}; }
    QuadRat operator+(QuadRat const& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QuadRat operator-(QuadRat const& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QuadRat operator*(QuadRat const& o) const {
        return {a_ * o.a_ + Rat(2) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QuadRat inverse() const {
        Rat n = a_ * a_ - Rat(2) * b_ * b_;
        if (n.is_zero()) throw exactness_error("QuadRat: inverse of zero");
        return {a_ / n, -b_ / n};
    }
    QuadRat operator/(QuadRat const& o) const { return *this * o.inverse(); }
    QuadRat& operator+=(QuadRat const& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadRat& operator-=(QuadRat const& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadRat& operator*=(QuadRat const& o) { return *this = *this * o; }

    bool operator==(QuadRat const& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(QuadRat const& o) const { return !(*this == o); }

    double to_double() const { return a_.to_double() + b_.to_double() * 1.4142135623730951; }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
        return s + b_.str() + "*sqrt2";
    }
};

// ---------------------------------------------------------------------------
// SqrtRat: sign * sqrt(radicand). Closed under multiplication, NOT under
// addition -- sums of distinct square roots must go through BigFloat.
// ---------------------------------------------------------------------------
class SqrtRat {
    int sign_ = 0;
    Rat rad_;  // nonnegative

public:
    SqrtRat() = default;
    SqrtRat(int s, Rat r) : sign_(s), rad_(std::move(r)) {
        if (rad_.sign() < 0) throw exactness_error("SqrtRat: negative radicand");
        if (rad_.is_zero()) sign_ = 0;
        if (sign_ == 0) rad_ = Rat(0);
        if (sign_ < -1 || sign_ > 1) throw exactness_error("SqrtRat: bad sign");
    }
    /// sqrt of a nonnegative rational, positive branch.
    static SqrtRat sqrt_of(Rat r) { return SqrtRat(r.is_zero() ? 0 : 1, std::move(r)); }
    static SqrtRat of_rat(Rat const& r) { return SqrtRat(r.sign(), r * r); }

    int sign() const { return sign_; }
    Rat const& radicand() const { return rad_; }
    bool is_zero() const { return sign_ == 0; }

    SqrtRat operator-() const { return SqrtRat(-sign_, rad_); }
    SqrtRat operator*(SqrtRat const& o) const {
        return SqrtRat(sign_ * o.sign_, rad_ * o.rad_);
    }
    SqrtRat operator*(Rat const& r) const {
        return SqrtRat(sign_ * r.sign(), rad_ * r * r);
    }

    /// square() always lands back in Rat.
    Rat square() const { return rad_; }

    /// Exact equality (canonical form is unique: sign + reduced radicand).
    bool operator==(SqrtRat const& o) const { return sign_ == o.sign_ && rad_ == o.rad_; }
    bool operator!=(SqrtRat const& o) const { return !(*this == o); }

    double to_double() const {
        return sign_ * std::sqrt(rad_.to_double());
    }
};

// ---------------------------------------------------------------------------
// Combinatorial primitives.
// ---------------------------------------------------------------------------

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rat pochhammer(Rat const& a, long n) {
    if (n < 0) throw exactness_error("pochhammer: negative n");
    Rat out(1);
    Rat t = a;
    for (long k = 0; k < n; ++k) {
        out *= t;
        t += Rat(1);
    }
    return out;
}

inline mpz_class factorial_z(long n) {
    if (n < 0) throw exactness_error("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rat factorial(long n) { return Rat(factorial_z(n)); }

/// Standard binomial with the out-of-range convention binom(n,k)=0 for
/// k<0 or k>n. n must be a nonnegative integer.
inline Rat binom(long n, long k) {
    if (n < 0) throw exactness_error("binom: negative upper index");
    if (k < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rat(r);
}

/// Half-integer front end; rejects non-integral n (all in-scope uses are
/// integral, a half upper index means a label bug upstream).
inline Rat binom(HalfInt n, long k) {
    if (!n.is_integer()) throw exactness_error("binom: non-integral upper index");
    return binom(n.as_int(), k);
}

/// Gamma(m/2) for positive twice-value m, split as rational * sqrt(pi)^e.
/// Gamma(n) = (n-1)!, Gamma(n+1/2) = sqrt(pi)*(2n)!/(4^n n!).
struct GammaHalf {
    Rat coeff;
    int sqrtpi = 0;  // 0 or 1
};

inline GammaHalf gamma_half(long twice) {
    if (twice <= 0) throw exactness_error("gamma_half: nonpositive argument");
    if (twice % 2 == 0) return {factorial(twice / 2 - 1), 0};
    long n = (twice - 1) / 2;  // argument n + 1/2
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    return {factorial(2 * n) / (Rat(four_n) * factorial(n)), 1};
}

/// Exact integral over [-1,1] of x^k (1-x)^{a2/2} (1+x)^{b2/2} dx, for
/// half-integer exponents given as twice-values a2, b2 >= -1. The value is
/// always rational or rational*pi; the sqrt(pi) bookkeeping must cancel.
inline PiRat half_exponent_moment(long k, long a2, long b2) {
    // substitute x = 1 - 2t is avoided; expand x^k in (1+x):
    //   x^k = sum_i binom(k,i) (1+x)^i (-1)^{k-i}
    //   int (1-x)^alpha (1+x)^{beta+i} = 2^{alpha+beta+i+1} B(alpha+1, beta+i+1)
    if (k < 0) throw exactness_error("half_exponent_moment: negative power");
    Rat total_no_pi(0), total_pi(0);
    for (long i = 0; i <= k; ++i) {
        long a2p = a2 + 2;             // twice(alpha+1)
        long b2p = b2 + 2 * i + 2;     // twice(beta+i+1)
        GammaHalf g1 = gamma_half(a2p);
        GammaHalf g2 = gamma_half(b2p);
        GammaHalf g3 = gamma_half(a2p + b2p);
        int e = g1.sqrtpi + g2.sqrtpi - g3.sqrtpi;
        // 2^{alpha+beta+i+1}: exponent twice-value a2+b2+2i+2 must be even.
        long twice_exp = a2 + b2 + 2 * i + 2;
        if (twice_exp % 2 != 0)
            throw exactness_error("half_exponent_moment: non-integer 2-power");
        long e2 = twice_exp / 2;
        Rat pw;
        if (e2 >= 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e2));
            pw = Rat(p);
        } else {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e2));
            pw = Rat(1) / Rat(p);
        }
        Rat term = binom(k, i) * ((k - i) % 2 ? Rat(-1) : Rat(1)) * pw *
                   g1.coeff * g2.coeff / g3.coeff;
        if (e == 0) total_no_pi += term;
        else if (e == 2) total_pi += term;
        else throw exactness_error("half_exponent_moment: stray sqrt(pi)");
    }
    if (!total_no_pi.is_zero() && !total_pi.is_zero())
        throw exactness_error("half_exponent_moment: mixed pi powers");
    if (!total_pi.is_zero()) return PiRat(total_pi, 1);
    return PiRat(total_no_pi, 0);
}

}  // namespace mvop
