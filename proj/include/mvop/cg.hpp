#pragma once

/**
 * @file cg.hpp
 * @brief Clebsch-Gordan coefficients of SU(2) in the Condon-Shortley
 * convention, exact as signed square roots of rationals via the Racah
 * single-sum closed form; a ladder-operator cross-check oracle in high
 * precision; and the recurrence coefficients a built from five-fold CG
 * products (those sums leave the exact sqrt class, so they are carried in
 * BigFloat with explicit precision).
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mvop/bigfloat.hpp"
#include "mvop/matrix.hpp"
#include "mvop/scalars.hpp"

namespace mvop {

struct CGLabel {
    HalfInt l1, l2, l, j1, j2, j;

    bool projections_in_range() const {
        return j1.twice >= -l1.twice && j1.twice <= l1.twice &&
               j2.twice >= -l2.twice && j2.twice <= l2.twice &&
               j.twice >= -l.twice && j.twice <= l.twice &&
               (l1 + j1).is_integer() && (l2 + j2).is_integer() &&
               (l + j).is_integer();
    }
    bool triangle() const {
        return l.twice >= std::abs(l1.twice - l2.twice) &&
               l.twice <= l1.twice + l2.twice && (l1 + l2 - l).is_integer();
    }
    bool valid() const { return projections_in_range() && triangle(); }
};

/// True when the pair (a, b) "contains" l: |a-b| <= l <= a+b with a+b-l
/// integral. These are exactly the pairs whose tensor product has an
/// l-isotypic component.
inline bool pair_contains(HalfInt a, HalfInt b, HalfInt l) {
    if (a.twice < 0 || b.twice < 0) return false;
    return l.twice >= std::abs(a.twice - b.twice) && l.twice <= a.twice + b.twice &&
           (a + b - l).is_integer();
}

/// The degree-d, k-th pair: zeta(d, k) = ((d+l+k)/2, (d+l-k)/2).
inline std::pair<HalfInt, HalfInt> zeta(long d, HalfInt k, HalfInt l) {
    if (k.twice < -l.twice || k.twice > l.twice || !(l - k).is_integer())
        throw exactness_error("zeta: k out of range");
    long a2 = 2 * d + l.twice + k.twice;  // 4*l1
    long b2 = 2 * d + l.twice - k.twice;
    if (a2 % 2 != 0 || b2 % 2 != 0) throw exactness_error("zeta: non half-integral");
    return {HalfInt(a2 / 2), HalfInt(b2 / 2)};
}

namespace detail {
/// factorial of a HalfInt that must be a nonnegative integer.
inline Rat hfact(HalfInt h, char const* ctx) {
    if (!h.is_integer()) throw exactness_error(std::string(ctx) + ": half factorial");
    long n = h.as_int();
    if (n < 0) throw exactness_error(std::string(ctx) + ": negative factorial");
    return factorial(n);
}
}  // namespace detail

/// Racah closed form; returns the coefficient exactly as sign * sqrt(rat).
/// Out-of-triangle or j != j1+j2 labels give zero rather than an error.
inline SqrtRat cg(CGLabel const& lb) {
    using detail::hfact;
    if (!lb.projections_in_range())
        throw exactness_error("cg: projection out of range");
    if (!lb.triangle()) return {};
    if (lb.j.twice != lb.j1.twice + lb.j2.twice) return {};

    HalfInt const l1 = lb.l1, l2 = lb.l2, l = lb.l, m1 = lb.j1, m2 = lb.j2, m = lb.j;

    Rat pre = Rat(l.twice + 1) * hfact(l1 + l2 - l, "cg") * hfact(l1 - l2 + l, "cg") *
              hfact(l2 - l1 + l, "cg") / hfact(l1 + l2 + l + HalfInt::from_int(1), "cg");
    pre = pre * hfact(l + m, "cg") * hfact(l - m, "cg") * hfact(l1 - m1, "cg") *
          hfact(l1 + m1, "cg") * hfact(l2 - m2, "cg") * hfact(l2 + m2, "cg");

    long k_lo = 0;
    k_lo = std::max(k_lo, -(l - l2 + m1).as_int());
    k_lo = std::max(k_lo, -(l - l1 - m2).as_int());
    long k_hi = (l1 + l2 - l).as_int();
    k_hi = std::min(k_hi, (l1 - m1).as_int());
    k_hi = std::min(k_hi, (l2 + m2).as_int());

    Rat sum(0);
    for (long k = k_lo; k <= k_hi; ++k) {
        Rat denom = factorial(k) * hfact(l1 + l2 - l - HalfInt::from_int(k), "cg") *
                    hfact(l1 - m1 - HalfInt::from_int(k), "cg") *
                    hfact(l2 + m2 - HalfInt::from_int(k), "cg") *
                    hfact(l - l2 + m1 + HalfInt::from_int(k), "cg") *
                    hfact(l - l1 - m2 + HalfInt::from_int(k), "cg");
        Rat term = Rat(1) / denom;
        if (k % 2) term = -term;
        sum += term;
    }
    if (sum.is_zero()) return {};
    return SqrtRat(sum.sign(), pre * sum * sum);
}

inline SqrtRat cg(HalfInt l1, HalfInt j1, HalfInt l2, HalfInt j2, HalfInt l, HalfInt j) {
    return cg(CGLabel{l1, l2, l, j1, j2, j});
}

/// Exact square of a CG coefficient.
inline Rat cg_squared(CGLabel const& lb) { return cg(lb).square(); }

/// Stretched-case closed form: l1 = (l+m)/2, l2 = (l-m)/2 coupling to l.
/// Returns delta_{j,j1+j2} binom(l+m, j1+(l+m)/2) binom(l-m, j2+(l-m)/2)
///         / binom(2l, l-j).
inline Rat cg_squared_stretched(HalfInt l, HalfInt m, HalfInt j1, HalfInt j2,
                                HalfInt j) {
    HalfInt l1((l + m).twice / 2), l2((l - m).twice / 2);
    if ((l + m).twice % 2 != 0 || (l - m).twice % 2 != 0)
        throw exactness_error("cg_squared_stretched: (l+-m)/2 not half-integral");
    CGLabel lb{l1, l2, l, j1, j2, j};
    if (!lb.valid()) throw exactness_error("cg_squared_stretched: invalid labels");
    if (j.twice != j1.twice + j2.twice) return Rat(0);
    HalfInt top1 = j1 + l1, top2 = j2 + l2, lo = l - j;
    if (!top1.is_integer() || !top2.is_integer() || !lo.is_integer())
        throw exactness_error("cg_squared_stretched: non-integral binomial index");
    return binom(l1 + l1, top1.as_int()) * binom(l2 + l2, top2.as_int()) /
           binom(l + l, lo.as_int());
}

// ---------------------------------------------------------------------------
// Ladder-operator oracle: builds the coupled basis numerically at the
// requested precision and reads coefficients off as vector components.
// Independent of the Racah form; used for cross-checks only.
// ---------------------------------------------------------------------------
class LadderOracle {
    HalfInt l1_, l2_;
    long d1_, d2_;
    mpfr_prec_t prec_;
    // coupled[l2x2 index][m index] = vector in tensor basis
    // stored flat: vec_[(l, m)] with l from l1+l2 down.
    std::map<std::pair<long, long>, std::vector<BigFloat>> vec_;  // key (2l, 2m)

    long idx(long tm1, long tm2) const {  // twice-values of m1, m2
        long i1 = (l1_.twice - tm1) / 2, i2 = (l2_.twice - tm2) / 2;
        return i1 * d2_ + i2;
    }

public:
    LadderOracle(HalfInt l1, HalfInt l2, mpfr_prec_t prec = BigFloat::default_precision)
        : l1_(l1), l2_(l2), d1_(l1.twice + 1), d2_(l2.twice + 1), prec_(prec) {
        long N = d1_ * d2_;
        auto zero_vec = [&] { return std::vector<BigFloat>(N, BigFloat(prec_)); };
        auto dot = [&](std::vector<BigFloat> const& a, std::vector<BigFloat> const& b) {
            BigFloat s(prec_);
            for (long i = 0; i < N; ++i) s += a[i] * b[i];
            return s;
        };
        // J- in the tensor basis acting on a vector expressed over (m1, m2)
        auto lower = [&](std::vector<BigFloat> const& v) {
            std::vector<BigFloat> out = zero_vec();
            for (long tm1 = -l1_.twice; tm1 <= l1_.twice; tm1 += 2)
                for (long tm2 = -l2_.twice; tm2 <= l2_.twice; tm2 += 2) {
                    BigFloat const& c = v[idx(tm1, tm2)];
                    if (c.is_zero()) continue;
                    if (tm1 > -l1_.twice) {
                        Rat f = Rat(l1_.twice + tm1) * Rat(l1_.twice - tm1 + 2) / Rat(4);
                        out[idx(tm1 - 2, tm2)] += c * BigFloat::sqrt_of(f, prec_);
                    }
                    if (tm2 > -l2_.twice) {
                        Rat f = Rat(l2_.twice + tm2) * Rat(l2_.twice - tm2 + 2) / Rat(4);
                        out[idx(tm1, tm2 - 2)] += c * BigFloat::sqrt_of(f, prec_);
                    }
                }
            return out;
        };
        for (long tl = l1_.twice + l2_.twice; tl >= std::abs(l1_.twice - l2_.twice);
             tl -= 2) {
            // top vector of the spin-tl ladder, in the 2Jz = tl eigenspace
            std::vector<BigFloat> v = zero_vec();
            if (tl == l1_.twice + l2_.twice) {
                v[idx(l1_.twice, l2_.twice)] = BigFloat(1, prec_);
            } else {
                // start from a generic vector in the m = tl/2 weight space and
                // project out every higher-l component
                long seed = 1;
                for (long tm1 = -l1_.twice; tm1 <= l1_.twice; tm1 += 2) {
                    long tm2 = tl - tm1;
                    if (tm2 < -l2_.twice || tm2 > l2_.twice) continue;
                    v[idx(tm1, tm2)] = BigFloat(Rat(seed++), prec_);
                }
                for (long tlp = tl + 2; tlp <= l1_.twice + l2_.twice; tlp += 2) {
                    auto const& w = vec_.at({tlp, tl});
                    BigFloat c = dot(v, w);
                    for (long i = 0; i < N; ++i) v[i] -= c * w[i];
                }
                BigFloat n2 = dot(v, v);
                BigFloat inv = BigFloat(1, prec_) / n2.sqrt();
                for (auto& x : v) x *= inv;
                // Condon-Shortley sign: component at maximal m1 is positive
                for (long tm1 = l1_.twice; tm1 >= -l1_.twice; tm1 -= 2) {
                    long tm2 = tl - tm1;
                    if (tm2 < -l2_.twice || tm2 > l2_.twice) continue;
                    if (v[idx(tm1, tm2)].sign() < 0)
                        for (auto& x : v) x = -x;
                    break;
                }
            }
            vec_[{tl, tl}] = v;
            for (long tm = tl; tm > -tl; tm -= 2) {
                auto w = lower(vec_.at({tl, tm}));
                // (l+m)(l-m+1) with twice-values: (tl+tm)/2 * (tl-tm+2)/2
                Rat f = Rat(tl + tm) * Rat(tl - tm + 2) / Rat(4);
                BigFloat inv = BigFloat(1, prec_) / BigFloat::sqrt_of(f, prec_);
                for (auto& x : w) x *= inv;
                vec_[{tl, tm - 2}] = std::move(w);
            }
        }
    }

    BigFloat coefficient(HalfInt j1, HalfInt j2, HalfInt l, HalfInt j) const {
        auto it = vec_.find({l.twice, j.twice});
        if (it == vec_.end()) return BigFloat(prec_);
        if (j1.twice + j2.twice != j.twice) return BigFloat(prec_);
        if (std::abs(j1.twice) > l1_.twice || std::abs(j2.twice) > l2_.twice)
            return BigFloat(prec_);
        return it->second[idx(j1.twice, j2.twice)];
    }
};

// ---------------------------------------------------------------------------
// Recurrence coefficients a: the five-CG double sum. With the total
// projection pinned at the top weight j = l, the inner indices collapse to
// j2 = l - j1, i2 = -i1, n1 = j1 + i1, n2 = l - n1.
// ---------------------------------------------------------------------------
inline BigFloat recurrence_coeff_a(HalfInt l1, HalfInt l2, HalfInt m1, HalfInt m2,
                                   HalfInt l,
                                   mpfr_prec_t precision_bits = BigFloat::default_precision) {
    if (std::abs(m1.twice - l1.twice) != 1 || std::abs(m2.twice - l2.twice) != 1)
        throw exactness_error("recurrence_coeff_a: (m1,m2) must be (l1,l2) +- 1/2");
    if (!pair_contains(l1, l2, l) || !pair_contains(m1, m2, l))
        throw exactness_error("recurrence_coeff_a: pair does not contain l");
    HalfInt const half = HalfInt::half();
    BigFloat total(precision_bits);
    for (long tj1 = -l1.twice; tj1 <= l1.twice; tj1 += 2) {
        HalfInt j1(tj1), j2 = l - j1;
        if (std::abs(j2.twice) > l2.twice) continue;
        for (int s = -1; s <= 1; s += 2) {
            HalfInt i1(s), i2(-s);
            HalfInt n1 = j1 + i1, n2 = j2 + i2;
            if (std::abs(n1.twice) > m1.twice || std::abs(n2.twice) > m2.twice) continue;
            SqrtRat t = cg(l1, j1, l2, j2, l, l);
            t = t * cg(half, i1, half, i2, HalfInt(0), HalfInt(0));
            t = t * cg(l1, j1, half, i1, m1, n1);
            t = t * cg(l2, j2, half, i2, m2, n2);
            t = t * cg(m1, n1, m2, n2, l, l);
            if (!t.is_zero()) total += BigFloat::of(t, precision_bits);
        }
    }
    return total;
}

/// |a|^2-assembled three-term matrices: x Phi_d = A_d Phi_{d+1} + B_d Phi_d
/// + C_d Phi_{d-1}, rows/cols indexed by k = -l..l in ascending order.
struct RecurrenceMatrices {
    Mat<BigFloat> A, B, C;
};

inline RecurrenceMatrices recurrence_matrices(HalfInt l, long d,
                                              mpfr_prec_t prec = BigFloat::default_precision) {
    size_t n = static_cast<size_t>(l.twice + 1);
    RecurrenceMatrices out{Mat<BigFloat>(n, n), Mat<BigFloat>(n, n), Mat<BigFloat>(n, n)};
    auto sq = [&](HalfInt k_from, long d_to, HalfInt k_to) -> std::optional<BigFloat> {
        if (d_to < 0) return std::nullopt;
        if (std::abs(k_to.twice) > l.twice) return std::nullopt;
        auto [a1, b1] = zeta(d, k_from, l);
        auto [a2, b2] = zeta(d_to, k_to, l);
        if (!pair_contains(a2, b2, l)) return std::nullopt;
        if (a2.twice < 0 || b2.twice < 0) return std::nullopt;
        BigFloat a = recurrence_coeff_a(a1, b1, a2, b2, l, prec);
        return a * a;
    };
    for (long tk = -l.twice; tk <= l.twice; tk += 2) {
        HalfInt k(tk);
        size_t row = static_cast<size_t>((tk + l.twice) / 2);
        if (auto v = sq(k, d + 1, k)) out.A(row, row) = *v;
        if (auto v = sq(k, d, HalfInt(tk + 2))) out.B(row, row + 1) = *v;
        if (auto v = sq(k, d, HalfInt(tk - 2))) out.B(row, row - 1) = *v;
        if (auto v = sq(k, d - 1, k)) out.C(row, row) = *v;
    }
    return out;
}

}  // namespace mvop
