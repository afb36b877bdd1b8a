#pragma once

/**
 * @file spherical.hpp
 * @brief Restricted and full spherical functions as exact Laurent-matrix
 * objects, the pairing on the torus, and the polynomial matrices Q_d
 * obtained by exact adjugate inversion of Phi_0.
 *
 * Conventions: u = e^{it/2}; rows and columns of a (2l+1)x(2l+1) matrix are
 * indexed by p, q in {-l, ..., l} ascending, stored at position p + l.
 */

#include <string>
#include <vector>

#include "mvop/cg.hpp"
#include "mvop/cheb.hpp"
#include "mvop/matrix.hpp"

namespace mvop {

/// Antidiagonal flip J (ones on the antidiagonal).
template <class K>
Mat<K> flip_J(size_t n) {
    Mat<K> m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, n - 1 - i) = K(1);
    return m;
}

/// Alternating-sign diagonal F = diag((-1)^i).
template <class K>
Mat<K> sign_F(size_t n) {
    Mat<K> m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = (i % 2) ? K(-1) : K(1);
    return m;
}

/// Diagonal restricted spherical function for the pair (l1, l2) containing l:
/// (j, j) entry is sum over j1+j2=j of u^{2(j2-j1)} * (C^{l1,l2,l}_{j1,j2,j})^2.
inline MatLaurent restricted_sf(HalfInt l1, HalfInt l2, HalfInt l) {
    if (!pair_contains(l1, l2, l))
        throw exactness_error("restricted_sf: (l1,l2) does not contain l");
    size_t n = static_cast<size_t>(l.twice + 1);
    MatLaurent m(n, n);
    for (long tj = -l.twice; tj <= l.twice; tj += 2) {
        LaurentPoly entry;
        for (long tj1 = -l1.twice; tj1 <= l1.twice; tj1 += 2) {
            long tj2 = tj - tj1;
            if (std::abs(tj2) > l2.twice) continue;
            Rat c2 = cg(l1, HalfInt(tj1), l2, HalfInt(tj2), l, HalfInt(tj)).square();
            entry += LaurentPoly::term(tj2 - tj1, c2);
        }
        size_t i = static_cast<size_t>((tj + l.twice) / 2);
        m(i, i) = entry;
    }
    return m;
}

/// Full spherical function: (p, q) entry is the (q, q) entry of the
/// restricted function for zeta(d, p).
inline MatLaurent full_sf(HalfInt l, long d) {
    size_t n = static_cast<size_t>(l.twice + 1);
    MatLaurent m(n, n);
    for (long tp = -l.twice; tp <= l.twice; tp += 2) {
        auto [l1, l2] = zeta(d, HalfInt(tp), l);
        MatLaurent r = restricted_sf(l1, l2, l);
        size_t row = static_cast<size_t>((tp + l.twice) / 2);
        for (size_t q = 0; q < n; ++q) m(row, q) = r(q, q);
    }
    return m;
}

/// Pairing <F, G> = (1/(2pi)) int_0^{4pi} F G^* sin^2(t) dt, evaluated
/// exactly as 2 * [u^0 coefficient of F G^* (2 - u^4 - u^-4)/4].
inline Mat<Rat> sf_pairing(MatLaurent const& F, MatLaurent const& G) {
    if (F.rows() != G.rows() || F.cols() != G.cols())
        throw exactness_error("sf_pairing: size mismatch");
    MatLaurent prod = F * laurent_conj_transpose(G);
    LaurentPoly s2 = LaurentPoly::sin2_t();
    Mat<Rat> out(prod.rows(), prod.cols());
    for (size_t i = 0; i < prod.rows(); ++i)
        for (size_t j = 0; j < prod.cols(); ++j)
            out(i, j) = (prod(i, j) * s2).coeff(0) * Rat(2);
    return out;
}

/// The exact diagonal predicted for <Phi_d, Phi_d>:
/// (p, p) entry (2l+1)^2 / ((d+l+p+1)(d+l-p+1)).
inline Mat<Rat> sf_pairing_expected(HalfInt l, long d) {
    size_t n = static_cast<size_t>(l.twice + 1);
    Mat<Rat> out(n, n);
    for (long tp = -l.twice; tp <= l.twice; tp += 2) {
        size_t i = static_cast<size_t>((tp + l.twice) / 2);
        Rat den1 = Rat(d) + Rat(l.twice + tp, 2) + Rat(1);
        Rat den2 = Rat(d) + Rat(l.twice - tp, 2) + Rat(1);
        out(i, i) = Rat(l.twice + 1) * Rat(l.twice + 1) / (den1 * den2);
    }
    return out;
}

/// Q_d = Phi_d Phi_0^{-1}, computed via the adjugate in the Laurent ring
/// with exact division, then converted to a polynomial in x = cos t.
inline MatPoly<Rat> full_sf_Q(HalfInt l, long d) {
    MatLaurent phi0 = full_sf(l, 0);
    MatLaurent phid = full_sf(l, d);
    LaurentPoly detv = det_bareiss(
        phi0, [](LaurentPoly const& a, LaurentPoly const& b) { return a.exact_div(b); });
    if (detv.is_zero()) throw exactness_error("full_sf_Q: Phi_0 is singular");
    std::function<LaurentPoly(MatLaurent const&)> detf = [](MatLaurent const& m) {
        return det_bareiss(
            m, [](LaurentPoly const& a, LaurentPoly const& b) { return a.exact_div(b); });
    };
    MatLaurent adj = adjugate<LaurentPoly>(phi0, detf);
    MatLaurent num = phid * adj;
    MatPoly<Rat> out(num.rows(), num.cols());
    for (size_t i = 0; i < num.rows(); ++i)
        for (size_t j = 0; j < num.cols(); ++j) {
            LaurentPoly q = num(i, j).exact_div(detv);
            if (!q.cosine_representable())
                throw exactness_error("full_sf_Q: entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") not a polynomial in cos t");
            out(i, j) = laurent_to_poly_in_x(q);
        }
    return out;
}

struct JSymmetryReport {
    bool time_reversal_ok = false;  // Phi_d(a_{-t}) = J Phi_d(a_t)
    bool right_flip_ok = false;     // Phi_d(a_{-t}) = Phi_d(a_t) J
    bool commutes_ok = false;       // J Phi_d J = Phi_d
    bool all_ok() const { return time_reversal_ok && right_flip_ok && commutes_ok; }
};

inline JSymmetryReport check_J_symmetries(HalfInt l, long d) {
    MatLaurent phi = full_sf(l, d);
    MatLaurent flipped = phi.map([](LaurentPoly const& f) { return f.conj(); });
    Mat<LaurentPoly> J = flip_J<LaurentPoly>(phi.rows());
    JSymmetryReport rep;
    rep.time_reversal_ok = (flipped == J * phi);
    rep.right_flip_ok = (flipped == phi * J);
    rep.commutes_ok = (J * phi * J == phi);
    return rep;
}

/// Leading coefficient Upsilon_d of Q_d (invertible for every d).
inline Mat<Rat> leading_Upsilon(MatPoly<Rat> const& Q, long d) {
    if (degree(Q) != d) throw exactness_error("leading_Upsilon: unexpected degree");
    return coeff_matrix(Q, d);
}

}  // namespace mvop
