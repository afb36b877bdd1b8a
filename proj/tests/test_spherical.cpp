#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvop/spherical.hpp"

using namespace mvop;

static HalfInt H(long tw) { return HalfInt(tw); }

TEST_CASE("restricted_sf basic shapes and values") {
    // l = 1/2, (l1,l2) = (1/2, 0) -> diag(u, u^-1)
    MatLaurent m = restricted_sf(H(1), H(0), H(1));
    CHECK(m(0, 0) == LaurentPoly::term(1, Rat(1)));   // row index 0 is j = -1/2
    CHECK(m(1, 1) == LaurentPoly::term(-1, Rat(1)));
    CHECK(m(0, 1).is_zero());

    // zonal: (l',l') containing 0 -> U_{2l'}(cos t)/(2l'+1) as 1x1
    for (long tlp = 0; tlp <= 4; ++tlp) {
        MatLaurent z = restricted_sf(H(tlp), H(tlp), H(0));
        LaurentPoly expect;
        // U_n(cos t) = sum_{k=0..n} u^{2(n-2k)} (geometric character sum)
        for (long k = 0; k <= 2 * tlp; ++k)
            expect += LaurentPoly::term(2 * (2 * tlp - 2 * k), Rat(1, 2 * tlp + 1));
        CHECK(z(0, 0) == expect);
    }

    // value at t = 0 is the identity
    for (long tl = 0; tl <= 3; ++tl)
        for (long d = 0; d <= 2; ++d)
            for (long tk = -tl; tk <= tl; tk += 2) {
                auto [l1, l2] = zeta(d, H(tk), H(tl));
                MatLaurent r = restricted_sf(l1, l2, H(tl));
                for (size_t i = 0; i < r.rows(); ++i)
                    for (size_t j = 0; j < r.cols(); ++j)
                        CHECK(r(i, j).at_one() == (i == j ? Rat(1) : Rat(0)));
            }

    CHECK_THROWS_AS(restricted_sf(H(0), H(0), H(2)), exactness_error);
}

TEST_CASE("full_sf") {
    // l = 1/2, d = 0 -> [[u^-1, u],[u, u^-1]]
    MatLaurent m = full_sf(H(1), 0);
    CHECK(m(0, 0) == LaurentPoly::term(-1, Rat(1)));
    CHECK(m(0, 1) == LaurentPoly::term(1, Rat(1)));
    CHECK(m(1, 0) == LaurentPoly::term(1, Rat(1)));
    CHECK(m(1, 1) == LaurentPoly::term(-1, Rat(1)));

    // l = 0: 1x1 equal to U_d(cos t)/(d+1)
    for (long d = 0; d <= 5; ++d) {
        MatLaurent z = full_sf(H(0), d);
        LaurentPoly expect;
        for (long k = 0; k <= d; ++k)
            expect += LaurentPoly::term(2 * (d - 2 * k), Rat(1, d + 1));
        CHECK(z(0, 0) == expect);
    }

    // every entry is 1 at t = 0
    for (long tl = 0; tl <= 4; ++tl)
        for (long d = 0; d <= 3; ++d) {
            MatLaurent m2 = full_sf(H(tl), d);
            for (size_t i = 0; i < m2.rows(); ++i)
                for (size_t j = 0; j < m2.cols(); ++j)
                    CHECK(m2(i, j).at_one() == Rat(1));
        }
}

TEST_CASE("pairing and orthogonality") {
    // scalar cases of the norm formula
    CHECK(sf_pairing(full_sf(H(0), 0), full_sf(H(0), 0))(0, 0) == Rat(1));
    CHECK(sf_pairing(full_sf(H(0), 1), full_sf(H(0), 1))(0, 0) == Rat(1, 4));
    CHECK(sf_pairing(full_sf(H(1), 0), full_sf(H(1), 2)).is_zero());

    // full orthogonality sweep: l in {0, 1/2, 1, 3/2, 2}, d, e <= 6
    for (long tl = 0; tl <= 4; ++tl)
        for (long d = 0; d <= 6; ++d) {
            MatLaurent phid = full_sf(H(tl), d);
            for (long e = d; e <= 6; ++e) {
                Mat<Rat> got = sf_pairing(phid, full_sf(H(tl), e));
                if (d == e)
                    CHECK(got == sf_pairing_expected(H(tl), d));
                else
                    CHECK(got.is_zero());
            }
        }
}

TEST_CASE("Q_d polynomials") {
    // Q_0 = identity for every l <= 2
    for (long tl = 0; tl <= 4; ++tl) {
        MatPoly<Rat> q = full_sf_Q(H(tl), 0);
        CHECK(q == from_const(Mat<Rat>::identity(q.rows())));
    }
    // zonal: Q_d = U_d / (d+1)
    for (long d = 0; d <= 8; ++d) {
        MatPoly<Rat> q = full_sf_Q(H(0), d);
        CHECK(q(0, 0) == cheb_U(d) * Rat(1, d + 1));
    }
    // row degree is exactly d with invertible leading coefficient
    for (long tl = 1; tl <= 3; ++tl)
        for (long d = 1; d <= 4; ++d) {
            MatPoly<Rat> q = full_sf_Q(H(tl), d);
            CHECK(degree(q) == d);
            Mat<Rat> lead = coeff_matrix(q, d);
            CHECK(!det_field(lead).is_zero());
        }
    // l = 1/2, d = 1: monic normalization gives [[x, -1/4], [-1/4, x]]
    MatPoly<Rat> q1 = full_sf_Q(H(1), 1);
    Mat<Rat> ups = leading_Upsilon(q1, 1);
    MatPoly<Rat> monic = from_const(inverse(ups)) * q1;
    MatPoly<Rat> expect(2, 2);
    expect(0, 0) = Poly<Rat>::x();
    expect(1, 1) = Poly<Rat>::x();
    expect(0, 1) = Poly<Rat>(Rat(-1, 4));
    expect(1, 0) = Poly<Rat>(Rat(-1, 4));
    CHECK(monic == expect);
}

TEST_CASE("J symmetries") {
    CHECK(check_J_symmetries(H(1), 0).all_ok());
    for (long d = 0; d <= 3; ++d) CHECK(check_J_symmetries(H(2), d).all_ok());
    CHECK(check_J_symmetries(H(0), 5).all_ok());
    for (long tl = 0; tl <= 4; ++tl)
        for (long d = 0; d <= 3; ++d) CHECK(check_J_symmetries(H(tl), d).all_ok());
}

TEST_CASE("det Phi_0 nonzero for l <= 3") {
    for (long tl = 0; tl <= 6; ++tl) {
        MatLaurent phi0 = full_sf(H(tl), 0);
        LaurentPoly d = det_bareiss(phi0, [](LaurentPoly const& a, LaurentPoly const& b) {
            return a.exact_div(b);
        });
        CHECK(!d.is_zero());
    }
}
