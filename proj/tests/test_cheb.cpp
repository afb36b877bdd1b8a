#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvop/cheb.hpp"

using namespace mvop;

static std::mt19937_64 rng(7321);

static ChebExpansion random_cheb(long maxdeg) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::vector<Rat> c;
    for (long i = 0; i <= maxdeg; ++i) c.emplace_back(num(rng), den(rng));
    return ChebExpansion(std::move(c));
}

TEST_CASE("cheb_mul_x") {
    CHECK(cheb_mul_x(ChebExpansion::basis(0)) == ChebExpansion::basis(1, Rat(1, 2)));
    CHECK(cheb_mul_x(ChebExpansion::basis(1)) ==
          ChebExpansion::basis(0, Rat(1, 2)) + ChebExpansion::basis(2, Rat(1, 2)));
    CHECK(cheb_mul_x(ChebExpansion()) == ChebExpansion());
}

TEST_CASE("cheb_derivative returns 2(1-x^2) e'") {
    CHECK(cheb_derivative(ChebExpansion::basis(1)) ==
          ChebExpansion::basis(0, Rat(3)) - ChebExpansion::basis(2, Rat(1)));
    CHECK(cheb_derivative(ChebExpansion::basis(0)).is_zero());
    // U_2 = 4x^2-1: monomial-basis oracle gives 2(1-x^2)*8x = 4U_1 - 2U_3
    CHECK(cheb_derivative(ChebExpansion::basis(2)) ==
          ChebExpansion::basis(1, Rat(4)) - ChebExpansion::basis(3, Rat(2)));
    // cross-check against monomial differentiation for random input
    Poly<Rat> two(std::vector<Rat>{Rat(2)});
    Poly<Rat> one_minus_x2(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
    for (int i = 0; i < 10; ++i) {
        ChebExpansion e = random_cheb(9);
        Poly<Rat> lhs = cheb_to_poly(cheb_derivative(e));
        Poly<Rat> rhs = two * one_minus_x2 * cheb_to_poly(e).derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cheb_weighted_antiderivative") {
    CHECK(cheb_weighted_antiderivative(ChebExpansion::basis(0)) ==
          ChebExpansion::basis(1, Rat(1, 4)));
    CHECK(cheb_weighted_antiderivative(ChebExpansion::basis(1)) ==
          ChebExpansion::basis(2, Rat(1, 6)) - ChebExpansion::basis(0, Rat(1, 2)));
    CHECK(cheb_weighted_antiderivative(ChebExpansion()).is_zero());
    // product rule check: (rho g)' = rho e  <=>  -x g + (1-x^2) g' = (1-x^2) e.
    // The primitive formula is exact for i >= 1 only: the true primitive of
    // rho*U_0 carries an arccos term that the U_{-1} == 0 convention drops,
    // so the property is tested on expansions with zero U_0 coefficient.
    Poly<Rat> x = Poly<Rat>::x();
    Poly<Rat> one_minus_x2(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
    for (int i = 0; i < 10; ++i) {
        ChebExpansion e = random_cheb(10);
        e -= ChebExpansion::basis(0, e.coeff(0));
        Poly<Rat> g = cheb_to_poly(cheb_weighted_antiderivative(e));
        CHECK(one_minus_x2 * g.derivative() - x * g == one_minus_x2 * cheb_to_poly(e));
    }
}

TEST_CASE("cheb_inner") {
    CHECK(cheb_inner(ChebExpansion::basis(2), ChebExpansion::basis(2)) ==
          PiRat(Rat(1, 2), 1));
    CHECK(cheb_inner(ChebExpansion::basis(1), ChebExpansion::basis(3)).is_zero());
    CHECK(cheb_inner(ChebExpansion::basis(0) + ChebExpansion::basis(2),
                     ChebExpansion::basis(2)) == PiRat(Rat(1, 2), 1));
    // self-adjointness of multiplication by x
    for (int i = 0; i < 10; ++i) {
        ChebExpansion e1 = random_cheb(8), e2 = random_cheb(8);
        CHECK(cheb_inner(cheb_mul_x(e1), e2) == cheb_inner(e1, cheb_mul_x(e2)));
    }
}

TEST_CASE("basis conversions") {
    CHECK(cheb_to_poly(ChebExpansion::basis(2)) ==
          Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(0), Rat(4)}));
    CHECK(poly_to_cheb(Poly<Rat>(std::vector<Rat>{Rat(0), Rat(0), Rat(1)})) ==
          ChebExpansion::basis(0, Rat(1, 4)) + ChebExpansion::basis(2, Rat(1, 4)));
    CHECK(cheb_to_poly(ChebExpansion::basis(0)) == Poly<Rat>(Rat(1)));
    for (int i = 0; i < 10; ++i) {
        ChebExpansion e = random_cheb(12);
        CHECK(poly_to_cheb(cheb_to_poly(e)) == e);
    }
}

TEST_CASE("Laurent ring and conversions") {
    LaurentPoly f = LaurentPoly::term(2, Rat(1)) + LaurentPoly::term(-2, Rat(1));
    CHECK(laurent_to_poly_in_x(f) == Poly<Rat>(std::vector<Rat>{Rat(0), Rat(2)}));
    LaurentPoly g = LaurentPoly::term(4, Rat(1)) + LaurentPoly::term(-4, Rat(1));
    CHECK(laurent_to_poly_in_x(g) ==
          Poly<Rat>(std::vector<Rat>{Rat(-2), Rat(0), Rat(4)}));
    CHECK(laurent_to_poly_in_x(LaurentPoly(5)) == Poly<Rat>(Rat(5)));
    CHECK_THROWS_AS(laurent_to_poly_in_x(LaurentPoly::term(1, Rat(1))),
                    exactness_error);
    CHECK_THROWS_AS(laurent_to_poly_in_x(LaurentPoly::term(2, Rat(1))),
                    exactness_error);

    // multiplicativity of the conversion
    std::uniform_int_distribution<long> num(-5, 5);
    for (int rep = 0; rep < 10; ++rep) {
        Poly<Rat> p1(std::vector<Rat>{Rat(num(rng)), Rat(num(rng)), Rat(num(rng))});
        Poly<Rat> p2(std::vector<Rat>{Rat(num(rng)), Rat(num(rng))});
        LaurentPoly f1 = poly_in_x_to_laurent(p1), f2 = poly_in_x_to_laurent(p2);
        CHECK(laurent_to_poly_in_x(f1 * f2) == p1 * p2);
    }

    // exact division round trip + failure mode
    LaurentPoly a = LaurentPoly::term(3, Rat(2)) + LaurentPoly::term(-1, Rat(5));
    LaurentPoly b = LaurentPoly::term(-2, Rat(3)) + LaurentPoly::term(0, Rat(1));
    CHECK((a * b).exact_div(b) == a);
    CHECK_THROWS_AS((a * b + LaurentPoly(1)).exact_div(b), exactness_error);

    CHECK(LaurentPoly::sin2_t().conj() == LaurentPoly::sin2_t());
    CHECK(LaurentPoly::cos_t().at_one() == Rat(1));
}
