#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvop/bigfloat.hpp"
#include "mvop/scalars.hpp"

using namespace mvop;

static std::mt19937_64 rng(20240817);

static Rat random_rat() {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return Rat(num(rng), den(rng));
}

TEST_CASE("HalfInt basics") {
    HalfInt l(3);  // 3/2
    CHECK(!l.is_integer());
    CHECK((l + l).is_integer());
    CHECK((l + l).as_int() == 3);
    CHECK(HalfInt::from_int(2) > l);
    CHECK((-l).twice == -3);
    CHECK(l.str() == "3/2");
    CHECK(HalfInt::from_int(2).str() == "2");
}

TEST_CASE("Rat canonical form and arithmetic") {
    Rat r(6, -4);
    CHECK(r == Rat(-3, 2));
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK((Rat(1) / Rat(7)).str() == "1/7");
    CHECK_THROWS_AS(Rat(1) / Rat(0), exactness_error);
    // idempotent normalization: building from an already reduced value
    Rat s(-3, 2);
    CHECK(Rat(s.num(), s.den()) == s);
}

TEST_CASE("PiRat guards pi powers") {
    PiRat a(Rat(1, 2), 1);
    PiRat b(Rat(3), 0);
    CHECK((a + a) == PiRat(Rat(1), 1));
    CHECK_THROWS_AS(a + b, exactness_error);
    CHECK((a * b) == PiRat(Rat(3, 2), 1));
    CHECK_THROWS_AS(a * a, exactness_error);  // pi^2 is out of scope
    CHECK((PiRat() + a) == a);
    CHECK(b.demand_rational() == Rat(3));
    CHECK_THROWS_AS(a.demand_rational(), exactness_error);
}

TEST_CASE("QuadRat field arithmetic") {
    QuadRat s2 = QuadRat::sqrt2();
    CHECK(s2 * s2 == QuadRat(Rat(2)));
    QuadRat z(Rat(1), Rat(-1));  // 1 - sqrt2
    CHECK(z * z.inverse() == QuadRat(Rat(1)));
    // commutative / associative on random triples
    for (int i = 0; i < 30; ++i) {
        QuadRat a(random_rat(), random_rat());
        QuadRat b(random_rat(), random_rat());
        QuadRat c(random_rat(), random_rat());
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("SqrtRat closed under product, refuses nothing else") {
    SqrtRat a(1, Rat(1, 2));
    SqrtRat b(-1, Rat(2));
    CHECK((a * b) == SqrtRat(-1, Rat(1)));
    CHECK(a.square() == Rat(1, 2));
    CHECK(SqrtRat::of_rat(Rat(-3, 4)).square() == Rat(9, 16));
    CHECK(SqrtRat(0, Rat(0)).is_zero());
    CHECK_THROWS_AS(SqrtRat(1, Rat(-1)), exactness_error);
    for (int i = 0; i < 20; ++i) {
        Rat r = random_rat().abs();
        SqrtRat s(1, r);
        CHECK(s.square() == r);
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rat(1, 2), 3) == Rat(15, 8));
    CHECK(pochhammer(Rat(7, 3), 0) == Rat(1));
    CHECK(pochhammer(Rat(-2), 3) == Rat(0));
    // (a)_{m+n} = (a)_m (a+m)_n
    for (int i = 0; i < 25; ++i) {
        Rat a = random_rat();
        std::uniform_int_distribution<long> d(0, 20);
        long m = d(rng), n = d(rng);
        CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rat(m), n));
    }
}

TEST_CASE("binom") {
    CHECK(binom(4, 2) == Rat(6));
    CHECK(binom(3, -1) == Rat(0));
    CHECK(binom(HalfInt::from_int(2), 1) == Rat(2));  // binom(2l, l-j), l=1, j=0
    CHECK_THROWS_AS(binom(HalfInt(3), 1), exactness_error);
    CHECK(binom(0, 0) == Rat(1));
}

TEST_CASE("half-exponent moments") {
    // int sqrt(1-x^2) = pi/2, int x^2 sqrt(1-x^2) = pi/8
    CHECK(half_exponent_moment(0, 1, 1) == PiRat(Rat(1, 2), 1));
    CHECK(half_exponent_moment(2, 1, 1) == PiRat(Rat(1, 8), 1));
    CHECK(half_exponent_moment(1, 1, 1) == PiRat());
    // int (1-x)^{1/2}(1+x)^{3/2} = pi/2; int (1-x^2)^{3/2} = 3pi/8
    CHECK(half_exponent_moment(0, 1, 3) == PiRat(Rat(1, 2), 1));
    CHECK(half_exponent_moment(0, 3, 3) == PiRat(Rat(3, 8), 1));
    // integer exponents stay rational: int (1-x^2) dx = 4/3
    CHECK(half_exponent_moment(0, 2, 2) == PiRat(Rat(4, 3), 0));
}

TEST_CASE("BigFloat basics") {
    BigFloat a(Rat(1, 3), 256);
    BigFloat b(Rat(2, 3), 256);
    CHECK((a + b - BigFloat(1, 256)).below_pow2(250));
    BigFloat s = BigFloat::sqrt_of(Rat(2), 256);
    CHECK((s * s - BigFloat(2, 256)).below_pow2(250));
    CHECK(BigFloat::of(SqrtRat(-1, Rat(9)), 128).to_double() == doctest::Approx(-3.0));
    CHECK(!(s - BigFloat(1, 256)).below_pow2(10));
}
