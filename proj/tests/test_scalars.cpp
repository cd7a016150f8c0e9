#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epkit/scalars.hpp"

using namespace epkit;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rat a = parse_rat("2/4");
    CHECK(a == Rat(1, 2));
    CHECK(scalar_to_string(a) == "1/2");
    CHECK(scalar_to_string(Rat(-3)) == "-3");
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(a + a == Rat(1));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("gaussian rationals multiply and conjugate correctly") {
    Gauss i(Rat(0), Rat(1));
    CHECK(i * i == Gauss(Rat(-1)));
    Gauss z(Rat(1, 2), Rat(-3));
    CHECK(conj_scalar(z) == Gauss(Rat(1, 2), Rat(3)));
    // |z|^2 = z * conj(z) must be real
    Gauss n = z * conj_scalar(z);
    CHECK(n.im == 0);
    CHECK(n.re == Rat(1, 4) + Rat(9));
    auto inv = invert(z);
    REQUIRE(inv.has_value());
    CHECK(z * *inv == Gauss(Rat(1)));
    CHECK(!invert(Gauss()).has_value());
}

TEST_CASE("gaussian parsing round-trips all forms") {
    CHECK(parse_gauss("i") == Gauss(Rat(0), Rat(1)));
    CHECK(parse_gauss("-i") == Gauss(Rat(0), Rat(-1)));
    CHECK(parse_gauss("3") == Gauss(Rat(3)));
    CHECK(parse_gauss("-1/2") == Gauss(Rat(-1, 2)));
    CHECK(parse_gauss("2*i") == Gauss(Rat(0), Rat(2)));
    CHECK(parse_gauss("-2/3*i") == Gauss(Rat(0), Rat(-2, 3)));
    CHECK(parse_gauss("1+2*i") == Gauss(Rat(1), Rat(2)));
    CHECK(parse_gauss("1/2-3/4*i") == Gauss(Rat(1, 2), Rat(-3, 4)));
    CHECK(parse_gauss("-1-1*i") == Gauss(Rat(-1), Rat(-1)));
    CHECK_THROWS_AS(parse_gauss(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gauss("1+i2"), std::invalid_argument);

    for (const char* s : {"0", "1", "-1", "i", "-i", "1/2", "1+2*i", "1/2-3/4*i", "-5*i"}) {
        Gauss g = parse_gauss(s);
        CHECK(parse_gauss(scalar_to_string(g)) == g);
    }
}

TEST_CASE("residues reduce, negate, and invert mod n") {
    Mod a = Mod::from_signed(-1, 6);
    CHECK(a.v == 5);
    CHECK((a * a).v == 1);
    CHECK((-Mod(0, 6)).v == 0);
    CHECK(parse_mod("-7", 6).v == 5);
    CHECK(parse_mod("11", 6).v == 5);
    CHECK_THROWS_AS(parse_mod("4x", 6), std::invalid_argument);

    auto i5 = invert(Mod(5, 6));
    REQUIRE(i5.has_value());
    CHECK(i5->v == 5);
    CHECK(!invert(Mod(2, 6)).has_value());
    CHECK(!invert(Mod(3, 6)).has_value());
    auto i2 = invert(Mod(2, 7));
    REQUIRE(i2.has_value());
    CHECK(i2->v == 4);
    CHECK_THROWS_AS((void)(Mod(1, 6) + Mod(1, 7)), std::logic_error);
}

TEST_CASE("primality by trial division") {
    CHECK(!is_prime_u64(0));
    CHECK(!is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(4));
    CHECK(is_prime_u64(5));
    CHECK(!is_prime_u64(6));
    CHECK(is_prime_u64(7));
    CHECK(!is_prime_u64(12));
    CHECK(is_prime_u64(97));
    CHECK(!is_prime_u64(10000));
}
