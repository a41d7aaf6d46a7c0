#include "doctest.h"
#include "grascurve/field.hpp"
#include "grascurve/rng.hpp"

namespace gc = grascurve;

TEST_CASE("rational parse and print round-trip") {
    CHECK(gc::rat_to_string(gc::rat_from_string("3/4")) == "3/4");
    CHECK(gc::rat_to_string(gc::rat_from_string("-7")) == "-7");
    CHECK(gc::rat_to_string(gc::rat_from_string("6/4")) == "3/2");
    CHECK(gc::rat_to_string(gc::Rat(5)) == "5");
    CHECK_THROWS_AS(gc::rat_from_string("1/0"), gc::ParseError);
    CHECK_THROWS_AS(gc::rat_from_string("abc"), gc::ParseError);
}

TEST_CASE("rational inverses multiply to one, including large values") {
    gc::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        gc::Rat a = rng.rat(1000);
        if (sgn(a) == 0) continue;
        gc::Rat big = a;
        // push the numerator/denominator to several hundred bits
        for (int k = 0; k < 40; ++k) big *= a;
        if (sgn(big) == 0) continue;
        CHECK(big * (gc::Rat(1) / big) == gc::Rat(1));
    }
}

TEST_CASE("prime-field arithmetic and inverses") {
    gc::GFp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a / b).value() == (a * gc::GFp(3, 7)).value());  // 1/5 = 3 mod 7
    for (int v = 1; v < 11; ++v) {
        gc::GFp x(v, 11);
        CHECK((x * x.inverse()).value() == 1);
    }
    CHECK_THROWS_AS(gc::GFp(1, 7) + gc::GFp(1, 5), gc::FieldMismatch);
    CHECK_THROWS_AS(gc::GFp(1, 7) / gc::GFp(0, 7), gc::Error);
}

TEST_CASE("primality test") {
    CHECK(gc::is_prime(2));
    CHECK(gc::is_prime(3));
    CHECK(gc::is_prime(11));
    CHECK(gc::is_prime(97));
    CHECK_FALSE(gc::is_prime(1));
    CHECK_FALSE(gc::is_prime(91));
}

TEST_CASE("reduction of rationals modulo a prime") {
    CHECK(gc::reduce_mod_p(gc::Rat(1, 3), 5).value() == 2);  // 3*2 = 6 = 1 mod 5
    CHECK(gc::reduce_mod_p(gc::Rat(-1), 5).value() == 4);
    CHECK(gc::reduce_mod_p(gc::Rat(7, 2), 3).value() == 2);  // 7/2 = 1/2 = 2 mod 3
    CHECK_THROWS_AS(gc::reduce_mod_p(gc::Rat(1, 5), 5), gc::BadReduction);
}
