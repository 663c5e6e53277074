#include <random>

#include "doctest.h"
#include "evo/field.hpp"

using namespace evo;

TEST_CASE("GF basics") {
    GfField f5(5);
    CHECK((f5.from_int(3) + f5.from_int(4)).value() == 2);
    GfField f2(2);
    CHECK((f2.one() + f2.one()).is_zero());
    GfField f7(7);
    CHECK(f7.from_int(3).inv().value() == 5);
    CHECK(f2.one().inv().is_one());
    CHECK(f5.from_int(-1).value() == 4);
    CHECK_THROWS_AS(f5.zero().inv(), DivisionByZeroError);
    CHECK_THROWS_AS(GfField(6), Error);
    CHECK_THROWS_AS(f5.one() + GfField(7).one(), FieldMismatchError);
}

TEST_CASE("GF agrees with integer arithmetic mod p") {
    std::mt19937_64 rng(7);
    for (int64_t p : std::vector<int64_t>{2, 3, 5, 101, 2147483647LL}) {
        GfField f(p);
        for (int i = 0; i < 200; ++i) {
            int64_t a = int64_t(rng() % uint64_t(p));
            int64_t b = int64_t(rng() % uint64_t(p));
            CHECK((f.from_int(a) * f.from_int(b)).value() ==
                  int64_t((__int128(a) * b) % p));
            CHECK((f.from_int(a) + f.from_int(b)).value() == (a + b) % p);
        }
    }
}

TEST_CASE("rational canonical form") {
    RatField q;
    auto half = q.from_string("1/2");
    auto third = q.from_string("1/3");
    CHECK((half + third).str() == "5/6");
    CHECK(q.from_string("-2/3").inv().str() == "-3/2");
    CHECK(RatElem(BigInt(2), BigInt(4)) == half);
    CHECK(RatElem(BigInt(-1), BigInt(-2)) == half);
    CHECK(RatElem(BigInt(0), BigInt(9)).str() == "0");
    CHECK_THROWS_AS(q.zero().inv(), DivisionByZeroError);
    CHECK_THROWS_AS(RatElem(BigInt(1), BigInt(0)), DivisionByZeroError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    GfField f(101);
    RatField q;
    for (int i = 0; i < 300; ++i) {
        auto a = f.from_int(int64_t(rng() % 101));
        auto b = f.from_int(int64_t(rng() % 101));
        auto c = f.from_int(int64_t(rng() % 101));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());

        auto ra = RatElem(BigInt(int64_t(rng() % 41) - 20), BigInt(1 + rng() % 13));
        auto rb = RatElem(BigInt(int64_t(rng() % 41) - 20), BigInt(1 + rng() % 13));
        auto rc = RatElem(BigInt(int64_t(rng() % 41) - 20), BigInt(1 + rng() % 13));
        CHECK((ra + rb) + rc == ra + (rb + rc));
        CHECK(ra * (rb + rc) == ra * rb + ra * rc);
        if (!ra.is_zero()) CHECK((ra * ra.inv()).is_one());
    }
}
