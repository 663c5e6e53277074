#include <random>

#include "doctest.h"
#include "evo/format.hpp"
#include "evo/poly.hpp"
#include "helpers.hpp"

using namespace evo;
using namespace evotest;

namespace {

Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }

Monomial random_mono(std::mt19937_64& rng, size_t arity, int32_t maxexp) {
    Monomial m(arity);
    for (size_t i = 0; i < arity; ++i) m.set(i, int32_t(rng() % uint64_t(maxexp + 1)));
    return m;
}

template <class F>
Poly<F> random_poly(std::mt19937_64& rng, const RingPtr<F>& r, int terms, int32_t maxexp) {
    std::vector<typename Poly<F>::Term> acc;
    for (int t = 0; t < terms; ++t)
        acc.push_back({r->field.from_int(int64_t(rng() % 19) - 9),
                       random_mono(rng, r->arity(), maxexp)});
    return Poly<F>::make(r, std::move(acc));
}

}  // namespace

TEST_CASE("monomial order axioms on random monomials") {
    std::mt19937_64 rng(3);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(), MonomialOrder::grevlex(),
        MonomialOrder::weighted({2, 3, 5}),
        MonomialOrder::elimination({0}, 3)};
    for (const auto& ord : orders) {
        Monomial one(3);
        for (int i = 0; i < 400; ++i) {
            Monomial a = random_mono(rng, 3, 5), b = random_mono(rng, 3, 5),
                     c = random_mono(rng, 3, 5);
            // trichotomy against equality
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (a == b) CHECK(ab == 0);
            if (ab == 0) CHECK(a == b);  // orders used here are total
            // multiplicative
            CHECK(ord.compare(a * c, b * c) == ab);
            // 1 is minimal
            CHECK(ord.compare(a, one) >= 0);
            // transitivity spot check
            if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
        }
    }
}

TEST_CASE("named order conventions") {
    // grevlex in 3 variables: x*z > y^2 is false, y^2 > x*z (classic example x^2 vs ...)
    auto ord = MonomialOrder::grevlex();
    // deg ties: x1*x3 vs x2^2 -> revlex compares last exponent: x1*x3 has e3=1, x2^2 has e3=0
    CHECK(ord.compare(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
    CHECK(ord.compare(mono({2, 0, 0}), mono({1, 1, 0})) > 0);
    auto lex = MonomialOrder::lex();
    CHECK(lex.compare(mono({1, 0, 0}), mono({0, 9, 9})) > 0);
    // elimination: anything with the front variable beats anything without
    auto elim = MonomialOrder::elimination({0}, 3);
    CHECK(elim.compare(mono({1, 0, 0}), mono({0, 7, 7})) > 0);
}

TEST_CASE("poly arithmetic basics") {
    auto r2 = gf_ring(2, {"x", "y"});
    auto f = P(r2, "x + y");
    CHECK(to_string(f * f) == "x^2 + y^2");  // Frobenius in char 2
    CHECK((f * Poly<GfField>::zero(r2)).is_zero());

    auto r4 = gf_ring(2, {"x1", "x2", "x3", "x4"});
    auto g2 = P(r4, "x1*x4 + x2*x3");  // x1*x4 - x2*x3 over GF(2)
    CHECK(g2 * g2 == P(r4, "x1^2*x4^2 + x2^2*x3^2"));

    auto rq = qq_ring({"x", "y"});
    auto h = P(rq, "1/2*x - y");
    CHECK(to_string(h + h) == "x - 2*y");
    CHECK(to_string(h.pow(2)) == "1/4*x^2 - x*y + y^2");
    CHECK_THROWS_AS(P(rq, "x") + P(qq_ring({"z"}), "z"), RingMismatchError);
}

TEST_CASE("poly ring properties on random triples") {
    std::mt19937_64 rng(17);
    auto rq = qq_ring({"x", "y", "z"});
    auto r5 = gf_ring(5, {"x", "y", "z"});
    for (int i = 0; i < 40; ++i) {
        auto a = random_poly(rng, rq, 4, 3), b = random_poly(rng, rq, 4, 3),
             c = random_poly(rng, rq, 4, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        auto fa = random_poly(rng, r5, 4, 3), fb = random_poly(rng, r5, 4, 3);
        // Leibniz rule
        for (size_t v = 0; v < 3; ++v)
            CHECK(partial_derivative(fa * fb, v) ==
                  partial_derivative(fa, v) * fb + fa * partial_derivative(fb, v));
    }
}

TEST_CASE("partial derivatives") {
    auto rq = qq_ring({"x1", "x2"});
    CHECK(to_string(partial_derivative(P(rq, "x1^3*x2"), 0)) == "3*x1^2*x2");
    auto r3 = gf_ring(3, {"x4"});
    CHECK(partial_derivative(P(r3, "x4^3"), 0).is_zero());
    // char-2 family member: f = x1^3*x2 + x2^3 + x1*x3^2 + x4^2
    auto r4 = gf_ring(2, {"x1", "x2", "x3", "x4"});
    auto f = P(r4, "x1^3*x2 + x2^3 + x1*x3^2 + x4^2");
    CHECK(to_string(partial_derivative(f, 0)) == "x1^2*x2 + x3^2");
}

TEST_CASE("weighted degree and quasihomogeneity") {
    for (int64_t p : {2, 3}) {
        std::vector<int64_t> w = {p * p, p * (p + 1), p * p + p + 1, (p + 1) * (p + 1)};
        auto r = gf_ring(p, {"x1", "x2", "x3", "x4"}, MonomialOrder::grevlex(), w);
        // f = x1^(p+1)*x2 - x2^(p+1) - x1*x3^p + x4^p
        auto x = [&](int i) { return Poly<GfField>::variable(r, size_t(i)); };
        auto f = x(0).pow(uint32_t(p + 1)) * x(1) - x(1).pow(uint32_t(p + 1)) -
                 x(0) * x(2).pow(uint32_t(p)) + x(3).pow(uint32_t(p));
        auto d = weighted_degree(f);
        REQUIRE(d.has_value());
        CHECK(*d == p * (p + 1) * (p + 1));
        // the weighted degree is divisible by p, so the Euler route fails
        CHECK_THROWS_AS(euler_combination(f), PreconditionError);
    }
    auto rw = qq_ring({"x", "y"}, MonomialOrder::grevlex(), {2, 1});
    CHECK(*weighted_degree(P(rw, "x + y^2")) == 2);
    auto rw2 = qq_ring({"x", "y"}, MonomialOrder::grevlex(), {1, 2});
    CHECK(!weighted_degree(P(rw2, "x + y")).has_value());
    auto plain = qq_ring({"x"});
    CHECK_THROWS_AS(weighted_degree(P(plain, "x")), PreconditionError);
}

TEST_CASE("euler combination certifies membership in M*(jacobian)") {
    auto r = qq_ring({"x", "y"}, MonomialOrder::grevlex(), {1, 1});
    auto f = P(r, "x^2*y");
    auto parts = euler_combination(f);
    CHECK(to_string(parts[0]) == "2/3*x*y");
    CHECK(to_string(parts[1]) == "1/3*x^2");
    auto sum = Poly<RatField>::zero(r);
    for (size_t j = 0; j < parts.size(); ++j)
        sum = sum + Poly<RatField>::variable(r, j) * parts[j];
    CHECK(sum == f);

    // reconstruction property on random quasihomogeneous polys
    std::mt19937_64 rng(23);
    auto rw = qq_ring({"x", "y", "z"}, MonomialOrder::grevlex(), {1, 2, 3});
    for (int it = 0; it < 30; ++it) {
        // random monomials of the same weighted degree 6
        std::vector<Poly<RatField>::Term> acc;
        for (int32_t a = 0; a <= 6; ++a)
            for (int32_t b = 0; b <= 3; ++b)
                for (int32_t c = 0; c <= 2; ++c)
                    if (a + 2 * b + 3 * c == 6 && rng() % 2)
                        acc.push_back({rw->field.from_int(int64_t(rng() % 9) + 1),
                                       Monomial({a, b, c})});
        auto g = Poly<RatField>::make(rw, std::move(acc));
        if (g.is_zero()) continue;
        auto pr = euler_combination(g);
        auto s = Poly<RatField>::zero(rw);
        for (size_t j = 0; j < 3; ++j) s = s + Poly<RatField>::variable(rw, j) * pr[j];
        CHECK(s == g);
    }
}

TEST_CASE("format round-trip") {
    std::mt19937_64 rng(29);
    auto rq = qq_ring({"x", "y", "z"});
    auto r5 = gf_ring(5, {"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
        auto f = random_poly(rng, rq, 5, 4);
        CHECK(parse_poly(to_string(f), rq) == f);
        auto g = random_poly(rng, r5, 5, 4);
        CHECK(parse_poly(to_string(g), r5) == g);
    }
    CHECK(parse_poly<RatField>("0", rq).is_zero());
    CHECK(to_string(P(rq, "-x + 1/2")) == "-x + 1/2");
    CHECK_THROWS_AS(P(rq, "x + w"), ParseError);
    CHECK_THROWS_AS(P(rq, "x +"), ParseError);
    CHECK_THROWS_AS(P(r5, "1/2*x"), ParseError);
}
