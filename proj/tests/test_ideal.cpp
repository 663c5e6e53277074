#include <random>

#include "doctest.h"
#include "evo/ideal.hpp"
#include "helpers.hpp"

using namespace evo;
using namespace evotest;

namespace {

template <class F>
Ideal<F> I(const RingPtr<F>& r, const std::vector<std::string>& gens) {
    return Ideal<F>(r, PL(r, gens));
}

template <class F>
Ideal<F> random_monomial_ideal(std::mt19937_64& rng, const RingPtr<F>& r, int ngens,
                               int32_t maxdeg) {
    std::vector<Poly<F>> gens;
    for (int i = 0; i < ngens; ++i) {
        Monomial m(r->arity());
        int32_t budget = 1 + int32_t(rng() % uint64_t(maxdeg));
        for (size_t v = 0; v < r->arity() && budget > 0; ++v) {
            int32_t e = int32_t(rng() % uint64_t(budget + 1));
            m.set(v, e);
            budget -= e;
        }
        if (!m.is_one()) gens.push_back(Poly<F>::monomial(r, m));
    }
    if (gens.empty()) gens.push_back(Poly<F>::variable(r, 0));
    return Ideal<F>(r, std::move(gens));
}

}  // namespace

TEST_CASE("membership with certificates") {
    auto r = qq_ring({"x", "y"});
    CHECK(I(r, {"x", "y"}).contains(P(r, "x^2 + x*y")));
    CHECK(!I(r, {"x^2"}).contains(P(r, "x")));
    CHECK(to_string(I(r, {"x^2"}).normal_form_of(P(r, "x"))) == "x");
}

TEST_CASE("sum, product, power") {
    auto r = qq_ring({"x", "y", "z"});
    CHECK(ideal_product(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
    auto sq = ideal_power(I(r, {"x", "y"}), 2);
    CHECK(sq.equals(I(r, {"x^2", "x*y", "y^2"})));
    CHECK(ideal_power(I(r, {"x"}), 0).is_unit());
    auto I2 = ideal_power(I(r, {"x*y", "x*z", "y*z"}), 2);
    CHECK(I2.gens().size() == 9);
    CHECK(I2.groebner().elems.size() == 6);
}

TEST_CASE("intersection") {
    auto r = qq_ring({"x", "y", "z"});
    CHECK(intersect(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
    auto a = ideal_power(I(r, {"x", "y"}), 2);
    auto b = ideal_power(I(r, {"x", "z"}), 2);
    auto c = ideal_power(I(r, {"y", "z"}), 2);
    auto meet = intersect(intersect(a, b), c);
    CHECK(meet.contains(P(r, "x*y*z")));
    auto J = I(r, {"x^2 - y", "y*z"});
    CHECK(intersect(J, J).equals(J));
    // bounds: I ∩ J inside both, product inside intersection
    auto K = I(r, {"x*y", "z^2"});
    auto m2 = intersect(J, K);
    CHECK(J.contains_ideal(m2));
    CHECK(K.contains_ideal(m2));
    CHECK(m2.contains_ideal(ideal_product(J, K)));
}

TEST_CASE("quotients") {
    auto r = qq_ring({"x", "y"});
    CHECK(quotient(I(r, {"x^2"}), I(r, {"x"})).equals(I(r, {"x"})));
    CHECK(quotient(I(r, {"x*y"}), I(r, {"x"})).equals(I(r, {"y"})));
    CHECK(quotient(I(r, {"x"}), Ideal<RatField>(r, {})).is_unit());
    // (I : J) * J ⊆ I on random monomial ideals
    std::mt19937_64 rng(71);
    auto r3 = qq_ring({"x", "y", "z"});
    for (int it = 0; it < 10; ++it) {
        auto A = random_monomial_ideal(rng, r3, 3, 3);
        auto B = random_monomial_ideal(rng, r3, 2, 2);
        auto q = quotient(A, B);
        CHECK(A.contains_ideal(ideal_product(q, B)));
    }
}

TEST_CASE("saturation") {
    auto r = qq_ring({"x", "y"});
    CHECK(saturate(I(r, {"x^2*y"}), P(r, "y")).equals(I(r, {"x^2"})));
    CHECK(saturate(I(r, {"x"}), P(r, "x")).is_unit());
    // sandwich and idempotence
    std::mt19937_64 rng(73);
    auto r3 = qq_ring({"x", "y", "z"});
    for (int it = 0; it < 8; ++it) {
        auto A = random_monomial_ideal(rng, r3, 3, 3);
        auto f = Poly<RatField>::variable(r3, rng() % 3);
        auto s = saturate(A, f);
        auto q = quotient(A, Ideal<RatField>(r3, {f}));
        CHECK(s.contains_ideal(q));
        CHECK(q.contains_ideal(A));
        CHECK(saturate(s, f).equals(s));
    }
}

TEST_CASE("elimination") {
    auto r = qq_ring({"x", "y", "t"});
    auto tw = eliminate(I(r, {"x - t^2", "y - t^3"}), {2});
    CHECK(tw.equals(I(r, {"x^3 - y^2"})));
    auto J = I(r, {"x*y - 1"});
    CHECK(eliminate(J, {}).equals(J));
    CHECK(eliminate(I(r, {"t*x - 1", "t*y"}), {2}).equals(I(r, {"y"})));
}

TEST_CASE("radical membership") {
    auto r = qq_ring({"x", "y"});
    CHECK(radical_membership(I(r, {"x^2"}), P(r, "x")));
    CHECK(!radical_membership(I(r, {"x^2"}), P(r, "y")));
    // consistency: f^k ∈ I implies radical membership
    std::mt19937_64 rng(79);
    auto r3 = qq_ring({"x", "y", "z"});
    for (int it = 0; it < 10; ++it) {
        auto A = random_monomial_ideal(rng, r3, 3, 3);
        for (uint32_t k = 1; k <= 5; ++k) {
            Monomial m(3);
            for (size_t v = 0; v < 3; ++v) m.set(v, int32_t(rng() % 2));
            auto f = Poly<RatField>::monomial(r3, m);
            if (A.contains(f.pow(k))) CHECK(radical_membership(A, f));
        }
    }
}

TEST_CASE("dimension and codimension") {
    auto r3 = qq_ring({"x", "y", "z"});
    CHECK(codimension(I(r3, {"x", "y"})) == 2);
    CHECK(codimension(I(r3, {"x*y", "x*z", "y*z"})) == 2);
    CHECK(dimension(I(r3, {"x*y", "x*z", "y*z"})) == 1);
    CHECK_THROWS_AS(codimension(I(r3, {"x", "x + 1"})), PreconditionError);
    CHECK_THROWS_AS(codimension(Ideal<RatField>(r3, {})), PreconditionError);
    // complete intersections of generic forms: codim = number of forms
    std::mt19937_64 rng(83);
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        auto rn = qq_ring(names);
        for (int c = 1; c <= std::min(3, n); ++c) {
            std::vector<Poly<RatField>> gens;
            for (int i = 0; i < c; ++i) {
                std::vector<Poly<RatField>::Term> acc;
                for (size_t v = 0; v < size_t(n); ++v) {
                    auto m = Monomial(size_t(n));
                    m.set(v, 1 + int32_t(rng() % 2));
                    acc.push_back({rn->field.from_int(int64_t(rng() % 7) + 1), m});
                }
                gens.push_back(Poly<RatField>::make(rn, std::move(acc)));
            }
            CHECK(codimension(Ideal<RatField>(rn, gens)) == c);
        }
    }
}

TEST_CASE("minimal generators") {
    auto r = qq_ring({"x", "y"});
    CHECK(is_minimal_generator(I(r, {"x"}), P(r, "x")));
    CHECK(!is_minimal_generator(I(r, {"x", "y"}), P(r, "x^2")));
    CHECK_THROWS_AS(is_minimal_generator(I(r, {"x"}), P(r, "y")), PreconditionError);
    auto mg = min_generators(I(r, {"x", "x^2", "y", "x*y + x^3"}));
    CHECK(mg.size() == 2);
    CHECK(Ideal<RatField>(r, mg).equals(I(r, {"x", "y"})));
}
