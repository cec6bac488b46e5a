#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "annseq/polynomial.hpp"

using namespace annseq;

namespace {

const Field Q = Field::rationals();

Polynomial make(std::size_t n, std::initializer_list<std::pair<Exponent, long>> terms) {
    Polynomial p(n);
    for (const auto& [e, c] : terms) p.add_term(e, Q.from_int(c));
    return p;
}

Polynomial random_poly(std::size_t n, std::mt19937_64& rng, std::uint32_t max_exp = 5,
                       std::size_t max_terms = 6) {
    Polynomial p(n);
    std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < terms; ++t) {
        Exponent e(n);
        for (auto& x : e) x = rng() % (max_exp + 1);
        p.add_term(e, Q.from_int(static_cast<long>(rng() % 19) - 9));
    }
    return p;
}

}  // namespace

TEST_CASE("term bookkeeping drops zeros and merges") {
    Polynomial p(2);
    p.add_term({1, 0}, Q.from_int(2));
    p.add_term({1, 0}, Q.from_int(-2));
    REQUIRE(p.is_zero());
    p.add_term({0, 1}, Q.zero());
    REQUIRE(p.is_zero());
    p.add_term({2, 1}, Q.from_int(3));
    REQUIRE(p.term_count() == 1);
    REQUIRE(p.degree() == 3);
    REQUIRE(p.multidegree() == Exponent{2, 1});
}

TEST_CASE("dual application pairs matching exponents") {
    // p(d) applied to f: sum of products over shared exponents; on the
    // evaluation functional 1_0 this is the constant term
    Polynomial one = make(2, {{{0, 0}, 1}});
    Polynomial f = make(2, {{{0, 0}, 7}, {{1, 0}, 3}, {{2, 2}, 5}});
    REQUIRE(apply_dual(one, f, Q.zero()) == Q.from_int(7));
    Polynomial p = make(2, {{{1, 0}, 2}, {{2, 2}, -1}});
    REQUIRE(apply_dual(p, f, Q.zero()) == Q.from_int(1));  // 2*3 - 1*5
}

TEST_CASE("derivation shifts exponents down") {
    Polynomial p = make(2, {{{2, 1}, 4}, {{0, 1}, 3}});
    REQUIRE(derive(p, 0) == make(2, {{{1, 1}, 4}}));
    REQUIRE(derive(p, 1) == make(2, {{{2, 0}, 4}, {{0, 0}, 3}}));
    REQUIRE(derive(derive(p, 1), 1).is_zero());
}

TEST_CASE("integration truncates higher coordinates then raises") {
    // integrate(d1 + d2, var 1) = d1^2: the d2 term is truncated away
    Polynomial p = make(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    REQUIRE(integrate(p, 0) == make(2, {{{2, 0}, 1}}));
    REQUIRE(integrate(p, 1) == make(2, {{{1, 1}, 1}, {{0, 2}, 1}}));
    // right inverse of derive on the non-truncated part
    Polynomial q = make(3, {{{1, 2, 0}, 5}, {{0, 0, 1}, 2}});
    REQUIRE(derive(integrate(q, 1), 1) == make(3, {{{1, 2, 0}, 5}}));
}

TEST_CASE("derivation is adjoint to multiplication under the pairing") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 3;
        Polynomial p = random_poly(n, rng);
        Polynomial f = random_poly(n, rng);
        for (std::size_t k = 0; k < n; ++k) {
            Exponent ek(n, 0);
            ek[k] = 1;
            REQUIRE(apply_dual(derive(p, k), f, Q.zero()) ==
                    apply_dual(p, f.shifted(ek), Q.zero()));
        }
    }
}

TEST_CASE("reflection about a box exponent is an involution") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 3;
        Polynomial f = random_poly(n, rng, 4);
        if (f.is_zero()) continue;
        Exponent e = f.multidegree();
        for (auto& x : e) x += rng() % 3;
        REQUIRE(reflect_about(reflect_about(f, e), e) == f);
    }
    Polynomial f = make(2, {{{3, 0}, 1}});
    REQUIRE_THROWS_AS(reflect_about(f, Exponent{2, 2}), std::invalid_argument);
}

TEST_CASE("reciprocal reverses coefficients about the multidegree") {
    // l(1)=1, l(x)=2, l(y)=2, l(x^2)=4, l(xy)=4, l(y^2)=4 reversed about
    // (2,2) gives 4x^2 + 4xy + 4y^2 + 2x^2y + 2xy^2 + x^2y^2
    Polynomial p = make(2, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2},
                            {{2, 0}, 4}, {{1, 1}, 4}, {{0, 2}, 4}});
    Polynomial expected = make(2, {{{2, 0}, 4}, {{1, 1}, 4}, {{0, 2}, 4},
                                   {{2, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 1}});
    REQUIRE(reciprocal(p) == expected);
    REQUIRE(reciprocal(reciprocal(p)) == p);
}

TEST_CASE("content-free reciprocal is an involution") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 1000) {
        std::size_t n = 1 + rng() % 3;
        Polynomial f = random_poly(n, rng, 4);
        if (f.is_zero()) continue;
        // strip content so the reciprocal loses nothing
        Exponent cont = f.terms().begin()->first;
        for (const auto& [e, c] : f.terms()) cont = mono_gcd(cont, e);
        Polynomial g(n);
        for (const auto& [e, c] : f.terms()) g.add_term(*mono_div(e, cont), c);
        REQUIRE(reciprocal(reciprocal(g)) == g);
        ++done;
    }
}

TEST_CASE("polynomial display") {
    Polynomial p = make(2, {{{0, 0}, 1}, {{1, 1}, -2}});
    REQUIRE(p.str() == "1 + -2*x*y");
    REQUIRE(Polynomial(2).str() == "0");
    REQUIRE(make(2, {{{2, 1}, 3}}).str({}, true) == "3*d1^2*d2");
}
