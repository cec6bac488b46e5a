#include <catch2/catch_amalgamated.hpp>

#include "annseq/bench.hpp"
#include "annseq/hankel.hpp"

using namespace annseq;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("worked-example system is reproduced entry for entry") {
    SequenceFamily fam = example_degree2();
    HankelSystem sys = build_hankel(fam);
    REQUIRE(sys.matrix.rows() == 6);
    REQUIRE(sys.matrix.cols() == 6);
    std::vector<Exponent> cols = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    REQUIRE(sys.columns == cols);
    long expected[6][6] = {{1, 2, 2, 4, 4, 4}, {2, 4, 4, 0, 0, 0},
                           {2, 4, 4, 0, 0, 0}, {4, 0, 0, 0, 0, 0},
                           {4, 0, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0}};
    for (std::size_t i = 0; i < 6; ++i) {
        REQUIRE(sys.rows[i].second == cols[i]);  // shifts = support, same order
        for (std::size_t j = 0; j < 6; ++j)
            REQUIRE(sys.matrix.at(i, j) == Q.from_int(expected[i][j]));
    }
}

TEST_CASE("worked-example annihilator") {
    AnnihilatorResult res = annihilator_hankel(example_degree2());
    REQUIRE(res.r == 3);
    REQUIRE(res.vs_basis.size() == 3);
    Polynomial xmy(2), x2mxy(2), xymy2(2);
    xmy.add_term({1, 0}, Q.one());
    xmy.add_term({0, 1}, -Q.one());
    x2mxy.add_term({2, 0}, Q.one());
    x2mxy.add_term({1, 1}, -Q.one());
    xymy2.add_term({1, 1}, Q.one());
    xymy2.add_term({0, 2}, -Q.one());
    REQUIRE(canonical_span({xmy, x2mxy, xymy2}, Q) == res.vs_basis);
    REQUIRE(res.border_gens == ExponentSet{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("all-zero values give the full span of support monomials") {
    NSequence seq;
    seq.n = 2;
    seq.field = Q;
    for (auto e : {Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1}}) {
        seq.support.insert(e);
        seq.values.emplace(e, Q.zero());
    }
    AnnihilatorResult res = annihilator_hankel(make_family(seq));
    REQUIRE(res.r == 0);
    REQUIRE(res.vs_basis.size() == 3);
    for (const auto& p : res.vs_basis) REQUIRE(p.term_count() == 1);
}

TEST_CASE("small fixed-value fixture kernel") {
    // values 1=2, x=2, y=1, xy=0, x^2=1, y^2=3: kernel spans {xy, y^2 - 3x^2}
    AnnihilatorResult res = annihilator_hankel(fixture_l1(Q));
    REQUIRE(res.r == 4);
    REQUIRE(res.vs_basis.size() == 2);
    Polynomial xy(2), comb(2);
    xy.add_term({1, 1}, Q.one());
    comb.add_term({0, 2}, Q.one());
    comb.add_term({2, 0}, Q.from_int(-3));
    REQUIRE(canonical_span({xy, comb}, Q) == res.vs_basis);
}

TEST_CASE("extended rows do not change the kernel") {
    for (const auto& fam :
         {example_degree2(), example_corner_cut(), fixture_l1(Q)}) {
        AnnihilatorResult a = annihilator_hankel(fam, false);
        AnnihilatorResult b = annihilator_hankel(fam, true);
        REQUIRE(a.vs_basis == b.vs_basis);
        REQUIRE(a.r == b.r);
    }
}

TEST_CASE("multi-member family stacks row blocks") {
    NSequence s1 = example_degree2().members.front();
    NSequence s2 = fixture_l1(Q).members.front();
    SequenceFamily fam = make_family({s1, s2});
    HankelSystem sys = build_hankel(fam);
    REQUIRE(sys.matrix.rows() == 12);
    REQUIRE(sys.matrix.cols() == 6);
    AnnihilatorResult res = annihilator_hankel(fam);
    for (const auto& p : res.vs_basis) REQUIRE(is_annihilator(p, fam));
    // intersection is no larger than either annihilator alone
    REQUIRE(res.vs_basis.size() <= annihilator_hankel(make_family(s1)).vs_basis.size());
    REQUIRE(res.vs_basis.size() <= annihilator_hankel(make_family(s2)).vs_basis.size());
}
