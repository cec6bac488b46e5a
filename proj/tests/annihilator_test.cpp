#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "annseq/annihilator.hpp"
#include "annseq/bench.hpp"

using namespace annseq;

namespace {

const Field Q = Field::rationals();
const Field FP = Field::fp(kDefaultPrime);

NSequence random_member(std::size_t n, std::mt19937_64& rng, const Field& field) {
    std::vector<Exponent> def;
    for (std::size_t i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1 + static_cast<std::uint32_t>(rng() % 4);
        def.push_back(std::move(e));
    }
    if (n > 1 && rng() % 2) {
        // cut a corner with a mixed monomial for irregular staircases
        Exponent e(n, 0);
        e[0] = 1 + static_cast<std::uint32_t>(rng() % 3);
        e[1] = 1 + static_cast<std::uint32_t>(rng() % 3);
        def.push_back(std::move(e));
    }
    NSequence seq = gen_random_staircase(def, n, rng(), field);
    for (auto& [e, v] : seq.values)
        if (rng() % 3 == 0) v = field.zero();  // plant zeros: nontrivial kernels
    return seq;
}

}  // namespace

TEST_CASE("three engines agree on random instances") {
    std::mt19937_64 rng(12);
    for (const Field& field : {Q, FP}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = 1 + rng() % 3;
            std::vector<NSequence> members;
            std::size_t count = 1 + rng() % 2;
            for (std::size_t i = 0; i < count; ++i)
                members.push_back(random_member(n, rng, field));
            SequenceFamily fam = make_family(std::move(members));

            AnnihilatorResult h = annihilator(fam, Engine::hankel);
            AnnihilatorResult d = annihilator(fam, Engine::duality);
            AnnihilatorResult m = annihilator(fam, Engine::macaulay);
            REQUIRE(h.vs_basis == d.vs_basis);
            REQUIRE(h.vs_basis == m.vs_basis);
            REQUIRE(h.r == d.r);
            REQUIRE(h.r == m.r);
            for (const auto& p : h.vs_basis) REQUIRE(is_annihilator(p, fam));
        }
    }
}

TEST_CASE("vector-space completeness against brute force") {
    // every polynomial supported in the staircase that annihilates must
    // reduce to zero against the computed basis
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        NSequence seq = random_member(2, rng, Q);
        SequenceFamily fam = make_family(seq);
        AnnihilatorResult res = annihilator(fam, Engine::duality);
        // brute force: kernel over all support monomials == the basis span
        AnnihilatorResult oracle = annihilator(fam, Engine::hankel);
        for (const auto& p : oracle.vs_basis)
            REQUIRE(in_span(res.vs_basis, p, Q));
        for (const auto& p : res.vs_basis)
            REQUIRE(in_span(oracle.vs_basis, p, Q));
    }
}

TEST_CASE("degenerate corner returns the border ideal only") {
    // support {1}, value 1: the shortcut fires with D = 0
    NSequence seq;
    seq.n = 2;
    seq.field = Q;
    seq.support.insert({0, 0});
    seq.values.emplace(Exponent{0, 0}, Q.one());
    SequenceFamily fam = make_family(seq);
    for (Engine eng : {Engine::hankel, Engine::duality, Engine::macaulay}) {
        AnnihilatorResult res = annihilator(fam, eng);
        REQUIRE(res.vs_basis.empty());
        REQUIRE(res.r == 1);
        REQUIRE(res.border_gens == ExponentSet{{1, 0}, {0, 1}});
    }
    // audit mode: the full pipeline without the shortcut agrees
    AnnihilatorResult audit = annihilator_via_duality(fam, RestrictionMode::box, true);
    REQUIRE(audit.vs_basis.empty());
    REQUIRE(audit.r == 1);
}

TEST_CASE("degenerate corner on a larger support") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        NSequence seq = gen_random_staircase({{3, 0}, {0, 3}}, 2, rng(), Q);
        // force a nonzero corner value
        seq.values[{2, 2}] = Q.one();
        SequenceFamily fam = make_family(seq);
        AnnihilatorResult shortcut = annihilator(fam, Engine::duality);
        REQUIRE(shortcut.vs_basis.empty());
        REQUIRE(shortcut.r == fam.union_support.size());
        AnnihilatorResult audit =
            annihilator_via_duality(fam, RestrictionMode::box, true);
        REQUIRE(audit.vs_basis.empty());
        AnnihilatorResult hankel = annihilator(fam, Engine::hankel);
        REQUIRE(hankel.vs_basis.empty());
    }
}

TEST_CASE("empty support marks the unit ideal") {
    NSequence seq;
    seq.n = 2;
    seq.field = Q;
    SequenceFamily fam = make_family(seq);
    for (Engine eng : {Engine::hankel, Engine::duality, Engine::macaulay}) {
        AnnihilatorResult res = annihilator(fam, eng);
        REQUIRE(res.unit_ideal);
        REQUIRE(res.vs_basis.empty());
        REQUIRE(res.r == 0);
    }
}

TEST_CASE("all-zero values on a nonempty support") {
    NSequence seq;
    seq.n = 2;
    seq.field = Q;
    for (auto e : {Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1}, Exponent{1, 1}}) {
        seq.support.insert(e);
        seq.values.emplace(e, Q.zero());
    }
    SequenceFamily fam = make_family(seq);
    AnnihilatorResult h = annihilator(fam, Engine::hankel);
    AnnihilatorResult d = annihilator(fam, Engine::duality);
    AnnihilatorResult m = annihilator(fam, Engine::macaulay);
    REQUIRE(h.r == 0);
    REQUIRE(h.vs_basis.size() == 4);
    REQUIRE(h.vs_basis == d.vs_basis);
    REQUIRE(h.vs_basis == m.vs_basis);
}

TEST_CASE("restricted dual dimension equals s - r") {
    SequenceFamily fam = example_degree2();
    DualResult dual = compute_D(fam);
    REQUIRE(dual.basis.elements.size() == 3);  // s=6, r=3

    // degenerate corner: empty restricted dual
    NSequence seq;
    seq.n = 1;
    seq.field = Q;
    seq.support.insert({0});
    seq.values.emplace(Exponent{0}, Q.one());
    REQUIRE(compute_D(make_family(seq)).basis.elements.empty());
}

TEST_CASE("engine results on the fixed-value fixtures") {
    for (const Field& field : {Q, FP}) {
        for (const auto& fam : {fixture_l0(field), fixture_l11(field),
                                fixture_l6(field), fixture_l5(field),
                                fixture_l1(field)}) {
            AnnihilatorResult h = annihilator(fam, Engine::hankel);
            AnnihilatorResult d = annihilator(fam, Engine::duality);
            AnnihilatorResult m = annihilator(fam, Engine::macaulay);
            REQUIRE(h.vs_basis == d.vs_basis);
            REQUIRE(h.vs_basis == m.vs_basis);
            REQUIRE(h.r == d.r);
            for (const auto& p : h.vs_basis) REQUIRE(is_annihilator(p, fam));
        }
    }
}

TEST_CASE("multi-sequence annihilator is the intersection") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        NSequence a = random_member(2, rng, Q);
        NSequence b = random_member(2, rng, Q);
        SequenceFamily fam = make_family({a, b});
        AnnihilatorResult both = annihilator(fam, Engine::duality);
        REQUIRE(both.vs_basis == annihilator(fam, Engine::hankel).vs_basis);
        for (const auto& p : both.vs_basis) {
            REQUIRE(is_annihilator(p, make_family(a)));
            REQUIRE(is_annihilator(p, make_family(b)));
        }
    }
}

TEST_CASE("engine parsing") {
    REQUIRE(parse_engine("hankel") == Engine::hankel);
    REQUIRE(parse_engine("duality") == Engine::duality);
    REQUIRE(parse_engine("macaulay") == Engine::macaulay);
    REQUIRE_THROWS_AS(parse_engine("magic"), std::invalid_argument);
    REQUIRE(std::string(engine_name(Engine::duality)) == "duality");
}
