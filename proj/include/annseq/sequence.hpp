#ifndef ANNSEQ_SEQUENCE_HPP
#define ANNSEQ_SEQUENCE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "annseq/monomial.hpp"
#include "annseq/polynomial.hpp"
#include "annseq/scalar.hpp"

namespace annseq {

using ExponentSet = std::set<Exponent, DegLexLess>;

// Finite-support n-dimensional sequence: a staircase (divisibility
// down-closed) support plus exact values on it.  Values outside the
// support are implicitly zero; stored values on the support may be zero.
struct NSequence {
    std::size_t n = 0;
    Field field;
    ExponentSet support;
    std::map<Exponent, Scalar, DegLexLess> values;

    Scalar value_at(const Exponent& e) const {
        auto it = values.find(e);
        return it == values.end() ? field.zero() : it->second;
    }
};

struct Violation {
    std::string message;
    Exponent where;
};

// Checks the staircase property and that every support exponent carries a
// value (and nothing else does).  Reports the first offender.
inline std::optional<Violation> validate(const NSequence& seq) {
    for (const auto& e : seq.support) {
        if (e.size() != seq.n)
            return Violation{"support exponent of wrong dimension", e};
        for (std::size_t i = 0; i < seq.n; ++i) {
            if (e[i] == 0) continue;
            Exponent below = e;
            --below[i];
            if (!seq.support.count(below))
                return Violation{"support is not down-closed", below};
        }
    }
    for (const auto& [e, v] : seq.values) {
        if (!seq.support.count(e))
            return Violation{"value stored outside support", e};
        if (v.prime() != seq.field.prime)
            return Violation{"value in wrong field", e};
    }
    for (const auto& e : seq.support) {
        if (!seq.values.count(e))
            return Violation{"support exponent without stored value", e};
    }
    return std::nullopt;
}

struct SequenceFamily {
    std::vector<NSequence> members;
    ExponentSet union_support;

    std::size_t n() const { return members.empty() ? 0 : members.front().n; }
    const Field& field() const { return members.front().field; }
};

inline SequenceFamily make_family(std::vector<NSequence> members) {
    if (members.empty()) throw std::invalid_argument("empty sequence family");
    SequenceFamily fam;
    fam.members = std::move(members);
    for (const auto& m : fam.members) {
        if (m.n != fam.members.front().n)
            throw std::invalid_argument("family members of mixed dimension");
        if (!(m.field == fam.members.front().field))
            throw std::invalid_argument("family members over mixed fields");
        fam.union_support.insert(m.support.begin(), m.support.end());
    }
    return fam;
}

inline SequenceFamily make_family(NSequence seq) {
    std::vector<NSequence> v;
    v.push_back(std::move(seq));
    return make_family(std::move(v));
}

// p_l(X) = sum of l_g X^g over the support, zero values dropped.
inline Polynomial generating_poly(const NSequence& seq) {
    Polynomial p(seq.n);
    for (const auto& [e, v] : seq.values) p.add_term(e, v);
    return p;
}

// B = { b not in S : some b - e_i lies in S }.  Every element is a
// monomial annihilator of anything supported in S.
inline ExponentSet border(const ExponentSet& support, std::size_t n) {
    ExponentSet b;
    for (const auto& e : support) {
        for (std::size_t i = 0; i < n; ++i) {
            Exponent up = e;
            ++up[i];
            if (!support.count(up)) b.insert(up);
        }
    }
    return b;
}

struct CornerData {
    Exponent d;        // componentwise max over the union support
    std::uint64_t m;   // total degree of X^d
    bool all_zero;     // no support at all (annihilator is the unit ideal)
};

inline CornerData corner(const SequenceFamily& fam) {
    CornerData c;
    c.d = Exponent(fam.n(), 0);
    c.all_zero = fam.union_support.empty();
    for (const auto& e : fam.union_support) c.d = mono_lcm(c.d, e);
    c.m = total_degree(c.d);
    return c;
}

// (f . l)_t = sum over g of f_g l_{g+t}
inline Scalar module_action(const Polynomial& f, const NSequence& seq,
                            const Exponent& tau) {
    Scalar acc = seq.field.zero();
    for (const auto& [g, c] : f.terms()) acc += c * seq.value_at(mono_mul(g, tau));
    return acc;
}

namespace detail {

template <typename Fn>
inline void for_each_in_box(const Exponent& bound, Fn&& fn) {
    Exponent e(bound.size(), 0);
    while (true) {
        fn(const_cast<const Exponent&>(e));
        std::size_t i = 0;
        while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
}

}  // namespace detail

// Membership test against every member: shifts over the box [0, D]
// suffice, since any shift beyond D pushes supp(f)+t outside all supports.
inline bool is_annihilator(const Polynomial& f, const SequenceFamily& fam) {
    CornerData c = corner(fam);
    bool ok = true;
    for (const auto& seq : fam.members) {
        detail::for_each_in_box(c.d, [&](const Exponent& tau) {
            if (ok && !module_action(f, seq, tau).is_zero()) ok = false;
        });
        if (!ok) return false;
    }
    return ok;
}

// All monomials not divisible by any defining monomial.  Requires an
// Artinian staircase: every variable must be bounded by a pure power.
inline ExponentSet staircase_of(const std::vector<Exponent>& defining,
                                std::size_t n) {
    Exponent bound(n, 0);
    std::vector<bool> bounded(n, false);
    for (const auto& g : defining) {
        if (g.size() != n) throw std::invalid_argument("defining monomial of wrong dimension");
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) { ++nz; var = i; }
        if (nz == 1) {
            if (!bounded[var] || g[var] - 1 < bound[var]) bound[var] = g[var] - 1;
            bounded[var] = true;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!bounded[i])
            throw std::invalid_argument("staircase is not Artinian: variable " +
                                        std::to_string(i + 1) + " unbounded");
    ExponentSet s;
    detail::for_each_in_box(bound, [&](const Exponent& e) {
        for (const auto& g : defining)
            if (divides(g, e)) return;
        s.insert(e);
    });
    return s;
}

// Random values on a staircase support, reproducible from
// (defining monomials, seed, field).  Rational draws are small integers.
inline NSequence gen_random_staircase(const std::vector<Exponent>& defining,
                                      std::size_t n, std::uint64_t seed,
                                      const Field& field) {
    NSequence seq;
    seq.n = n;
    seq.field = field;
    seq.support = staircase_of(defining, n);
    std::mt19937_64 rng(seed);
    for (const auto& e : seq.support) {
        std::uint64_t raw = rng();
        Scalar v = field.is_rational()
                       ? field.from_int(static_cast<long>(raw % 65521))
                       : Scalar::mod(raw % field.prime, field.prime);
        seq.values.emplace(e, v);
    }
    return seq;
}

}  // namespace annseq

#endif
