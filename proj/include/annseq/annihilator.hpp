#ifndef ANNSEQ_ANNIHILATOR_HPP
#define ANNSEQ_ANNIHILATOR_HPP

#include "annseq/dual.hpp"
#include "annseq/hankel.hpp"
#include "annseq/result.hpp"

namespace annseq {

enum class Engine { hankel, duality, macaulay };

inline const char* engine_name(Engine e) {
    switch (e) {
        case Engine::hankel: return "hankel";
        case Engine::duality: return "duality";
        case Engine::macaulay: return "macaulay";
    }
    return "?";
}

inline Engine parse_engine(const std::string& s) {
    if (s == "hankel") return Engine::hankel;
    if (s == "duality") return Engine::duality;
    if (s == "macaulay") return Engine::macaulay;
    throw std::invalid_argument("unknown engine: " + s);
}

// Which d-monomials the integration recurrence may touch while climbing.
// `box` (the default) is the whole box [0, D]: down-closed, hence every
// intermediate derivative stays admissible and the recurrence provably
// reaches the full restricted dual.  `aggressive` keeps only exponents
// reflecting into the staircase or its border; smaller matrices, but the
// set is not closed under repeated derivation and can miss elements (see
// the dual engine tests).
enum class RestrictionMode { box, aggressive };

namespace detail {

inline ExponentSet reflected_support(const ExponentSet& support, const Exponent& d) {
    ExponentSet out;
    for (const auto& g : support) out.insert(*mono_div(d, g));
    return out;
}

inline SupportRestriction iteration_restriction(const SequenceFamily& fam,
                                                const CornerData& c,
                                                RestrictionMode mode) {
    SupportRestriction r;
    if (mode == RestrictionMode::box) {
        for_each_in_box(c.d, [&](const Exponent& e) { r.allowed.insert(e); });
        return r;
    }
    ExponentSet keep = fam.union_support;
    for (const auto& b : border(fam.union_support, fam.n()))
        if (divides(b, c.d)) keep.insert(b);
    for (const auto& g : keep) r.allowed.insert(*mono_div(c.d, g));
    return r;
}

// Reflected generating polynomials of all members (zero members dropped).
inline std::vector<Polynomial> reflected_generators(const SequenceFamily& fam,
                                                    const CornerData& c) {
    std::vector<Polynomial> gens;
    for (const auto& seq : fam.members) {
        Polynomial p = generating_poly(seq);
        if (!p.is_zero()) gens.push_back(reflect_about(p, c.d));
    }
    return gens;
}

// Subspace of span{basis} supported inside `allowed`.
inline std::vector<Polynomial> restrict_span(const std::vector<Polynomial>& basis,
                                             const ExponentSet& allowed,
                                             const Field& field) {
    std::map<Exponent, std::size_t, DegLexLess> bad_rows;
    for (const auto& p : basis)
        for (const auto& [e, cf] : p.terms())
            if (!allowed.count(e)) bad_rows.emplace(e, bad_rows.size());
    if (bad_rows.empty()) return basis;

    LabeledMatrix M(bad_rows.size(), basis.size(), field.zero());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [e, cf] : basis[j].terms()) {
            auto it = bad_rows.find(e);
            if (it != bad_rows.end()) M.at(it->second, j) = cf;
        }

    std::vector<Polynomial> out;
    for (const auto& v : kernel_basis(M, field)) {
        Polynomial p(basis.empty() ? 0 : basis.front().vars());
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!v[j].is_zero()) p = p + basis[j].scaled(v[j]);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

// The restricted dual subspace D: elements of the reflected-ideal dual
// supported in the reflected staircase.  Its reflection spans ann'.
inline DualResult compute_D(const SequenceFamily& fam,
                            RestrictionMode mode = RestrictionMode::box) {
    const Field& field = fam.field();
    CornerData c = corner(fam);
    DualResult out;
    if (c.all_zero) return out;

    std::vector<Polynomial> gens = detail::reflected_generators(fam, c);
    if (gens.empty()) {
        // all stored values zero: the dual restricted to the reflected
        // staircase is everything there
        for (const auto& g : detail::reflected_support(fam.union_support, c.d)) {
            Polynomial p(fam.n());
            p.add_term(g, field.one());
            out.basis.elements.push_back(std::move(p));
        }
        return out;
    }

    bool seed_ok = true;
    for (const auto& g : gens)
        if (!g.constant_term(field.zero()).is_zero()) seed_ok = false;

    SupportRestriction restr = detail::iteration_restriction(fam, c, mode);
    DualResult raw = orthogonal_up_to(gens, c.m, restr, seed_ok, field);
    out.stats = raw.stats;
    out.basis.degree = raw.basis.degree;
    out.basis.elements = canonical_span(
        detail::restrict_span(raw.basis.elements,
                              detail::reflected_support(fam.union_support, c.d), field),
        field);
    return out;
}

// Algorithm: corner and degeneracy check, reflect, restricted dual,
// reflect back, assemble generators.
inline AnnihilatorResult annihilator_via_duality(
    const SequenceFamily& fam, RestrictionMode mode = RestrictionMode::box,
    bool skip_degenerate_shortcut = false) {
    AnnihilatorResult res;
    res.engine = "duality";
    const Field& field = fam.field();
    CornerData c = corner(fam);
    res.border_gens = border(fam.union_support, fam.n());
    if (c.all_zero) {
        res.unit_ideal = true;
        return res;
    }

    std::size_t s = fam.union_support.size();

    // degenerate corner: a nonzero value at X^D makes the annihilator the
    // border ideal (single sequence only; the lemma is per sequence)
    if (!skip_degenerate_shortcut && fam.members.size() == 1 &&
        !fam.members.front().value_at(c.d).is_zero()) {
        res.r = s;
        return res;
    }

    DualResult dual = compute_D(fam, mode);
    res.stats = dual.stats;
    for (const auto& lambda : dual.basis.elements)
        res.vs_basis.push_back(reflect_about(lambda, c.d));
    res.vs_basis = canonical_span(res.vs_basis, field);
    res.r = s - res.vs_basis.size();
    return res;
}

// Algorithm with Macaulay's one-shot dual computation in place of the
// integration recurrence; the restriction is the reflected staircase.
inline AnnihilatorResult annihilator_macaulay(const SequenceFamily& fam) {
    AnnihilatorResult res;
    res.engine = "macaulay";
    const Field& field = fam.field();
    CornerData c = corner(fam);
    res.border_gens = border(fam.union_support, fam.n());
    if (c.all_zero) {
        res.unit_ideal = true;
        return res;
    }

    std::size_t s = fam.union_support.size();
    ExponentSet rec_support = detail::reflected_support(fam.union_support, c.d);

    std::vector<Polynomial> gens = detail::reflected_generators(fam, c);
    std::vector<Polynomial> dual_elems;
    if (gens.empty()) {
        for (const auto& g : rec_support) {
            Polynomial p(fam.n());
            p.add_term(g, field.one());
            dual_elems.push_back(std::move(p));
        }
    } else {
        MacaulaySystem sys = macaulay_orthogonal(gens, c.m,
                                                 SupportRestriction{rec_support}, field);
        res.stats.record(sys.matrix.rows(), sys.matrix.cols());
        dual_elems = sys.basis.elements;
    }

    for (const auto& lambda : dual_elems)
        res.vs_basis.push_back(reflect_about(lambda, c.d));
    res.vs_basis = canonical_span(res.vs_basis, field);
    res.r = s - res.vs_basis.size();
    return res;
}

inline AnnihilatorResult annihilator(const SequenceFamily& fam, Engine engine) {
    switch (engine) {
        case Engine::hankel: return annihilator_hankel(fam);
        case Engine::duality: return annihilator_via_duality(fam);
        case Engine::macaulay: return annihilator_macaulay(fam);
    }
    throw std::invalid_argument("unknown engine");
}

}  // namespace annseq

#endif
