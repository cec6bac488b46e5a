#ifndef ANNSEQ_DUAL_HPP
#define ANNSEQ_DUAL_HPP

#include <optional>

#include "annseq/matrix.hpp"
#include "annseq/result.hpp"
#include "annseq/sequence.hpp"

namespace annseq {

// Truncated dual space basis: differential operators of total degree <= degree.
struct DualBasis {
    std::uint64_t degree = 0;
    std::vector<Polynomial> elements;
};

// The set of d-monomials permitted to appear in dual elements; a column
// outside the set is a coefficient forced to zero.
struct SupportRestriction {
    ExponentSet allowed;

    bool permits(const Exponent& e) const { return allowed.count(e) != 0; }
};

struct MacaulaySystem {
    LabeledMatrix matrix;
    std::vector<Exponent> columns;                       // d-monomials, deglex
    std::vector<std::pair<std::size_t, Exponent>> rows;  // (generator, shift)
    DualBasis basis;
};

namespace detail {

inline std::vector<Exponent> monomials_of_degree_at_most(std::size_t n,
                                                         std::uint64_t t) {
    std::vector<Exponent> out;
    Exponent bound(n, static_cast<std::uint32_t>(t));
    for_each_in_box(bound, [&](const Exponent& e) {
        if (total_degree(e) <= t) out.push_back(e);
    });
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

}  // namespace detail

// Macaulay's one-shot construction of the degree-<=t dual of the ideal
// generated by `generators`: one column per admissible d-monomial, one row
// per (generator, monomial shift), entry = coefficient of the column
// monomial in X^shift * f_i.  The kernel is the (restricted) dual basis.
inline MacaulaySystem macaulay_orthogonal(
    const std::vector<Polynomial>& generators, std::uint64_t t,
    const std::optional<SupportRestriction>& restriction, const Field& field) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::size_t n = generators.front().vars();

    MacaulaySystem sys;
    if (restriction) {
        for (const auto& e : restriction->allowed)
            if (total_degree(e) <= t) sys.columns.push_back(e);
        std::sort(sys.columns.begin(), sys.columns.end(), deglex_less);
    } else {
        sys.columns = detail::monomials_of_degree_at_most(n, t);
    }

    // Shift window.  Restricted: the box spanned by the allowed monomials
    // (any shift outside it pairs to an all-zero row).  Unrestricted: all
    // shifts with deg(X^b f_i) <= t + max generator degree.
    std::uint64_t max_gen_deg = 0;
    for (const auto& g : generators) max_gen_deg = std::max(max_gen_deg, g.degree());
    std::vector<std::vector<Exponent>> shifts_per_gen(generators.size());
    if (restriction) {
        Exponent dmax(n, 0);
        for (const auto& e : sys.columns) dmax = mono_lcm(dmax, e);
        std::vector<Exponent> shifts;
        detail::for_each_in_box(dmax, [&](const Exponent& e) { shifts.push_back(e); });
        std::sort(shifts.begin(), shifts.end(), deglex_less);
        for (auto& s : shifts_per_gen) s = shifts;
    } else {
        for (std::size_t i = 0; i < generators.size(); ++i) {
            std::uint64_t window = t + max_gen_deg - generators[i].degree();
            shifts_per_gen[i] = detail::monomials_of_degree_at_most(n, window);
        }
    }

    for (std::size_t i = 0; i < generators.size(); ++i)
        for (const auto& b : shifts_per_gen[i]) sys.rows.emplace_back(i, b);

    sys.matrix = LabeledMatrix(sys.rows.size(), sys.columns.size(), field.zero());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& [gi, shift] = sys.rows[r];
        Polynomial shifted = generators[gi].shifted(shift);
        for (std::size_t c = 0; c < sys.columns.size(); ++c)
            sys.matrix.at(r, c) = shifted.coeff(sys.columns[c], field.zero());
    }
    for (const auto& [gi, shift] : sys.rows)
        sys.matrix.row_labels.push_back(mono_str(shift) + "*f" + std::to_string(gi + 1));
    for (const auto& c : sys.columns) sys.matrix.col_labels.push_back(mono_str(c));

    sys.basis.degree = t;
    for (const auto& v : kernel_basis(sys.matrix, field)) {
        Polynomial p(n);
        for (std::size_t c = 0; c < sys.columns.size(); ++c)
            if (!v[c].is_zero()) p.add_term(sys.columns[c], v[c]);
        sys.basis.elements.push_back(std::move(p));
    }
    sys.basis.elements = canonical_span(sys.basis.elements, field);
    return sys;
}

// One step of the integration method: candidates are lambda-combinations
// of formal antiderivatives of the previous basis, subject to vanishing on
// the generators, cross-derivative compatibility, and the restriction.
inline DualBasis integration_step(const DualBasis& prev,
                                  const std::vector<Polynomial>& generators,
                                  const std::optional<SupportRestriction>& restriction,
                                  const Field& field,
                                  EngineStats* stats = nullptr) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::size_t n = generators.front().vars();
    std::size_t s = prev.elements.size();

    if (!restriction) {
        // contract: prev must be derivation-closed
        for (const auto& p : prev.elements)
            for (std::size_t k = 0; k < n; ++k)
                if (!in_span(prev.elements, derive(p, k), field))
                    throw std::logic_error("integration_step: basis not closed under derivation");
    }

    DualBasis next;
    next.degree = prev.degree + 1;
    if (s == 0) {
        next.elements = prev.elements;
        if (stats) stats->record(0, 0);
        return next;
    }

    // unknown lambda_{ik} at column i*n + k
    std::vector<std::vector<Polynomial>> integral(s, std::vector<Polynomial>());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < n; ++k)
            integral[i].push_back(integrate(prev.elements[i], k));

    std::size_t cols = s * n;
    std::vector<std::vector<Scalar>> rows;
    auto new_row = [&]() -> std::vector<Scalar>& {
        rows.emplace_back(cols, field.zero());
        return rows.back();
    };

    // (1) vanish on every generator
    for (const auto& f : generators) {
        auto& row = new_row();
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < n; ++k)
                row[i * n + k] = apply_dual(integral[i][k], f, field.zero());
    }

    // (2) cross-derivative compatibility, one row per d-monomial per pair k<l
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            std::map<Exponent, std::size_t, DegLexLess> mono_row;
            for (std::size_t i = 0; i < s; ++i) {
                Polynomial dk = derive(prev.elements[i], k);
                Polynomial dl = derive(prev.elements[i], l);
                for (const auto& [e, c] : dl.terms()) {
                    auto [it, fresh] = mono_row.emplace(e, rows.size());
                    if (fresh) new_row();
                    rows[it->second][i * n + k] += c;
                }
                for (const auto& [e, c] : dk.terms()) {
                    auto [it, fresh] = mono_row.emplace(e, rows.size());
                    if (fresh) new_row();
                    rows[it->second][i * n + l] -= c;
                }
            }
        }
    }

    // restriction: coefficients on monomials outside the allowed set vanish
    if (restriction) {
        std::map<Exponent, std::size_t, DegLexLess> mono_row;
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [e, c] : integral[i][k].terms()) {
                    if (restriction->permits(e)) continue;
                    auto [it, fresh] = mono_row.emplace(e, rows.size());
                    if (fresh) new_row();
                    rows[it->second][i * n + k] += c;
                }
            }
        }
    }

    if (stats) stats->record(rows.size(), cols);

    LabeledMatrix M(rows.size(), cols, field.zero());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = rows[r][c];

    std::vector<Polynomial> extended = prev.elements;
    for (const auto& lambda : kernel_basis(M, field)) {
        Polynomial cand(n);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!lambda[i * n + k].is_zero())
                    cand = cand + integral[i][k].scaled(lambda[i * n + k]);
        if (!cand.is_zero()) extended.push_back(std::move(cand));
    }
    next.elements = canonical_span(extended, field);
    return next;
}

struct DualResult {
    DualBasis basis;
    EngineStats stats;
};

// Incremental dual computation: seed with the evaluation functional when
// admissible, integrate until t_max or until two consecutive degrees add
// nothing.
inline DualResult orthogonal_up_to(const std::vector<Polynomial>& generators,
                                   std::uint64_t t_max,
                                   const std::optional<SupportRestriction>& restriction,
                                   bool seed_constant, const Field& field) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::size_t n = generators.front().vars();
    bool all_zero = true;
    for (const auto& g : generators)
        if (!g.is_zero()) all_zero = false;
    if (all_zero)
        throw std::invalid_argument("zero ideal has an infinite dual; refusing");

    DualResult out;
    out.basis.degree = 0;
    if (!seed_constant) return out;

    Polynomial one(n);
    one.add_term(Exponent(n, 0), field.one());
    out.basis.elements.push_back(one);

    std::size_t stagnant = 0;
    while (out.basis.degree < t_max) {
        std::size_t before = out.basis.elements.size();
        out.basis = integration_step(out.basis, generators, restriction, field,
                                     &out.stats);
        stagnant = out.basis.elements.size() == before ? stagnant + 1 : 0;
        if (stagnant >= 2) break;
    }
    return out;
}

}  // namespace annseq

#endif
