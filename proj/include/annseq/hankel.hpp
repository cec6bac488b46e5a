#ifndef ANNSEQ_HANKEL_HPP
#define ANNSEQ_HANKEL_HPP

#include "annseq/matrix.hpp"
#include "annseq/result.hpp"
#include "annseq/sequence.hpp"

namespace annseq {

// Structured system whose kernel is ann': columns are the monomials of
// the union support in ascending deglex order, rows are shifts (one block
// per family member), entry (i,a),(b) = l^(i)_{a+b}.
struct HankelSystem {
    LabeledMatrix matrix;
    std::vector<Exponent> columns;                       // deglex ascending
    std::vector<std::pair<std::size_t, Exponent>> rows;  // (member, shift)
};

// extended = rows over the whole box [0, D] instead of the support only;
// audit mode for the row-sufficiency assumption.
inline HankelSystem build_hankel(const SequenceFamily& fam, bool extended = false) {
    HankelSystem sys;
    sys.columns.assign(fam.union_support.begin(), fam.union_support.end());

    std::vector<Exponent> shifts;
    if (extended) {
        CornerData c = corner(fam);
        detail::for_each_in_box(c.d, [&](const Exponent& e) { shifts.push_back(e); });
        std::sort(shifts.begin(), shifts.end(), deglex_less);
    } else {
        shifts = sys.columns;
    }

    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (const auto& a : shifts) sys.rows.emplace_back(i, a);

    sys.matrix = LabeledMatrix(sys.rows.size(), sys.columns.size(), fam.field().zero());
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const auto& [mem, a] = sys.rows[i];
        const NSequence& seq = fam.members[mem];
        for (std::size_t j = 0; j < sys.columns.size(); ++j)
            sys.matrix.at(i, j) = seq.value_at(mono_mul(a, sys.columns[j]));
    }
    for (const auto& [mem, a] : sys.rows)
        sys.matrix.row_labels.push_back("l" + std::to_string(mem + 1) + ":" + mono_str(a));
    for (const auto& b : sys.columns) sys.matrix.col_labels.push_back(mono_str(b));
    return sys;
}

// Kernel of the Hankel system read back as polynomials supported in the
// union staircase; the space of annihilators supported there.
inline AnnihilatorResult annihilator_hankel(const SequenceFamily& fam,
                                            bool extended_rows = false) {
    AnnihilatorResult res;
    res.engine = "hankel";
    const Field& field = fam.field();
    res.border_gens = border(fam.union_support, fam.n());
    if (fam.union_support.empty()) {
        res.unit_ideal = true;
        return res;
    }

    HankelSystem sys = build_hankel(fam, extended_rows);
    res.stats.record(sys.matrix.rows(), sys.matrix.cols());

    for (const auto& v : kernel_basis(sys.matrix, field)) {
        Polynomial p(fam.n());
        for (std::size_t j = 0; j < sys.columns.size(); ++j)
            if (!v[j].is_zero()) p.add_term(sys.columns[j], v[j]);
        res.vs_basis.push_back(std::move(p));
    }
    res.vs_basis = canonical_span(res.vs_basis, field);
    res.r = sys.columns.size() - res.vs_basis.size();
    return res;
}

}  // namespace annseq

#endif
