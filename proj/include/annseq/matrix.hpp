#ifndef ANNSEQ_MATRIX_HPP
#define ANNSEQ_MATRIX_HPP

#include <string>
#include <vector>

#include "annseq/polynomial.hpp"
#include "annseq/scalar.hpp"

namespace annseq {

// Dense exact matrix with display labels on both axes.  Used for the
// Hankel, Macaulay and integration systems.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    LabeledMatrix(std::size_t rows, std::size_t cols, const Scalar& zero)
        : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot column indices.
// First-nonzero pivoting keeps the result deterministic.
inline std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t nr = m.size(), nc = m[0].size(), row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && m[p][col].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(m[row], m[p]);
        Scalar inv = m[row][col].inv();
        for (std::size_t j = col; j < nc; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (std::size_t j = col; j < nc; ++j) m[i][j].submul(f, m[row][j]);
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size(), std::vector<Scalar>{});
    return pivots;
}

inline std::size_t rank(std::vector<std::vector<Scalar>> m) {
    return rref(m).size();
}

}  // namespace detail

// Exact basis of the right null space, in reduced echelon form: one
// basis vector per free column, unit at that column, deterministic.
inline std::vector<std::vector<Scalar>> kernel_basis(const LabeledMatrix& M,
                                                     const Field& field) {
    const Scalar zero = field.zero();
    std::vector<std::vector<Scalar>> m(M.rows(), std::vector<Scalar>(M.cols(), zero));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) m[i][j] = M.at(i, j);

    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(M.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(M.cols(), zero);
        v[f] = field.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const LabeledMatrix& M, const Field& field) {
    std::vector<std::vector<Scalar>> m(M.rows(), std::vector<Scalar>(M.cols(), field.zero()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) m[i][j] = M.at(i, j);
    return detail::rank(std::move(m));
}

// Canonical representative of span{polys}: reduced row echelon form over
// the deglex-sorted union of supports.  Two equal spans produce
// byte-identical output.
inline std::vector<Polynomial> canonical_span(const std::vector<Polynomial>& polys,
                                              const Field& field) {
    if (polys.empty()) return {};
    std::size_t n = polys.front().vars();
    std::map<Exponent, std::size_t, DegLexLess> col_of;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) col_of.emplace(e, 0);
    std::vector<Exponent> cols;
    cols.reserve(col_of.size());
    for (auto& [e, idx] : col_of) {
        idx = cols.size();
        cols.push_back(e);
    }

    std::vector<std::vector<Scalar>> m(polys.size(),
                                       std::vector<Scalar>(cols.size(), field.zero()));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms()) m[i][col_of[e]] = c;
    detail::rref(m);

    std::vector<Polynomial> out;
    for (const auto& row : m) {
        Polynomial p(n);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!row[j].is_zero()) p.add_term(cols[j], row[j]);
        out.push_back(std::move(p));
    }
    return out;
}

// true iff q lies in span{basis} (basis need not be reduced)
inline bool in_span(const std::vector<Polynomial>& basis, const Polynomial& q,
                    const Field& field) {
    std::vector<Polynomial> with = basis;
    with.push_back(q);
    return canonical_span(with, field).size() == canonical_span(basis, field).size();
}

}  // namespace annseq

#endif
