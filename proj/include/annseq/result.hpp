#ifndef ANNSEQ_RESULT_HPP
#define ANNSEQ_RESULT_HPP

#include <string>
#include <vector>

#include "annseq/polynomial.hpp"
#include "annseq/sequence.hpp"

namespace annseq {

struct EngineStats {
    std::size_t max_rows = 0;
    std::size_t max_cols = 0;
    std::size_t stages = 0;
    // per-stage (rows, cols) of the solved systems
    std::vector<std::pair<std::size_t, std::size_t>> stage_dims;

    void record(std::size_t rows, std::size_t cols) {
        max_rows = std::max(max_rows, rows);
        max_cols = std::max(max_cols, cols);
        stage_dims.emplace_back(rows, cols);
        ++stages;
    }
};

struct AnnihilatorResult {
    std::vector<Polynomial> vs_basis;  // canonical basis of ann', support in union S
    ExponentSet border_gens;           // border(union support), monomial generators
    std::size_t r = 0;                 // dim of the quotient ring
    bool unit_ideal = false;           // all-zero family: annihilator is everything
    EngineStats stats;
    std::string engine;
};

}  // namespace annseq

#endif
