#ifndef HOL_RATMAT_HPP
#define HOL_RATMAT_HPP

#include <optional>
#include <vector>

#include "hol/rational.hpp"

namespace hol {

using RatVec = std::vector<Rat>;

/*
 * Incremental linear span over Q with dependency tracking.
 * Inserting v_0, v_1, ... returns, at the first dependent vector v_d,
 * the coefficients w_0..w_d (w_d = 1) of a vanishing combination.
 */
class LinearSpan {
  public:
    explicit LinearSpan(size_t dim) : dim_(dim) {}

    // returns the vanishing combination if v is dependent on the vectors
    // inserted so far (v is then not added), otherwise nullopt
    std::optional<RatVec> insert(const RatVec& v);

    size_t rank() const { return rows_.size(); }

  private:
    struct Row {
        RatVec v;      // length dim_, reduced
        RatVec comb;   // expression in terms of inserted vectors
        size_t pivot;
    };
    size_t dim_;
    size_t inserted_ = 0;
    std::vector<Row> rows_;
};

/*
 * Solver for A x = b with a fixed rows x cols matrix A (column-major list of
 * columns), reusable across right-hand sides. Solves in the least-squares-free
 * exact sense: returns nullopt when the system is inconsistent; when the
 * solution is not unique an arbitrary member is returned with free variables
 * set to zero.
 */
class LinearSolver {
  public:
    LinearSolver(size_t rows, std::vector<RatVec> columns);
    std::optional<RatVec> solve(const RatVec& b) const;
    size_t rank() const { return pivots_.size(); }

  private:
    size_t rows_, cols_;
    std::vector<RatVec> rref_;                    // reduced rows, augmented bookkeeping
    std::vector<std::pair<size_t, size_t>> pivots_;  // (row, col) in rref order
    std::vector<RatVec> ops_;                     // row operations applied, as rows of E with E*A = rref
};

}  // namespace hol

#endif
