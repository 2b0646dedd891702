#include "hol/ratmat.hpp"

#include "hol/errors.hpp"

namespace hol {

std::optional<RatVec> LinearSpan::insert(const RatVec& v) {
    if (v.size() != dim_) fail(Err::DomainError, "LinearSpan dimension mismatch");
    RatVec w = v;
    RatVec comb(inserted_ + 1, Rat(0));
    comb[inserted_] = 1;
    for (const Row& r : rows_) {
        if (w[r.pivot] == 0) continue;
        Rat c = w[r.pivot];  // r.v has pivot value 1
        for (size_t i = 0; i < dim_; ++i) w[i] -= c * r.v[i];
        for (size_t i = 0; i < r.comb.size(); ++i) comb[i] -= c * r.comb[i];
    }
    size_t piv = dim_;
    for (size_t i = 0; i < dim_; ++i)
        if (w[i] != 0) {
            piv = i;
            break;
        }
    ++inserted_;
    if (piv == dim_) return comb;  // dependent: sum comb[j] * input_j = 0
    Rat p = w[piv];
    for (Rat& c : w) c /= p;
    for (Rat& c : comb) c /= p;
    rows_.push_back(Row{std::move(w), std::move(comb), piv});
    return std::nullopt;
}

LinearSolver::LinearSolver(size_t rows, std::vector<RatVec> columns) : rows_(rows), cols_(columns.size()) {
    // Gauss-Jordan on [A | I], rows of A assembled from the given columns
    std::vector<RatVec> m(rows_, RatVec(cols_, Rat(0)));
    for (size_t j = 0; j < cols_; ++j) {
        if (columns[j].size() != rows_) fail(Err::DomainError, "LinearSolver column size mismatch");
        for (size_t i = 0; i < rows_; ++i) m[i][j] = columns[j][i];
    }
    std::vector<RatVec> e(rows_, RatVec(rows_, Rat(0)));
    for (size_t i = 0; i < rows_; ++i) e[i][i] = 1;

    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && m[sel][c] == 0) ++sel;
        if (sel == rows_) continue;
        std::swap(m[sel], m[r]);
        std::swap(e[sel], e[r]);
        Rat p = m[r][c];
        for (Rat& x : m[r]) x /= p;
        for (Rat& x : e[r]) x /= p;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = 0; j < cols_; ++j) m[i][j] -= f * m[r][j];
            for (size_t j = 0; j < rows_; ++j) e[i][j] -= f * e[r][j];
        }
        pivots_.emplace_back(r, c);
        ++r;
    }
    rref_ = std::move(m);
    ops_ = std::move(e);
}

std::optional<RatVec> LinearSolver::solve(const RatVec& b) const {
    if (b.size() != rows_) fail(Err::DomainError, "LinearSolver rhs size mismatch");
    // transformed rhs: E*b
    RatVec tb(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j)
            if (ops_[i][j] != 0) tb[i] += ops_[i][j] * b[j];
    // consistency: zero rows of rref must have zero rhs
    for (size_t i = pivots_.size(); i < rows_; ++i)
        if (tb[i] != 0) return std::nullopt;
    RatVec x(cols_, Rat(0));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        auto [row, col] = *it;
        Rat v = tb[row];
        for (size_t j = col + 1; j < cols_; ++j)
            if (rref_[row][j] != 0) v -= rref_[row][j] * x[j];
        x[col] = v;
    }
    return x;
}

}  // namespace hol
