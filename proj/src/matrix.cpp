#include "fstk/matrix.hpp"

#include <stdexcept>

namespace fstk {

namespace {
const Rat kZero = 0;

using SparseRow = std::map<std::size_t, Rat>;

// row -= factor * other. Takes factor by value: callers pass references into
// row itself, which the loop below may erase.
void axpy_row(SparseRow& row, Rat factor, const SparseRow& other) {
    if (factor == 0) return;
    for (const auto& [c, v] : other) {
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, -factor * v);
        } else {
            it->second -= factor * v;
            if (it->second == 0) row.erase(it);
        }
    }
}

std::vector<SparseRow> to_rows(const RatMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) rows[rc.first].emplace(rc.second, v);
    return rows;
}
} // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

const Rat& RatMatrix::get(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rat& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::set");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rat& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::add_to");
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0) entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::runtime_error("RatMatrix::mul shape mismatch");
    // Group the right factor by row for the sparse product.
    std::vector<SparseRow> rhs = to_rows(other);
    RatMatrix out(rows_, other.cols_);
    for (const auto& [rc, v] : entries_) {
        for (const auto& [c2, w] : rhs[rc.second]) out.add_to(rc.first, c2, v * w);
    }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::runtime_error("RatMatrix::apply shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (const auto& [rc, e] : entries_) out[rc.first] += e * v[rc.second];
    return out;
}

Echelon echelon_form(const RatMatrix& m) {
    std::vector<SparseRow> rows = to_rows(m);
    std::vector<bool> used(rows.size(), false);
    Echelon e;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        // Pivot rule: smallest remaining row index with a nonzero in this column.
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it != rows[r].end()) { pivot = r; break; }
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        SparseRow prow = std::move(rows[pivot]);
        rows[pivot].clear();
        Rat lead = prow[col];
        if (lead != 1)
            for (auto& [c, v] : prow) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            auto it = rows[r].find(col);
            if (it != rows[r].end()) axpy_row(rows[r], it->second, prow);
        }
        // Also reduce previously found pivot rows for a full RREF.
        for (auto& done : e.rows) {
            auto it = done.find(col);
            if (it != done.end()) axpy_row(done, it->second, prow);
        }
        e.pivot_cols.push_back(col);
        e.rows.push_back(std::move(prow));
        ++e.rank;
    }
    return e;
}

std::size_t rank(const RatMatrix& m) { return echelon_form(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    RatMatrix out(m.cols(), m.cols() - e.rank);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set(free_col, k, 1);
        for (std::size_t i = 0; i < e.rank; ++i) {
            auto it = e.rows[i].find(free_col);
            if (it != e.rows[i].end()) out.set(e.pivot_cols[i], k, -it->second);
        }
        ++k;
    }
    return out;
}

std::vector<Rat> reduce_against(const Echelon& e, std::vector<Rat>& v) {
    std::vector<Rat> coeffs(e.rank, Rat(0));
    for (std::size_t i = 0; i < e.rank; ++i) {
        Rat f = v[e.pivot_cols[i]];
        if (f == 0) continue;
        coeffs[i] = f;
        for (const auto& [c, w] : e.rows[i]) v[c] -= f * w;
    }
    return coeffs;
}

RatMatrix solve_in_span(const RatMatrix& basis, const RatMatrix& target) {
    if (basis.rows() != target.rows())
        throw std::runtime_error("solve_in_span shape mismatch");
    // Transpose the basis columns into RREF rows, remembering the column
    // operations so coordinates can be recovered: eliminate on [basis | I].
    std::size_t n = basis.rows(), k = basis.cols();
    RatMatrix aug(n + k, k);
    for (const auto& [rc, v] : basis.entries()) aug.set(rc.first, rc.second, v);
    for (std::size_t j = 0; j < k; ++j) aug.set(n + j, j, 1);
    // Echelonize the transpose: treat columns of aug as vectors. Simpler:
    // run RREF on aug^T rows.
    RatMatrix augT(k, n + k);
    for (const auto& [rc, v] : aug.entries()) augT.set(rc.second, rc.first, v);
    Echelon e = echelon_form(augT);
    if (e.rank != k) throw std::runtime_error("solve_in_span: dependent basis");
    // Pivot columns of augT all lie among the first n coordinates because the
    // basis columns are independent. For each target column, reduce and read
    // off coefficients of the original columns from the bookkeeping part.
    RatMatrix x(k, target.cols());
    for (std::size_t j = 0; j < target.cols(); ++j) {
        std::vector<Rat> v(n + k, Rat(0));
        for (std::size_t r = 0; r < n; ++r) {
            const Rat& t = target.get(r, j);
            if (t != 0) v[r] = t;
        }
        std::vector<Rat> cf = reduce_against(e, v);
        for (std::size_t r = 0; r < n; ++r)
            if (v[r] != 0) throw std::runtime_error("solve_in_span: inconsistent system");
        // The residual bookkeeping coordinates carry -x.
        for (std::size_t r = 0; r < k; ++r)
            if (v[n + r] != 0) x.set(r, j, -v[n + r]);
    }
    return x;
}

} // namespace fstk
