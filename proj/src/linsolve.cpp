#include "ngc/linsolve.hpp"

#include <algorithm>
#include <set>

#include "ngc/errors.hpp"

namespace ngc {

void MonomialIndex::insert(XiWord w, const Monomial& m) {
    if (lookup_.emplace(std::pair<XiWord, Monomial>{w, m}, -1).second) dirty_ = true;
}

// Row numbering follows the sorted lookup order so the index is independent
// of insertion order; recomputed lazily after a batch of insertions.
void MonomialIndex::renumber() const {
    if (!dirty_) return;
    entries_.clear();
    entries_.reserve(lookup_.size());
    for (auto& [k, row] : lookup_) {
        row = static_cast<int>(entries_.size());
        entries_.push_back(k);
    }
    dirty_ = false;
}

MonomialIndex build_index(const std::vector<Multivector>& vs) {
    MonomialIndex idx;
    int degree = -2;
    for (const auto& v : vs) {
        if (v.is_zero()) continue;
        int d = v.degree();
        if (d < 0) throw DimensionMismatch("build_index: mixed xi-degrees within one multivector");
        if (degree == -2)
            degree = d;
        else if (d != degree)
            throw DimensionMismatch("build_index: inputs of mixed xi-degree");
        for (const auto& [w, poly] : v.components())
            for (const auto& [mono, coeff] : poly.terms()) idx.insert(w, mono);
    }
    return idx;
}

Column vectorize(const Multivector& v, const MonomialIndex& idx) {
    Column col(static_cast<size_t>(idx.rows()), Rat(0));
    for (const auto& [w, poly] : v.components())
        for (const auto& [mono, coeff] : poly.terms()) {
            int r = idx.row_of(w, mono);
            if (r < 0)
                throw UnindexedMonomial("vectorize: monomial " + mono.display(v.dim()) +
                                        " not present in the index");
            col[static_cast<size_t>(r)] = coeff;
        }
    return col;
}

SparseRationalMatrix SparseRationalMatrix::from_columns(const std::vector<Column>& columns) {
    int nrows = columns.empty() ? 0 : static_cast<int>(columns.front().size());
    SparseRationalMatrix m(nrows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols_; ++c) m.set_column(c, columns[static_cast<size_t>(c)]);
    return m;
}

SparseRationalMatrix SparseRationalMatrix::identity(int n) {
    SparseRationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

void SparseRationalMatrix::set(int r, int c, const Rat& v) {
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Rat SparseRationalMatrix::at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

void SparseRationalMatrix::set_column(int c, const Column& col) {
    if (static_cast<int>(col.size()) != rows_)
        throw DimensionMismatch("set_column: column length does not match row count");
    for (int r = 0; r < rows_; ++r) set(r, c, col[static_cast<size_t>(r)]);
}

Column SparseRationalMatrix::multiply(const Column& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionMismatch("multiply: vector length does not match column count");
    Column y(static_cast<size_t>(rows_), Rat(0));
    for (const auto& [rc, v] : entries_)
        y[static_cast<size_t>(rc.first)] += v * x[static_cast<size_t>(rc.second)];
    return y;
}

namespace {

using SparseRow = std::map<int, Rat>;

std::vector<SparseRow> matrix_rows(const SparseRationalMatrix& M) {
    std::vector<SparseRow> rows(static_cast<size_t>(M.rows()));
    for (const auto& [rc, v] : M.entries()) rows[static_cast<size_t>(rc.first)][rc.second] = v;
    return rows;
}

/// In-place reduced row echelon form over columns [0, ncols); entries at
/// column indices >= ncols ride along (augmented part). Pivot rows are
/// chosen by minimal fill to keep the elimination sparse. Returns the pivot
/// column of each of the first rank rows.
std::vector<int> reduce(std::vector<SparseRow>& rows, int ncols) {
    std::vector<int> pivots;
    size_t next = 0;
    for (int col = 0; col < ncols && next < rows.size(); ++col) {
        size_t best = rows.size();
        for (size_t r = next; r < rows.size(); ++r) {
            auto it = rows[r].begin();
            if (it == rows[r].end() || it->first != col) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);
        SparseRow& pivot = rows[next];
        Rat inv = 1 / pivot.at(col);
        for (auto& [c, v] : pivot) v *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            Rat f = it->second;
            rows[r].erase(it);
            for (const auto& [c, v] : pivot) {
                if (c == col) continue;
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    rows[r][c] = -f * v;
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) rows[r].erase(jt);
                }
            }
        }
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

/// Reduce v (in place) against echelon rows with the given pivot columns.
void reduce_against(SparseRow& v, const std::vector<SparseRow>& rows,
                    const std::vector<int>& pivots) {
    for (size_t i = 0; i < pivots.size(); ++i) {
        auto it = v.find(pivots[i]);
        if (it == v.end()) continue;
        Rat f = it->second;
        v.erase(it);
        for (const auto& [c, w] : rows[i]) {
            if (c == pivots[i]) continue;
            auto jt = v.find(c);
            if (jt == v.end()) {
                v[c] = -f * w;
            } else {
                jt->second -= f * w;
                if (jt->second == 0) v.erase(jt);
            }
        }
    }
}

SparseRow to_sparse(const Column& c) {
    SparseRow r;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r[static_cast<int>(i)] = c[i];
    return r;
}

}  // namespace

std::optional<Column> solve_particular(const SparseRationalMatrix& M, const Column& b) {
    if (static_cast<int>(b.size()) != M.rows())
        throw DimensionMismatch("solve_particular: right-hand side length does not match rows");
    auto rows = matrix_rows(M);
    int aug = M.cols();
    for (int r = 0; r < M.rows(); ++r)
        if (b[static_cast<size_t>(r)] != 0) rows[static_cast<size_t>(r)][aug] = b[static_cast<size_t>(r)];
    auto pivots = reduce(rows, M.cols());
    // A leftover row supported only on the augmented column is inconsistent.
    for (size_t r = pivots.size(); r < rows.size(); ++r)
        if (!rows[r].empty()) return std::nullopt;
    Column x(static_cast<size_t>(M.cols()), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        auto it = rows[i].find(aug);
        if (it != rows[i].end()) x[static_cast<size_t>(pivots[i])] = it->second;
    }
    return x;
}

std::vector<Column> kernel_basis(const SparseRationalMatrix& M) {
    auto rows = matrix_rows(M);
    auto pivots = reduce(rows, M.cols());
    std::set<int> pivot_set(pivots.begin(), pivots.end());
    std::vector<Column> basis;
    for (int free = 0; free < M.cols(); ++free) {
        if (pivot_set.count(free)) continue;
        Column k(static_cast<size_t>(M.cols()), Rat(0));
        k[static_cast<size_t>(free)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            auto it = rows[i].find(free);
            if (it != rows[i].end()) k[static_cast<size_t>(pivots[i])] = -it->second;
        }
        basis.push_back(std::move(k));
    }
    return basis;
}

int rank(const SparseRationalMatrix& M) {
    auto rows = matrix_rows(M);
    return static_cast<int>(reduce(rows, M.cols()).size());
}

int nullity(const SparseRationalMatrix& M) { return M.cols() - rank(M); }

std::vector<Column> quotient_basis(const std::vector<Column>& big,
                                   const std::vector<Column>& small) {
    // Echelonize the big span and verify small sits inside it.
    std::vector<SparseRow> big_rows;
    size_t ambient = 0;
    for (const auto& v : big) {
        ambient = std::max(ambient, v.size());
        big_rows.push_back(to_sparse(v));
    }
    auto big_pivots = reduce(big_rows, static_cast<int>(ambient));
    big_rows.resize(big_pivots.size());
    for (const auto& v : small) {
        SparseRow s = to_sparse(v);
        reduce_against(s, big_rows, big_pivots);
        if (!s.empty()) throw NotASubspace("quotient_basis: small span not contained in big span");
    }
    // Grow an echelon basis from small and keep each big vector that
    // enlarges it; those originals represent a basis of the quotient.
    std::vector<SparseRow> span_rows;
    std::vector<int> span_pivots;
    auto absorb = [&](SparseRow s) -> bool {
        reduce_against(s, span_rows, span_pivots);
        if (s.empty()) return false;
        int piv = s.begin()->first;
        Rat inv = 1 / s.begin()->second;
        for (auto& [c, v] : s) v *= inv;
        for (size_t i = 0; i < span_rows.size(); ++i) {
            auto it = span_rows[i].find(piv);
            if (it == span_rows[i].end()) continue;
            Rat f = it->second;
            span_rows[i].erase(it);
            for (const auto& [c, v] : s) {
                if (c == piv) continue;
                auto jt = span_rows[i].find(c);
                if (jt == span_rows[i].end()) {
                    span_rows[i][c] = -f * v;
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) span_rows[i].erase(jt);
                }
            }
        }
        size_t pos = std::lower_bound(span_pivots.begin(), span_pivots.end(), piv) -
                     span_pivots.begin();
        span_pivots.insert(span_pivots.begin() + static_cast<long>(pos), piv);
        span_rows.insert(span_rows.begin() + static_cast<long>(pos), std::move(s));
        return true;
    };
    for (const auto& v : small) absorb(to_sparse(v));
    std::vector<Column> reps;
    for (const auto& v : big)
        if (absorb(to_sparse(v))) reps.push_back(v);
    return reps;
}

}  // namespace ngc
