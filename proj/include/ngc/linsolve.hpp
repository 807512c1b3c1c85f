#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ngc/multivector.hpp"

namespace ngc {

/// Bijection between (xi-component, monomial) pairs and dense row indices.
/// Deterministic: rows are ordered by component word, then canonical
/// monomial order, independent of the order the inputs were supplied.
class MonomialIndex {
public:
    MonomialIndex() = default;

    int rows() const {
        renumber();
        return static_cast<int>(entries_.size());
    }
    const std::vector<std::pair<XiWord, Monomial>>& entries() const {
        renumber();
        return entries_;
    }

    /// Row index of (w, m), or -1 when not indexed.
    int row_of(XiWord w, const Monomial& m) const {
        renumber();
        auto it = lookup_.find({w, m});
        return it == lookup_.end() ? -1 : it->second;
    }

    void insert(XiWord w, const Monomial& m);

private:
    void renumber() const;

    mutable bool dirty_ = false;
    mutable std::vector<std::pair<XiWord, Monomial>> entries_;
    mutable std::map<std::pair<XiWord, Monomial>, int> lookup_;
};

/// Union of the monomial supports of vs, per xi-component.
MonomialIndex build_index(const std::vector<Multivector>& vs);

using Column = std::vector<Rat>;

/// Exact coordinates of v over idx. Throws UnindexedMonomial if v carries a
/// monomial outside the index.
Column vectorize(const Multivector& v, const MonomialIndex& idx);

/// Sparse matrix over the rationals; stores only nonzero entries.
class SparseRationalMatrix {
public:
    SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseRationalMatrix from_columns(const std::vector<Column>& columns);
    static SparseRationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

    void set(int r, int c, const Rat& v);
    Rat at(int r, int c) const;
    void set_column(int c, const Column& col);

    Column multiply(const Column& x) const;

private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Rat> entries_;
};

/// Any exact x with M x = b, or nullopt when b is outside the column space.
std::optional<Column> solve_particular(const SparseRationalMatrix& M, const Column& b);

/// Exact basis of the right kernel (columns of length cols()).
std::vector<Column> kernel_basis(const SparseRationalMatrix& M);

int rank(const SparseRationalMatrix& M);
int nullity(const SparseRationalMatrix& M);

/// Representatives of a basis of span(big)/span(small), chosen among the
/// vectors of big themselves. Throws NotASubspace when small is not
/// contained in span(big).
std::vector<Column> quotient_basis(const std::vector<Column>& big,
                                   const std::vector<Column>& small);

}  // namespace ngc
