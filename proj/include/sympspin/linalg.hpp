#pragma once

#include "sympspin/graded.hpp"

#include <map>
#include <memory>
#include <optional>

namespace sympspin {

/// Incremental exact row reduction over Q(i). The pivot of a row is its
/// lowest-index nonzero (LowestFirst) or highest-index nonzero
/// (HighestFirst); pivots are normalized to 1.
class Echelon {
public:
    enum class Pivot { LowestFirst, HighestFirst };

    explicit Echelon(Pivot pivot = Pivot::LowestFirst) : pivot_(pivot) {}

    /// Adds a row; returns false if it was dependent on the rows so far.
    bool insert(SparseVector v);
    /// Reduces v against the current rows (lead positions only). Result is
    /// zero iff v lies in the row span.
    SparseVector reduce(SparseVector v) const;
    bool in_span(const SparseVector& v) const { return reduce(v).empty(); }

    /// Back-substitutes so every pivot column is zero in all other rows.
    void make_reduced();

    std::size_t rank() const { return rows_.size(); }
    /// Rows keyed by pivot column.
    const std::map<std::uint32_t, SparseVector>& rows() const { return rows_; }

private:
    std::uint32_t lead(const SparseVector& v) const { return pivot_ == Pivot::LowestFirst ? v.front().first : v.back().first; }

    Pivot pivot_;
    std::map<std::uint32_t, SparseVector> rows_;
    bool reduced_ = true;
};

/// v - c*w for sorted sparse vectors.
SparseVector axpy(const SparseVector& v, const GaussianRational& c, const SparseVector& w);

/// Subspace of a coordinate space, stored in canonical reduced row echelon
/// form: pivot = first nonzero coordinate, pivots equal 1 and vanish in the
/// other vectors, vectors sorted by pivot. Two subspaces are equal iff their
/// stored vectors are identical.
class SubspaceBasis {
public:
    /// Subspace of plain coordinate space of the given dimension.
    explicit SubspaceBasis(std::size_t ambientDim);
    /// Subspace of the span of a graded basis.
    explicit SubspaceBasis(std::shared_ptr<const GradedBasis> ambient);

    static SubspaceBasis span(std::size_t ambientDim, const std::vector<SparseVector>& vectors);
    static SubspaceBasis span(std::shared_ptr<const GradedBasis> ambient, const std::vector<SparseVector>& vectors);
    /// Throws if some polynomial lies outside the ambient sector.
    static SubspaceBasis span(std::shared_ptr<const GradedBasis> ambient, const std::vector<SpinorPoly>& polys);
    static SubspaceBasis full(std::shared_ptr<const GradedBasis> ambient);

    std::size_t dim() const { return vectors_.size(); }
    std::size_t ambient_dim() const { return ambientDim_; }
    const std::shared_ptr<const GradedBasis>& ambient() const { return ambient_; }
    const std::vector<SparseVector>& vectors() const { return vectors_; }

    bool contains(const SparseVector& v) const;
    bool contains(const SpinorPoly& s) const;
    /// Basis vectors as spinors; requires a graded ambient.
    std::vector<SpinorPoly> polys() const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

private:
    void assign(const std::vector<SparseVector>& vectors);

    std::shared_ptr<const GradedBasis> ambient_;
    std::size_t ambientDim_;
    std::vector<SparseVector> vectors_;
};

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b);

std::size_t rank(const SparseMatrix& m);
/// Exact nullspace in canonical form; dim + rank = cols.
SubspaceBasis kernel_basis(const SparseMatrix& m);
/// Nullspace attached to the domain basis of the matrix.
SubspaceBasis kernel_basis(const SparseMatrix& m, std::shared_ptr<const GradedBasis> domain);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
/// inner is a subspace of outer.
bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner);
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace sympspin
