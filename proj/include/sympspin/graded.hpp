#pragma once

#include "sympspin/operators.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sympspin {

enum class Parity { Even, Odd, Both };

std::string parity_name(Parity p);
Parity parse_parity(const std::string& s);
Parity flip(Parity p);

/// Finite truncation of Pol(R^2n) (x) S: x-homogeneity exactly h, total
/// q-degree at most Q, optional q-parity.
struct SectorSpec {
    int n = 1;
    int h = 0;
    int Q = 0;
    Parity parity = Parity::Both;

    friend bool operator==(const SectorSpec&, const SectorSpec&) = default;

    /// C(h+2n-1, 2n-1) * #{q-monomials of degree <= Q with the parity}.
    std::size_t dimension() const;
    std::string str() const;
};

/// Sector spec reached by an operator's grading signature.
SectorSpec image_sector(const SectorSpec& domain, const GradingSignature& sig);

class GradedBasis {
public:
    GradedBasis(SectorSpec spec, std::vector<SpinorMonomial> order);

    const SectorSpec& spec() const { return spec_; }
    const std::vector<SpinorMonomial>& monomials() const { return order_; }
    std::size_t size() const { return order_.size(); }
    const SpinorMonomial& operator[](std::size_t k) const { return order_[k]; }

    /// Position of m, or -1 when m is not in the sector.
    std::ptrdiff_t index_of(const SpinorMonomial& m) const;

private:
    SectorSpec spec_;
    std::vector<SpinorMonomial> order_;
    std::unordered_map<SpinorMonomial, std::uint32_t, MonomialHash> index_;
};

/// Complete, duplicate-free enumeration in ascending monomial order. A
/// sector with negative h or Q is empty (the codomain of D_s on h = 0).
GradedBasis enumerate_basis(const SectorSpec& spec);

bool monomial_in_sector(const SpinorMonomial& m, const SectorSpec& spec);

using SparseVector = std::vector<std::pair<std::uint32_t, GaussianRational>>;

/// Coordinates of s in the basis; throws Error naming the first monomial of
/// s that lies outside the sector.
SparseVector coordinates(const SpinorPoly& s, const GradedBasis& basis);
SpinorPoly from_coordinates(const SparseVector& v, const GradedBasis& basis);

/// Exact sparse matrix, stored by columns. No explicit zeros.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    std::size_t nonzeros() const;

    GaussianRational at(std::size_t r, std::size_t c) const;
    void set_column(std::size_t c, SparseVector v);
    const SparseVector& column(std::size_t c) const { return cols_[c]; }

    std::vector<SparseVector> row_vectors() const;
    SparseMatrix permute_columns(const std::vector<std::size_t>& perm) const;

    static SparseMatrix identity(std::size_t n);

private:
    std::size_t rows_;
    std::vector<SparseVector> cols_;
};

using PolyMap = std::function<SpinorPoly(const SpinorPoly&)>;

/// Column j holds the coordinates of op(domain[j]) in the codomain.
SparseMatrix operator_matrix(const PolyMap& op, const GradedBasis& domain, const GradedBasis& codomain);
SparseMatrix operator_matrix(const LinearOperator& op, const GradedBasis& domain, const GradedBasis& codomain);

/// Vertically stacked matrices of several maps into the same codomain
/// (block k occupies rows [k*|codomain|, (k+1)*|codomain|)).
SparseMatrix stacked_operator_matrix(const std::vector<PolyMap>& ops, const GradedBasis& domain,
                                     const GradedBasis& codomain);

}  // namespace sympspin
