#include "sympspin/graded.hpp"

#include <algorithm>

namespace sympspin {

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::Even:
            return "even";
        case Parity::Odd:
            return "odd";
        case Parity::Both:
            return "both";
    }
    return "?";
}

Parity parse_parity(const std::string& s) {
    if (s == "even") {
        return Parity::Even;
    }
    if (s == "odd") {
        return Parity::Odd;
    }
    if (s == "both") {
        return Parity::Both;
    }
    throw Error("unknown parity '" + s + "'");
}

Parity flip(Parity p) {
    switch (p) {
        case Parity::Even:
            return Parity::Odd;
        case Parity::Odd:
            return Parity::Even;
        case Parity::Both:
            return Parity::Both;
    }
    return p;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

bool parity_matches(int degree, Parity p) {
    return p == Parity::Both || (degree % 2 == 0) == (p == Parity::Even);
}

// All exponent vectors of length vars with total degree exactly d.
void compositions(int vars, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == vars - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        compositions(vars, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int vars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (d >= 0) {
        compositions(vars, d, cur, out);
    }
    return out;
}

void validate(const SectorSpec& s) {
    if (s.n < 1 || s.n > kMaxRank) {
        throw Error("sector rank n must be in 1.." + std::to_string(kMaxRank));
    }
}

}  // namespace

std::size_t SectorSpec::dimension() const {
    if (h < 0 || Q < 0) {
        return 0;
    }
    std::size_t xCount = binomial(static_cast<std::size_t>(h + 2 * n - 1), static_cast<std::size_t>(2 * n - 1));
    std::size_t qCount = 0;
    for (int d = 0; d <= Q; ++d) {
        if (parity_matches(d, parity)) {
            qCount += binomial(static_cast<std::size_t>(d + n - 1), static_cast<std::size_t>(n - 1));
        }
    }
    return xCount * qCount;
}

std::string SectorSpec::str() const {
    return "(n=" + std::to_string(n) + ", h=" + std::to_string(h) + ", Q=" + std::to_string(Q) + ", " +
           parity_name(parity) + ")";
}

SectorSpec image_sector(const SectorSpec& domain, const GradingSignature& sig) {
    return {domain.n, domain.h + sig.xShift, domain.Q + sig.qRaise,
            sig.flipsParity ? flip(domain.parity) : domain.parity};
}

GradedBasis::GradedBasis(SectorSpec spec, std::vector<SpinorMonomial> order)
    : spec_(spec), order_(std::move(order)) {
    index_.reserve(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
        if (!monomial_in_sector(order_[k], spec_)) {
            throw Error("monomial " + order_[k].str() + " is not in sector " + spec_.str());
        }
        if (k > 0 && !(order_[k - 1] < order_[k])) {
            throw Error("graded basis must be strictly increasing");
        }
        index_.emplace(order_[k], static_cast<std::uint32_t>(k));
    }
}

std::ptrdiff_t GradedBasis::index_of(const SpinorMonomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool monomial_in_sector(const SpinorMonomial& m, const SectorSpec& spec) {
    return m.rank() == spec.n && m.x_degree() == spec.h && m.q_degree() <= spec.Q &&
           parity_matches(m.q_degree(), spec.parity);
}

GradedBasis enumerate_basis(const SectorSpec& spec) {
    validate(spec);
    std::vector<SpinorMonomial> out;
    auto xs = compositions(2 * spec.n, spec.h);
    for (int d = 0; d <= spec.Q; ++d) {
        if (!parity_matches(d, spec.parity)) {
            continue;
        }
        for (const auto& qe : compositions(spec.n, d)) {
            for (const auto& xe : xs) {
                out.emplace_back(spec.n, xe, qe);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return GradedBasis(spec, std::move(out));
}

SparseVector coordinates(const SpinorPoly& s, const GradedBasis& basis) {
    SparseVector v;
    v.reserve(s.size());
    for (const auto& [m, c] : s.terms()) {
        auto k = basis.index_of(m);
        if (k < 0) {
            throw Error("image monomial " + m.str() + " lies outside sector " + basis.spec().str());
        }
        v.emplace_back(static_cast<std::uint32_t>(k), c);
    }
    // Terms and basis share the monomial order, so v is already sorted.
    return v;
}

SpinorPoly from_coordinates(const SparseVector& v, const GradedBasis& basis) {
    PolyAccumulator acc(basis.spec().n);
    for (const auto& [k, c] : v) {
        acc.add(basis[k], c);
    }
    return std::move(acc).finish();
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t nz = 0;
    for (const auto& c : cols_) {
        nz += c.size();
    }
    return nz;
}

GaussianRational SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = cols_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != col.end() && it->first == r) {
        return it->second;
    }
    return 0;
}

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector clean;
    clean.reserve(v.size());
    for (auto& [r, x] : v) {
        if (r >= rows_) {
            throw Error("row index out of range in sparse matrix column");
        }
        if (!clean.empty() && clean.back().first == r) {
            clean.back().second += x;
            if (clean.back().second.is_zero()) {
                clean.pop_back();
            }
        } else if (!x.is_zero()) {
            clean.emplace_back(r, std::move(x));
        }
    }
    cols_.at(c) = std::move(clean);
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
    std::vector<SparseVector> rows(rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        for (const auto& [r, x] : cols_[c]) {
            rows[r].emplace_back(static_cast<std::uint32_t>(c), x);
        }
    }
    return rows;
}

SparseMatrix SparseMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
    SparseMatrix out(rows_, cols_.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
        out.cols_[c] = cols_.at(perm[c]);
    }
    return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m.cols_[k] = {{static_cast<std::uint32_t>(k), GaussianRational(1)}};
    }
    return m;
}

SparseMatrix operator_matrix(const PolyMap& op, const GradedBasis& domain, const GradedBasis& codomain) {
    return stacked_operator_matrix({op}, domain, codomain);
}

SparseMatrix operator_matrix(const LinearOperator& op, const GradedBasis& domain, const GradedBasis& codomain) {
    return operator_matrix([&op](const SpinorPoly& s) { return op.apply(s); }, domain, codomain);
}

SparseMatrix stacked_operator_matrix(const std::vector<PolyMap>& ops, const GradedBasis& domain,
                                     const GradedBasis& codomain) {
    if (domain.spec().n != codomain.spec().n) {
        throw Error("domain and codomain ranks differ");
    }
    const std::size_t block = codomain.size();
    SparseMatrix m(block * ops.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        SpinorPoly s = SpinorPoly::monomial(domain[j]);
        SparseVector col;
        for (std::size_t k = 0; k < ops.size(); ++k) {
            for (auto& [r, x] : coordinates(ops[k](s), codomain)) {
                col.emplace_back(static_cast<std::uint32_t>(k * block + r), std::move(x));
            }
        }
        m.set_column(j, std::move(col));
    }
    return m;
}

}  // namespace sympspin
