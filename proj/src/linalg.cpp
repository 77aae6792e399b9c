#include "sympspin/linalg.hpp"

#include <algorithm>

namespace sympspin {

SparseVector axpy(const SparseVector& v, const GaussianRational& c, const SparseVector& w) {
    SparseVector out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -(c * w[j].second));
            ++j;
        } else {
            GaussianRational x = v[i].second - c * w[j].second;
            if (!x.is_zero()) {
                out.emplace_back(v[i].first, std::move(x));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

const GaussianRational* entry(const SparseVector& v, std::uint32_t col) {
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::uint32_t key) { return e.first < key; });
    return it != v.end() && it->first == col ? &it->second : nullptr;
}

void normalize(SparseVector& v, std::uint32_t pivotCol) {
    GaussianRational inv = entry(v, pivotCol)->inverse();
    if (inv.is_one()) {
        return;
    }
    for (auto& e : v) {
        e.second *= inv;
    }
}

}  // namespace

SparseVector Echelon::reduce(SparseVector v) const {
    while (!v.empty()) {
        std::uint32_t c = lead(v);
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            // With highest-first pivots, lower entries may still hit pivots;
            // only the lead matters for span membership.
            return v;
        }
        GaussianRational factor = *entry(v, c);
        v = axpy(v, factor, it->second);
    }
    return v;
}

bool Echelon::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) {
        return false;
    }
    std::uint32_t c = lead(v);
    normalize(v, c);
    rows_.emplace(c, std::move(v));
    reduced_ = false;
    return true;
}

void Echelon::make_reduced() {
    if (reduced_) {
        return;
    }
    // Process rows so that every row used for elimination is already reduced:
    // for lowest-first pivots the non-pivot entries sit to the right, so go
    // from the largest pivot downwards; mirror image otherwise.
    auto eliminate = [this](SparseVector& row, std::uint32_t own) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [col, val] : row) {
                if (col == own) {
                    continue;
                }
                auto it = rows_.find(col);
                if (it != rows_.end()) {
                    GaussianRational factor = val;
                    row = axpy(row, factor, it->second);
                    changed = true;
                    break;
                }
            }
        }
    };
    if (pivot_ == Pivot::LowestFirst) {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            eliminate(it->second, it->first);
        }
    } else {
        for (auto& [col, row] : rows_) {
            eliminate(row, col);
        }
    }
    reduced_ = true;
}

SubspaceBasis::SubspaceBasis(std::size_t ambientDim) : ambientDim_(ambientDim) {}

SubspaceBasis::SubspaceBasis(std::shared_ptr<const GradedBasis> ambient)
    : ambient_(std::move(ambient)), ambientDim_(ambient_ ? ambient_->size() : 0) {
    if (!ambient_) {
        throw Error("null ambient basis");
    }
}

void SubspaceBasis::assign(const std::vector<SparseVector>& vectors) {
    Echelon e(Echelon::Pivot::LowestFirst);
    for (const auto& v : vectors) {
        if (!v.empty() && v.back().first >= ambientDim_) {
            throw Error("vector coordinate exceeds ambient dimension");
        }
        e.insert(v);
    }
    e.make_reduced();
    vectors_.clear();
    vectors_.reserve(e.rank());
    for (const auto& [col, row] : e.rows()) {
        vectors_.push_back(row);
    }
}

SubspaceBasis SubspaceBasis::span(std::size_t ambientDim, const std::vector<SparseVector>& vectors) {
    SubspaceBasis s(ambientDim);
    s.assign(vectors);
    return s;
}

SubspaceBasis SubspaceBasis::span(std::shared_ptr<const GradedBasis> ambient, const std::vector<SparseVector>& vectors) {
    SubspaceBasis s(std::move(ambient));
    s.assign(vectors);
    return s;
}

SubspaceBasis SubspaceBasis::span(std::shared_ptr<const GradedBasis> ambient, const std::vector<SpinorPoly>& polys) {
    std::vector<SparseVector> vs;
    vs.reserve(polys.size());
    for (const auto& p : polys) {
        vs.push_back(coordinates(p, *ambient));
    }
    return span(std::move(ambient), vs);
}

SubspaceBasis SubspaceBasis::full(std::shared_ptr<const GradedBasis> ambient) {
    SubspaceBasis s(std::move(ambient));
    s.vectors_.reserve(s.ambientDim_);
    for (std::uint32_t k = 0; k < s.ambientDim_; ++k) {
        s.vectors_.push_back({{k, GaussianRational(1)}});
    }
    return s;
}

bool SubspaceBasis::contains(const SparseVector& v) const {
    SparseVector r = v;
    for (const auto& b : vectors_) {
        if (r.empty()) {
            break;
        }
        if (const GaussianRational* x = entry(r, b.front().first)) {
            GaussianRational factor = *x;
            r = axpy(r, factor, b);
        }
    }
    return r.empty();
}

bool SubspaceBasis::contains(const SpinorPoly& s) const {
    if (!ambient_) {
        throw Error("subspace has no graded ambient");
    }
    SparseVector v;
    for (const auto& [m, c] : s.terms()) {
        auto k = ambient_->index_of(m);
        if (k < 0) {
            return false;
        }
        v.emplace_back(static_cast<std::uint32_t>(k), c);
    }
    return contains(v);
}

std::vector<SpinorPoly> SubspaceBasis::polys() const {
    if (!ambient_) {
        throw Error("subspace has no graded ambient");
    }
    std::vector<SpinorPoly> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) {
        out.push_back(from_coordinates(v, *ambient_));
    }
    return out;
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambientDim_ != b.ambientDim_ || a.vectors_.size() != b.vectors_.size()) {
        return false;
    }
    if (a.ambient_ && b.ambient_ && !(a.ambient_->spec() == b.ambient_->spec())) {
        return false;
    }
    for (std::size_t k = 0; k < a.vectors_.size(); ++k) {
        const auto& u = a.vectors_[k];
        const auto& v = b.vectors_[k];
        if (u.size() != v.size()) {
            return false;
        }
        for (std::size_t t = 0; t < u.size(); ++t) {
            if (u[t].first != v[t].first || !(u[t].second == v[t].second)) {
                return false;
            }
        }
    }
    return true;
}

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b) {
    bool same = a.ambient_dim() == b.ambient_dim();
    if (same && a.ambient() && b.ambient()) {
        same = a.ambient()->spec() == b.ambient()->spec();
    } else if (same) {
        same = !a.ambient() && !b.ambient();
    }
    if (!same) {
        throw Error("subspaces live in different ambient spaces");
    }
}

std::size_t rank(const SparseMatrix& m) {
    Echelon e(Echelon::Pivot::HighestFirst);
    for (auto& row : m.row_vectors()) {
        if (e.rank() == m.cols()) {
            break;
        }
        e.insert(std::move(row));
    }
    return e.rank();
}

namespace {

std::vector<SparseVector> kernel_vectors(const SparseMatrix& m) {
    // Highest-first pivots: after back-substitution each row is
    // e_lead + (entries at free columns below lead), so the kernel vector of a
    // free column f has its first nonzero (=1) at f and is zero at all other
    // free columns. This is already the canonical reduced echelon form.
    Echelon e(Echelon::Pivot::HighestFirst);
    for (auto& row : m.row_vectors()) {
        if (e.rank() == m.cols()) {
            break;
        }
        e.insert(std::move(row));
    }
    e.make_reduced();
    std::vector<SparseVector> ker(m.cols());
    std::vector<bool> isPivot(m.cols(), false);
    for (const auto& [col, row] : e.rows()) {
        isPivot[col] = true;
    }
    for (std::uint32_t f = 0; f < m.cols(); ++f) {
        if (!isPivot[f]) {
            ker[f].emplace_back(f, GaussianRational(1));
        }
    }
    for (const auto& [col, row] : e.rows()) {
        for (const auto& [f, val] : row) {
            if (f != col) {
                ker[f].emplace_back(col, -val);
            }
        }
    }
    std::vector<SparseVector> out;
    for (std::uint32_t f = 0; f < m.cols(); ++f) {
        if (!isPivot[f]) {
            std::sort(ker[f].begin(), ker[f].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.push_back(std::move(ker[f]));
        }
    }
    return out;
}

}  // namespace

SubspaceBasis kernel_basis(const SparseMatrix& m) { return SubspaceBasis::span(m.cols(), kernel_vectors(m)); }

SubspaceBasis kernel_basis(const SparseMatrix& m, std::shared_ptr<const GradedBasis> domain) {
    if (!domain || domain->size() != m.cols()) {
        throw Error("domain basis does not match matrix columns");
    }
    return SubspaceBasis::span(std::move(domain), kernel_vectors(m));
}

namespace {

SubspaceBasis like(const SubspaceBasis& a, const std::vector<SparseVector>& vs) {
    return a.ambient() ? SubspaceBasis::span(a.ambient(), vs) : SubspaceBasis::span(a.ambient_dim(), vs);
}

}  // namespace

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    std::vector<SparseVector> vs = a.vectors();
    vs.insert(vs.end(), b.vectors().begin(), b.vectors().end());
    return like(a, vs);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    // Kernel of [A | B] (as columns): pairs (alpha, beta) with A alpha = -B beta.
    const std::size_t k = a.dim();
    SparseMatrix m(a.ambient_dim(), k + b.dim());
    for (std::size_t c = 0; c < k; ++c) {
        m.set_column(c, a.vectors()[c]);
    }
    for (std::size_t c = 0; c < b.dim(); ++c) {
        m.set_column(k + c, b.vectors()[c]);
    }
    std::vector<SparseVector> out;
    for (const auto& kv : kernel_vectors(m)) {
        SparseVector acc;
        for (const auto& [idx, coef] : kv) {
            if (idx < k) {
                acc = axpy(acc, -coef, a.vectors()[idx]);
            }
        }
        out.push_back(std::move(acc));
    }
    return like(a, out);
}

bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner) {
    require_same_ambient(outer, inner);
    return std::all_of(inner.vectors().begin(), inner.vectors().end(),
                       [&outer](const SparseVector& v) { return outer.contains(v); });
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    return a == b;
}

}  // namespace sympspin
