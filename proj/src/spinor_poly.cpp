#include "sympspin/spinor_poly.hpp"

#include <algorithm>

namespace sympspin {

void require_same_rank(int a, int b) {
    if (a != b) {
        throw Error("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

namespace {

void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
        throw Error("rank " + std::to_string(rank) + " outside supported range 1.." + std::to_string(kMaxRank));
    }
}

std::uint8_t checked_exp(int e) {
    if (e < 0 || e > 255) {
        throw Error("exponent " + std::to_string(e) + " out of range");
    }
    return static_cast<std::uint8_t>(e);
}

}  // namespace

SpinorMonomial::SpinorMonomial(int rank) : rank_(static_cast<std::uint8_t>(rank)) { check_rank(rank); }

SpinorMonomial::SpinorMonomial(int rank, std::span<const int> xExp, std::span<const int> qExp) : SpinorMonomial(rank) {
    if (xExp.size() != static_cast<std::size_t>(2 * rank) || qExp.size() != static_cast<std::size_t>(rank)) {
        throw Error("exponent sequence lengths do not match rank " + std::to_string(rank));
    }
    for (int m = 0; m < 2 * rank; ++m) {
        exps_[m] = checked_exp(xExp[m]);
    }
    for (int j = 0; j < rank; ++j) {
        exps_[2 * rank + j] = checked_exp(qExp[j]);
    }
}

int SpinorMonomial::x_degree() const {
    int d = 0;
    for (int m = 0; m < 2 * rank_; ++m) {
        d += exps_[m];
    }
    return d;
}

int SpinorMonomial::q_degree() const {
    int d = 0;
    for (int j = 2 * rank_; j < nvars(); ++j) {
        d += exps_[j];
    }
    return d;
}

bool SpinorMonomial::shift_x(int m, int delta) {
    int e = exps_[m - 1] + delta;
    if (e < 0) {
        return false;
    }
    exps_[m - 1] = checked_exp(e);
    return true;
}

bool SpinorMonomial::shift_q(int j, int delta) {
    int e = exps_[2 * rank_ + j - 1] + delta;
    if (e < 0) {
        return false;
    }
    exps_[2 * rank_ + j - 1] = checked_exp(e);
    return true;
}

std::string SpinorMonomial::str() const {
    std::string out;
    auto emit = [&out](char var, int index, int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var;
        out += std::to_string(index);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    };
    for (int m = 1; m <= 2 * rank_; ++m) {
        emit('x', m, x_exp(m));
    }
    for (int j = 1; j <= rank_; ++j) {
        emit('q', j, q_exp(j));
    }
    return out.empty() ? "1" : out;
}

std::size_t SpinorMonomial::hash() const {
    std::size_t h = rank_;
    for (int k = 0; k < nvars(); ++k) {
        h = h * 131 + exps_[k];
    }
    return h;
}

std::strong_ordering operator<=>(const SpinorMonomial& a, const SpinorMonomial& b) {
    if (a.rank_ != b.rank_) {
        return a.rank_ <=> b.rank_;
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    for (int k = 0; k < a.nvars(); ++k) {
        if (a.exps_[k] != b.exps_[k]) {
            return a.exps_[k] <=> b.exps_[k];
        }
    }
    return std::strong_ordering::equal;
}

SpinorMonomial operator*(const SpinorMonomial& a, const SpinorMonomial& b) {
    require_same_rank(a.rank(), b.rank());
    SpinorMonomial out = a;
    for (int k = 0; k < a.nvars(); ++k) {
        out.exps_[k] = checked_exp(a.exps_[k] + b.exps_[k]);
    }
    return out;
}

SpinorPoly::SpinorPoly(int rank) : rank_(rank) { check_rank(rank); }

SpinorPoly SpinorPoly::constant(int rank, const GaussianRational& c) {
    return monomial(SpinorMonomial(rank), c);
}

SpinorPoly SpinorPoly::monomial(const SpinorMonomial& m, const GaussianRational& c) {
    SpinorPoly p(m.rank());
    if (!c.is_zero()) {
        p.terms_.push_back({m, c});
    }
    return p;
}

SpinorPoly SpinorPoly::x(int rank, int m) {
    if (m < 1 || m > 2 * rank) {
        throw Error("variable x" + std::to_string(m) + " exceeds rank " + std::to_string(rank));
    }
    SpinorMonomial mono(rank);
    mono.shift_x(m, 1);
    return monomial(mono);
}

SpinorPoly SpinorPoly::q(int rank, int j) {
    if (j < 1 || j > rank) {
        throw Error("variable q" + std::to_string(j) + " exceeds rank " + std::to_string(rank));
    }
    SpinorMonomial mono(rank);
    mono.shift_q(j, 1);
    return monomial(mono);
}

GaussianRational SpinorPoly::coeff(const SpinorMonomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const SpinorMonomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) {
        return it->coef;
    }
    return 0;
}

int SpinorPoly::max_x_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.x_degree());
    }
    return d;
}

int SpinorPoly::max_q_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.q_degree());
    }
    return d;
}

namespace {

// Merge of two sorted term lists: a + c*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, const GaussianRational& c) {
    if (c.is_zero()) {
        return a;
    }
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back({b[j].mono, b[j].coef * c});
            ++j;
        } else {
            GaussianRational s = a[i].coef + b[j].coef * c;
            if (!s.is_zero()) {
                out.push_back({a[i].mono, std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
    require_same_rank(rank_, o.rank_);
    terms_ = merge_terms(terms_, o.terms_, 1);
    return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& o) {
    require_same_rank(rank_, o.rank_);
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

SpinorPoly& SpinorPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coef *= c;
    }
    return *this;
}

SpinorPoly operator*(const SpinorPoly& a, const SpinorPoly& b) {
    require_same_rank(a.rank_, b.rank_);
    PolyAccumulator acc(a.rank_);
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            acc.add(s.mono * t.mono, s.coef * t.coef);
        }
    }
    return std::move(acc).finish();
}

std::string SpinorPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coef] = *it;
        bool constant = mono.degree() == 0;
        std::string term;
        if (constant) {
            term = coef.str();
        } else if (coef.is_one()) {
            term = mono.str();
        } else if (coef == GaussianRational(-1)) {
            term = "-" + mono.str();
        } else {
            term = coef.str() + "*" + mono.str();
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

void PolyAccumulator::add(const SpinorMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
    }
}

void PolyAccumulator::add(const SpinorPoly& p, const GaussianRational& c) {
    require_same_rank(rank_, p.rank());
    for (const auto& t : p.terms()) {
        add(t.mono, c.is_one() ? t.coef : t.coef * c);
    }
}

SpinorPoly PolyAccumulator::finish() && {
    SpinorPoly p(rank_);
    p.terms_.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
        if (!c.is_zero()) {
            p.terms_.push_back({m, std::move(c)});
        }
    }
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    acc_.clear();
    return p;
}

SpinorPoly poly_combine(const SpinorPoly& p, const SpinorPoly& q, const GaussianRational& c) {
    require_same_rank(p.rank(), q.rank());
    SpinorPoly out(p.rank());
    out.terms_ = merge_terms(p.terms(), q.terms(), c);
    return out;
}

SpinorPoly poly_mul(const SpinorPoly& p, const SpinorPoly& q) { return p * q; }

}  // namespace sympspin
