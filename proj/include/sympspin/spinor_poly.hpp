#pragma once

#include "sympspin/gaussian_rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace sympspin {

/// Largest supported rank n (so 2n x-variables and n q-variables).
inline constexpr int kMaxRank = 8;

/// Monomial x_1^a_1 ... x_{2n}^a_{2n} q_1^c_1 ... q_n^c_n. Variable indices
/// in the public API are 1-based, matching the usual x_m / q_j labels.
///
/// Order is graded lexicographic on the total degree, with
/// x_1 > x_2 > ... > x_{2n} > q_1 > ... > q_n.
class SpinorMonomial {
public:
    explicit SpinorMonomial(int rank);
    SpinorMonomial(int rank, std::span<const int> xExp, std::span<const int> qExp);

    int rank() const { return rank_; }
    int x_exp(int m) const { return exps_[m - 1]; }
    int q_exp(int j) const { return exps_[2 * rank_ + j - 1]; }
    int x_degree() const;
    int q_degree() const;
    int degree() const { return x_degree() + q_degree(); }

    /// Exponent shift; returns false when an exponent would become negative.
    bool shift_x(int m, int delta);
    bool shift_q(int j, int delta);

    std::string str() const;
    std::size_t hash() const;

    friend bool operator==(const SpinorMonomial& a, const SpinorMonomial& b) {
        return a.rank_ == b.rank_ && a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const SpinorMonomial& a, const SpinorMonomial& b);

    /// Product (exponents add); ranks must match.
    friend SpinorMonomial operator*(const SpinorMonomial& a, const SpinorMonomial& b);

private:
    int nvars() const { return 3 * rank_; }

    std::array<std::uint8_t, 3 * kMaxRank> exps_{};
    std::uint8_t rank_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const SpinorMonomial& m) const { return m.hash(); }
};

struct Term {
    SpinorMonomial mono;
    GaussianRational coef;
};

/// Sparse polynomial in x_1..x_{2n}, q_1..q_n over Q(i). Represents the
/// spinor (sum of terms) * exp(-|q|^2/2); the Gaussian is never stored.
/// Terms are kept in ascending monomial order with no zero coefficients.
class SpinorPoly {
public:
    explicit SpinorPoly(int rank);

    static SpinorPoly constant(int rank, const GaussianRational& c);
    static SpinorPoly monomial(const SpinorMonomial& m, const GaussianRational& c = 1);
    static SpinorPoly x(int rank, int m);
    static SpinorPoly q(int rank, int j);

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    GaussianRational coeff(const SpinorMonomial& m) const;

    /// Largest x-degree / q-degree among terms; -1 for the zero polynomial.
    int max_x_degree() const;
    int max_q_degree() const;

    SpinorPoly& operator+=(const SpinorPoly& o);
    SpinorPoly& operator-=(const SpinorPoly& o);
    SpinorPoly& operator*=(const GaussianRational& c);
    friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
    friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
    friend SpinorPoly operator*(SpinorPoly a, const GaussianRational& c) { return a *= c; }
    friend SpinorPoly operator*(const GaussianRational& c, SpinorPoly a) { return a *= c; }
    friend SpinorPoly operator*(const SpinorPoly& a, const SpinorPoly& b);
    SpinorPoly operator-() const { return *this * GaussianRational(-1); }

    friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
        if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) {
            return false;
        }
        for (std::size_t k = 0; k < a.terms_.size(); ++k) {
            if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coef == b.terms_[k].coef)) {
                return false;
            }
        }
        return true;
    }

    /// Canonical text, leading (largest) term first, e.g.
    /// `(1/2+1/2i)*x1^2*q3 - i*x4`.
    std::string str() const;

private:
    friend class PolyAccumulator;
    friend SpinorPoly poly_combine(const SpinorPoly& p, const SpinorPoly& q, const GaussianRational& c);

    int rank_;
    std::vector<Term> terms_;
};

/// Mutable builder used by every operation that produces a SpinorPoly.
class PolyAccumulator {
public:
    explicit PolyAccumulator(int rank) : rank_(rank) {}

    void add(const SpinorMonomial& m, const GaussianRational& c);
    void add(const SpinorPoly& p, const GaussianRational& c = 1);
    SpinorPoly finish() &&;

private:
    int rank_;
    std::unordered_map<SpinorMonomial, GaussianRational, MonomialHash> acc_;
};

/// p + c*q.
SpinorPoly poly_combine(const SpinorPoly& p, const SpinorPoly& q, const GaussianRational& c);
SpinorPoly poly_mul(const SpinorPoly& p, const SpinorPoly& q);

void require_same_rank(int a, int b);

}  // namespace sympspin
