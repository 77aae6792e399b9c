#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sympspin {

/// Raised for every domain error in the library (bad indices, rank
/// mismatches, division by zero, malformed input).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact element of Q(i). Both parts are kept in lowest terms with a
/// positive denominator, so equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit by design of literals
    GaussianRational(mpq_class re, mpq_class im = 0);
    /// (num/den) + (imNum/imDen) i.
    GaussianRational(long num, long den, long imNum, long imDen);

    static GaussianRational i() { return {0, 1, 1, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0 && sgn(im_) != 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// Throws Error on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Text form: `a`, `a/b`, `ci`, `(a/b+c/d i)` style, e.g. `(1/2+1/2i)`.
    std::string str() const;
    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

enum class ArithKind { Add, Sub, Mul, Div };

/// Field operation on Q(i). Division by zero yields std::nullopt.
std::optional<GaussianRational> gr_arith(const GaussianRational& a, const GaussianRational& b, ArithKind kind);

}  // namespace sympspin
