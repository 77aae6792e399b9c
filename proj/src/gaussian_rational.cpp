#include "sympspin/gaussian_rational.hpp"


namespace sympspin {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational::GaussianRational(long num, long den, long imNum, long imDen) {
    if (den == 0 || imDen == 0) {
        throw Error("zero denominator in rational literal");
    }
    re_ = mpq_class(num, den);
    im_ = mpq_class(imNum, imDen);
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw Error("division by zero in Q(i)");
    }
    if (is_real()) {
        return {1 / re_, 0};
    }
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) {
            throw Error("division by zero in Q(i)");
        }
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GaussianRational::str() const {
    if (is_real()) {
        return rational_str(re_);
    }
    std::string imPart;
    if (im_ == 1) {
        imPart = "i";
    } else if (im_ == -1) {
        imPart = "-i";
    } else {
        imPart = rational_str(im_) + "i";
    }
    if (sgn(re_) == 0) {
        return imPart;
    }
    std::string out = "(" + rational_str(re_);
    if (sgn(im_) > 0) {
        out += "+";
    }
    return out + imPart + ")";
}

namespace {

std::size_t limb_hash(const mpz_class& z) {
    auto low = static_cast<std::size_t>(mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0);
    return low * 2654435761u + static_cast<std::size_t>(sgn(z) + 1);
}

}  // namespace

std::size_t GaussianRational::hash() const {
    std::size_t h = limb_hash(re_.get_num());
    h = h * 31 + limb_hash(re_.get_den());
    h = h * 31 + limb_hash(im_.get_num());
    return h * 31 + limb_hash(im_.get_den());
}

std::optional<GaussianRational> gr_arith(const GaussianRational& a, const GaussianRational& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::Add:
            return a + b;
        case ArithKind::Sub:
            return a - b;
        case ArithKind::Mul:
            return a * b;
        case ArithKind::Div:
            if (b.is_zero()) {
                return std::nullopt;
            }
            return a / b;
    }
    return std::nullopt;
}

}  // namespace sympspin
