#pragma once

#include "sympspin/graded.hpp"
#include "sympspin/spinor_poly.hpp"

#include <random>

namespace testing_support {

inline sympspin::GaussianRational random_coef(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

inline sympspin::SpinorMonomial random_monomial(int n, int maxExp, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, maxExp);
    std::vector<int> x(2 * n), q(n);
    for (auto& v : x) {
        v = e(rng);
    }
    for (auto& v : q) {
        v = e(rng);
    }
    return sympspin::SpinorMonomial(n, x, q);
}

/// Up to `terms` random terms with exponents <= maxExp.
inline sympspin::SpinorPoly random_poly(int n, std::mt19937_64& rng, int terms = 4, int maxExp = 2) {
    sympspin::PolyAccumulator acc(n);
    std::uniform_int_distribution<int> count(0, terms);
    for (int k = count(rng); k > 0; --k) {
        acc.add(random_monomial(n, maxExp, rng), random_coef(rng));
    }
    return std::move(acc).finish();
}

/// Random element of a sector.
inline sympspin::SpinorPoly random_in(const sympspin::GradedBasis& b, std::mt19937_64& rng, int terms = 4) {
    sympspin::PolyAccumulator acc(b.spec().n);
    if (b.size() == 0) {
        return std::move(acc).finish();
    }
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int k = 0; k < terms; ++k) {
        acc.add(b[pick(rng)], random_coef(rng));
    }
    return std::move(acc).finish();
}

}  // namespace testing_support
