#include "sympspin/oscillator.hpp"

#include <unordered_map>

namespace sympspin::osc {

namespace {

mpz_class factorial(int k) {
    mpz_class r = 1;
    for (int t = 2; t <= k; ++t) {
        r *= t;
    }
    return r;
}

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

GaussianRational i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return 1;
        case 1:
            return GaussianRational::i();
        case 2:
            return -1;
        default:
            return -GaussianRational::i();
    }
}

SpinorMonomial unit(int rank) { return SpinorMonomial(rank); }

// H_c(q_j) = sum_m (-1)^m c!/(m!(c-2m)!) (2 q_j)^{c-2m}
SpinorPoly hermite(int rank, int j, int c) {
    PolyAccumulator acc(rank);
    for (int m = 0; 2 * m <= c; ++m) {
        mpz_class coef = factorial(c) / (factorial(m) * factorial(c - 2 * m));
        coef <<= static_cast<mp_bitcnt_t>(c - 2 * m);
        if (m % 2 == 1) {
            coef = -coef;
        }
        SpinorMonomial mono = unit(rank);
        mono.shift_q(j, c - 2 * m);
        acc.add(mono, GaussianRational(mpq_class(coef)));
    }
    return std::move(acc).finish();
}

// q_j^k = sum_m k!/(2^k m!(k-2m)!) H_{k-2m}, written in frame slots.
SpinorPoly power_to_hermite(int rank, int j, int k) {
    PolyAccumulator acc(rank);
    for (int m = 0; 2 * m <= k; ++m) {
        mpq_class coef(factorial(k), factorial(m) * factorial(k - 2 * m));
        coef /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(k));
        SpinorMonomial mono = unit(rank);
        mono.shift_q(j, k - 2 * m);
        acc.add(mono, GaussianRational(coef));
    }
    return std::move(acc).finish();
}

// (x_j + i x_{n+j})^a (x_j - i x_{n+j})^b in monomial slots.
SpinorPoly z_power(int rank, int j, int a, int b) {
    PolyAccumulator acc(rank);
    for (int s = 0; s <= a; ++s) {
        for (int t = 0; t <= b; ++t) {
            GaussianRational coef = GaussianRational(mpq_class(binom(a, s) * binom(b, t))) * i_power(s) * i_power(-t);
            SpinorMonomial mono = unit(rank);
            mono.shift_x(j, a - s + b - t);
            mono.shift_x(rank + j, s + t);
            acc.add(mono, coef);
        }
    }
    return std::move(acc).finish();
}

// x_j^a x_{n+j}^b = ((z+zbar)/2)^a ((z-zbar)/(2i))^b in frame slots.
SpinorPoly x_power(int rank, int j, int a, int b) {
    PolyAccumulator acc(rank);
    GaussianRational scale = GaussianRational(mpq_class(1, 1) / mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(a + b))) *
                             i_power(-b);
    for (int s = 0; s <= a; ++s) {      // s factors of zbar from the first power
        for (int t = 0; t <= b; ++t) {  // t factors of -zbar from the second
            GaussianRational coef = scale * GaussianRational(mpq_class(binom(a, s) * binom(b, t)));
            if (t % 2 == 1) {
                coef = -coef;
            }
            SpinorMonomial mono = unit(rank);
            mono.shift_x(j, a - s + b - t);
            mono.shift_x(rank + j, s + t);
            acc.add(mono, coef);
        }
    }
    return std::move(acc).finish();
}

using Cache = std::unordered_map<SpinorMonomial, SpinorPoly, MonomialHash>;

const SpinorPoly& convert_monomial(const SpinorMonomial& m, bool toFrame) {
    thread_local Cache toCache;
    thread_local Cache fromCache;
    Cache& cache = toFrame ? toCache : fromCache;
    if (auto it = cache.find(m); it != cache.end()) {
        return it->second;
    }
    const int n = m.rank();
    SpinorPoly out = SpinorPoly::constant(n, 1);
    for (int j = 1; j <= n; ++j) {
        int a = m.x_exp(j);
        int b = m.x_exp(n + j);
        int c = m.q_exp(j);
        if (a + b > 0) {
            out = out * (toFrame ? x_power(n, j, a, b) : z_power(n, j, a, b));
        }
        if (c > 0) {
            out = out * (toFrame ? power_to_hermite(n, j, c) : hermite(n, j, c));
        }
    }
    if (cache.size() > 200000) {
        cache.clear();
    }
    return cache.emplace(m, std::move(out)).first->second;
}

SpinorPoly convert(const SpinorPoly& s, bool toFrame) {
    PolyAccumulator acc(s.rank());
    for (const auto& [m, c] : s.terms()) {
        acc.add(convert_monomial(m, toFrame), c);
    }
    return std::move(acc).finish();
}

void add_shift(PolyAccumulator& acc, SpinorMonomial m, int xSlot, int xDelta, int qSlot, int qDelta,
               const GaussianRational& c) {
    if (xSlot > 0 && !m.shift_x(xSlot, xDelta)) {
        return;
    }
    if (qSlot > 0 && !m.shift_q(qSlot, qDelta)) {
        return;
    }
    acc.add(m, c);
}

// C_j applied after (or A_j when annihilate) to every term.
SpinorPoly hermite_step(int j, const SpinorPoly& f, bool annihilate) {
    PolyAccumulator acc(f.rank());
    for (const auto& [m, c] : f.terms()) {
        if (annihilate) {
            if (int e = m.q_exp(j); e > 0) {
                add_shift(acc, m, 0, 0, j, -1, c * GaussianRational(2 * e));
            }
        } else {
            add_shift(acc, m, 0, 0, j, 1, c);
        }
    }
    return std::move(acc).finish();
}

SpinorPoly d_slot(int slot, const SpinorPoly& f) {
    PolyAccumulator acc(f.rank());
    for (const auto& [m, c] : f.terms()) {
        if (int e = m.x_exp(slot); e > 0) {
            add_shift(acc, m, slot, -1, 0, 0, c * GaussianRational(e));
        }
    }
    return std::move(acc).finish();
}

}  // namespace

SpinorPoly to_frame(const SpinorPoly& s) { return convert(s, true); }

SpinorPoly from_frame(const SpinorPoly& f) { return convert(f, false); }

std::vector<int> weight(const SpinorMonomial& m) {
    const int n = m.rank();
    std::vector<int> w(n);
    for (int j = 1; j <= n; ++j) {
        w[j - 1] = m.q_exp(j) - m.x_exp(j) + m.x_exp(n + j);
    }
    return w;
}

SpinorPoly apply_Ds(const SpinorPoly& f) {
    const int n = f.rank();
    PolyAccumulator acc(n);
    for (const auto& [m, c] : f.terms()) {
        for (int j = 1; j <= n; ++j) {
            // C_j d/dzbar_j
            if (int b = m.x_exp(n + j); b > 0) {
                add_shift(acc, m, n + j, -1, j, 1, c * GaussianRational(b));
            }
            // -A_j d/dz_j
            int a = m.x_exp(j);
            int h = m.q_exp(j);
            if (a > 0 && h > 0) {
                add_shift(acc, m, j, -1, j, -1, c * GaussianRational(-2 * a * h));
            }
        }
    }
    return std::move(acc).finish();
}

SpinorPoly apply_Xs(const SpinorPoly& f) {
    const int n = f.rank();
    const GaussianRational i = GaussianRational::i();
    const GaussianRational halfI(0, 1, 1, 2);
    PolyAccumulator acc(n);
    for (const auto& [m, c] : f.terms()) {
        for (int j = 1; j <= n; ++j) {
            // (i/2) A_j zbar_j
            if (int h = m.q_exp(j); h > 0) {
                add_shift(acc, m, n + j, 1, j, -1, c * i * GaussianRational(h));
            }
            // (i/2) C_j z_j
            add_shift(acc, m, j, 1, j, 1, c * halfI);
        }
    }
    return std::move(acc).finish();
}

SpinorPoly twistor_plus(int j, const SpinorPoly& f) {
    const int n = f.rank();
    SpinorPoly out = d_slot(j, f) * GaussianRational(2);
    return poly_combine(out, hermite_step(j, apply_Ds(f), false), GaussianRational(1, n, 0, 1));
}

SpinorPoly twistor_minus(int j, const SpinorPoly& f) {
    const int n = f.rank();
    SpinorPoly out = d_slot(n + j, f) * GaussianRational(2);
    return poly_combine(out, hermite_step(j, apply_Ds(f), true), GaussianRational(1, n, 0, 1));
}

}  // namespace sympspin::osc
