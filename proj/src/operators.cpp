#include "sympspin/operators.hpp"

#include <algorithm>

namespace sympspin {

namespace {

void check_x_index(int rank, int m) {
    if (m < 1 || m > 2 * rank) {
        throw Error("x-index " + std::to_string(m) + " out of range 1.." + std::to_string(2 * rank));
    }
}

void check_q_index(int rank, int j) {
    if (j < 1 || j > rank) {
        throw Error("q-index " + std::to_string(j) + " out of range 1.." + std::to_string(rank));
    }
}

void check_primitive(int rank, const Primitive& p) {
    switch (p.kind) {
        case Primitive::Kind::MulX:
        case Primitive::Kind::Dx:
            check_x_index(rank, p.index);
            break;
        case Primitive::Kind::MulQ:
        case Primitive::Kind::DqTwisted:
            check_q_index(rank, p.index);
            break;
    }
}

// Accumulation helpers: add c * (derivative or shifted monomial).
void add_shifted(PolyAccumulator& acc, SpinorMonomial m, int xVar, int xDelta, int qVar, int qDelta,
                 const GaussianRational& c) {
    if (xVar > 0 && !m.shift_x(xVar, xDelta)) {
        return;
    }
    if (qVar > 0 && !m.shift_q(qVar, qDelta)) {
        return;
    }
    acc.add(m, c);
}

void add_dq_twisted(PolyAccumulator& acc, const SpinorMonomial& m, int j, const GaussianRational& c) {
    int e = m.q_exp(j);
    if (e > 0) {
        add_shifted(acc, m, 0, 0, j, -1, c * GaussianRational(e));
    }
    add_shifted(acc, m, 0, 0, j, 1, -c);
}

}  // namespace

std::string Primitive::str() const {
    switch (kind) {
        case Kind::MulX:
            return "x" + std::to_string(index);
        case Kind::MulQ:
            return "q" + std::to_string(index);
        case Kind::Dx:
            return "dx" + std::to_string(index);
        case Kind::DqTwisted:
            return "dq" + std::to_string(index);
    }
    return "?";
}

SpinorPoly apply_primitive(const Primitive& p, const SpinorPoly& s) {
    check_primitive(s.rank(), p);
    PolyAccumulator acc(s.rank());
    for (const auto& [m, c] : s.terms()) {
        switch (p.kind) {
            case Primitive::Kind::MulX:
                add_shifted(acc, m, p.index, 1, 0, 0, c);
                break;
            case Primitive::Kind::MulQ:
                add_shifted(acc, m, 0, 0, p.index, 1, c);
                break;
            case Primitive::Kind::Dx:
                if (int e = m.x_exp(p.index); e > 0) {
                    add_shifted(acc, m, p.index, -1, 0, 0, c * GaussianRational(e));
                }
                break;
            case Primitive::Kind::DqTwisted:
                add_dq_twisted(acc, m, p.index, c);
                break;
        }
    }
    return std::move(acc).finish();
}

LinearOperator::LinearOperator(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) {
        throw Error("rank " + std::to_string(rank) + " outside supported range");
    }
}

LinearOperator::LinearOperator(int rank, std::vector<Term> terms) : LinearOperator(rank) {
    for (auto& t : terms) {
        for (const auto& p : t.word) {
            check_primitive(rank, p);
        }
        if (!t.coef.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

LinearOperator LinearOperator::identity(int rank) { return LinearOperator(rank, {{1, {}}}); }

LinearOperator LinearOperator::primitive(int rank, Primitive p) { return LinearOperator(rank, {{1, {p}}}); }

SpinorPoly LinearOperator::apply(const SpinorPoly& s) const {
    require_same_rank(rank_, s.rank());
    PolyAccumulator acc(rank_);
    for (const auto& t : terms_) {
        SpinorPoly v = s;
        for (auto it = t.word.rbegin(); it != t.word.rend() && !v.is_zero(); ++it) {
            v = apply_primitive(*it, v);
        }
        acc.add(v, t.coef);
    }
    return std::move(acc).finish();
}

GradingSignature LinearOperator::grading() const {
    GradingSignature sig;
    bool first = true;
    for (const auto& t : terms_) {
        int xShift = 0;
        int qOps = 0;
        for (const auto& p : t.word) {
            switch (p.kind) {
                case Primitive::Kind::MulX:
                    ++xShift;
                    break;
                case Primitive::Kind::Dx:
                    --xShift;
                    break;
                case Primitive::Kind::MulQ:
                case Primitive::Kind::DqTwisted:
                    ++qOps;
                    break;
            }
        }
        if (first) {
            sig = {xShift, qOps, qOps % 2 == 1};
            first = false;
            continue;
        }
        if (xShift != sig.xShift || (qOps % 2 == 1) != sig.flipsParity) {
            throw Error("operator is not homogeneous in x-degree and q-parity");
        }
        sig.qRaise = std::max(sig.qRaise, qOps);
    }
    return sig;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& o) {
    require_same_rank(rank_, o.rank_);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

LinearOperator& LinearOperator::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
    }
    for (auto& t : terms_) {
        t.coef *= c;
    }
    return *this;
}

std::string LinearOperator::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += t.coef.str();
        for (const auto& p : t.word) {
            out += " " + p.str();
        }
    }
    return out;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    require_same_rank(a.rank(), b.rank());
    std::vector<LinearOperator::Term> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            std::vector<Primitive> word = s.word;
            word.insert(word.end(), t.word.begin(), t.word.end());
            terms.push_back({s.coef * t.coef, std::move(word)});
        }
    }
    return LinearOperator(a.rank(), std::move(terms));
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
    return compose(a, b) - compose(b, a);
}

SpinorPoly clifford(int l, const SpinorPoly& s) {
    const int n = s.rank();
    check_x_index(n, l);
    if (l <= n) {
        return apply_primitive({Primitive::Kind::MulQ, l}, s) * GaussianRational::i();
    }
    return apply_primitive({Primitive::Kind::DqTwisted, l - n}, s);
}

SpinorPoly partial_x(int m, const SpinorPoly& s) { return apply_primitive({Primitive::Kind::Dx, m}, s); }

SpinorPoly dq_twisted(int j, const SpinorPoly& s) { return apply_primitive({Primitive::Kind::DqTwisted, j}, s); }

SpinorPoly apply_Ds(const SpinorPoly& s) {
    const int n = s.rank();
    const GaussianRational i = GaussianRational::i();
    PolyAccumulator acc(n);
    for (const auto& [m, c] : s.terms()) {
        for (int j = 1; j <= n; ++j) {
            // i q_j d/dx_{n+j}
            if (int e = m.x_exp(n + j); e > 0) {
                add_shifted(acc, m, n + j, -1, j, 1, c * i * GaussianRational(e));
            }
            // -d/dx_j (d/dq_j - q_j)
            if (int e = m.x_exp(j); e > 0) {
                GaussianRational ce = c * GaussianRational(e);
                if (int f = m.q_exp(j); f > 0) {
                    add_shifted(acc, m, j, -1, j, -1, -ce * GaussianRational(f));
                }
                add_shifted(acc, m, j, -1, j, 1, ce);
            }
        }
    }
    return std::move(acc).finish();
}

SpinorPoly apply_Xs(const SpinorPoly& s) {
    const int n = s.rank();
    const GaussianRational i = GaussianRational::i();
    PolyAccumulator acc(n);
    for (const auto& [m, c] : s.terms()) {
        for (int j = 1; j <= n; ++j) {
            // x_{n+j} (d/dq_j - q_j)
            if (int f = m.q_exp(j); f > 0) {
                add_shifted(acc, m, n + j, 1, j, -1, c * GaussianRational(f));
            }
            add_shifted(acc, m, n + j, 1, j, 1, -c);
            // i x_j q_j
            add_shifted(acc, m, j, 1, j, 1, c * i);
        }
    }
    return std::move(acc).finish();
}

SpinorPoly apply_Es(const SpinorPoly& s) {
    PolyAccumulator acc(s.rank());
    for (const auto& [m, c] : s.terms()) {
        acc.add(m, c * GaussianRational(m.x_degree()));
    }
    return std::move(acc).finish();
}

SpinorPoly twistor_component(int l, const SpinorPoly& s) {
    const int n = s.rank();
    check_x_index(n, l);
    SpinorPoly clifford_part = clifford(l, apply_Ds(s));
    return poly_combine(partial_x(l, s), clifford_part, -GaussianRational::i() / GaussianRational(n));
}

std::vector<SpinorPoly> apply_Ts(const SpinorPoly& s) {
    const int n = s.rank();
    SpinorPoly dirac = apply_Ds(s);
    const GaussianRational factor = -GaussianRational::i() / GaussianRational(n);
    std::vector<SpinorPoly> out;
    out.reserve(2 * n);
    for (int l = 1; l <= 2 * n; ++l) {
        out.push_back(poly_combine(partial_x(l, s), clifford(l, dirac), factor));
    }
    return out;
}

int omega(int rank, int a, int b) {
    check_x_index(rank, a);
    check_x_index(rank, b);
    if (a <= rank && b == a + rank) {
        return 1;
    }
    if (a > rank && b == a - rank) {
        return -1;
    }
    return 0;
}

LinearOperator clifford_operator(int rank, int l) {
    check_x_index(rank, l);
    if (l <= rank) {
        return LinearOperator(rank, {{GaussianRational::i(), {{Primitive::Kind::MulQ, l}}}});
    }
    return LinearOperator::primitive(rank, {Primitive::Kind::DqTwisted, l - rank});
}

LinearOperator Ds_operator(int rank) {
    std::vector<LinearOperator::Term> terms;
    for (int j = 1; j <= rank; ++j) {
        terms.push_back({GaussianRational::i(), {{Primitive::Kind::MulQ, j}, {Primitive::Kind::Dx, rank + j}}});
        terms.push_back({-1, {{Primitive::Kind::Dx, j}, {Primitive::Kind::DqTwisted, j}}});
    }
    return LinearOperator(rank, std::move(terms));
}

LinearOperator Xs_operator(int rank) {
    std::vector<LinearOperator::Term> terms;
    for (int j = 1; j <= rank; ++j) {
        terms.push_back({1, {{Primitive::Kind::MulX, rank + j}, {Primitive::Kind::DqTwisted, j}}});
        terms.push_back({GaussianRational::i(), {{Primitive::Kind::MulX, j}, {Primitive::Kind::MulQ, j}}});
    }
    return LinearOperator(rank, std::move(terms));
}

LinearOperator Es_operator(int rank) {
    std::vector<LinearOperator::Term> terms;
    for (int m = 1; m <= 2 * rank; ++m) {
        terms.push_back({1, {{Primitive::Kind::MulX, m}, {Primitive::Kind::Dx, m}}});
    }
    return LinearOperator(rank, std::move(terms));
}

LinearOperator twistor_operator(int rank, int l) {
    check_x_index(rank, l);
    LinearOperator dx = LinearOperator::primitive(rank, {Primitive::Kind::Dx, l});
    return dx - compose(clifford_operator(rank, l), Ds_operator(rank)) * (GaussianRational::i() / GaussianRational(rank));
}

std::vector<std::vector<int>> generator_matrix(GeneratorKind kind, int j, int k, int rank) {
    check_q_index(rank, j);
    check_q_index(rank, k);
    const int n = rank;
    std::vector<std::vector<int>> a(2 * n, std::vector<int>(2 * n, 0));
    // 0-based positions of the E_{r,c} units.
    const int j0 = j - 1;
    const int k0 = k - 1;
    switch (kind) {
        case GeneratorKind::X:
            // The lower block must be minus the transpose for A to lie in sp(2n).
            a[j0][k0] += 1;
            a[n + k0][n + j0] -= 1;
            break;
        case GeneratorKind::Y:
            a[j0][n + k0] += 1;
            a[k0][n + j0] += 1;
            break;
        case GeneratorKind::Z:
            a[n + j0][k0] += 1;
            a[n + k0][j0] += 1;
            break;
    }
    return a;
}

LinearOperator mp_generator(GeneratorKind kind, int j, int k, int rank) {
    const int n = rank;
    auto a = generator_matrix(kind, j, k, rank);
    // (A Omega)_{ab} = sum_c A_{ac} Omega_{cb}; Omega_{c,n+c} = 1, Omega_{n+c,c} = -1.
    auto a_omega = [&](int r, int b) {
        return b >= n ? a[r][b - n] : -a[r][b + n];
    };
    LinearOperator spinor(n);
    const GaussianRational half_i = GaussianRational(0, 1, 1, 2);
    for (int r = 0; r < 2 * n; ++r) {
        for (int b = 0; b < 2 * n; ++b) {
            int coef = a_omega(r, b);
            if (coef == 0) {
                continue;
            }
            spinor += compose(clifford_operator(n, r + 1), clifford_operator(n, b + 1)) *
                      (-half_i * GaussianRational(coef));
        }
    }
    std::vector<LinearOperator::Term> base;
    for (int m = 0; m < 2 * n; ++m) {
        for (int p = 0; p < 2 * n; ++p) {
            if (a[m][p] != 0) {
                base.push_back({GaussianRational(-a[m][p]),
                                {{Primitive::Kind::MulX, p + 1}, {Primitive::Kind::Dx, m + 1}}});
            }
        }
    }
    return spinor + LinearOperator(n, std::move(base));
}

char generator_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::X:
            return 'X';
        case GeneratorKind::Y:
            return 'Y';
        case GeneratorKind::Z:
            return 'Z';
    }
    return '?';
}

}  // namespace sympspin
