#pragma once

#include "sympspin/spinor_poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sympspin {

/// Elementary Weyl-algebra operators acting on the polynomial part of a
/// spinor. DqTwisted(j) is d/dq_j acting on f*exp(-|q|^2/2) with the
/// Gaussian stripped off again, i.e. f -> df/dq_j - q_j f.
struct Primitive {
    enum class Kind { MulX, MulQ, Dx, DqTwisted };
    Kind kind;
    int index;  // 1-based: 1..2n for x, 1..n for q

    friend bool operator==(const Primitive&, const Primitive&) = default;
    std::string str() const;
};

SpinorPoly apply_primitive(const Primitive& p, const SpinorPoly& s);

/// x-degree shift, worst-case q-degree raise and q-parity change of an
/// operator; all assembled matrices are checked against it.
struct GradingSignature {
    int xShift = 0;
    int qRaise = 0;
    bool flipsParity = false;
};

/// Formal finite sum of coefficient * word, each word acting right-to-left
/// (the last primitive in the word is applied first). Equality of
/// operators is only ever tested extensionally by evaluation.
class LinearOperator {
public:
    struct Term {
        GaussianRational coef;
        std::vector<Primitive> word;
    };

    explicit LinearOperator(int rank);
    LinearOperator(int rank, std::vector<Term> terms);

    static LinearOperator identity(int rank);
    static LinearOperator primitive(int rank, Primitive p);

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }

    SpinorPoly apply(const SpinorPoly& s) const;
    SpinorPoly operator()(const SpinorPoly& s) const { return apply(s); }

    /// Throws Error when the words disagree on x-shift or parity change.
    GradingSignature grading() const;

    LinearOperator& operator+=(const LinearOperator& o);
    LinearOperator& operator*=(const GaussianRational& c);
    friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
    friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a += b * GaussianRational(-1); }
    friend LinearOperator operator*(LinearOperator a, const GaussianRational& c) { return a *= c; }
    friend LinearOperator operator*(const GaussianRational& c, LinearOperator a) { return a *= c; }

    std::string str() const;

private:
    int rank_;
    std::vector<Term> terms_;
};

/// A * B (B acts first).
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
/// AB - BA.
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

// Direct maps on spinors.

/// Clifford multiplication by e_l: i*q_l for l <= n, DqTwisted(l-n) for l > n.
SpinorPoly clifford(int l, const SpinorPoly& s);
SpinorPoly partial_x(int m, const SpinorPoly& s);
SpinorPoly dq_twisted(int j, const SpinorPoly& s);

/// Symplectic Dirac operator sum_j (i q_j d/dx_{n+j} - d/dx_j d/dq_j).
SpinorPoly apply_Ds(const SpinorPoly& s);
/// Raising operator sum_j (x_{n+j} d/dq_j + i x_j q_j).
SpinorPoly apply_Xs(const SpinorPoly& s);
/// Euler operator on the x-variables.
SpinorPoly apply_Es(const SpinorPoly& s);
/// Component l (1..2n) of the twistor operator: d/dx_l s - (i/n) e_l . D_s s.
SpinorPoly twistor_component(int l, const SpinorPoly& s);
/// All 2n components against the coframe eps^1..eps^2n.
std::vector<SpinorPoly> apply_Ts(const SpinorPoly& s);

/// omega(e_a, e_b) with omega(e_j, e_{n+j}) = 1.
int omega(int rank, int a, int b);

// The same maps as formal operators.

LinearOperator clifford_operator(int rank, int l);
LinearOperator Ds_operator(int rank);
LinearOperator Xs_operator(int rank);
LinearOperator Es_operator(int rank);
LinearOperator twistor_operator(int rank, int l);

enum class GeneratorKind { X, Y, Z };

/// Defining 2n x 2n matrix of the sp(2n) basis element (row-major, 0-based):
/// X_{jk} = E_{j,k} - E_{n+k,n+j}, Y_{jk} = E_{j,n+k} + E_{k,n+j},
/// Z_{jk} = E_{n+j,k} + E_{n+k,j}.
std::vector<std::vector<int>> generator_matrix(GeneratorKind kind, int j, int k, int rank);

/// Infinitesimal metaplectic action of the generator on polynomial
/// spinors: the Clifford quadratic -(i/2) sum_{a,b} (A Omega)_{ab} e_a e_b
/// (which lifts A through pi_*) plus the vector field -sum_m (A x)_m d/dx_m.
LinearOperator mp_generator(GeneratorKind kind, int j, int k, int rank);

char generator_name(GeneratorKind kind);

}  // namespace sympspin
