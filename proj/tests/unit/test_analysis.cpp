#include "oracle.hpp"
#include "support.hpp"

#include "sympspin/analysis.hpp"
#include "sympspin/parse.hpp"

#include <doctest.h>

using namespace sympspin;

namespace {

const char* kExample = "-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4";

std::vector<LinearOperator> twistor_ops(int n) {
    std::vector<LinearOperator> out;
    for (int l = 1; l <= 2 * n; ++l) {
        out.push_back(twistor_operator(n, l));
    }
    return out;
}

int oracle_parity(Parity p) { return p == Parity::Both ? -1 : (p == Parity::Even ? 0 : 1); }

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("monogenics examples") {
    for (int n = 1; n <= 3; ++n) {
        SectorSpec s{n, 0, 3, Parity::Both};
        CHECK(monogenics(s).basis.dim() == s.dimension());
        CHECK(monogenic_dim(s) == s.dimension());
    }
    MonogenicSpace m = monogenics(SectorSpec{2, 2, 0, Parity::Even});
    CHECK(m.basis.contains(parse_spinor(kExample, 2)));

    SectorSpec s{1, 1, 3, Parity::Both};
    CHECK(monogenics(s).basis.dim() == oracle::kernel_dim({Ds_operator(1)}, 1, 1, 3, -1));
}

TEST_CASE("monogenic vectors vanish under the symbolic operator") {
    for (int n = 1; n <= 2; ++n) {
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::Even, Parity::Odd}) {
                SectorSpec s{n, h, 3, p};
                MonogenicSpace m = monogenics(s);
                CHECK(m.basis.dim() == monogenic_dim(s));
                for (const auto& v : m.basis.polys()) {
                    CHECK(apply_Ds(v).is_zero());
                }
            }
        }
    }
}

TEST_CASE("twistor_kernel examples") {
    for (int n = 1; n <= 3; ++n) {
        SectorSpec s{n, 0, 2, Parity::Both};
        CHECK(twistor_kernel(s).basis.dim() == s.dimension());
    }
    for (int Q = 0; Q <= 4; ++Q) {
        SectorSpec s{2, 2, Q, Parity::Both};
        CHECK(twistor_kernel(s).basis.dim() == 0);
        CHECK(oracle::kernel_dim(twistor_ops(2), 2, 2, Q, -1) == 0);
    }
    for (int Q = 1; Q <= 4; ++Q) {
        SectorSpec s{1, 2, Q, Parity::Both};
        TwistorKernelSpace k = twistor_kernel(s);
        std::vector<SpinorPoly> image;
        for (const auto& v : monogenics(SectorSpec{1, 1, Q - 1, Parity::Both}).basis.polys()) {
            image.push_back(apply_Xs(v));
        }
        CHECK(SubspaceBasis::span(k.basis.ambient(), image) == k.basis);
        CHECK(k.basis.dim() == twistor_kernel_dim(s));
        CHECK(k.basis.dim() == oracle::kernel_dim(twistor_ops(1), 1, 2, Q, -1));
    }
}

TEST_CASE("tower constant") {
    std::mt19937_64 rng(89);
    for (int n = 1; n <= 2; ++n) {
        for (int l = 0; l <= 2; ++l) {
            MonogenicSpace m = monogenics(SectorSpec{n, l, 2, Parity::Both});
            for (int j = 0; j <= 3; ++j) {
                for (const auto& v : m.basis.polys()) {
                    SpinorPoly w = v;
                    for (int t = 0; t < j; ++t) {
                        w = apply_Xs(w);
                    }
                    for (int t = 0; t < j; ++t) {
                        w = apply_Ds(w);
                    }
                    CHECK(w == v * tower_constant(j, l, n));
                }
            }
        }
    }
    CHECK(tower_constant(0, 5, 3) == GaussianRational(1));
    CHECK(tower_constant(1, 0, 1) == GaussianRational(0, -1));
}

TEST_CASE("report settle invariant") {
    VerificationReport r;
    r.expectedDim = 3;
    r.observedDim = 3;
    r.settle();
    CHECK(r.pass);
    r.add_witness("x1");
    r.settle();
    CHECK_FALSE(r.pass);
    VerificationReport s;
    s.expectedDim = 2;
    s.observedDim = 1;
    s.settle();
    CHECK_FALSE(s.pass);
    VerificationReport many;
    for (int k = 0; k < 10; ++k) {
        many.add_witness("w" + std::to_string(k));
    }
    CHECK(many.witnesses.size() <= 3);
}

TEST_CASE("structural suites pass on small sectors") {
    for (int n = 1; n <= 2; ++n) {
        for (int h = 0; h <= 2; ++h) {
            SectorSpec s{n, h, 2, Parity::Both};
            CHECK(verify_sl2(s).pass);
            CHECK(verify_intertwining(s).pass);
            auto c = verify_clifford(s, 5);
            CHECK(c.pass);
            CHECK(c.witnesses.empty());
        }
    }
}

TEST_CASE("verify_prolongation examples") {
    for (auto s : {SectorSpec{2, 1, 2, Parity::Both}, SectorSpec{1, 3, 4, Parity::Both}, SectorSpec{3, 0, 2, Parity::Both}}) {
        VerificationReport r = verify_prolongation(s);
        CHECK(r.claim == "prolong");
        CHECK(r.pass);
        CHECK(r.expectedDim == oracle::kernel_dim(twistor_ops(s.n), s.n, s.h, s.Q, -1));
    }
    CHECK(verify_prolongation(SectorSpec{3, 0, 2, Parity::Both}).observedDim == SectorSpec{3, 0, 2, Parity::Both}.dimension());
}

TEST_CASE("verify_constant_lemma examples") {
    VerificationReport full = verify_constant_lemma(SectorSpec{2, 0, 3, Parity::Both});
    CHECK(full.pass);
    CHECK(full.observedDim == SectorSpec{2, 0, 3, Parity::Both}.dimension());
    for (auto s : {SectorSpec{2, 1, 3, Parity::Both}, SectorSpec{1, 2, 3, Parity::Both}}) {
        VerificationReport r = verify_constant_lemma(s);
        CHECK(r.pass);
        CHECK(r.observedDim == 0);
        auto ops = twistor_ops(s.n);
        ops.push_back(Ds_operator(s.n));
        CHECK(oracle::kernel_dim(ops, s.n, s.h, s.Q, -1) == 0);
    }
}

TEST_CASE("verify_tower_lemma examples") {
    VerificationReport r0 = verify_tower_lemma(SectorSpec{2, 0, 3, Parity::Both});
    CHECK(r0.pass);
    CHECK(r0.observedDim == SectorSpec{2, 0, 3, Parity::Both}.dimension());
    CHECK(verify_tower_lemma(SectorSpec{2, 2, 2, Parity::Both}).pass);
    CHECK(verify_tower_lemma(SectorSpec{2, 2, 2, Parity::Both}).observedDim == 0);
    VerificationReport r1 = verify_tower_lemma(SectorSpec{1, 2, 4, Parity::Both});
    CHECK(r1.pass);
    CHECK(r1.observedDim == monogenic_dim(SectorSpec{1, 2, 4, Parity::Both}));

    // The Example spinor: X_s s is not twistor, with the displayed components.
    SpinorPoly s = parse_spinor(kExample, 2);
    auto comps = apply_Ts(apply_Xs(s));
    CHECK(comps[0] == parse_spinor("q2*(x2 + i*x4)^2", 2));
    CHECK(comps[1] == parse_spinor("q1*(x1 + i*x3)^2", 2));
}

TEST_CASE("verify_composition_series examples") {
    for (auto s : {SectorSpec{1, 1, 4, Parity::Both}, SectorSpec{2, 2, 4, Parity::Even}, SectorSpec{3, 0, 2, Parity::Both}}) {
        VerificationReport r = verify_composition_series(s);
        CHECK(r.pass);
        LinearOperator d2 = compose(Ds_operator(s.n), Ds_operator(s.n));
        CHECK(r.expectedDim == oracle::kernel_dim({d2}, s.n, s.h, s.Q, oracle_parity(s.parity)));
    }
}

TEST_CASE("verify_triangle examples") {
    VerificationReport a = verify_triangle(SectorSpec{1, 2, 5, Parity::Both});
    CHECK(a.pass);
    int cells = 0;
    for (const auto& [key, value] : a.details) {
        if (key.rfind("triangle.", 0) == 0) {
            ++cells;
        }
    }
    CHECK(cells == 3);
    VerificationReport b = verify_triangle(SectorSpec{2, 1, 4, Parity::Odd});
    CHECK(b.pass);
    // The j = 1 cell is X_s M_0 on the q-bound one lower and opposite parity.
    for (const auto& [key, value] : b.details) {
        if (key == "triangle.l0.j1") {
            CHECK(value == static_cast<std::int64_t>(SectorSpec{2, 0, 3, Parity::Even}.dimension()));
        }
        if (key == "triangle.l1.j0") {
            CHECK(value == static_cast<std::int64_t>(oracle::kernel_dim({Ds_operator(2)}, 2, 1, 4, 1)));
        }
    }
    VerificationReport c = verify_triangle(SectorSpec{3, 0, 2, Parity::Both});
    CHECK(c.pass);
    CHECK(c.observedDim == SectorSpec{3, 0, 2, Parity::Both}.dimension());
}

TEST_CASE("verify_theorem patterns") {
    auto two = verify_theorem(2, 3, 4, Parity::Even);
    REQUIRE(two.size() == 4);
    CHECK(two[0].observedDim == SectorSpec{2, 0, 4, Parity::Even}.dimension());
    CHECK(two[1].observedDim == oracle::image_rank(Xs_operator(2), 2, 0, 3, 1));
    CHECK(two[1].equalAsSubspaces == true);
    CHECK(two[2].observedDim == 0);
    CHECK(two[3].observedDim == 0);
    for (const auto& r : two) {
        CHECK(r.pass);
        CHECK(r.note.empty());
    }

    auto three = verify_theorem(3, 2, 3, Parity::Both);
    CHECK(three[0].observedDim == SectorSpec{3, 0, 3, Parity::Both}.dimension());
    CHECK(three[1].observedDim == oracle::image_rank(Xs_operator(3), 3, 0, 2, -1));
    CHECK(three[2].observedDim == 0);

    auto one = verify_theorem(1, 3, 4, Parity::Both);
    for (int h = 0; h <= 3; ++h) {
        CHECK(one[h].pass);
        CHECK(one[h].note == "finite-truncation evidence, not a proof");
        CHECK(one[h].observedDim == oracle::kernel_dim(twistor_ops(1), 1, h, 4, -1));
    }
}

TEST_CASE("verify_example") {
    VerificationReport r = verify_example();
    CHECK(r.pass);
    CHECK(r.claim == "example");
    CHECK(r.expectedDim == r.observedDim);
}

TEST_CASE("report ordering") {
    VerificationReport a, b;
    a.claim = "prolong";
    b.claim = "theorem";
    CHECK(report_less(a, b));
    b.claim = "prolong";
    a.params.h = 1;
    b.params.h = 2;
    CHECK(report_less(a, b));
    CHECK_FALSE(report_less(b, a));
}

}
