// Acceptance run: one PASS/FAIL line per criterion. Arithmetic is exact, so
// every comparison is an equality.

#include "oracle.hpp"

#include "sympspin/analysis.hpp"
#include "sympspin/blocked.hpp"
#include "sympspin/parse.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

using namespace sympspin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t checks = 0;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void require(const VerificationReport& r) {
        std::ostringstream what;
        what << r.claim << " failed at " << r.params.str() << " (expected " << r.expectedDim << ", observed "
             << r.observedDim << ")";
        if (!r.witnesses.empty()) {
            what << " witness " << r.witnesses.front();
        }
        require(r.pass, what.str());
    }
};

constexpr Parity kParities[] = {Parity::Even, Parity::Odd};

int oracle_parity(Parity p) { return p == Parity::Even ? 0 : 1; }

std::vector<LinearOperator> twistor_ops(int n) {
    std::vector<LinearOperator> out;
    for (int l = 1; l <= 2 * n; ++l) {
        out.push_back(twistor_operator(n, l));
    }
    return out;
}

Outcome sl2_relations() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int h = 0; h <= 4; ++h) {
            o.require(verify_sl2(SectorSpec{n, h, 5, Parity::Both}));
        }
    }
    return o;
}

Outcome clifford_relation() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int h = 0; h <= 3; ++h) {
            o.require(verify_clifford(SectorSpec{n, h, 4, Parity::Both}, 50));
        }
    }
    return o;
}

Outcome intertwining() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int h = 0; h <= 3; ++h) {
            o.require(verify_intertwining(SectorSpec{n, h, 4, Parity::Both}));
        }
    }
    return o;
}

Outcome example_regression() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    const int n = 2;
    SpinorPoly s = parse_spinor("-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4", n);
    o.require(apply_Ds(s).is_zero(), "D_s s is not zero");
    auto comps = apply_Ts(apply_Xs(s));
    o.require(comps.size() == 4, "T_s has the wrong number of components");
    o.require(comps[0] == parse_spinor("q2*(x2 + i*x4)^2", n), "component 1 is " + comps[0].str());
    o.require(comps[1] == parse_spinor("q1*(x1 + i*x3)^2", n), "component 2 is " + comps[1].str());
    o.require(verify_example());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
    return o;
}

template <typename Verify>
Outcome lemma_range(Verify verify) {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int h = 1; h <= 4; ++h) {
            for (int Q = 0; Q <= 5; ++Q) {
                for (Parity p : kParities) {
                    o.require(verify(SectorSpec{n, h, Q, p}));
                }
            }
        }
    }
    return o;
}

Outcome constant_lemma() {
    Outcome o = lemma_range(verify_constant_lemma);
    for (int n = 1; n <= 3; ++n) {
        for (int Q = 0; Q <= 5; ++Q) {
            for (Parity p : kParities) {
                VerificationReport r = verify_constant_lemma(SectorSpec{n, 0, Q, p});
                o.require(r);
                o.require(r.observedDim == SectorSpec{n, 0, Q, p}.dimension(), "h = 0 is not the full sector");
            }
        }
    }
    return o;
}

Outcome theorem_dichotomy() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int h = 1; h <= 4; ++h) {
            for (int Q = 0; Q <= 5; ++Q) {
                for (Parity p : kParities) {
                    SectorSpec s{n, h, Q, p};
                    VerificationReport r = verify_theorem_at(s);
                    o.require(r);
                    if (n > 1 && h >= 2) {
                        o.require(r.observedDim == 0, "nonzero twistor kernel at " + s.str());
                    } else {
                        o.require(r.equalAsSubspaces == true, "canonical bases differ at " + s.str());
                    }
                }
            }
        }
    }
    return o;
}

Outcome triangle_and_series() {
    Outcome o;
    // X_s has full column rank between consecutive sectors.
    for (int n = 1; n <= 3; ++n) {
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : kParities) {
                SectorSpec s{n, h, 5, p};
                o.require(blocked_kernel(s, frame_raising(n), false).kernelDim == 0, "X_s not injective on " + s.str());
            }
        }
    }
    for (int n = 1; n <= 2; ++n) {
        for (int h = 0; h <= 3; ++h) {
            for (int Q = 0; Q <= 5; ++Q) {
                for (Parity p : kParities) {
                    o.require(verify_composition_series(SectorSpec{n, h, Q, p}));
                    o.require(verify_triangle(SectorSpec{n, h, Q, p}));
                }
            }
        }
    }
    // Independent dense elimination against the library's kernel dimensions.
    auto cross = [&](int n, int h, int Q, Parity p) {
        SectorSpec s{n, h, Q, p};
        int op = oracle_parity(p);
        LinearOperator d2 = compose(Ds_operator(n), Ds_operator(n));
        o.require(monogenic_dim(s) == oracle::kernel_dim({Ds_operator(n)}, n, h, Q, op), "Ker D_s dim at " + s.str());
        o.require(twistor_kernel_dim(s) == oracle::kernel_dim(twistor_ops(n), n, h, Q, op), "Ker T_s dim at " + s.str());
        o.require(blocked_kernel(s, frame_dirac_squared(n), false).kernelDim == oracle::kernel_dim({d2}, n, h, Q, op),
                  "Ker D_s^2 dim at " + s.str());
    };
    for (int n = 1; n <= 2; ++n) {
        for (int h = 0; h <= 3; ++h) {
            for (int Q = 0; Q <= 5; ++Q) {
                for (Parity p : kParities) {
                    cross(n, h, Q, p);
                }
            }
        }
    }
    for (int h = 0; h <= 2; ++h) {
        for (int Q = 0; Q <= 5; ++Q) {
            for (Parity p : kParities) {
                cross(3, h, Q, p);
            }
        }
    }
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / ("sympspin-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(root);
    std::string reports[2];
    for (int k = 0; k < 2; ++k) {
        fs::path dir = root / ("run" + std::to_string(k));
        std::string cmd = std::string("\"") + SYMPSPIN_CLI + "\" verify --suites all --format json --out \"" +
                          dir.string() + "\" > /dev/null";
        o.require(std::system(cmd.c_str()) == 0, "verify run " + std::to_string(k) + " did not exit 0");
        reports[k] = slurp(dir / "report.json");
        o.require(!reports[k].empty(), "report " + std::to_string(k) + " is empty");
    }
    o.require(reports[0] == reports[1], "reports differ between runs");
    fs::remove_all(root);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "sl(2) relations, n <= 3, h <= 4, Q <= 5", sl2_relations},
        {2, "Clifford relation, 50 random spinors per pair", clifford_relation},
        {3, "mp(2n) intertwining of D_s and X_s, h <= 3, Q <= 4", intertwining},
        {4, "worked n = 2 example", example_regression},
        {5, "Ker T_s inside Ker D_s^2", [] { return lemma_range(verify_prolongation); }},
        {6, "Ker T_s meets Ker D_s only at h = 0", constant_lemma},
        {7, "twistor kernel dichotomy n = 1 versus n > 1", theorem_dichotomy},
        {8, "triangle, composition series and oracle cross-check", triangle_and_series},
        {9, "byte-identical verify reports", determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("criterion %d: %s  %s  [%zu checks, %.2f s]%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                    o.checks, secs, o.pass ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
