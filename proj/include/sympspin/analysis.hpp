#pragma once

#include "sympspin/graded.hpp"
#include "sympspin/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympspin {

/// Kernel of D_s on a sector, assembled into (h-1, Q+1, flipped parity).
struct MonogenicSpace {
    SectorSpec spec;
    SubspaceBasis basis;
};

/// Joint kernel of the 2n twistor components on a sector, assembled into
/// (h-1, Q+2, same parity).
struct TwistorKernelSpace {
    SectorSpec spec;
    SubspaceBasis basis;
};

MonogenicSpace monogenics(const SectorSpec& spec);
TwistorKernelSpace twistor_kernel(const SectorSpec& spec);

/// Dimensions only, computed blockwise in the oscillator frame.
std::size_t monogenic_dim(const SectorSpec& spec);
std::size_t twistor_kernel_dim(const SectorSpec& spec);

/// Product of the factors -i(t(l+n) + t(t-1)/2), t = 1..j, so that
/// D_s^j X_s^j m = kappa(j, l, n) m for every monogenic m of homogeneity l.
GaussianRational tower_constant(int j, int l, int n);

struct VerificationReport {
    std::string claim;
    SectorSpec params;
    std::size_t expectedDim = 0;
    std::size_t observedDim = 0;
    /// Set when two subspaces were compared (by canonical bases or, for
    /// {0} and the full sector, by dimension).
    std::optional<bool> equalAsSubspaces;
    std::vector<std::string> witnesses;
    bool pass = false;
    /// Auxiliary counts in insertion order.
    std::vector<std::pair<std::string, std::int64_t>> details;
    std::string note;

    void add_witness(const std::string& w);
    /// pass = (expected == observed) and no witnesses.
    void settle();
};

VerificationReport verify_sl2(const SectorSpec& spec);
VerificationReport verify_intertwining(const SectorSpec& spec);
VerificationReport verify_clifford(const SectorSpec& spec, int samples = 50);
VerificationReport verify_prolongation(const SectorSpec& spec);
VerificationReport verify_constant_lemma(const SectorSpec& spec);
VerificationReport verify_tower_lemma(const SectorSpec& spec);
VerificationReport verify_composition_series(const SectorSpec& spec);
VerificationReport verify_triangle(const SectorSpec& spec);
/// One homogeneity of the main theorem.
VerificationReport verify_theorem_at(const SectorSpec& spec);
std::vector<VerificationReport> verify_theorem(int n, int hMax, int Q, Parity parity = Parity::Both);
/// The n = 2 worked example: D_s p = 0, the two twistor components of
/// X_s p, and p in the monogenic sector.
VerificationReport verify_example();

/// Sort key used for deterministic output.
bool report_less(const VerificationReport& a, const VerificationReport& b);

}  // namespace sympspin
