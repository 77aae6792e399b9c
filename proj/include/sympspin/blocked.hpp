#pragma once

#include "sympspin/graded.hpp"
#include "sympspin/linalg.hpp"

#include <memory>
#include <vector>

namespace sympspin {

/// Joint kernel of several weight-homogeneous maps on a sector, computed
/// block by block in the oscillator frame. Every map must send a weight
/// block into a single weight block (this is checked during assembly).
struct BlockedKernel {
    SectorSpec spec;
    std::size_t sectorDim = 0;
    std::size_t blockCount = 0;
    std::size_t largestBlock = 0;
    /// Kernel basis in frame coordinates (empty when only the dimension was
    /// requested).
    std::vector<SpinorPoly> frameBasis;
    std::size_t kernelDim = 0;

    std::vector<SpinorPoly> monomial_basis() const;
    /// Canonical subspace of the monomial sector.
    SubspaceBasis subspace(std::shared_ptr<const GradedBasis> ambient) const;
};

/// frameMaps act on frame coordinates (see oscillator.hpp).
BlockedKernel blocked_kernel(const SectorSpec& spec, const std::vector<PolyMap>& frameMaps, bool wantBasis = true);

/// Frame-coordinate map sets for the standard operators.
std::vector<PolyMap> frame_dirac(int rank);
std::vector<PolyMap> frame_dirac_squared(int rank);
std::vector<PolyMap> frame_twistor(int rank);
std::vector<PolyMap> frame_raising(int rank);

}  // namespace sympspin
