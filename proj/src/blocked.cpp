#include "sympspin/blocked.hpp"

#include "sympspin/oscillator.hpp"

#include <map>
#include <unordered_map>

namespace sympspin {

std::vector<SpinorPoly> BlockedKernel::monomial_basis() const {
    std::vector<SpinorPoly> out;
    out.reserve(frameBasis.size());
    for (const auto& f : frameBasis) {
        out.push_back(osc::from_frame(f));
    }
    return out;
}

SubspaceBasis BlockedKernel::subspace(std::shared_ptr<const GradedBasis> ambient) const {
    if (!(ambient->spec() == spec)) {
        throw Error("ambient sector " + ambient->spec().str() + " differs from kernel sector " + spec.str());
    }
    if (frameBasis.size() != kernelDim) {
        throw Error("kernel basis was not materialized");
    }
    return SubspaceBasis::span(std::move(ambient), monomial_basis());
}

namespace {

struct RowKey {
    std::size_t map;
    SpinorMonomial mono;
    bool operator==(const RowKey& o) const { return map == o.map && mono == o.mono; }
};

struct RowKeyHash {
    std::size_t operator()(const RowKey& k) const { return k.mono.hash() * 1315423911u + k.map; }
};

}  // namespace

BlockedKernel blocked_kernel(const SectorSpec& spec, const std::vector<PolyMap>& frameMaps, bool wantBasis) {
    // The frame sector has the same exponent set as the monomial sector.
    GradedBasis sector = enumerate_basis(spec);
    std::map<std::vector<int>, std::vector<SpinorMonomial>> blocks;
    for (const auto& m : sector.monomials()) {
        blocks[osc::weight(m)].push_back(m);
    }

    BlockedKernel out;
    out.spec = spec;
    out.sectorDim = sector.size();
    out.blockCount = blocks.size();

    std::unordered_map<RowKey, std::size_t, RowKeyHash> owner;
    std::size_t blockId = 0;
    for (const auto& [w, cols] : blocks) {
        out.largestBlock = std::max(out.largestBlock, cols.size());
        std::unordered_map<RowKey, std::uint32_t, RowKeyHash> rowIndex;
        std::vector<SparseVector> columns(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            SpinorPoly s = SpinorPoly::monomial(cols[c]);
            for (std::size_t k = 0; k < frameMaps.size(); ++k) {
                SpinorPoly image = frameMaps[k](s);
                for (const auto& [m, coef] : image.terms()) {
                    RowKey key{k, m};
                    auto [it, fresh] = rowIndex.try_emplace(key, static_cast<std::uint32_t>(rowIndex.size()));
                    if (fresh) {
                        auto [o, firstSeen] = owner.try_emplace(key, blockId);
                        if (!firstSeen && o->second != blockId) {
                            throw Error("map is not weight-homogeneous: image " + m.str() + " reached from two blocks");
                        }
                    }
                    columns[c].emplace_back(it->second, coef);
                }
            }
        }
        SparseMatrix mat(rowIndex.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            mat.set_column(c, std::move(columns[c]));
        }
        if (!wantBasis) {
            out.kernelDim += cols.size() - rank(mat);
        } else {
            SubspaceBasis ker = kernel_basis(mat);
            out.kernelDim += ker.dim();
            for (const auto& v : ker.vectors()) {
                PolyAccumulator acc(spec.n);
                for (const auto& [idx, coef] : v) {
                    acc.add(cols[idx], coef);
                }
                out.frameBasis.push_back(std::move(acc).finish());
            }
        }
        ++blockId;
    }
    return out;
}

std::vector<PolyMap> frame_dirac(int) { return {osc::apply_Ds}; }

std::vector<PolyMap> frame_dirac_squared(int) {
    return {[](const SpinorPoly& f) { return osc::apply_Ds(osc::apply_Ds(f)); }};
}

std::vector<PolyMap> frame_twistor(int rank) {
    std::vector<PolyMap> maps;
    for (int j = 1; j <= rank; ++j) {
        maps.emplace_back([j](const SpinorPoly& f) { return osc::twistor_plus(j, f); });
        maps.emplace_back([j](const SpinorPoly& f) { return osc::twistor_minus(j, f); });
    }
    return maps;
}

std::vector<PolyMap> frame_raising(int) { return {osc::apply_Xs}; }

}  // namespace sympspin
