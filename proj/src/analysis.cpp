#include "sympspin/analysis.hpp"

#include "sympspin/blocked.hpp"
#include "sympspin/oscillator.hpp"
#include "sympspin/parse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace sympspin {

namespace {

constexpr std::size_t kMaxWitnesses = 3;

SectorSpec shifted(const SectorSpec& s, int dh, int dQ, bool flipParity) {
    return SectorSpec{s.n, s.h + dh, s.Q + dQ, flipParity ? flip(s.parity) : s.parity};
}

std::shared_ptr<const GradedBasis> basis_of(const SectorSpec& s) {
    return std::make_shared<const GradedBasis>(enumerate_basis(s));
}

SpinorPoly Ds_power(SpinorPoly v, int j) {
    for (int t = 0; t < j; ++t) {
        v = apply_Ds(v);
    }
    return v;
}

SpinorPoly Xs_power(SpinorPoly v, int j) {
    for (int t = 0; t < j; ++t) {
        v = apply_Xs(v);
    }
    return v;
}

std::vector<PolyMap> frame_twistor_after_raising(int rank) {
    std::vector<PolyMap> maps;
    for (const auto& t : frame_twistor(rank)) {
        maps.emplace_back([t](const SpinorPoly& f) { return t(osc::apply_Xs(f)); });
    }
    return maps;
}

std::vector<PolyMap> concat(std::vector<PolyMap> a, const std::vector<PolyMap>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::size_t joint_dim(const SectorSpec& spec, const std::vector<PolyMap>& maps) {
    if (spec.h < 0 || spec.Q < 0) {
        return 0;
    }
    return blocked_kernel(spec, maps, false).kernelDim;
}

bool all_zero(const std::vector<SpinorPoly>& v) {
    for (const auto& p : v) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

// A vector of `a` that is not in `b`, if any.
std::optional<SpinorPoly> outside(const SubspaceBasis& a, const SubspaceBasis& b) {
    for (const auto& p : a.polys()) {
        if (!b.contains(p)) {
            return p;
        }
    }
    return std::nullopt;
}

SpinorPoly random_spinor(const GradedBasis& basis, std::mt19937_64& rng) {
    PolyAccumulator acc(basis.spec().n);
    if (basis.size() == 0) {
        return std::move(acc).finish();
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> terms(1, 4), num(-5, 5), den(1, 4);
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        const auto& m = basis[pick(rng)];
        mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
        re.canonicalize();
        im.canonicalize();
        acc.add(m, GaussianRational(re, im));
    }
    return std::move(acc).finish();
}

VerificationReport make_report(std::string claim, const SectorSpec& spec) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.params = spec;
    return r;
}

}  // namespace

void VerificationReport::add_witness(const std::string& w) {
    if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back(w);
    }
}

void VerificationReport::settle() { pass = expectedDim == observedDim && witnesses.empty(); }

MonogenicSpace monogenics(const SectorSpec& spec) {
    auto domain = basis_of(spec);
    if (spec.h == 0) {
        return {spec, SubspaceBasis::full(domain)};
    }
    GradedBasis codomain = enumerate_basis(shifted(spec, -1, 1, true));
    SparseMatrix m = operator_matrix([](const SpinorPoly& s) { return apply_Ds(s); }, *domain, codomain);
    return {spec, kernel_basis(m, domain)};
}

TwistorKernelSpace twistor_kernel(const SectorSpec& spec) {
    auto domain = basis_of(spec);
    if (spec.h == 0) {
        return {spec, SubspaceBasis::full(domain)};
    }
    // c_l D_s can raise the q-degree by two; it preserves q-parity.
    GradedBasis codomain = enumerate_basis(shifted(spec, -1, 2, false));
    std::vector<PolyMap> comps;
    for (int l = 1; l <= 2 * spec.n; ++l) {
        comps.emplace_back([l](const SpinorPoly& s) { return twistor_component(l, s); });
    }
    SparseMatrix m = stacked_operator_matrix(comps, *domain, codomain);
    return {spec, kernel_basis(m, domain)};
}

std::size_t monogenic_dim(const SectorSpec& spec) { return joint_dim(spec, frame_dirac(spec.n)); }

std::size_t twistor_kernel_dim(const SectorSpec& spec) { return joint_dim(spec, frame_twistor(spec.n)); }

GaussianRational tower_constant(int j, int l, int n) {
    GaussianRational k(1);
    for (int t = 1; t <= j; ++t) {
        k *= GaussianRational(0, -(t * (l + n) + t * (t - 1) / 2));
    }
    return k;
}

VerificationReport verify_sl2(const SectorSpec& spec) {
    const int n = spec.n;
    VerificationReport r = make_report("sl2", spec);
    LinearOperator E = Es_operator(n);
    E += LinearOperator::identity(n) * GaussianRational(n);
    LinearOperator X = Xs_operator(n), D = Ds_operator(n);
    LinearOperator eX = commutator(E, X), eD = commutator(E, D), xD = commutator(X, D);
    GradedBasis basis = enumerate_basis(spec);
    r.expectedDim = basis.size();
    for (const auto& m : basis.monomials()) {
        SpinorPoly s = SpinorPoly::monomial(m);
        bool ok = eX.apply(s) == X.apply(s);
        ok = ok && eD.apply(s) == -D.apply(s);
        ok = ok && xD.apply(s) == E.apply(s) * GaussianRational::i();
        if (ok) {
            ++r.observedDim;
        } else {
            r.add_witness(s.str());
        }
    }
    r.settle();
    return r;
}

VerificationReport verify_intertwining(const SectorSpec& spec) {
    const int n = spec.n;
    VerificationReport r = make_report("intertwine", spec);
    std::vector<std::pair<std::string, LinearOperator>> gens;
    for (GeneratorKind kind : {GeneratorKind::X, GeneratorKind::Y, GeneratorKind::Z}) {
        for (int j = 1; j <= n; ++j) {
            for (int k = (kind == GeneratorKind::X ? 1 : j); k <= n; ++k) {
                std::string name = std::string("mp(") + generator_name(kind) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")";
                gens.emplace_back(name, mp_generator(kind, j, k, n));
            }
        }
    }
    GradedBasis basis = enumerate_basis(spec);
    r.expectedDim = basis.size();
    for (const auto& m : basis.monomials()) {
        SpinorPoly s = SpinorPoly::monomial(m);
        SpinorPoly ds = apply_Ds(s), xs = apply_Xs(s);
        bool ok = true;
        for (const auto& [name, g] : gens) {
            SpinorPoly gs = g.apply(s);
            bool good = g.apply(ds) == apply_Ds(gs) && g.apply(xs) == apply_Xs(gs);
            if (!good) {
                r.add_witness(name + " on " + s.str());
                ok = false;
            }
        }
        if (ok) {
            ++r.observedDim;
        }
    }
    r.details.emplace_back("generators", static_cast<std::int64_t>(gens.size()));
    r.settle();
    return r;
}

VerificationReport verify_clifford(const SectorSpec& spec, int samples) {
    const int n = spec.n;
    VerificationReport r = make_report("clifford", spec);
    GradedBasis basis = enumerate_basis(spec);
    std::seed_seq seed{n, spec.h, spec.Q, static_cast<int>(spec.parity), samples};
    std::mt19937_64 rng(seed);
    for (int a = 1; a <= 2 * n; ++a) {
        for (int b = 1; b <= 2 * n; ++b) {
            GaussianRational c = GaussianRational(0, -omega(n, a, b));
            for (int t = 0; t < samples; ++t) {
                SpinorPoly s = random_spinor(basis, rng);
                ++r.expectedDim;
                SpinorPoly lhs = clifford(a, clifford(b, s)) - clifford(b, clifford(a, s));
                if (lhs == s * c) {
                    ++r.observedDim;
                } else {
                    r.add_witness("cl(" + std::to_string(a) + "),cl(" + std::to_string(b) + ") on " + s.str());
                }
            }
        }
    }
    r.details.emplace_back("samplesPerPair", samples);
    r.settle();
    return r;
}

VerificationReport verify_prolongation(const SectorSpec& spec) {
    VerificationReport r = make_report("prolong", spec);
    const int n = spec.n;
    r.expectedDim = twistor_kernel_dim(spec);
    r.observedDim = joint_dim(spec, concat(frame_twistor(n), frame_dirac_squared(n)));
    if (r.expectedDim != r.observedDim) {
        for (const auto& v : blocked_kernel(spec, frame_twistor(n)).monomial_basis()) {
            if (!Ds_power(v, 2).is_zero()) {
                r.add_witness(v.str());
            }
        }
    }
    r.details.emplace_back("sectorDim", static_cast<std::int64_t>(spec.dimension()));
    r.settle();
    return r;
}

VerificationReport verify_constant_lemma(const SectorSpec& spec) {
    VerificationReport r = make_report("constant", spec);
    const int n = spec.n;
    r.expectedDim = spec.h == 0 ? spec.dimension() : 0;
    BlockedKernel k = blocked_kernel(spec, concat(frame_twistor(n), frame_dirac(n)), spec.h > 0);
    r.observedDim = k.kernelDim;
    r.equalAsSubspaces = r.expectedDim == r.observedDim;
    if (spec.h > 0) {
        for (const auto& v : k.monomial_basis()) {
            r.add_witness(v.str());
        }
    }
    r.details.emplace_back("sectorDim", static_cast<std::int64_t>(spec.dimension()));
    r.settle();
    return r;
}

VerificationReport verify_tower_lemma(const SectorSpec& spec) {
    VerificationReport r = make_report("tower", spec);
    const int n = spec.n;
    std::size_t dimM = monogenic_dim(spec);
    r.expectedDim = (n == 1 || spec.h == 0) ? dimM : 0;
    r.observedDim = joint_dim(spec, concat(frame_dirac(n), frame_twistor_after_raising(n)));
    if (r.expectedDim != r.observedDim) {
        for (const auto& v : blocked_kernel(spec, frame_dirac(n)).monomial_basis()) {
            bool inKernel = all_zero(apply_Ts(apply_Xs(v)));
            if (inKernel != (r.expectedDim == dimM)) {
                r.add_witness(v.str());
            }
        }
    }
    r.details.emplace_back("monogenicDim", static_cast<std::int64_t>(dimM));
    r.settle();
    return r;
}

VerificationReport verify_composition_series(const SectorSpec& spec) {
    VerificationReport r = make_report("series", spec);
    const int n = spec.n, h = spec.h;
    BlockedKernel k2 = blocked_kernel(spec, frame_dirac_squared(n));
    r.expectedDim = k2.kernelDim;
    std::size_t dimKerD = monogenic_dim(spec);
    r.details.emplace_back("kerD", static_cast<std::int64_t>(dimKerD));
    r.details.emplace_back("kerD2", static_cast<std::int64_t>(k2.kernelDim));
    if (h == 0) {
        // D_s kills x-constants, so Ker D^2 = Ker D is the whole sector.
        r.observedDim = dimKerD;
        r.settle();
        return r;
    }
    // v = m + X m' with m' = i D v / (h-1+n); both parts must be monogenic.
    GaussianRational scale = GaussianRational::i() / GaussianRational(h - 1 + n);
    for (const auto& v : k2.monomial_basis()) {
        SpinorPoly mPrime = apply_Ds(v) * scale;
        SpinorPoly m = v - apply_Xs(mPrime);
        if (apply_Ds(m).is_zero() && apply_Ds(mPrime).is_zero()) {
            ++r.observedDim;
        } else {
            r.add_witness(v.str());
        }
    }
    // Directness: no nonzero monogenic m' of homogeneity h-1 has X m' monogenic.
    SectorSpec lower = shifted(spec, -1, 0, true);
    std::vector<PolyMap> raisedDirac{[](const SpinorPoly& f) { return osc::apply_Ds(osc::apply_Xs(f)); }};
    std::size_t overlap = joint_dim(lower, concat(frame_dirac(n), raisedDirac));
    r.details.emplace_back("overlap", static_cast<std::int64_t>(overlap));
    if (overlap != 0) {
        r.add_witness("X_s maps a monogenic of homogeneity " + std::to_string(h - 1) + " into Ker D_s");
    }
    r.settle();
    return r;
}

VerificationReport verify_triangle(const SectorSpec& spec) {
    VerificationReport r = make_report("triangle", spec);
    const int n = spec.n, h = spec.h;

    // Fill: peel every basis spinor into sum_j X^j m_j with m_j monogenic of
    // homogeneity h - j.
    GradedBasis basis = enumerate_basis(spec);
    r.expectedDim = basis.size();
    for (const auto& mono : basis.monomials()) {
        SpinorPoly rest = SpinorPoly::monomial(mono);
        bool ok = true;
        for (int j = h; j >= 0 && ok; --j) {
            SpinorPoly mj = Ds_power(rest, j) * tower_constant(j, h - j, n).inverse();
            ok = apply_Ds(mj).is_zero();
            rest -= Xs_power(mj, j);
        }
        if (ok && rest.is_zero()) {
            ++r.observedDim;
        } else {
            r.add_witness(SpinorPoly::monomial(mono).str());
        }
    }

    // Directness on the faithful sub-sector: the images X^j M_{h-j}(Q-j) are
    // independent. Everything is weight-homogeneous, so ranks split by weight.
    std::map<std::vector<int>, Echelon> byWeight;
    std::map<std::vector<int>, std::unordered_map<SpinorMonomial, std::uint32_t, MonomialHash>> coords;
    std::size_t dimSum = 0, independent = 0;
    for (int j = 0; j <= h; ++j) {
        SectorSpec src = shifted(spec, -j, -j, j % 2 == 1);
        std::size_t cell = 0;
        if (src.Q >= 0) {
            BlockedKernel m = blocked_kernel(src, frame_dirac(n));
            cell = m.kernelDim;
            for (const auto& f : m.frameBasis) {
                SpinorPoly img = f;
                for (int t = 0; t < j; ++t) {
                    img = osc::apply_Xs(img);
                }
                if (img.is_zero()) {
                    continue;
                }
                auto w = osc::weight(img.terms().front().mono);
                auto& index = coords[w];
                SparseVector v;
                for (const auto& [mono, coef] : img.terms()) {
                    auto [it, fresh] = index.try_emplace(mono, static_cast<std::uint32_t>(index.size()));
                    v.emplace_back(it->second, coef);
                }
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                if (byWeight[w].insert(std::move(v))) {
                    ++independent;
                }
            }
        }
        dimSum += cell;
        r.details.emplace_back("triangle.l" + std::to_string(h - j) + ".j" + std::to_string(j),
                               static_cast<std::int64_t>(cell));
        // X_s injective on the source sector.
        if (j > 0) {
            SectorSpec below = shifted(spec, -j, 0, j % 2 == 1);
            std::size_t ker = joint_dim(below, frame_raising(n));
            if (ker != 0) {
                r.add_witness("X_s is not injective on " + below.str());
            }
        }
    }
    r.details.emplace_back("faithfulDimSum", static_cast<std::int64_t>(dimSum));
    r.details.emplace_back("faithfulRank", static_cast<std::int64_t>(independent));
    if (independent != dimSum) {
        r.add_witness("summands X_s^j M_l are not independent in " + spec.str());
    }
    r.settle();
    return r;
}

VerificationReport verify_theorem_at(const SectorSpec& spec) {
    VerificationReport r = make_report("theorem", spec);
    const int n = spec.n, h = spec.h;
    if (h == 0) {
        r.expectedDim = spec.dimension();
        r.observedDim = twistor_kernel_dim(spec);
        r.equalAsSubspaces = r.expectedDim == r.observedDim;
    } else if (n > 1 && h >= 2) {
        r.expectedDim = 0;
        r.observedDim = twistor_kernel_dim(spec);
        r.equalAsSubspaces = r.observedDim == 0;
        if (r.observedDim != 0) {
            for (const auto& v : blocked_kernel(spec, frame_twistor(n)).monomial_basis()) {
                r.add_witness(v.str());
            }
        }
    } else {
        // Ker T_s = X_s(M_{h-1}); inside the sector the image comes from
        // q-degree <= Q-1 because X_s raises q-degree by exactly one.
        TwistorKernelSpace ker = twistor_kernel(spec);
        SectorSpec below = shifted(spec, -1, -1, true);
        std::vector<SpinorPoly> image;
        if (below.Q >= 0) {
            SubspaceBasis source = (n > 1) ? SubspaceBasis::full(basis_of(below)) : monogenics(below).basis;
            for (const auto& m : source.polys()) {
                image.push_back(apply_Xs(m));
            }
        }
        SubspaceBasis expected = SubspaceBasis::span(ker.basis.ambient(), image);
        r.expectedDim = expected.dim();
        r.observedDim = ker.basis.dim();
        r.equalAsSubspaces = expected == ker.basis;
        if (!*r.equalAsSubspaces) {
            if (auto w = outside(ker.basis, expected)) {
                r.add_witness(w->str());
            }
            if (auto w = outside(expected, ker.basis)) {
                r.add_witness(w->str());
            }
        }
        r.details.emplace_back("sourceDim", static_cast<std::int64_t>(image.size()));
    }
    if (n == 1) {
        r.note = "finite-truncation evidence, not a proof";
    }
    r.details.emplace_back("sectorDim", static_cast<std::int64_t>(spec.dimension()));
    r.settle();
    return r;
}

std::vector<VerificationReport> verify_theorem(int n, int hMax, int Q, Parity parity) {
    std::vector<VerificationReport> out;
    for (int h = 0; h <= hMax; ++h) {
        out.push_back(verify_theorem_at(SectorSpec{n, h, Q, parity}));
    }
    return out;
}

VerificationReport verify_example() {
    const int n = 2;
    VerificationReport r = make_report("example", SectorSpec{n, 2, 0, Parity::Even});
    SpinorPoly p = parse_spinor("-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4", n);
    SpinorPoly t1 = parse_spinor("q2*(x2 + i*x4)^2", n);
    SpinorPoly t2 = parse_spinor("q1*(x1 + i*x3)^2", n);
    r.expectedDim = 4;

    SpinorPoly dp = apply_Ds(p);
    if (dp.is_zero()) {
        ++r.observedDim;
    } else {
        r.add_witness("D_s p = " + dp.str());
    }
    std::vector<SpinorPoly> t = apply_Ts(apply_Xs(p));
    for (auto [idx, want] : {std::pair{0, t1}, std::pair{1, t2}}) {
        if (t[idx] == want) {
            ++r.observedDim;
        } else {
            r.add_witness("component " + std::to_string(idx + 1) + " = " + t[idx].str());
        }
    }
    if (monogenics(r.params).basis.contains(p)) {
        ++r.observedDim;
    } else {
        r.add_witness("p not in Ker D_s");
    }
    r.settle();
    return r;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
    auto key = [](const VerificationReport& x) {
        return std::make_tuple(x.claim, x.params.n, x.params.h, x.params.Q, static_cast<int>(x.params.parity));
    };
    return key(a) < key(b);
}

}  // namespace sympspin
