#include "witness.hpp"

#include "tiling.hpp"

namespace gm {

namespace {

std::optional<ViolationWitness> try_candidate(const MultiplierSpec& M, const ReducedLattice& R,
                                              const PCGenerator& G, const std::string& family) {
    // never trust a constructed generator: some lattice geometries
    // collide and only the exact checker can tell
    if (!verify_casazza(G, R).is_parseval) return std::nullopt;
    PCGenerator H = apply_multiplier(M, G);
    auto repH = verify_casazza(H, R);
    if (repH.is_parseval) return std::nullopt;
    return ViolationWitness{G, H, std::move(repH), family};
}

std::vector<BasisVector> front_single_basis(size_t gamma, size_t i) {
    auto b = standard_basis(gamma);
    std::swap(b[0], b[i]);
    return b;
}

// slot 0 = e_j, slot 1 = e_i, remaining vectors in order
std::vector<BasisVector> front_two_basis(size_t gamma, size_t i, size_t j) {
    auto b = standard_basis(gamma);
    std::vector<BasisVector> out;
    out.push_back(b[j]);
    out.push_back(b[i]);
    for (size_t t = 0; t < gamma; ++t)
        if (t != i && t != j) out.push_back(b[t]);
    return out;
}

// slots 0/1 = (e_i +- e_j)/sqrt(2) (or the imaginary variant)
std::vector<BasisVector> front_pair_basis(size_t gamma, size_t i, size_t j, bool imaginary,
                                          bool minus_first) {
    auto pb = pair_basis(gamma, i, j, imaginary);
    std::vector<BasisVector> out;
    out.push_back(pb[minus_first ? j : i]);
    out.push_back(pb[minus_first ? i : j]);
    for (size_t t = 0; t < gamma; ++t)
        if (t != i && t != j) out.push_back(pb[t]);
    return out;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t a = 0; a < v.size(); ++a) r[a] = Rat(v[a]);
    return r;
}

bool nonzero(const IntVec& v) {
    for (const auto& c : v)
        if (c != 0) return true;
    return false;
}

// Part 1 family: orthonormal-basis generators aligned with the
// non-unitary cell; probing vectors expose any defect of M*M - I.
std::optional<ViolationWitness> unitary_witness(const MultiplierSpec& M, const ReducedLattice& R,
                                                const MultViolation& vio) {
    const size_t gamma = M.gamma();
    MultiTile mt = build_multitile(R);

    std::vector<std::vector<BasisVector>> probes;
    probes.push_back(front_single_basis(gamma, vio.i));
    if (vio.i != vio.j) probes.push_back(front_single_basis(gamma, vio.j));
    if (gamma >= 2 && vio.i != vio.j) {
        for (bool im : {false, true})
            for (bool mf : {false, true})
                probes.push_back(front_pair_basis(gamma, vio.i, vio.j, im, mf));
    }

    for (const auto& basis : probes) {
        for (const auto& anchor : mt.E[0].boxes()) {
            RatVec delta = vio.cell.lower - anchor.lower;
            auto G = generator_from_multitile(mt.translated(delta), basis);
            if (auto w = try_candidate(M, R, G, "part1-onb")) return w;
        }
    }
    return std::nullopt;
}

// Part 2 family: pinned box-pair generators; the Eq.(5) sum at k0
// collapses to d0 <M(x0) xi1, M(x0 - k0) xi2>.
std::optional<ViolationWitness> scalar_identity_witness_gamma2(const MultiplierSpec& M,
                                                               const ReducedLattice& R,
                                                               const MultViolation& vio) {
    const size_t gamma = M.gamma();
    const size_t d = R.dim();
    RatVec k0(d);
    for (size_t a = 0; a < d; ++a) k0[a] = R.D.at(a, a) * Rat(vio.n[a]);
    const bool in_L = in_time_lattice(k0);

    std::vector<std::vector<BasisVector>> probes;
    if (vio.offdiag) {
        probes.push_back(front_two_basis(gamma, vio.i, vio.j));
        probes.push_back(front_two_basis(gamma, vio.j, vio.i));
        for (bool im : {false, true})
            for (bool mf : {false, true})
                probes.push_back(front_pair_basis(gamma, vio.i, vio.j, im, mf));
    } else {
        for (bool im : {false, true})
            for (bool mf : {false, true})
                probes.push_back(front_pair_basis(gamma, vio.i, vio.j, im, mf));
        probes.push_back(front_two_basis(gamma, vio.i, vio.j));
    }

    ChosenBoxPair cbp = choose_box_pair(R, k0, in_L ? BoxPairMode::lattice : BoxPairMode::nonlattice);
    RatVec base = vio.cell.lower - cbp.C.lower;
    std::vector<RatVec> deltas{base + k0, base};

    for (const auto& basis : probes) {
        for (const auto& delta : deltas) {
            MultiTile mt = cbp.mt.translated(delta);
            if (in_L) {
                auto G = witness_generator(mt, WitnessScenario::part2case2, k0, IntVec(d, 0), basis);
                if (auto w = try_candidate(M, R, G, "part2-case2")) return w;
            } else {
                auto G = generator_from_multitile(mt, basis);
                if (auto w = try_candidate(M, R, G, "part2-case1")) return w;
            }
        }
    }
    return std::nullopt;
}

// Part 3 family: shifted +- patterns turning a periodicity defect of
// lambda into a nonzero Eq.(5) cell.
std::optional<ViolationWitness> periodicity_witness_gamma2(const MultiplierSpec& M,
                                                           const ReducedLattice& R,
                                                           const MultViolation& vio) {
    const size_t d = R.dim();
    RatVec k0(d);
    for (size_t a = 0; a < d; ++a) k0[a] = R.D.at(a, a) * Rat(vio.n[a]);
    const bool in_L = in_time_lattice(k0);

    // candidate lattice shifts l0 with a verified lambda mismatch
    std::vector<IntVec> l0_candidates;
    l0_candidates.push_back(vio.l0);
    l0_candidates.push_back(IntVec(d, 0));
    for (size_t a = 0; a < d; ++a) {
        IntVec e(d, 0);
        e[a] = 1;
        l0_candidates.push_back(e);
        e[a] = -1;
        l0_candidates.push_back(e);
    }
    if (in_L) {
        IntVec kint(d);
        for (size_t a = 0; a < d; ++a) kint[a] = rat_num(k0[a]);
        l0_candidates.insert(l0_candidates.begin() + 1, kint);  // sub2 probe
        IntVec nkint(d);
        for (size_t a = 0; a < d; ++a) nkint[a] = -kint[a];
        l0_candidates.insert(l0_candidates.begin() + 2, nkint);  // sub3 probe
    }

    ChosenBoxPair cbp = choose_box_pair(R, k0, in_L ? BoxPairMode::lattice : BoxPairMode::nonlattice);
    IntVec kint(d, 0);
    bool keq;
    for (const auto& l0 : l0_candidates) {
        if (!nonzero(l0)) continue;
        auto mism = lambda_shift_mismatch(M, R, vio.n, -to_rat(l0));
        if (!mism) continue;

        WitnessScenario scenario;
        std::string family;
        if (!in_L) {
            scenario = WitnessScenario::part3case1;
            family = "part3-case1";
        } else {
            for (size_t a = 0; a < d; ++a) kint[a] = rat_num(k0[a]);
            keq = true;
            bool kneg = true;
            for (size_t a = 0; a < d; ++a) {
                if (l0[a] != kint[a]) keq = false;
                if (l0[a] != -kint[a]) kneg = false;
            }
            scenario = keq   ? WitnessScenario::sub2
                       : kneg ? WitnessScenario::sub3
                              : WitnessScenario::sub1;
            family = keq ? "part3-sub2" : kneg ? "part3-sub3" : "part3-sub1";
        }

        RatVec base = mism->lower - cbp.C.lower;
        for (const auto& delta : {base + k0, base, base + k0 + to_rat(l0), base + to_rat(l0)}) {
            MultiTile mt = cbp.mt.translated(delta);
            auto G = witness_generator(mt, scenario, k0, l0);
            if (auto w = try_candidate(M, R, G, family)) return w;
        }
    }
    return std::nullopt;
}

// gamma = 1: five-set configuration (k outside L) or the in-orbit
// four-cell pattern (k in L), driven by an exact identity mismatch.
std::optional<ViolationWitness> periodicity_witness_scalar(const MultiplierSpec& M,
                                                           const ReducedLattice& R,
                                                           const MultViolation& vio) {
    const size_t d = R.dim();
    RatVec k0(d);
    for (size_t a = 0; a < d; ++a) k0[a] = R.D.at(a, a) * Rat(vio.n[a]);
    const bool k_in_L = in_time_lattice(k0);

    std::vector<IntVec> l_candidates;
    l_candidates.push_back(vio.l0);
    {
        IntVec neg(d);
        for (size_t a = 0; a < d; ++a) neg[a] = -vio.l0[a];
        l_candidates.push_back(neg);
    }
    for (size_t a = 0; a < d; ++a) {
        for (int s : {1, -1, 2, -2}) {
            IntVec e(d, 0);
            e[a] = s;
            l_candidates.push_back(e);
        }
    }

    for (const auto& l : l_candidates) {
        if (!nonzero(l)) continue;
        auto mism = scalar_identity_mismatch(M, R, l, k0);
        if (!mism) continue;
        RatVec delta = mism->lower;

        if (!k_in_L) {
            // Lemma 4.2(i) sets exist when l avoids the frequency lattice
            if (frequency_coefficients(R, to_rat(l))) continue;
            auto sets = choose_scalar_case_sets(R, l, k0);
            std::vector<GenCell> cells;
            auto push = [&](const BoxSet& S, const Rat& wsq, const Rat& sign) {
                for (const auto& b : S.boxes())
                    cells.push_back(GenCell{
                        b, wsq, {ExactScalar::constant(d, CycQ::from_rational(sign))}});
            };
            if (!sets.E1.is_empty()) push(sets.E1, R.d0, Rat(1));
            push(sets.E2, R.d0 / 2, Rat(1));
            push(sets.E3, R.d0 / 2, Rat(1));
            push(sets.E4, R.d0 / 2, Rat(1));
            push(sets.E5, R.d0 / 2, Rat(-1));
            PCGenerator G(1, d, std::move(cells));
            if (auto w = try_candidate(M, R, G.translated(delta), "scalar-five-set")) return w;
        } else {
            // in-orbit pattern on unit-cube translates at 0, -l, -k, -l-k
            bool collide = false;
            IntVec kint(d);
            for (size_t a = 0; a < d; ++a) kint[a] = rat_num(k0[a]);
            bool l_eq_k = true, l_eq_negk = true;
            for (size_t a = 0; a < d; ++a) {
                if (l[a] != kint[a]) l_eq_k = false;
                if (l[a] != -kint[a]) l_eq_negk = false;
            }
            collide = l_eq_k || l_eq_negk;
            if (collide) continue;
            std::vector<GenCell> cells;
            Box unit = make_box(zero_vec(d), RatVec(d, Rat(1)));
            auto put = [&](const RatVec& off, const Rat& sign) {
                cells.push_back(GenCell{unit.translated(off), R.d0 / 4,
                                        {ExactScalar::constant(d, CycQ::from_rational(sign))}});
            };
            put(zero_vec(d), Rat(1));
            put(-to_rat(l), Rat(1));
            put(-k0, Rat(1));
            put(-to_rat(l) - k0, Rat(-1));
            PCGenerator G(1, d, std::move(cells));
            if (auto w = try_candidate(M, R, G.translated(delta), "scalar-in-orbit")) return w;
        }
    }
    return std::nullopt;
}

}  // namespace

WitnessResult find_violation_witness(const MultiplierSpec& M, const ReducedLattice& R,
                                     Int k_radius) {
    auto verdict = check_conditions(M, R, k_radius);
    if (verdict.is_multiplier && verdict.certified)
        fail_input("not applicable: the multiplier passed all conditions");
    if (!verdict.violation) {
        WitnessResult res;
        res.outcome = WitnessOutcome::inconclusive;
        res.note = "no violation found inside the tested window |n| <= " + verdict.window.str();
        return res;
    }

    const auto& vio = *verdict.violation;
    std::optional<ViolationWitness> w;
    switch (vio.condition) {
        case 1:
            w = unitary_witness(M, R, vio);
            break;
        case 2:
            w = scalar_identity_witness_gamma2(M, R, vio);
            break;
        case 3:
            w = M.gamma() == 1 ? periodicity_witness_scalar(M, R, vio)
                               : periodicity_witness_gamma2(M, R, vio);
            break;
        default:
            fail_internal("unknown violation condition");
    }

    WitnessResult res;
    if (w) {
        res.outcome = WitnessOutcome::found;
        res.witness = std::move(w);
    } else {
        res.outcome = WitnessOutcome::inconclusive;
        res.note = "witness families exhausted without a Parseval failure";
    }
    return res;
}

}  // namespace gm
