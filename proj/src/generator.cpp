#include "generator.hpp"

namespace gm {

namespace {

std::vector<ExactScalar> constant_vec(size_t dim, const std::vector<CycQ>& entries) {
    std::vector<ExactScalar> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(ExactScalar::constant(dim, e));
    return v;
}

std::vector<CycQ> unit_entries(size_t gamma, size_t idx, const Rat& sign = Rat(1)) {
    std::vector<CycQ> e(gamma, CycQ::zero());
    e[idx] = CycQ::from_rational(sign);
    return e;
}

}  // namespace

PCGenerator::PCGenerator(size_t gamma, size_t dim, std::vector<GenCell> cells)
    : gamma_(gamma), dim_(dim), cells_(std::move(cells)) {
    if (gamma_ == 0 || dim_ == 0) fail_input("generator needs positive gamma and dimension");
    for (const auto& c : cells_) {
        if (c.box.dim() != dim_) fail_input("generator cell dimension mismatch");
        if (c.vec.size() != gamma_) fail_input("generator cell component count mismatch");
        if (c.weight_sq <= 0) fail_input("generator cell weight must be positive");
        for (const auto& comp : c.vec)
            if (comp.dim() != dim_) fail_input("generator component dimension mismatch");
    }
    for (size_t a = 0; a < cells_.size(); ++a)
        for (size_t b = a + 1; b < cells_.size(); ++b)
            if (boxes_intersect(cells_[a].box, cells_[b].box))
                fail_input("generator cells overlap");
}

BoxSet PCGenerator::support() const {
    std::vector<Box> boxes;
    boxes.reserve(cells_.size());
    for (const auto& c : cells_) boxes.push_back(c.box);
    return BoxSet::from_boxes(dim_, std::move(boxes));
}

PCGenerator PCGenerator::translated(const RatVec& v) const {
    std::vector<GenCell> cells = cells_;
    for (auto& c : cells) {
        c.box = c.box.translated(v);
        // values are functions of x; chi_E(x - v) carries the same
        // trig polynomial shifted accordingly
        for (auto& comp : c.vec) comp = comp.shifted_arg(-v);
    }
    return PCGenerator(gamma_, dim_, std::move(cells));
}

PCGenerator PCGenerator::transformed(const std::vector<std::vector<CycQ>>& U) const {
    if (U.size() != gamma_) fail_input("matrix size mismatch in transform");
    std::vector<GenCell> cells = cells_;
    for (auto& c : cells) {
        std::vector<ExactScalar> out(gamma_, ExactScalar::zero(dim_));
        for (size_t i = 0; i < gamma_; ++i) {
            if (U[i].size() != gamma_) fail_input("matrix size mismatch in transform");
            for (size_t j = 0; j < gamma_; ++j) out[i] = out[i] + c.vec[j].scaled_cyc(U[i][j]);
        }
        c.vec = std::move(out);
    }
    return PCGenerator(gamma_, dim_, std::move(cells));
}

std::vector<BasisVector> standard_basis(size_t gamma) {
    std::vector<BasisVector> basis(gamma);
    for (size_t j = 0; j < gamma; ++j) basis[j] = BasisVector{unit_entries(gamma, j), Rat(1)};
    return basis;
}

std::vector<BasisVector> pair_basis(size_t gamma, size_t i, size_t j, bool imaginary) {
    if (i >= gamma || j >= gamma || i == j) fail_input("invalid pair basis indices");
    auto basis = standard_basis(gamma);
    std::vector<CycQ> plus(gamma, CycQ::zero()), minus(gamma, CycQ::zero());
    plus[i] = CycQ::one();
    minus[i] = CycQ::one();
    if (imaginary) {
        plus[j] = CycQ::from_complex(Rat(0), Rat(1));
        minus[j] = CycQ::from_complex(Rat(0), Rat(-1));
    } else {
        plus[j] = CycQ::one();
        minus[j] = CycQ::from_rational(Rat(-1));
    }
    basis[i] = BasisVector{std::move(plus), Rat(1, 2)};
    basis[j] = BasisVector{std::move(minus), Rat(1, 2)};
    return basis;
}

void require_orthonormal(const std::vector<BasisVector>& basis) {
    const size_t gamma = basis.size();
    for (size_t a = 0; a < gamma; ++a) {
        if (basis[a].entries.size() != gamma) fail_input("basis vector length mismatch");
        if (basis[a].weight_sq <= 0) fail_input("basis weight must be positive");
        for (size_t b = a; b < gamma; ++b) {
            CycQ inner = CycQ::zero();
            for (size_t t = 0; t < gamma; ++t)
                inner = inner + basis[a].entries[t] * basis[b].entries[t].conj();
            if (a == b) {
                if (!(inner == CycQ::from_rational(Rat(1) / basis[a].weight_sq)))
                    fail_input("basis is not orthonormal");
            } else if (!inner.is_zero()) {
                fail_input("basis is not orthonormal");
            }
        }
    }
}

PCGenerator generator_from_multitile(const MultiTile& mt, const std::vector<BasisVector>& basis) {
    const size_t gamma = size_t(mt.gamma);
    if (basis.size() != gamma) fail_input("basis size must equal gamma");
    require_orthonormal(basis);
    std::vector<GenCell> cells;
    for (size_t g = 0; g < gamma; ++g) {
        Rat w = mt.d0 * basis[g].weight_sq;
        for (const auto& box : mt.E[g].boxes())
            cells.push_back(GenCell{box, w, constant_vec(mt.dim, basis[g].entries)});
    }
    return PCGenerator(gamma, mt.dim, std::move(cells));
}

PCGenerator generator_from_multitile(const MultiTile& mt) {
    return generator_from_multitile(mt, standard_basis(size_t(mt.gamma)));
}

PCGenerator witness_generator(const MultiTile& mt, WitnessScenario scenario, const RatVec& k0,
                              const IntVec& l0, const std::vector<BasisVector>& basis) {
    const size_t gamma = size_t(mt.gamma);
    const size_t d = mt.dim;
    if (gamma < 2) fail_input("witness scenarios need gamma >= 2");
    if (basis.size() != gamma) fail_input("basis size must equal gamma");
    require_orthonormal(basis);
    if (k0.size() != d || l0.size() != d) fail_input("witness parameter dimension mismatch");

    const bool k0_in_L = in_time_lattice(k0);
    RatVec l0r(d), negk0(d), negl0(d);
    bool l0_zero = true;
    for (size_t a = 0; a < d; ++a) {
        l0r[a] = Rat(l0[a]);
        negk0[a] = -k0[a];
        negl0[a] = Rat(-l0[a]);
        if (l0[a] != 0) l0_zero = false;
    }
    bool l0_eq_k0 = true, l0_eq_negk0 = true;
    for (size_t a = 0; a < d; ++a) {
        if (l0r[a] != k0[a]) l0_eq_k0 = false;
        if (l0r[a] != -k0[a]) l0_eq_negk0 = false;
    }

    switch (scenario) {
        case WitnessScenario::part2case2:
            if (!k0_in_L) fail_input("part2case2 needs k0 in the time lattice");
            break;
        case WitnessScenario::part3case1:
            if (k0_in_L) fail_input("part3case1 needs k0 outside the time lattice");
            if (l0_zero) fail_input("part3case1 needs a nonzero l0");
            break;
        case WitnessScenario::sub1:
            if (!k0_in_L) fail_input("sub1 needs k0 in the time lattice");
            if (l0_zero || l0_eq_k0 || l0_eq_negk0) fail_input("sub1 needs l0 distinct from 0 and +-k0");
            break;
        case WitnessScenario::sub2:
            if (!k0_in_L) fail_input("sub2 needs k0 in the time lattice");
            if (!l0_eq_k0) fail_input("sub2 needs l0 = k0");
            break;
        case WitnessScenario::sub3:
            if (!k0_in_L) fail_input("sub3 needs k0 in the time lattice");
            if (!l0_eq_negk0) fail_input("sub3 needs l0 = -k0");
            break;
    }

    std::vector<GenCell> cells;
    auto add = [&](const BoxSet& set, const RatVec& shift, const std::vector<CycQ>& entries,
                   const Rat& wsq) {
        for (const auto& box : set.boxes())
            cells.push_back(GenCell{box.translated(shift), wsq, constant_vec(d, entries)});
    };
    auto vec1 = basis[0].entries;
    auto vec2 = basis[1].entries;
    std::vector<CycQ> neg2(vec2);
    for (auto& e : neg2) e = -e;
    const Rat w1 = basis[0].weight_sq, w2 = basis[1].weight_sq;
    const BoxSet& E1 = mt.E[0];
    const BoxSet& E2 = mt.E[1];
    const RatVec zero = zero_vec(d);

    switch (scenario) {
        case WitnessScenario::part2case2:
        case WitnessScenario::part3case1: {
            // sqrt(d0/2)(chi_{E1} xi1 + chi_{-s+E1} xi2 + chi_{E2} xi1 - chi_{-s+E2} xi2)
            const RatVec& s = scenario == WitnessScenario::part2case2 ? negk0 : negl0;
            Rat base = mt.d0 / 2;
            add(E1, zero, vec1, base * w1);
            add(E1, s, vec2, base * w2);
            add(E2, zero, vec1, base * w1);
            add(E2, s, neg2, base * w2);
            break;
        }
        case WitnessScenario::sub1: {
            // (sqrt(d0)/2) * four shifted copies per set with the sign pattern
            Rat base = mt.d0 / 4;
            add(E1, zero, vec1, base * w1);
            add(E1, negk0, vec1, base * w1);
            add(E1, negl0, vec2, base * w2);
            add(E1, negl0 + negk0, neg2, base * w2);
            std::vector<CycQ> neg1(vec1);
            for (auto& e : neg1) e = -e;
            add(E2, zero, vec1, base * w1);
            add(E2, negk0, neg1, base * w1);
            add(E2, negl0, vec2, base * w2);
            add(E2, negl0 + negk0, vec2, base * w2);
            break;
        }
        case WitnessScenario::sub2:
        case WitnessScenario::sub3: {
            // mixed-vector middle cell (-e1+e2) resp. (e1+e2)
            Rat base = mt.d0 / 4;
            if (w1 != w2) fail_input("sub2/sub3 need equal slot weights");
            std::vector<CycQ> mixed_minus(vec2), mixed_plus(vec2);
            for (size_t t = 0; t < gamma; ++t) {
                mixed_minus[t] = vec2[t] - vec1[t];
                mixed_plus[t] = vec2[t] + vec1[t];
            }
            RatVec first = scenario == WitnessScenario::sub2 ? zero : l0r;
            RatVec mid = scenario == WitnessScenario::sub2 ? negl0 : zero;
            RatVec last = scenario == WitnessScenario::sub2 ? negl0 + negl0 : negl0;
            add(E1, first, vec1, base * w1);
            add(E1, mid, mixed_minus, base * w1);
            add(E1, last, vec2, base * w2);
            add(E2, first, vec1, base * w1);
            add(E2, mid, mixed_plus, base * w1);
            add(E2, last, neg2, base * w2);
            break;
        }
    }
    for (size_t q = 2; q < gamma; ++q) {
        Rat w = mt.d0 * basis[q].weight_sq;
        for (const auto& box : mt.E[q].boxes())
            cells.push_back(GenCell{box, w, constant_vec(d, basis[q].entries)});
    }
    return PCGenerator(gamma, d, std::move(cells));
}

PCGenerator witness_generator(const MultiTile& mt, WitnessScenario scenario, const RatVec& k0,
                              const IntVec& l0) {
    return witness_generator(mt, scenario, k0, l0, standard_basis(size_t(mt.gamma)));
}

}  // namespace gm
