#include "tiling.hpp"

#include <algorithm>
#include <set>

namespace gm {

namespace {

// index vector -> flat index, last axis fastest
size_t flatten(const IntVec& idx, const IntVec& sizes) {
    size_t f = 0;
    for (size_t a = 0; a < idx.size(); ++a) f = f * size_t(sizes[a]) + size_t(idx[a]);
    return f;
}

std::vector<Box> grid_cells(const RatVec& side, const IntVec& counts) {
    const size_t d = side.size();
    std::vector<Box> cells;
    IntVec idx(d, 0);
    for (;;) {
        RatVec lo(d), hi(d);
        for (size_t a = 0; a < d; ++a) {
            lo[a] = Rat(idx[a]) * side[a];
            hi[a] = Rat(idx[a] + 1) * side[a];
        }
        cells.push_back(make_box(lo, hi));
        size_t a = d;
        while (a-- > 0) {
            if (++idx[a] < counts[a]) break;
            idx[a] = 0;
            if (a == 0) return cells;
        }
        if (idx == IntVec(d, 0)) return cells;
    }
}

// extended gcd: returns (g, x, y) with a*x + b*y = g
std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    if (b == 0) return {a, 1, 0};
    auto [g, x, y] = ext_gcd(b, Int(a % b));
    return {g, y, x - (a / b) * y};
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

PartitionPair build_partition_pair(const ReducedLattice& R) {
    if (!R.D.is_diagonal()) fail_input("partition pair requires diagonal D");
    const size_t d = R.dim();
    PartitionPair pp;
    pp.p.resize(d);
    pp.q.resize(d);
    RatVec side(d);
    for (size_t a = 0; a < d; ++a) {
        Rat e = R.D.at(a, a);
        if (e <= 0) fail_input("diagonal entries of D must be positive");
        pp.p[a] = rat_num(e);
        pp.q[a] = rat_den(e);
        side[a] = Rat(1, pp.q[a]);
    }
    pp.P = grid_cells(side, pp.q);
    pp.Pprime = grid_cells(side, pp.p);
    pp.M1 = pp.P.size();
    pp.M2 = pp.Pprime.size();
    pp.mu0 = 1;
    for (size_t a = 0; a < d; ++a) pp.mu0 *= side[a];
    return pp;
}

Matching build_matching(const PartitionPair& pp, const ReducedLattice& R, size_t i, size_t j,
                        const std::optional<std::pair<IntVec, IntVec>>& shift) {
    if (i >= pp.M1 || j >= pp.M2) fail_input("matching index out of range");
    const size_t d = R.dim();
    Matching m;
    m.i = i;
    m.j = j;
    m.l0.assign(d, 0);
    m.m.assign(d, 0);

    for (size_t a = 0; a < d; ++a) {
        // cell multi-indices recovered from the lower corners
        Int ia = rat_num(pp.P[i].lower[a] * Rat(pp.q[a]));
        Int ja = rat_num(pp.Pprime[j].lower[a] * Rat(pp.q[a]));
        Int delta = ia - ja;
        if (shift) {
            m.l0[a] = shift->first[a];
            m.m[a] = shift->second[a];
            if (pp.q[a] * m.l0[a] - pp.p[a] * m.m[a] != delta)
                fail_input("pinned matching translation is inconsistent");
            continue;
        }
        // q*l - p*m = delta, gcd(p,q) = 1 guarantees a solution
        auto [g, u, v] = ext_gcd(pp.q[a], pp.p[a]);
        if (g != 1) fail_internal("noncoprime p/q in matching solve");
        Int l = u * delta;       // q*u + p*v = 1 -> q*(u d) - p*(-v d) = d
        Int mm = -v * delta;
        // minimize |l| over l + p*t (ties toward the smaller value)
        if (pp.p[a] != 0) {
            Int t = -l / pp.p[a];
            Int best_l = l, best_m = mm;
            for (Int dt = -2; dt <= 2; ++dt) {
                Int cl = l + pp.p[a] * (t + dt);
                Int cm = mm + pp.q[a] * (t + dt);
                if (abs_int(cl) < abs_int(best_l) ||
                    (abs_int(cl) == abs_int(best_l) && cl < best_l)) {
                    best_l = cl;
                    best_m = cm;
                }
            }
            m.l0[a] = best_l;
            m.m[a] = best_m;
        } else {
            m.l0[a] = l;
            m.m[a] = mm;
        }
    }

    m.k0.resize(d);
    RatVec neg_l0(d);
    for (size_t a = 0; a < d; ++a) {
        m.k0[a] = Rat(pp.p[a], pp.q[a]) * Rat(m.m[a]);
        neg_l0[a] = Rat(-m.l0[a]);
    }
    m.region = pp.P[i].translated(neg_l0);
    // sanity: same rectangle from the K side
    Box check = pp.Pprime[j].translated(-m.k0);
    if (!(check == m.region)) fail_internal("matching sides disagree");
    return m;
}

MultiTile MultiTile::translated(const RatVec& v) const {
    MultiTile t = *this;
    for (auto& e : t.E) e = e.translated(v);
    for (auto& g : t.groups)
        for (auto& m : g) m.region = m.region.translated(v);
    return t;
}

MultiTile build_multitile(const ReducedLattice& R, const std::vector<Pin>& pins) {
    PartitionPair pp = build_partition_pair(R);
    const size_t gamma = size_t(R.gamma);
    const size_t M1 = pp.M1, M2 = pp.M2;

    // group capacities: F_1 takes the remainder r, every other group M2
    std::vector<size_t> capacity(gamma);
    if (gamma == 1) {
        if (M1 > M2) fail_internal("gamma = 1 but M1 > M2");
        capacity[0] = M1;
    } else {
        size_t r = M1 - (gamma - 1) * M2;
        if (r < 1 || r > M2) fail_internal("group remainder out of range");
        capacity[0] = r;
        for (size_t g = 1; g < gamma; ++g) capacity[g] = M2;
    }

    // pin validation
    std::vector<int> cell_group(M1, -1);
    std::vector<std::vector<const Pin*>> group_pins(gamma);
    for (const auto& pin : pins) {
        if (pin.cell >= M1) fail_input("pin cell index out of range");
        if (pin.group < 1 || pin.group > gamma) fail_input("pin group index out of range");
        if (pin.partner >= M2) fail_input("pin partner index out of range");
        if (cell_group[pin.cell] != -1) fail_input("pin conflict: cell pinned twice");
        cell_group[pin.cell] = int(pin.group - 1);
        group_pins[pin.group - 1].push_back(&pin);
    }
    for (size_t g = 0; g < gamma; ++g) {
        if (group_pins[g].size() > capacity[g]) fail_input("pin conflict: group over capacity");
        std::set<size_t> partners;
        for (const auto* pin : group_pins[g])
            if (!partners.insert(pin->partner).second)
                fail_input("pin conflict: duplicate partner inside a group");
    }

    // fill remaining cells into remaining slots, canonical order:
    // groups 2..gamma first (blocks of M2), then group 1
    std::vector<std::vector<size_t>> members(gamma);
    for (size_t g = 0; g < gamma; ++g)
        for (const auto* pin : group_pins[g]) members[g].push_back(pin->cell);
    std::vector<size_t> fill_order;
    for (size_t g = 1; g < gamma; ++g) fill_order.push_back(g);
    fill_order.push_back(0);
    size_t cell = 0;
    for (size_t g : fill_order) {
        while (members[g].size() < capacity[g]) {
            while (cell < M1 && cell_group[cell] != -1) ++cell;
            if (cell == M1) fail_internal("ran out of cells while filling groups");
            members[g].push_back(cell);
            cell_group[cell] = int(g);
        }
    }

    MultiTile mt;
    mt.gamma = R.gamma;
    mt.d0 = R.d0;
    mt.dim = R.dim();
    mt.groups.resize(gamma);
    mt.E.resize(gamma);

    for (size_t g = 0; g < gamma; ++g) {
        std::sort(members[g].begin(), members[g].end());
        // partner assignment: pinned ones fixed, the rest order preserving
        std::vector<bool> partner_used(M2, false);
        std::vector<std::optional<size_t>> partner_of(M1);
        std::vector<std::optional<std::pair<IntVec, IntVec>>> shift_of(M1);
        for (const auto* pin : group_pins[g]) {
            partner_of[pin->cell] = pin->partner;
            shift_of[pin->cell] = pin->shift;
            partner_used[pin->partner] = true;
        }
        size_t next_partner = 0;
        for (size_t c : members[g]) {
            if (!partner_of[c]) {
                while (next_partner < M2 && partner_used[next_partner]) ++next_partner;
                if (next_partner == M2) fail_internal("ran out of partners");
                partner_of[c] = next_partner;
                partner_used[next_partner] = true;
            }
            mt.groups[g].push_back(build_matching(pp, R, c, *partner_of[c], shift_of[c]));
        }
        std::vector<Box> boxes;
        for (const auto& m : mt.groups[g]) boxes.push_back(m.region);
        mt.E[g] = BoxSet::from_boxes(mt.dim, std::move(boxes));
    }
    return mt;
}

FullRankLattice time_lattice(const ReducedLattice& R) {
    return FullRankLattice::integers(R.dim());
}

FullRankLattice frequency_lattice(const ReducedLattice& R) {
    return FullRankLattice{R.D};
}

std::optional<IntVec> frequency_coefficients(const ReducedLattice& R, const RatVec& k) {
    if (k.size() != R.dim()) fail_input("frequency vector dimension mismatch");
    IntVec m(R.dim());
    for (size_t a = 0; a < R.dim(); ++a) {
        Rat c = k[a] / R.D.at(a, a);
        if (!is_integer(c)) return std::nullopt;
        m[a] = rat_num(c);
    }
    return m;
}

bool in_time_lattice(const RatVec& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

ChosenBoxPair choose_box_pair(const ReducedLattice& R, const RatVec& k0, BoxPairMode mode) {
    if (R.gamma < 2)
        fail_input("box pair choice needs gamma >= 2; the gamma = 1 case uses the scalar path");
    PartitionPair pp = build_partition_pair(R);
    const size_t d = R.dim();

    auto mcoef = frequency_coefficients(R, k0);
    if (!mcoef) fail_input("k0 is not a frequency-lattice vector");
    if (is_zero_vec(k0)) fail_input("k0 must be nonzero");
    const bool k0_in_L = in_time_lattice(k0);
    if (mode == BoxPairMode::nonlattice && k0_in_L)
        fail_input("mode nonlattice but k0 lies in the time lattice");
    if (mode == BoxPairMode::lattice && !k0_in_L)
        fail_input("mode lattice but k0 is not in the time lattice");

    // shift to realize: k0 itself, or the shortest generator D e_a
    RatVec shift(d, Rat(0));
    IntVec shift_m(d, 0);
    if (mode == BoxPairMode::nonlattice) {
        shift = k0;
        shift_m = *mcoef;
    } else {
        size_t best = d;
        for (size_t a = 0; a < d; ++a) {
            Rat len = R.D.at(a, a);
            if (len >= 1) continue;
            if (best == d || len < R.D.at(best, best)) best = a;
        }
        if (best == d) fail_internal("no short generator although gamma >= 2");
        shift[best] = R.D.at(best, best);
        shift_m[best] = 1;
    }

    // C = common origin cell of both partitions; pi(-shift)+C is a
    // different Omega cell because shift is not in the time lattice.
    const size_t i0 = 0, j0 = 0;
    IntVec idx1(d);
    IntVec sizes = pp.q;
    for (size_t a = 0; a < d; ++a) {
        Rat w = frac_rat(-shift[a]);
        idx1[a] = rat_num(w * Rat(pp.q[a]));
    }
    size_t i1 = flatten(idx1, sizes);
    if (i1 == i0) fail_internal("shift reduced to zero in choose_box_pair");

    IntVec zero(d, 0);
    IntVec l0(d);
    for (size_t a = 0; a < d; ++a) l0[a] = ceil_rat(shift[a]);

    std::vector<Pin> pins;
    pins.push_back(Pin{i0, 1, j0, std::make_pair(zero, zero)});
    pins.push_back(Pin{i1, 2, j0, std::make_pair(l0, shift_m)});
    MultiTile mt = build_multitile(R, pins);

    ChosenBoxPair out{pp.P[i0], shift, l0, std::move(mt)};
    // postconditions are checked, never trusted
    BoxSet Cset = BoxSet::from_box(out.C);
    if (!Cset.subtract(out.mt.E[0]).is_empty()) fail_internal("C not inside E_1");
    if (!Cset.translated(-shift).subtract(out.mt.E[1]).is_empty())
        fail_internal("-shift + C not inside E_2");
    return out;
}

ScalarCaseSets choose_scalar_case_sets(const ReducedLattice& R, const IntVec& l, const RatVec& k) {
    if (R.gamma != 1) fail_input("scalar case sets require the gamma = 1 regime");
    const size_t d = R.dim();
    if (l.size() != d || k.size() != d) fail_input("vector dimension mismatch");

    if (!frequency_coefficients(R, k)) fail_input("k must lie in the frequency lattice");
    if (is_zero_vec(k)) fail_input("k must be nonzero");
    if (in_time_lattice(k)) fail_input("k must not lie in the time lattice");
    RatVec lrat(d);
    for (size_t a = 0; a < d; ++a) lrat[a] = Rat(l[a]);
    if (frequency_coefficients(R, lrat)) fail_input("l must not lie in the frequency lattice");

    PartitionPair pp = build_partition_pair(R);
    const size_t i0 = 0, j0 = 0;

    // C_{i1} = pi(-k) + C0 and C'_{j1} = (-l - k0) + C0
    IntVec idx1(d), jdx1(d);
    for (size_t a = 0; a < d; ++a) {
        idx1[a] = rat_num(frac_rat(-k[a]) * Rat(pp.q[a]));
        Int t = -l[a] * pp.q[a];
        Int r = t % pp.p[a];
        if (r < 0) r += pp.p[a];
        jdx1[a] = r;
    }
    size_t i1 = flatten(idx1, pp.q);
    size_t j1 = flatten(jdx1, pp.p);
    if (i1 == i0) fail_internal("k reduced to the time lattice");
    if (j1 == j0) fail_internal("l reduced to the frequency lattice");

    IntVec zero(d, 0);
    std::vector<Pin> pins;
    pins.push_back(Pin{i0, 1, j0, std::make_pair(zero, zero)});
    pins.push_back(Pin{i1, 1, j1, std::nullopt});
    MultiTile mt = build_multitile(R, pins);

    const BoxSet& S = mt.E[0];
    BoxSet E2 = BoxSet::from_box(pp.P[i0]);
    BoxSet J0(d);
    for (const auto& m : mt.groups[0])
        if (m.i == i1) J0 = BoxSet::from_box(m.region);
    if (J0.is_empty()) fail_internal("pinned matching missing from group");

    RatVec negk = -k;
    RatVec negl(d);
    for (size_t a = 0; a < d; ++a) negl[a] = Rat(-l[a]);

    ScalarCaseSets out;
    out.E2 = E2;
    out.E1 = S.subtract(E2.unite(J0));
    out.E3 = E2.translated(negk);
    out.E4 = E2.translated(negl);
    out.E5 = E2.translated(negl + negk);

    // machine checks from the lemma statement
    auto L = time_lattice(R);
    auto K = frequency_lattice(R);
    const BoxSet* sets[5] = {&out.E1, &out.E2, &out.E3, &out.E4, &out.E5};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (overlaps(*sets[a], *sets[b])) fail_internal("scalar case sets overlap");
    if (!tiles(out.E1.unite(out.E2).unite(out.E3), L))
        fail_internal("E1 u E2 u E3 does not tile the time lattice");
    if (!packs(out.E1.unite(out.E2).unite(out.E4), K))
        fail_internal("E1 u E2 u E4 does not pack the frequency lattice");
    return out;
}

}  // namespace gm
