#pragma once

#include <optional>
#include <vector>

#include "lattice.hpp"
#include "reduce.hpp"
#include "region.hpp"

namespace gm {

// Grid partitions of Omega = [0,1)^d and of D*Omega for diagonal
// D = diag(p_i/q_i): both grids have cell side 1/q_i on axis i, so all
// cells of both families are congruent.
struct PartitionPair {
    std::vector<Box> P;       // cells of Omega, lexicographic by lower corner
    std::vector<Box> Pprime;  // cells of D*Omega, same ordering
    size_t M1 = 0;
    size_t M2 = 0;
    Rat mu0;     // common cell volume
    IntVec p, q; // D_ii = p_i/q_i in lowest terms
};

PartitionPair build_partition_pair(const ReducedLattice& R);

// Rectangle simultaneously L-equivalent to P[i] and K-equivalent to
// Pprime[j]: region = -l0 + P[i] = -k0 + Pprime[j] with l0 in Z^d and
// k0 = D*m in K.
struct Matching {
    size_t i = 0;
    size_t j = 0;
    Box region;
    IntVec l0;
    IntVec m;    // k0 = D*m
    RatVec k0;
};

// Canonical matching: per axis the solution of q*l - p*m = i - j with
// |l| minimal (ties toward the negative value). `shift` overrides the
// translation with an explicit (l0, m) pair, which is validated.
Matching build_matching(const PartitionPair& pp, const ReducedLattice& R, size_t i, size_t j,
                        const std::optional<std::pair<IntVec, IntVec>>& shift = std::nullopt);

// Forces cell `cell` into group `group` (1-based), matched to
// Pprime[partner], optionally with an explicit translation.
struct Pin {
    size_t cell = 0;
    size_t group = 1;
    size_t partner = 0;
    std::optional<std::pair<IntVec, IntVec>> shift;
};

// The E_1, ..., E_gamma of the multi-tile construction. E_j for j >= 2
// tiles by K and E_1 packs by K; all are pairwise L-disjoint and the
// union tiles by L.
struct MultiTile {
    std::vector<BoxSet> E;                       // E[0] = E_1, ...
    std::vector<std::vector<Matching>> groups;   // matchings per group
    Int gamma;
    Rat d0;
    size_t dim = 0;

    MultiTile translated(const RatVec& v) const;
};

MultiTile build_multitile(const ReducedLattice& R, const std::vector<Pin>& pins = {});

FullRankLattice time_lattice(const ReducedLattice& R);       // Z^d
FullRankLattice frequency_lattice(const ReducedLattice& R);  // D Z^d

// Membership of a rational vector in K = D Z^d; returns the integer
// coefficient vector when inside.
std::optional<IntVec> frequency_coefficients(const ReducedLattice& R, const RatVec& k);
bool in_time_lattice(const RatVec& v);

enum class BoxPairMode { nonlattice, lattice };

// The Lemma-5.2 style choice: a box C inside E_1 whose shift by -k0
// (or by -k_{i0} for lattice mode) lands inside E_2, realized through
// pinned matchings. Postconditions are machine checked.
struct ChosenBoxPair {
    Box C;
    RatVec shift;  // k0 itself, or the short generator k_{i0}
    IntVec l0;     // lattice rounding used by the pinned matching
    MultiTile mt;
};

ChosenBoxPair choose_box_pair(const ReducedLattice& R, const RatVec& k0, BoxPairMode mode);

// The five-set configuration used by the scalar (gamma = 1) case:
// E3 = -k+E2, E4 = -l+E2, E5 = -l-k+E2, E1 u E2 u E3 tiles by L and
// E1 u E2 u E4 packs by K. Requires k in K \ L and l in L \ K.
struct ScalarCaseSets {
    BoxSet E1, E2, E3, E4, E5;
};

ScalarCaseSets choose_scalar_case_sets(const ReducedLattice& R, const IntVec& l, const RatVec& k);

}  // namespace gm
