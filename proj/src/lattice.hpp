#pragma once

#include "matrix.hpp"
#include "region.hpp"

namespace gm {

// Full-rank rational lattice basis * Z^d.
struct FullRankLattice {
    RatMatrix basis;

    static FullRankLattice integers(size_t d) { return {RatMatrix::identity(d)}; }
    static FullRankLattice from_diagonal(const RatVec& diag) { return {RatMatrix::diagonal(diag)}; }

    size_t dim() const { return basis.dim(); }
    Rat covolume() const { return abs_rat(basis.det()); }
    RatVec vector(const IntVec& n) const;
};

FullRankLattice make_lattice(RatMatrix basis);

// Upper-triangular basis H (positive diagonal, column-reduced) of the
// same lattice. The box [0,H_11) x ... x [0,H_dd) is a fundamental
// domain of H Z^d because translating back works row by row from the
// bottom.
RatMatrix hermite_basis(const FullRankLattice& F);
Box fundamental_cell(const FullRankLattice& F);

struct ReduceResult {
    BoxSet reduced;
    bool overlap;  // true when distinct lattice translates of S collided
};

// Exact reduction of S into the fundamental cell: boxes are sliced at
// lattice hyperplanes and shifted by lattice vectors, axis by axis.
ReduceResult reduce_mod_lattice_report(const BoxSet& S, const FullRankLattice& F);
BoxSet reduce_mod_lattice(const BoxSet& S, const FullRankLattice& F);

// S ∩ (S+f) = ∅ for every nontrivial f.
bool packs(const BoxSet& S, const FullRankLattice& F);
// packs + full covolume + exact cover of the fundamental cell.
bool tiles(const BoxSet& S, const FullRankLattice& F);
// Equal lattice orbits; requires both arguments to pack.
bool lattice_equivalent(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F);
// S1 ∩ (S2+f) = ∅ for every nontrivial f.
bool lattice_disjoint(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F);

// All integer coefficient vectors n with basis*n possibly relevant to
// translate overlaps between the bounding boxes of S1 and S2.
std::vector<IntVec> overlap_candidates(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F);

// Every lattice vector f with (A + f) meeting B, as coefficient vectors.
std::vector<IntVec> lattice_points_between(const Box& A, const Box& B, const FullRankLattice& F);

}  // namespace gm
