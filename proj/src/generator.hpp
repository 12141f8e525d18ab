#pragma once

#include <vector>

#include "region.hpp"
#include "scalar.hpp"
#include "tiling.hpp"

namespace gm {

// One support cell of a generator: the function equals
// sqrt(weight_sq) * vec on `box` and the components of `vec` are trig
// polynomials (constants for every construction in this library; the
// richer class appears after applying character multipliers).
struct GenCell {
    Box box;
    Rat weight_sq;
    std::vector<ExactScalar> vec;
};

// Vector-valued piecewise function with bounded support and pairwise
// disjoint cells. Irrational global factors like sqrt(d0) never
// materialize: inner products pair weights as sqrt(w1*w2), which is
// demanded to be rational exactly when the rational-complex part of the
// pairing is nonzero.
class PCGenerator {
  public:
    PCGenerator(size_t gamma, size_t dim, std::vector<GenCell> cells);

    size_t gamma() const { return gamma_; }
    size_t dim() const { return dim_; }
    const std::vector<GenCell>& cells() const { return cells_; }

    BoxSet support() const;
    PCGenerator translated(const RatVec& v) const;
    // Left-multiplies every cell value by a constant matrix (gamma x gamma).
    PCGenerator transformed(const std::vector<std::vector<CycQ>>& U) const;

  private:
    size_t gamma_;
    size_t dim_;
    std::vector<GenCell> cells_;
};

// Orthonormal basis vector in the weighted representation:
// vector = sqrt(weight_sq) * entries.
struct BasisVector {
    std::vector<CycQ> entries;
    Rat weight_sq = Rat(1);
};

std::vector<BasisVector> standard_basis(size_t gamma);
// Standard basis with slots i and j replaced by (e_i +- e_j)/sqrt(2) or
// (e_i +- i e_j)/sqrt(2).
std::vector<BasisVector> pair_basis(size_t gamma, size_t i, size_t j, bool imaginary);

// Exact orthonormality check; throws on failure.
void require_orthonormal(const std::vector<BasisVector>& basis);

// G = sum_j sqrt(d0) chi_{E_j} xi_j over the multi-tile sets.
PCGenerator generator_from_multitile(const MultiTile& mt, const std::vector<BasisVector>& basis);
PCGenerator generator_from_multitile(const MultiTile& mt);

enum class WitnessScenario { part2case2, part3case1, sub1, sub2, sub3 };

// The explicit Parseval generators used to separate the multiplier
// conditions. k0 must lie in the frequency lattice; the lattice /
// nonlattice split and the l0 constraints are guarded per scenario.
PCGenerator witness_generator(const MultiTile& mt, WitnessScenario scenario, const RatVec& k0,
                              const IntVec& l0, const std::vector<BasisVector>& basis);
PCGenerator witness_generator(const MultiTile& mt, WitnessScenario scenario, const RatVec& k0,
                              const IntVec& l0);

}  // namespace gm
