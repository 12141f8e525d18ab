#pragma once

#include "matrix.hpp"
#include "snf.hpp"

namespace gm {

// Simplified-setting data for a rational time-frequency lattice pair:
// D = (P B^t A Q)^{-1} is diagonal with positive rational entries,
// d0 = 1/|det D| and gamma is the unique integer with d0 <= gamma < d0+1.
struct ReducedLattice {
    RatMatrix D;
    UnimodularPair pair;
    Rat d0;
    Int gamma;

    size_t dim() const { return D.dim(); }
    RatVec diag() const { return D.diagonal_entries(); }
};

// Builds a ReducedLattice directly from a diagonal positive rational D.
ReducedLattice reduced_from_diagonal(const RatMatrix& D);

// Clears denominators of (B^t A)^{-1}, takes its Smith normal form and
// rescales, so that P (B^t A) Q D = I exactly with P, Q unimodular.
ReducedLattice reduce_lattice_pair(const RatMatrix& A, const RatMatrix& B);

enum class TransformDir { forward, inverse };

// forward: x -> (AQ)^{-1} x, inverse: z -> (AQ) z.
RatVec transform_point(const RatVec& x, TransformDir dir, const RatMatrix& Q, const RatMatrix& A);

}  // namespace gm
