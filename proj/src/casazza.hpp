#pragma once

#include <optional>

#include "generator.hpp"
#include "lattice.hpp"
#include "reduce.hpp"

namespace gm {

struct PieceValue {
    Box cell;
    ExactScalar value;
};

struct CrossTerm {
    IntVec n;                        // tested shift k = K_basis * n
    RatVec k;
    std::vector<PieceValue> nonzero; // empty when the sum vanishes identically
    bool beyond_support = false;     // provably zero, support moved off itself
};

struct CasazzaViolation {
    Box cell;
    std::optional<IntVec> n;  // nullopt: autocorrelation, else cross term
    ExactScalar value;
};

// Exact decision of the two Parseval identities: the translated inner
// product sums are evaluated symbolically on a refinement of the
// fundamental cell of the time lattice, so "a.e." statements become
// finite checks with zero tolerance.
struct CasazzaReport {
    bool is_parseval = false;
    Rat target;                            // required autocorrelation constant
    std::vector<PieceValue> autocorrelation;
    std::vector<CrossTerm> cross_terms;
    std::optional<CasazzaViolation> first_violation;
    IntVec horizon;                        // per-axis |n_a| bound that can overlap
    size_t l_window = 0;                   // lattice translates touched by the sums
};

// Simplified setting: time lattice Z^d, frequency shifts D Z^d, target d0.
CasazzaReport verify_casazza(const PCGenerator& G, const ReducedLattice& R, Int k_radius = 0);

// General rational lattices: time shifts A Z^d, frequency shifts
// (B^t)^{-1} Z^d, target |det B|. No change of variables is needed;
// the identities are checked in place.
CasazzaReport verify_casazza_general(const PCGenerator& G, const RatMatrix& A, const RatMatrix& B,
                                     Int k_radius = 0);

// Change of variables x -> (AQ) z moving a generator between the
// general and the reduced picture. Exact only when AQ is a scaled
// permutation (boxes must map to boxes).
PCGenerator transport_generator(const PCGenerator& G, const RatMatrix& A, const RatMatrix& Q);

}  // namespace gm
