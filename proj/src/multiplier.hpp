#pragma once

#include <optional>
#include <vector>

#include "generator.hpp"
#include "reduce.hpp"
#include "region.hpp"
#include "scalar.hpp"

namespace gm {

// One description piece: the matrix expression applies on `box` and on
// every period-lattice translate of it. Entries are trig polynomials;
// constants and characters e^{2 pi i <c,x>} are the external classes.
struct MultPiece {
    Box box;
    std::vector<std::vector<ExactScalar>> matrix;
};

// gamma x gamma functional matrix described on a period cell
// [0, s_1) x ... x [0, s_d). The piece layout repeats with period
// lattice diag(s); entry expressions are evaluated at the actual
// argument, so character entries are not themselves periodic.
class MultiplierSpec {
  public:
    MultiplierSpec(size_t gamma, size_t dim, Box period_cell, std::vector<MultPiece> pieces);

    size_t gamma() const { return gamma_; }
    size_t dim() const { return dim_; }
    const Box& period_cell() const { return period_cell_; }
    const std::vector<MultPiece>& pieces() const { return pieces_; }
    RatVec period() const;  // cell side lengths

    bool single_piece() const { return pieces_.size() == 1; }
    bool constant_entries() const;

    // Matrix expression in force at point x (periodic piece lookup).
    const MultPiece& piece_at(const RatVec& x) const;

  private:
    size_t gamma_;
    size_t dim_;
    Box period_cell_;
    std::vector<MultPiece> pieces_;
};

struct MultViolation {
    int condition = 0;  // 1, 2 or 3
    IntVec n;           // offending shift class (conditions 2/3)
    Box cell;           // where in x it breaks
    size_t i = 0;       // condition 1/2 entry data
    size_t j = 0;
    bool offdiag = false;
    IntVec l0;          // condition 3: lambda_n(x) != lambda_n(x - l0) on cell
};

struct LambdaFunction {
    IntVec n;
    std::vector<std::pair<Box, ExactScalar>> pieces;  // over one period cell
};

struct MultiplierVerdict {
    bool unitary_ae = false;
    bool cond2_scalar = false;
    bool cond3_periodic = false;
    bool is_multiplier = false;
    // true when the quantifier over all n was discharged (symbolically or
    // through the finite residue reduction); false = only |n| <= window
    // was checked and a pass is inconclusive.
    bool certified = false;
    Int window = 0;
    std::vector<LambdaFunction> lambdas;
    std::optional<MultViolation> violation;
};

// Theorem-1.1 conditions for the reduced lattice setting. k_radius only
// matters for the windowed fallback shape (piecewise structure with
// non-constant entries).
MultiplierVerdict check_conditions(const MultiplierSpec& M, const ReducedLattice& R,
                                   Int k_radius = 4);

// Independent scalar route (gamma = 1): unimodularity plus periodicity
// of h(x) conj(h(x + D n)), checked directly without the matrix
// machinery.
MultiplierVerdict check_scalar_conditions(const MultiplierSpec& M, const ReducedLattice& R,
                                          Int k_radius = 4);

// H(x) = M(x) G(x) on the common refinement.
PCGenerator apply_multiplier(const MultiplierSpec& M, const PCGenerator& G);

// M*(x) M(x + D n) as piecewise matrix data over one period cell of the
// description (globally valid by periodicity for constant entries, and
// everywhere for single-piece specs).
std::vector<std::pair<Box, std::vector<std::vector<ExactScalar>>>> condition_products(
    const MultiplierSpec& M, const ReducedLattice& R, const IntVec& n);

// lambda_n(x + base_shift) as pieces over one period cell.
std::vector<std::pair<Box, ExactScalar>> lambda_pieces(const MultiplierSpec& M,
                                                       const ReducedLattice& R, const IntVec& n,
                                                       const RatVec& base_shift);

// Cell where lambda_n(x) != lambda_n(x + shift), if any.
std::optional<Box> lambda_shift_mismatch(const MultiplierSpec& M, const ReducedLattice& R,
                                         const IntVec& n, const RatVec& shift);

// Scalar identity h(x) conj(h(x-k)) = h(x-l) conj(h(x-l-k)): returns a
// cell where it fails (gamma = 1 only).
std::optional<Box> scalar_identity_mismatch(const MultiplierSpec& M, const ReducedLattice& R,
                                            const IntVec& l, const RatVec& k);

struct ForwardReport {
    size_t checked = 0;
    size_t preserved = 0;
    std::vector<size_t> failed;  // indices of corpus generators that broke
};

// Applies a condition-passing multiplier across a Parseval corpus and
// re-verifies every image exactly.
ForwardReport forward_verify(const MultiplierSpec& M, const std::vector<PCGenerator>& corpus,
                             const ReducedLattice& R);

}  // namespace gm
