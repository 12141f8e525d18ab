#include "reduce.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gm {

namespace {

Int lcm_int(const Int& a, const Int& b) {
    return a / gcd(a, b) * b;
}

ReducedLattice finalize(RatMatrix D, UnimodularPair pair) {
    Rat det = D.det();
    if (det <= 0) fail_internal("reduced D must have positive determinant");
    Rat d0 = Rat(1) / det;
    Int gamma = ceil_rat(d0);
    if (gamma < 1) fail_internal("gamma must be at least 1");
    return ReducedLattice{std::move(D), std::move(pair), d0, gamma};
}

}  // namespace

ReducedLattice reduced_from_diagonal(const RatMatrix& D) {
    if (!D.is_diagonal()) fail_input("expected a diagonal matrix");
    for (size_t i = 0; i < D.dim(); ++i)
        if (D.at(i, i) <= 0) fail_input("diagonal entries must be positive");
    size_t d = D.dim();
    return finalize(D, UnimodularPair{RatMatrix::identity(d), RatMatrix::identity(d)});
}

ReducedLattice reduce_lattice_pair(const RatMatrix& A, const RatMatrix& B) {
    if (A.dim() != B.dim() || A.dim() == 0) fail_input("lattice pair dimension mismatch");
    if (A.det() == 0) fail_input("time lattice matrix is singular");
    if (B.det() == 0) fail_input("frequency lattice matrix is singular");

    const size_t d = A.dim();
    RatMatrix N0 = (B.transpose() * A).inverse();

    Int m = 1;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m = lcm_int(m, rat_den(N0.at(i, j)));
    RatMatrix N = N0.scaled(Rat(m));

    SmithResult snf = smith_normal_form(N);
    // N0 = U (S/m) V, hence Q = U and P = V give P (B^t A) Q = (S/m)^{-1}.
    RatMatrix D = snf.S.scaled(Rat(1, m));
    return finalize(std::move(D), UnimodularPair{snf.V, snf.U});
}

RatVec transform_point(const RatVec& x, TransformDir dir, const RatMatrix& Q, const RatMatrix& A) {
    RatMatrix AQ = A * Q;
    if (AQ.det() == 0) fail_input("AQ is singular");
    if (dir == TransformDir::forward) return AQ.inverse() * x;
    return AQ * x;
}

}  // namespace gm
