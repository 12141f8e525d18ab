#include "lattice.hpp"

#include <algorithm>

namespace gm {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

// Integer vectors in the closed box [lo, hi] (componentwise).
void enumerate_rec(const std::vector<Int>& lo, const std::vector<Int>& hi, size_t axis, IntVec& cur,
                   std::vector<IntVec>& out) {
    if (axis == lo.size()) {
        out.push_back(cur);
        return;
    }
    for (Int v = lo[axis]; v <= hi[axis]; ++v) {
        cur[axis] = v;
        enumerate_rec(lo, hi, axis + 1, cur, out);
    }
}

std::vector<IntVec> enumerate_box(const std::vector<Int>& lo, const std::vector<Int>& hi) {
    for (size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return {};
    IntVec cur(lo.size());
    std::vector<IntVec> out;
    enumerate_rec(lo, hi, 0, cur, out);
    return out;
}

// Integer ranges of basis^{-1} applied to the open box (lo, hi):
// extremes of a linear map over a box sit at its corners.
std::vector<IntVec> candidates_in_open_box(const RatVec& lo, const RatVec& hi, const FullRankLattice& F) {
    const size_t d = F.dim();
    RatMatrix inv = F.basis.inverse();
    std::vector<Rat> nmin(d), nmax(d);
    bool first = true;
    for (size_t corner = 0; corner < (size_t(1) << d); ++corner) {
        RatVec c(d);
        for (size_t i = 0; i < d; ++i) c[i] = (corner >> i) & 1 ? hi[i] : lo[i];
        RatVec n = inv * c;
        for (size_t i = 0; i < d; ++i) {
            if (first || n[i] < nmin[i]) nmin[i] = n[i];
            if (first || n[i] > nmax[i]) nmax[i] = n[i];
        }
        first = false;
    }
    std::vector<Int> ilo(d), ihi(d);
    for (size_t i = 0; i < d; ++i) {
        ilo[i] = ceil_rat(nmin[i]);
        ihi[i] = floor_rat(nmax[i]);
    }
    return enumerate_box(ilo, ihi);
}

}  // namespace

RatVec FullRankLattice::vector(const IntVec& n) const {
    RatVec x(dim(), Rat(0));
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j) x[i] += basis.at(i, j) * Rat(n[j]);
    return x;
}

FullRankLattice make_lattice(RatMatrix basis) {
    if (basis.det() == 0) fail_input("lattice basis is singular");
    return FullRankLattice{std::move(basis)};
}

RatMatrix hermite_basis(const FullRankLattice& F) {
    const size_t d = F.dim();
    Int m = 1;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m = lcm_int(m, rat_den(F.basis.at(i, j)));

    std::vector<Int> a(d * d);
    auto A = [&](size_t i, size_t j) -> Int& { return a[i * d + j]; };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) A(i, j) = rat_num(F.basis.at(i, j) * Rat(m));

    auto negate_col = [&](size_t j) {
        for (size_t i = 0; i < d; ++i) A(i, j) = -A(i, j);
    };
    auto submul_col = [&](size_t j, size_t k, const Int& q) {  // col_j -= q * col_k
        for (size_t i = 0; i < d; ++i) A(i, j) -= q * A(i, k);
    };

    // Rows bottom-up: zero out A[i][j] for j < i with column euclid,
    // leaving an upper triangular matrix of the same column lattice.
    for (size_t ii = d; ii-- > 0;) {
        for (;;) {
            size_t jmin = ii + 1;
            for (size_t j = 0; j <= ii; ++j) {
                if (A(ii, j) == 0) continue;
                if (jmin > ii || abs(A(ii, j)) < abs(A(ii, jmin))) jmin = j;
            }
            if (jmin > ii) fail_internal("singular basis in hermite reduction");
            if (jmin != ii)
                for (size_t i = 0; i < d; ++i) std::swap(A(i, jmin), A(i, ii));
            bool clean = true;
            for (size_t j = 0; j < ii; ++j) {
                if (A(ii, j) == 0) continue;
                Int q = A(ii, j) / A(ii, ii);
                submul_col(j, ii, q);
                if (A(ii, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (A(ii, ii) < 0) negate_col(ii);
        // Reduce entries right of the pivot for a canonical result.
        for (size_t j = ii + 1; j < d; ++j) {
            Int q = A(ii, j) / A(ii, ii);
            if (A(ii, j) - q * A(ii, ii) < 0) --q;
            if (q != 0) submul_col(j, ii, q);
        }
    }

    RatMatrix H(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) H.at(i, j) = Rat(A(i, j), m);
    return H;
}

Box fundamental_cell(const FullRankLattice& F) {
    RatMatrix H = hermite_basis(F);
    RatVec lo(F.dim(), Rat(0)), hi(F.dim());
    for (size_t i = 0; i < F.dim(); ++i) hi[i] = H.at(i, i);
    return make_box(std::move(lo), std::move(hi));
}

ReduceResult reduce_mod_lattice_report(const BoxSet& S, const FullRankLattice& F) {
    if (S.dim() != F.dim()) fail_input("dimension mismatch in lattice reduction");
    const size_t d = F.dim();
    if (S.is_empty()) return {BoxSet::empty(d), false};

    RatMatrix H = hermite_basis(F);
    std::vector<Box> pieces(S.boxes().begin(), S.boxes().end());
    for (size_t axis = d; axis-- > 0;) {
        const Rat step = H.at(axis, axis);
        std::vector<Box> next;
        for (const auto& b : pieces) {
            Int mlo = floor_rat(b.lower[axis] / step);
            Int mhi = ceil_rat(b.upper[axis] / step);
            for (Int m = mlo; m < mhi; ++m) {
                Box piece = b;
                piece.lower[axis] = std::max(b.lower[axis], Rat(m) * step);
                piece.upper[axis] = std::min(b.upper[axis], Rat(m + 1) * step);
                if (!(piece.lower[axis] < piece.upper[axis])) continue;
                // Shift by -m * (column `axis` of H); later axes untouched.
                for (size_t i = 0; i <= axis; ++i) {
                    Rat delta = Rat(m) * H.at(i, axis);
                    piece.lower[i] -= delta;
                    piece.upper[i] -= delta;
                }
                next.push_back(std::move(piece));
            }
        }
        pieces = std::move(next);
    }

    Rat total = 0;
    for (const auto& p : pieces) total += p.volume();
    BoxSet reduced = BoxSet::from_boxes(d, std::move(pieces));
    return {reduced, reduced.measure() != total};
}

BoxSet reduce_mod_lattice(const BoxSet& S, const FullRankLattice& F) {
    return reduce_mod_lattice_report(S, F).reduced;
}

std::vector<IntVec> overlap_candidates(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F) {
    auto b1 = S1.bounding_box();
    auto b2 = S2.bounding_box();
    if (!b1 || !b2) return {};
    // S1 ∩ (S2+f) nonempty requires f in the open difference box.
    RatVec lo(F.dim()), hi(F.dim());
    for (size_t i = 0; i < F.dim(); ++i) {
        lo[i] = b1->lower[i] - b2->upper[i];
        hi[i] = b1->upper[i] - b2->lower[i];
    }
    return candidates_in_open_box(lo, hi, F);
}

std::vector<IntVec> lattice_points_between(const Box& A, const Box& B, const FullRankLattice& F) {
    RatVec lo(F.dim()), hi(F.dim());
    for (size_t i = 0; i < F.dim(); ++i) {
        lo[i] = B.lower[i] - A.upper[i];
        hi[i] = B.upper[i] - A.lower[i];
    }
    return candidates_in_open_box(lo, hi, F);
}

bool packs(const BoxSet& S, const FullRankLattice& F) {
    if (S.is_empty()) return true;
    for (const auto& n : overlap_candidates(S, S, F)) {
        bool zero = true;
        for (const auto& c : n)
            if (c != 0) { zero = false; break; }
        if (zero) continue;
        if (overlaps(S, S.translated(F.vector(n)))) return false;
    }
    return true;
}

bool tiles(const BoxSet& S, const FullRankLattice& F) {
    if (!packs(S, F)) return false;
    if (S.measure() != F.covolume()) return false;
    auto r = reduce_mod_lattice_report(S, F);
    return !r.overlap && r.reduced == BoxSet::from_box(fundamental_cell(F));
}

bool lattice_equivalent(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F) {
    if (!packs(S1, F) || !packs(S2, F))
        fail_input("lattice equivalence requires both sets to pack");
    return reduce_mod_lattice(S1, F) == reduce_mod_lattice(S2, F);
}

bool lattice_disjoint(const BoxSet& S1, const BoxSet& S2, const FullRankLattice& F) {
    if (S1.is_empty() || S2.is_empty()) return true;
    for (const auto& n : overlap_candidates(S1, S2, F)) {
        bool zero = true;
        for (const auto& c : n)
            if (c != 0) { zero = false; break; }
        if (zero) continue;
        if (overlaps(S1, S2.translated(F.vector(n)))) return false;
    }
    return true;
}

}  // namespace gm
