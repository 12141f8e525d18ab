#include "multiplier.hpp"

#include <algorithm>

#include "casazza.hpp"
#include "tiling.hpp"

namespace gm {

namespace {

using Mat = std::vector<std::vector<ExactScalar>>;

Mat conj_transpose_times(const Mat& A, const Mat& B, size_t gamma, size_t dim) {
    Mat C(gamma, std::vector<ExactScalar>(gamma, ExactScalar::zero(dim)));
    for (size_t i = 0; i < gamma; ++i)
        for (size_t j = 0; j < gamma; ++j)
            for (size_t t = 0; t < gamma; ++t) C[i][j] = C[i][j] + A[t][i].conj() * B[t][j];
    return C;
}

struct PieceMat {
    Box box;
    Mat mat;
};

// Piece layout of x -> M(x + shift) over one period cell: boxes are
// translated by -shift and wrapped, expressions pick up the shift.
std::vector<PieceMat> structure_at(const MultiplierSpec& M, const RatVec& shift) {
    FullRankLattice P = FullRankLattice::from_diagonal(M.period());
    std::vector<PieceMat> out;
    for (const auto& piece : M.pieces()) {
        Mat shifted = piece.matrix;
        for (auto& row : shifted)
            for (auto& e : row) e = e.shifted_arg(shift);
        auto wrapped = reduce_mod_lattice(BoxSet::from_box(piece.box).translated(-shift), P);
        for (const auto& b : wrapped.boxes()) out.push_back(PieceMat{b, shifted});
    }
    return out;
}

std::vector<std::pair<Box, std::vector<std::vector<ExactScalar>>>> products_for_shift(
    const MultiplierSpec& M, const RatVec& base_shift, const RatVec& k) {
    // M*(x + base) M(x + base + k) piecewise over the period cell
    auto left = structure_at(M, base_shift);
    auto right = structure_at(M, base_shift + k);
    std::vector<std::pair<Box, Mat>> out;
    for (const auto& a : left)
        for (const auto& b : right)
            if (auto c = box_intersect(a.box, b.box))
                out.emplace_back(*c, conj_transpose_times(a.mat, b.mat, M.gamma(), M.dim()));
    return out;
}

const ExactScalar* piecewise_lookup(const std::vector<std::pair<Box, ExactScalar>>& pieces,
                                    const RatVec& x) {
    for (const auto& [b, v] : pieces)
        if (b.contains(x)) return &v;
    return nullptr;
}

// Refined comparison of two piecewise functions that both partition the
// period cell; returns a cell where they differ.
std::optional<Box> piecewise_mismatch(const std::vector<std::pair<Box, ExactScalar>>& f,
                                      const std::vector<std::pair<Box, ExactScalar>>& g,
                                      const Box& domain) {
    const size_t d = domain.dim();
    std::vector<std::vector<Rat>> cuts(d);
    for (size_t a = 0; a < d; ++a) {
        cuts[a].push_back(domain.lower[a]);
        cuts[a].push_back(domain.upper[a]);
        for (const auto& [b, v] : f) {
            cuts[a].push_back(b.lower[a]);
            cuts[a].push_back(b.upper[a]);
        }
        for (const auto& [b, v] : g) {
            cuts[a].push_back(b.lower[a]);
            cuts[a].push_back(b.upper[a]);
        }
        std::sort(cuts[a].begin(), cuts[a].end());
        cuts[a].erase(std::unique(cuts[a].begin(), cuts[a].end()), cuts[a].end());
        // clip to the domain
        std::vector<Rat> kept;
        for (const auto& c : cuts[a])
            if (c >= domain.lower[a] && c <= domain.upper[a]) kept.push_back(c);
        cuts[a] = std::move(kept);
    }
    std::vector<size_t> idx(d, 0);
    for (;;) {
        RatVec lo(d), hi(d);
        for (size_t a = 0; a < d; ++a) {
            lo[a] = cuts[a][idx[a]];
            hi[a] = cuts[a][idx[a] + 1];
        }
        Box cell = make_box(lo, hi);
        RatVec mid = cell.midpoint();
        const ExactScalar* fv = piecewise_lookup(f, mid);
        const ExactScalar* gv = piecewise_lookup(g, mid);
        if (!fv || !gv) fail_internal("piecewise function does not cover the period cell");
        if (!(*fv == *gv)) return cell;
        size_t a = d;
        bool done = true;
        while (a-- > 0) {
            if (++idx[a] + 1 < cuts[a].size()) { done = false; break; }
            idx[a] = 0;
        }
        if (done) return std::nullopt;
    }
}

// Residue periods: smallest t_a > 0 with D_aa * t_a in s_a * Z.
IntVec residue_periods(const ReducedLattice& R, const RatVec& s) {
    IntVec t(R.dim());
    for (size_t a = 0; a < R.dim(); ++a) {
        Rat ratio = R.D.at(a, a) / s[a];  // need t * ratio integer
        t[a] = rat_den(ratio);
    }
    return t;
}

std::vector<IntVec> residue_representatives(const IntVec& t) {
    const size_t d = t.size();
    std::vector<IntVec> reps;
    IntVec cur(d, 0);
    for (;;) {
        bool zero = true;
        for (const auto& c : cur)
            if (c != 0) { zero = false; break; }
        reps.push_back(zero ? t : cur);
        size_t a = d;
        bool done = true;
        while (a-- > 0) {
            if (++cur[a] < t[a]) { done = false; break; }
            cur[a] = 0;
        }
        if (done) break;
    }
    return reps;
}

// Does the trig polynomial in n (given by frequency -> coefficient)
// vanish on Z^d \ {0}? Returns a nonzero violating n otherwise.
std::optional<IntVec> npoly_violation(const std::map<RatVec, CycQ>& terms, size_t d) {
    if (terms.empty()) return std::nullopt;
    IntVec T(d, 1);
    for (const auto& [w, c] : terms)
        for (size_t a = 0; a < d; ++a) {
            Int den = rat_den(w[a]);
            T[a] = T[a] / gcd(T[a], den) * den;
        }
    IntVec cur(d, 0);
    for (;;) {
        bool zero = true;
        for (const auto& c : cur)
            if (c != 0) { zero = false; break; }
        IntVec n_eval = zero ? T : cur;
        CycQ v = CycQ::zero();
        for (const auto& [w, c] : terms) {
            Rat dot = 0;
            for (size_t a = 0; a < d; ++a) dot += w[a] * Rat(n_eval[a]);
            v = v + c * CycQ::root_of_unity(dot);
        }
        if (!v.is_zero()) return n_eval;
        size_t a = d;
        bool done = true;
        while (a-- > 0) {
            if (++cur[a] < T[a]) { done = false; break; }
            cur[a] = 0;
        }
        if (done) return std::nullopt;
    }
}

// Splits a (x, n)-polynomial (frequencies of length 2d) into x-groups.
std::map<RatVec, std::map<RatVec, CycQ>> group_by_x(const ExactScalar& poly, size_t d) {
    std::map<RatVec, std::map<RatVec, CycQ>> groups;
    for (const auto& [f, c] : poly.terms()) {
        RatVec fx(f.begin(), f.begin() + d);
        RatVec fn(f.begin() + d, f.end());
        groups[fx][fn] = c;
    }
    return groups;
}

// Lifts m(x + D n) to a polynomial in (x, n).
ExactScalar lift_shifted(const ExactScalar& e, const RatMatrix& Dt, size_t d) {
    ExactScalar out(2 * d);
    for (const auto& [c, coeff] : e.terms()) {
        RatVec f(2 * d, Rat(0));
        RatVec w = Dt * c;
        for (size_t a = 0; a < d; ++a) {
            f[a] = c[a];
            f[d + a] = w[a];
        }
        out = out + ExactScalar::character(2 * d, f, coeff);
    }
    return out;
}

ExactScalar lift_plain(const ExactScalar& e, size_t d) {
    ExactScalar out(2 * d);
    for (const auto& [c, coeff] : e.terms()) {
        RatVec f(2 * d, Rat(0));
        for (size_t a = 0; a < d; ++a) f[a] = c[a];
        out = out + ExactScalar::character(2 * d, f, coeff);
    }
    return out;
}

Box default_violation_cell(const ReducedLattice& R, const MultiplierSpec& M) {
    // small box at the origin, finer than both the partition grid and
    // the multiplier pieces near zero
    RatVec lo(R.dim(), Rat(0)), hi(R.dim());
    for (size_t a = 0; a < R.dim(); ++a) {
        Rat side = Rat(1, rat_den(R.D.at(a, a)));
        const auto& p0 = M.piece_at(zero_vec(R.dim()));
        hi[a] = std::min(side, p0.box.upper[a]);
    }
    return make_box(lo, hi);
}

}  // namespace

MultiplierSpec::MultiplierSpec(size_t gamma, size_t dim, Box period_cell,
                               std::vector<MultPiece> pieces)
    : gamma_(gamma), dim_(dim), period_cell_(std::move(period_cell)), pieces_(std::move(pieces)) {
    if (gamma_ == 0 || dim_ == 0) fail_input("multiplier needs positive gamma and dimension");
    if (period_cell_.dim() != dim_) fail_input("period cell dimension mismatch");
    for (const auto& c : period_cell_.lower)
        if (c != 0) fail_input("period cell must start at the origin");
    if (pieces_.empty()) fail_input("multiplier needs at least one piece");
    std::vector<Box> boxes;
    for (const auto& p : pieces_) {
        if (p.box.dim() != dim_) fail_input("piece dimension mismatch");
        if (p.matrix.size() != gamma_) fail_input("piece matrix has wrong size");
        for (const auto& row : p.matrix) {
            if (row.size() != gamma_) fail_input("piece matrix has wrong size");
            for (const auto& e : row)
                if (e.dim() != dim_) fail_input("entry dimension mismatch");
        }
        boxes.push_back(p.box);
    }
    for (size_t a = 0; a < pieces_.size(); ++a)
        for (size_t b = a + 1; b < pieces_.size(); ++b)
            if (boxes_intersect(pieces_[a].box, pieces_[b].box))
                fail_input("multiplier pieces overlap");
    if (!(BoxSet::from_boxes(dim_, boxes) == BoxSet::from_box(period_cell_)))
        fail_input("multiplier pieces do not cover the period cell");
}

RatVec MultiplierSpec::period() const { return period_cell_.upper; }

bool MultiplierSpec::constant_entries() const {
    for (const auto& p : pieces_)
        for (const auto& row : p.matrix)
            for (const auto& e : row)
                if (!e.is_constant()) return false;
    return true;
}

const MultPiece& MultiplierSpec::piece_at(const RatVec& x) const {
    RatVec w(dim_);
    for (size_t a = 0; a < dim_; ++a) {
        Rat s = period_cell_.upper[a];
        w[a] = x[a] - Rat(floor_rat(x[a] / s)) * s;
    }
    for (const auto& p : pieces_)
        if (p.box.contains(w)) return p;
    fail_internal("periodic piece lookup failed");
}

std::vector<std::pair<Box, std::vector<std::vector<ExactScalar>>>> condition_products(
    const MultiplierSpec& M, const ReducedLattice& R, const IntVec& n) {
    RatVec k(R.dim());
    for (size_t a = 0; a < R.dim(); ++a) k[a] = R.D.at(a, a) * Rat(n[a]);
    return products_for_shift(M, zero_vec(R.dim()), k);
}

namespace {

// Exact per-shift condition (2)+(3) check used by the certified residue
// reduction and by the windowed fallback.
bool check_single_shift(const MultiplierSpec& M, const ReducedLattice& R, const IntVec& n,
                        MultiplierVerdict& verdict) {
    const size_t gamma = M.gamma();
    const size_t d = M.dim();
    RatVec k(d);
    for (size_t a = 0; a < d; ++a) k[a] = R.D.at(a, a) * Rat(n[a]);

    auto prods = products_for_shift(M, zero_vec(d), k);
    std::vector<std::pair<Box, ExactScalar>> lambda;
    for (const auto& [cell, C] : prods) {
        for (size_t i = 0; i < gamma; ++i)
            for (size_t j = 0; j < gamma; ++j) {
                if (i == j) continue;
                if (!C[i][j].is_zero()) {
                    verdict.cond2_scalar = false;
                    verdict.violation =
                        MultViolation{2, n, cell, i, j, true, IntVec(d, 0)};
                    return false;
                }
            }
        for (size_t i = 1; i < gamma; ++i)
            if (!(C[i][i] == C[0][0])) {
                verdict.cond2_scalar = false;
                verdict.violation = MultViolation{2, n, cell, i, 0, false, IntVec(d, 0)};
                return false;
            }
        lambda.emplace_back(cell, C[0][0]);
    }
    verdict.lambdas.push_back(LambdaFunction{n, lambda});

    // condition (3): lambda_n must be Z^d periodic
    for (size_t b = 0; b < d; ++b) {
        RatVec eb(d, Rat(0));
        eb[b] = 1;
        auto shifted = products_for_shift(M, eb, k);
        std::vector<std::pair<Box, ExactScalar>> lambda_shifted;
        for (const auto& [cell, C] : shifted) lambda_shifted.emplace_back(cell, C[0][0]);
        if (auto bad = piecewise_mismatch(lambda, lambda_shifted, M.period_cell())) {
            verdict.cond3_periodic = false;
            IntVec l0(d, 0);
            l0[b] = -1;  // lambda(x) != lambda(x - l0) with l0 = -e_b
            verdict.violation = MultViolation{3, n, *bad, 0, 0, false, l0};
            return false;
        }
    }
    return true;
}

void check_unitary(const MultiplierSpec& M, MultiplierVerdict& verdict) {
    const size_t gamma = M.gamma();
    const size_t d = M.dim();
    verdict.unitary_ae = true;
    for (const auto& p : M.pieces()) {
        Mat C = conj_transpose_times(p.matrix, p.matrix, gamma, d);
        for (size_t i = 0; i < gamma && verdict.unitary_ae; ++i)
            for (size_t j = 0; j < gamma && verdict.unitary_ae; ++j) {
                ExactScalar want = i == j ? ExactScalar::constant(d, CycQ::one())
                                          : ExactScalar::zero(d);
                if (!(C[i][j] == want)) {
                    verdict.unitary_ae = false;
                    verdict.violation = MultViolation{1, IntVec(d, 0), p.box, i, j, i != j, IntVec(d, 0)};
                }
            }
        if (!verdict.unitary_ae) break;
    }
}

// Fully symbolic treatment of single-piece specs: every condition is
// discharged for all n at once through the finite period grid of the
// n-frequencies.
void check_symbolic(const MultiplierSpec& M, const ReducedLattice& R,
                    MultiplierVerdict& verdict) {
    const size_t gamma = M.gamma();
    const size_t d = M.dim();
    const Mat& A = M.pieces()[0].matrix;
    RatMatrix Dt = R.D.transpose();

    // entries of M*(x) M(x + D n) as (x, n) polynomials
    Mat C(gamma, std::vector<ExactScalar>(gamma, ExactScalar(2 * d)));
    for (size_t i = 0; i < gamma; ++i)
        for (size_t j = 0; j < gamma; ++j)
            for (size_t t = 0; t < gamma; ++t)
                C[i][j] = C[i][j] + lift_plain(A[t][i].conj(), d) * lift_shifted(A[t][j], Dt, d);

    Box cell = default_violation_cell(R, M);
    auto flag2 = [&](size_t i, size_t j, bool offdiag, const ExactScalar& poly) -> bool {
        for (const auto& [fx, nterms] : group_by_x(poly, d)) {
            if (auto bad = npoly_violation(nterms, d)) {
                verdict.cond2_scalar = false;
                verdict.violation = MultViolation{2, *bad, cell, i, j, offdiag, IntVec(d, 0)};
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < gamma; ++i)
        for (size_t j = 0; j < gamma; ++j) {
            if (i == j) continue;
            if (flag2(i, j, true, C[i][j])) return;
        }
    for (size_t i = 1; i < gamma; ++i)
        if (flag2(i, 0, false, C[i][i] - C[0][0])) return;

    // condition (3): non-integer x-frequencies of lambda must carry
    // n-polynomials vanishing away from zero
    const ExactScalar& lambda = C[0][0];
    for (const auto& [fx, nterms] : group_by_x(lambda, d)) {
        bool integer_freq = true;
        for (const auto& f : fx)
            if (!is_integer(f)) { integer_freq = false; break; }
        if (integer_freq) continue;
        if (auto bad = npoly_violation(nterms, d)) {
            verdict.cond3_periodic = false;
            size_t axis = 0;
            for (size_t a = 0; a < d; ++a)
                if (!is_integer(fx[a])) { axis = a; break; }
            IntVec l0(d, 0);
            l0[axis] = -1;
            verdict.violation = MultViolation{3, *bad, cell, 0, 0, false, l0};
            return;
        }
    }

    // record a concrete lambda for the smallest residue class
    IntVec ones(d, 1);
    std::vector<std::pair<Box, ExactScalar>> lam;
    auto prods = condition_products(M, R, ones);
    for (const auto& [c, Cm] : prods) lam.emplace_back(c, Cm[0][0]);
    verdict.lambdas.push_back(LambdaFunction{ones, lam});
}

}  // namespace

MultiplierVerdict check_conditions(const MultiplierSpec& M, const ReducedLattice& R,
                                   Int k_radius) {
    if (M.dim() != R.dim()) fail_input("multiplier/lattice dimension mismatch");
    if (M.gamma() != size_t(R.gamma.convert_to<long long>()))
        fail_input("multiplier size does not match gamma");
    if (k_radius < 1) fail_input("k_radius must be at least 1");

    MultiplierVerdict verdict;
    verdict.cond2_scalar = true;
    verdict.cond3_periodic = true;
    check_unitary(M, verdict);

    if (verdict.unitary_ae) {
        if (M.single_piece()) {
            check_symbolic(M, R, verdict);
            verdict.certified = true;
        } else if (M.constant_entries()) {
            auto reps = residue_representatives(residue_periods(R, M.period()));
            for (const auto& n : reps)
                if (!check_single_shift(M, R, n, verdict)) break;
            verdict.certified = true;
        } else {
            // windowed fallback for mixed piecewise/character specs
            verdict.certified = false;
            verdict.window = k_radius;
            IntVec lo(M.dim(), -k_radius), hi(M.dim(), k_radius);
            IntVec cur = lo;
            for (;;) {
                bool zero = true;
                for (const auto& c : cur)
                    if (c != 0) { zero = false; break; }
                if (!zero && !check_single_shift(M, R, cur, verdict)) break;
                size_t a = M.dim();
                bool done = true;
                while (a-- > 0) {
                    if (++cur[a] <= hi[a]) { done = false; break; }
                    cur[a] = lo[a];
                }
                if (done) break;
            }
        }
    } else {
        verdict.certified = true;  // a definite violation is definitive
    }

    verdict.is_multiplier = verdict.unitary_ae && verdict.cond2_scalar && verdict.cond3_periodic;
    return verdict;
}

MultiplierVerdict check_scalar_conditions(const MultiplierSpec& M, const ReducedLattice& R,
                                          Int k_radius) {
    if (M.gamma() != 1) fail_input("the scalar route requires gamma = 1");
    if (M.dim() != R.dim()) fail_input("multiplier/lattice dimension mismatch");

    MultiplierVerdict verdict;
    verdict.cond2_scalar = true;  // vacuous for 1x1
    verdict.cond3_periodic = true;
    const size_t d = M.dim();

    // unimodularity, directly on the scalar values
    verdict.unitary_ae = true;
    for (const auto& p : M.pieces()) {
        const ExactScalar& h = p.matrix[0][0];
        if (!(h * h.conj() == ExactScalar::constant(d, CycQ::one()))) {
            verdict.unitary_ae = false;
            verdict.violation = MultViolation{1, IntVec(d, 0), p.box, 0, 0, false, IntVec(d, 0)};
            break;
        }
    }
    if (!verdict.unitary_ae) {
        verdict.certified = true;
        verdict.is_multiplier = false;
        return verdict;
    }

    // periodicity of h(x) conj(h(x + D n))
    auto product_pieces = [&](const RatVec& base, const RatVec& k) {
        auto left = structure_at(M, base);
        auto right = structure_at(M, base + k);
        std::vector<std::pair<Box, ExactScalar>> out;
        for (const auto& a : left)
            for (const auto& b : right)
                if (auto c = box_intersect(a.box, b.box))
                    out.emplace_back(*c, a.mat[0][0] * b.mat[0][0].conj());
        return out;
    };
    auto check_shift = [&](const IntVec& n) -> bool {
        RatVec k(d);
        for (size_t a = 0; a < d; ++a) k[a] = R.D.at(a, a) * Rat(n[a]);
        auto base = product_pieces(zero_vec(d), k);
        for (size_t b = 0; b < d; ++b) {
            RatVec eb(d, Rat(0));
            eb[b] = 1;
            auto moved = product_pieces(eb, k);
            if (auto bad = piecewise_mismatch(base, moved, M.period_cell())) {
                IntVec l0(d, 0);
                l0[b] = -1;
                verdict.cond3_periodic = false;
                verdict.violation = MultViolation{3, n, *bad, 0, 0, false, l0};
                return false;
            }
        }
        return true;
    };

    if (M.single_piece()) {
        // symbolic in n: h(x) conj(h(x + D n)) periodic in x for all n
        const ExactScalar& h = M.pieces()[0].matrix[0][0];
        RatMatrix Dt = R.D.transpose();
        ExactScalar prod = lift_plain(h, d) * lift_shifted(h, Dt, d).conj();
        Box cell = default_violation_cell(R, M);
        for (const auto& [fx, nterms] : group_by_x(prod, d)) {
            bool integer_freq = true;
            for (const auto& f : fx)
                if (!is_integer(f)) { integer_freq = false; break; }
            if (integer_freq) continue;
            if (auto bad = npoly_violation(nterms, d)) {
                verdict.cond3_periodic = false;
                size_t axis = 0;
                for (size_t a = 0; a < d; ++a)
                    if (!is_integer(fx[a])) { axis = a; break; }
                IntVec l0(d, 0);
                l0[axis] = -1;
                verdict.violation = MultViolation{3, *bad, cell, 0, 0, false, l0};
                break;
            }
        }
        verdict.certified = true;
    } else if (M.constant_entries()) {
        for (const auto& n : residue_representatives(residue_periods(R, M.period())))
            if (!check_shift(n)) break;
        verdict.certified = true;
    } else {
        verdict.certified = false;
        verdict.window = k_radius;
        IntVec lo(d, -k_radius), hi(d, k_radius), cur = lo;
        for (;;) {
            bool zero = true;
            for (const auto& c : cur)
                if (c != 0) { zero = false; break; }
            if (!zero && !check_shift(cur)) break;
            size_t a = d;
            bool done = true;
            while (a-- > 0) {
                if (++cur[a] <= hi[a]) { done = false; break; }
                cur[a] = lo[a];
            }
            if (done) break;
        }
    }

    verdict.is_multiplier = verdict.unitary_ae && verdict.cond3_periodic;
    return verdict;
}

std::vector<std::pair<Box, ExactScalar>> lambda_pieces(const MultiplierSpec& M,
                                                       const ReducedLattice& R, const IntVec& n,
                                                       const RatVec& base_shift) {
    RatVec k(R.dim());
    for (size_t a = 0; a < R.dim(); ++a) k[a] = R.D.at(a, a) * Rat(n[a]);
    auto prods = products_for_shift(M, base_shift, k);
    std::vector<std::pair<Box, ExactScalar>> out;
    for (const auto& [cell, C] : prods) out.emplace_back(cell, C[0][0]);
    return out;
}

std::optional<Box> lambda_shift_mismatch(const MultiplierSpec& M, const ReducedLattice& R,
                                         const IntVec& n, const RatVec& shift) {
    auto base = lambda_pieces(M, R, n, zero_vec(R.dim()));
    auto moved = lambda_pieces(M, R, n, shift);
    return piecewise_mismatch(base, moved, M.period_cell());
}

std::optional<Box> scalar_identity_mismatch(const MultiplierSpec& M, const ReducedLattice& R,
                                            const IntVec& l, const RatVec& k) {
    if (M.gamma() != 1) fail_input("scalar identity needs gamma = 1");
    const size_t d = R.dim();
    RatVec negl(d), negk = -k;
    for (size_t a = 0; a < d; ++a) negl[a] = Rat(-l[a]);
    auto scalar_product = [&](const RatVec& base) {
        auto left = structure_at(M, base);
        auto right = structure_at(M, base + negk);
        std::vector<std::pair<Box, ExactScalar>> out;
        for (const auto& a : left)
            for (const auto& b : right)
                if (auto c = box_intersect(a.box, b.box))
                    out.emplace_back(*c, a.mat[0][0] * b.mat[0][0].conj());
        return out;
    };
    auto p = scalar_product(zero_vec(d));
    auto q = scalar_product(negl);
    return piecewise_mismatch(p, q, M.period_cell());
}

PCGenerator apply_multiplier(const MultiplierSpec& M, const PCGenerator& G) {
    if (M.gamma() != G.gamma() || M.dim() != G.dim()) fail_input("multiplier/generator shape mismatch");
    const size_t gamma = G.gamma();
    const size_t d = G.dim();
    FullRankLattice P = FullRankLattice::from_diagonal(M.period());

    std::vector<GenCell> cells;
    for (const auto& c : G.cells()) {
        for (const auto& piece : M.pieces()) {
            for (const auto& n : lattice_points_between(piece.box, c.box, P)) {
                RatVec shift = P.vector(n);
                auto sub = box_intersect(piece.box.translated(shift), c.box);
                if (!sub) continue;
                std::vector<ExactScalar> vec(gamma, ExactScalar::zero(d));
                for (size_t i = 0; i < gamma; ++i)
                    for (size_t j = 0; j < gamma; ++j)
                        vec[i] = vec[i] + piece.matrix[i][j] * c.vec[j];
                cells.push_back(GenCell{*sub, c.weight_sq, std::move(vec)});
            }
        }
    }
    return PCGenerator(gamma, d, std::move(cells));
}

ForwardReport forward_verify(const MultiplierSpec& M, const std::vector<PCGenerator>& corpus,
                             const ReducedLattice& R) {
    ForwardReport rep;
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto& G = corpus[idx];
        if (!verify_casazza(G, R).is_parseval)
            fail_input("forward verification corpus must be Parseval");
        ++rep.checked;
        PCGenerator H = apply_multiplier(M, G);
        if (verify_casazza(H, R).is_parseval)
            ++rep.preserved;
        else
            rep.failed.push_back(idx);
    }
    return rep;
}

}  // namespace gm
