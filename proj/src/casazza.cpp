#include "casazza.hpp"

#include <algorithm>

namespace gm {

namespace {

struct Piece {
    Box region;
    ExactScalar value;
};

// Sums overlapping pieces over the grid refinement induced by their
// boundaries inside `domain`. `expected` is compared cell by cell; the
// callback receives every refined cell and its exact summed value.
class PiecewiseSum {
  public:
    PiecewiseSum(size_t dim, Box domain) : dim_(dim), domain_(std::move(domain)) {}

    void add(Box region, ExactScalar value) {
        if (auto clipped = box_intersect(region, domain_))
            pieces_.push_back(Piece{*clipped, std::move(value)});
    }

    // Evaluates on the refinement. `cover_domain` = true grids the whole
    // domain (uncovered cells count as zero), otherwise only the region
    // touched by pieces is refined.
    template <typename F>
    void for_each_cell(bool cover_domain, F&& fn) const {
        std::vector<std::vector<Rat>> cuts(dim_);
        for (size_t a = 0; a < dim_; ++a) {
            if (cover_domain) {
                cuts[a].push_back(domain_.lower[a]);
                cuts[a].push_back(domain_.upper[a]);
            }
            for (const auto& p : pieces_) {
                cuts[a].push_back(p.region.lower[a]);
                cuts[a].push_back(p.region.upper[a]);
            }
            std::sort(cuts[a].begin(), cuts[a].end());
            cuts[a].erase(std::unique(cuts[a].begin(), cuts[a].end()), cuts[a].end());
        }
        for (size_t a = 0; a < dim_; ++a)
            if (cuts[a].size() < 2) return;

        // per-axis coverage masks: piece -> interval range
        const size_t np = pieces_.size();
        const size_t words = (np + 63) / 64;
        std::vector<std::vector<std::vector<uint64_t>>> covers(dim_);
        for (size_t a = 0; a < dim_; ++a) {
            covers[a].assign(cuts[a].size() - 1, std::vector<uint64_t>(words, 0));
            for (size_t p = 0; p < np; ++p) {
                auto lo = std::lower_bound(cuts[a].begin(), cuts[a].end(), pieces_[p].region.lower[a]);
                auto hi = std::lower_bound(cuts[a].begin(), cuts[a].end(), pieces_[p].region.upper[a]);
                for (auto it = lo; it != hi; ++it) {
                    size_t idx = size_t(it - cuts[a].begin());
                    covers[a][idx][p / 64] |= uint64_t(1) << (p % 64);
                }
            }
        }

        std::vector<size_t> idx(dim_, 0);
        std::vector<uint64_t> mask(words);
        for (;;) {
            bool nonempty = true;
            for (size_t w = 0; w < words; ++w) mask[w] = ~uint64_t(0);
            for (size_t a = 0; a < dim_ && nonempty; ++a)
                for (size_t w = 0; w < words; ++w) mask[w] &= covers[a][idx[a]][w];

            RatVec lo(dim_), hi(dim_);
            for (size_t a = 0; a < dim_; ++a) {
                lo[a] = cuts[a][idx[a]];
                hi[a] = cuts[a][idx[a] + 1];
            }
            ExactScalar sum(dim_);
            for (size_t w = 0; w < words; ++w) {
                uint64_t bits = mask[w];
                while (bits) {
                    unsigned b = unsigned(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    sum = sum + pieces_[w * 64 + b].value;
                }
            }
            fn(make_box(lo, hi), sum);

            size_t a = dim_;
            bool done = true;
            while (a-- > 0) {
                if (++idx[a] + 1 < cuts[a].size()) { done = false; break; }
                idx[a] = 0;
            }
            if (done) return;
        }
    }

  private:
    size_t dim_;
    Box domain_;
    std::vector<Piece> pieces_;
};

// sqrt(w1*w2) * inner, demanded rational only when inner is nonzero
std::optional<ExactScalar> weighted_pairing(const GenCell& c1, const GenCell& c2, const RatVec& l,
                                            const RatVec& lk) {
    const size_t d = c1.box.dim();
    ExactScalar inner(d);
    for (size_t t = 0; t < c1.vec.size(); ++t)
        inner = inner + c1.vec[t].shifted_arg(-l) * c2.vec[t].shifted_arg(-lk).conj();
    if (inner.is_zero()) return std::nullopt;
    auto root = rat_sqrt(c1.weight_sq * c2.weight_sq);
    if (!root)
        fail_input("inexact product: cell weights pair to an irrational factor with nonzero overlap");
    return inner.scaled(*root);
}

CasazzaReport casazza_core(const PCGenerator& G, const FullRankLattice& L, const FullRankLattice& K,
                           const Rat& target, Int k_radius) {
    const size_t d = G.dim();
    CasazzaReport rep;
    rep.target = target;

    BoxSet supp = G.support();
    auto bbox = supp.bounding_box();
    if (!bbox) fail_input("generator has empty support");
    Box cell = fundamental_cell(L);
    BoxSet cell_set = BoxSet::from_box(cell);

    // lattice window: translates of the support that can reach the cell
    auto window = lattice_points_between(*bbox, cell, L);
    rep.l_window = window.size();

    bool ok = true;
    auto record_violation = [&](const Box& c, std::optional<IntVec> n, const ExactScalar& v) {
        if (!rep.first_violation) rep.first_violation = CasazzaViolation{c, std::move(n), v};
        ok = false;
    };

    // autocorrelation: sum_l <G(x-l), G(x-l)> must equal the target
    {
        PiecewiseSum sum(d, cell);
        for (const auto& n : window) {
            RatVec l = L.vector(n);
            for (const auto& c : G.cells()) {
                ExactScalar val(d);
                for (size_t t = 0; t < c.vec.size(); ++t) {
                    ExactScalar s = c.vec[t].shifted_arg(-l);
                    val = val + s * s.conj();
                }
                sum.add(c.box.translated(l), val.scaled(c.weight_sq));
            }
        }
        ExactScalar want = ExactScalar::constant(d, CycQ::from_rational(target));
        sum.for_each_cell(true, [&](const Box& c, const ExactScalar& v) {
            rep.autocorrelation.push_back(PieceValue{c, v});
            if (!(v == want)) record_violation(c, std::nullopt, v);
        });
    }

    // cross terms: k = K n within the support horizon, everything else
    // is zero because the support moves off itself
    auto khits = overlap_candidates(supp, supp, K);
    rep.horizon.assign(d, 0);
    for (const auto& n : khits)
        for (size_t a = 0; a < d; ++a) rep.horizon[a] = std::max(rep.horizon[a], Int(abs(n[a])));

    for (const auto& n : khits) {
        bool zero = true;
        for (const auto& c : n)
            if (c != 0) { zero = false; break; }
        if (zero) continue;
        RatVec k = K.vector(n);
        CrossTerm ct;
        ct.n = n;
        ct.k = k;

        PiecewiseSum sum(d, cell);
        RatVec negk = -k;
        for (const auto& c1 : G.cells()) {
            for (const auto& c2 : G.cells()) {
                auto base = box_intersect(c1.box, c2.box.translated(k));
                if (!base) continue;
                for (const auto& nl : lattice_points_between(*base, cell, L)) {
                    RatVec l = L.vector(nl);
                    auto val = weighted_pairing(c1, c2, l, l + k);
                    if (val) sum.add(base->translated(l), std::move(*val));
                }
            }
        }
        sum.for_each_cell(false, [&](const Box& c, const ExactScalar& v) {
            if (!v.is_zero()) {
                ct.nonzero.push_back(PieceValue{c, v});
                record_violation(c, n, v);
            }
        });
        rep.cross_terms.push_back(std::move(ct));
    }

    // user-requested shells beyond the horizon are provably zero
    if (k_radius > 0) {
        Int maxh = 0;
        for (const auto& h : rep.horizon) maxh = std::max(maxh, h);
        if (k_radius > maxh) {
            CrossTerm ct;
            ct.beyond_support = true;
            ct.n.assign(d, k_radius);
            ct.k = K.vector(ct.n);
            rep.cross_terms.push_back(std::move(ct));
        }
    }

    rep.is_parseval = ok;
    return rep;
}

}  // namespace

CasazzaReport verify_casazza(const PCGenerator& G, const ReducedLattice& R, Int k_radius) {
    if (G.dim() != R.dim()) fail_input("generator/lattice dimension mismatch");
    if (G.gamma() != size_t(R.gamma.convert_to<long long>()))
        fail_input("generator length does not match gamma of the lattice");
    return casazza_core(G, time_lattice(R), frequency_lattice(R), R.d0, k_radius);
}

CasazzaReport verify_casazza_general(const PCGenerator& G, const RatMatrix& A, const RatMatrix& B,
                                     Int k_radius) {
    if (A.det() == 0 || B.det() == 0) fail_input("lattice matrices must be nonsingular");
    if (G.dim() != A.dim()) fail_input("generator/lattice dimension mismatch");
    FullRankLattice L{A};
    FullRankLattice K{B.transpose().inverse()};
    return casazza_core(G, L, K, abs_rat(B.det()), k_radius);
}

PCGenerator transport_generator(const PCGenerator& G, const RatMatrix& A, const RatMatrix& Q) {
    RatMatrix T = A * Q;
    const size_t d = T.dim();
    // must map half-open boxes to half-open boxes: exactly one nonzero
    // entry per row and column, all positive
    for (size_t i = 0; i < d; ++i) {
        size_t row_nonzero = 0, col_nonzero = 0;
        for (size_t j = 0; j < d; ++j) {
            if (T.at(i, j) < 0)
                fail_input("transport needs AQ with positive entries; "
                           "use the general verifier instead");
            if (T.at(i, j) != 0) ++row_nonzero;
            if (T.at(j, i) != 0) ++col_nonzero;
        }
        if (row_nonzero != 1 || col_nonzero != 1)
            fail_input("transport needs AQ to be a scaled permutation; "
                       "use the general verifier instead");
    }
    RatMatrix Tinv = T.inverse();
    std::vector<GenCell> cells;
    for (const auto& c : G.cells()) {
        RatVec lo = Tinv * c.box.lower;
        RatVec hi = Tinv * c.box.upper;
        std::vector<ExactScalar> vec;
        for (const auto& comp : c.vec) {
            if (!comp.is_constant())
                fail_input("transport of non-constant cell values is not supported");
            vec.push_back(ExactScalar::constant(d, comp.constant_value()));
        }
        cells.push_back(GenCell{make_box(lo, hi), c.weight_sq, std::move(vec)});
    }
    return PCGenerator(G.gamma(), d, std::move(cells));
}

}  // namespace gm
